#ifndef BOURBAKI_FIXPOINT_TARSKI_HPP
#define BOURBAKI_FIXPOINT_TARSKI_HPP

#include <bit>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../hf/set.hpp"
#include "../ordinal/order.hpp"

namespace bourbaki::fix {

using hf::HfSet;
using ord::FiniteOrder;
using ord::Mask;
using ord::OrderIndex;

// Increasing self-map of a finite ordered set, checked on construction.
class MonotoneMap {
public:
    MonotoneMap(FiniteOrder domain, const std::map<HfSet, HfSet>& table) : domain_(std::move(domain)), ix_(domain_)
    {
        if (!ix_.is_order())
            throw PreconditionError("domain relation is not an order");
        f_.resize(ix_.size());
        for (std::size_t i = 0; i < ix_.size(); ++i) {
            auto it = table.find(ix_.element(i));
            if (it == table.end())
                throw PreconditionError("map undefined at " + hf::to_string(ix_.element(i)));
            auto j = ix_.index_of(it->second);
            if (!j)
                throw PreconditionError("map value " + hf::to_string(it->second) + " leaves the carrier");
            f_[i] = *j;
        }
        if (table.size() != ix_.size())
            throw PreconditionError("map defined outside the carrier");
        for (std::size_t i = 0; i < ix_.size(); ++i)
            for (std::size_t j = 0; j < ix_.size(); ++j)
                if (ix_.leq(i, j) && !ix_.leq(f_[i], f_[j]))
                    throw PreconditionError("map is not increasing");
    }

    const FiniteOrder& domain() const noexcept { return domain_; }
    const OrderIndex& index() const noexcept { return ix_; }
    std::size_t operator()(std::size_t i) const noexcept { return f_[i]; }
    HfSet operator()(const HfSet& x) const { return ix_.element(f_[ix_.index_of(x).value()]); }

    Mask fixed_points() const noexcept
    {
        Mask p = 0;
        for (std::size_t i = 0; i < f_.size(); ++i)
            if (f_[i] == i)
                p |= OrderIndex::bit(i);
        return p;
    }

private:
    FiniteOrder domain_;
    OrderIndex ix_;
    std::vector<std::size_t> f_;
};

struct TarskiExtrema {
    HfSet v; // least fixed point
    HfSet w; // greatest fixed point
};

namespace detail {

// inf{z ∈ within | f(z) ≤ z}
inline std::optional<std::size_t> tarski_low(const MonotoneMap& m, Mask within)
{
    const auto& ix = m.index();
    Mask a = 0;
    for (Mask s = within; s; s &= s - 1) {
        auto z = static_cast<std::size_t>(std::countr_zero(s));
        if (ix.leq(m(z), z))
            a |= OrderIndex::bit(z);
    }
    return ix.inf(a);
}

// sup{z ∈ within | z ≤ f(z)}
inline std::optional<std::size_t> tarski_high(const MonotoneMap& m, Mask within)
{
    const auto& ix = m.index();
    Mask b = 0;
    for (Mask s = within; s; s &= s - 1) {
        auto z = static_cast<std::size_t>(std::countr_zero(s));
        if (ix.leq(z, m(z)))
            b |= OrderIndex::bit(z);
    }
    return ix.sup(b);
}

} // namespace detail

// v = inf{z | f(z) ≤ z}, w = sup{z | z ≤ f(z)}.
inline TarskiExtrema tarski_extrema(const MonotoneMap& m)
{
    const auto& ix = m.index();
    auto v = detail::tarski_low(m, ix.all());
    if (!v)
        throw StructureError("the infimum of {z | f(z) <= z} does not exist");
    auto w = detail::tarski_high(m, ix.all());
    if (!w)
        throw StructureError("the supremum of {z | z <= f(z)} does not exist");
    return {ix.element(*v), ix.element(*w)};
}

struct FixedPointReport {
    HfSet fixed_points;
    bool nonempty = false;
    bool complete = false;      // every nonempty Y ⊆ P has sup and inf in P
    bool interval_agrees = false; // sup_P Y = least fixed point above sup Y, dually for inf
};

inline constexpr std::size_t fixed_point_subset_cap = 20;

inline FixedPointReport fixed_point_lattice(const MonotoneMap& m)
{
    const auto& ix = m.index();
    if (!ix.is_lattice())
        throw PreconditionError("domain is not a lattice");
    Mask p = m.fixed_points();
    FixedPointReport rep;
    rep.fixed_points = ix.set_of(p);
    rep.nonempty = p != 0;
    rep.complete = rep.nonempty;
    rep.interval_agrees = rep.nonempty;
    std::vector<std::size_t> pts;
    for (Mask s = p; s; s &= s - 1)
        pts.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    if (pts.size() > fixed_point_subset_cap)
        throw DomainError("too many fixed points for an exhaustive check");
    for (std::size_t sub = 1; sub < (std::size_t{1} << pts.size()); ++sub) {
        Mask y = 0;
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (sub & (std::size_t{1} << k))
                y |= OrderIndex::bit(pts[k]);
        auto supP = ix.least(ix.upper_bounds(y) & p);
        auto infP = ix.greatest(ix.lower_bounds(y) & p);
        if (!supP || !infP) {
            rep.complete = false;
            rep.interval_agrees = false;
            continue;
        }
        // least fixed point of f on [sup Y, top], greatest on [bottom, inf Y]
        std::size_t s = *ix.sup(y);
        std::size_t i = *ix.inf(y);
        auto low = detail::tarski_low(m, ix.up(s));
        auto high = detail::tarski_high(m, ix.down(i));
        if (low != supP || high != infP)
            rep.interval_agrees = false;
    }
    return rep;
}

} // namespace bourbaki::fix

#endif // BOURBAKI_FIXPOINT_TARSKI_HPP
