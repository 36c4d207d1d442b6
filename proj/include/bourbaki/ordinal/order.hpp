#ifndef BOURBAKI_ORDINAL_ORDER_HPP
#define BOURBAKI_ORDINAL_ORDER_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "../error.hpp"
#include "../hf/graph.hpp"
#include "../hf/set.hpp"

namespace bourbaki::ord {

using hf::HfSet;

// Carrier plus the graph of ≤ (reflexive pairs included).
struct FiniteOrder {
    HfSet carrier;
    HfSet relation;
};

// Order on `carrier` induced by a predicate leq(x, y).
template <class Leq>
FiniteOrder order_from(const HfSet& carrier, Leq leq)
{
    std::vector<HfSet> rel;
    for (const HfSet& x : carrier)
        for (const HfSet& y : carrier)
            if (leq(x, y))
                rel.push_back(hf::couple(x, y));
    return {carrier, hf::make_set(std::move(rel))};
}

// ∈-or-equal order on an ordinal (or any set).
inline FiniteOrder membership_order(const HfSet& alpha)
{
    return order_from(alpha, [](const HfSet& x, const HfSet& y) { return x == y || y.contains(x); });
}

using Mask = std::uint64_t;

// Bit-matrix view of a FiniteOrder; element i is the i-th carrier element
// in canonical order.
class OrderIndex {
public:
    static constexpr std::size_t max_size = 64;

    explicit OrderIndex(const FiniteOrder& o) : elems_(o.carrier.elements()), up_(elems_.size(), 0), down_(elems_.size(), 0)
    {
        if (elems_.size() > max_size)
            throw DomainError("order carriers are limited to 64 elements");
        for (const auto& [x, y] : hf::pairs_of(o.relation)) {
            auto i = index_of(x);
            auto j = index_of(y);
            if (!i || !j)
                throw ShapeError("order relation leaves the carrier");
            up_[*i] |= bit(*j);
            down_[*j] |= bit(*i);
        }
    }

    std::size_t size() const noexcept { return elems_.size(); }
    const HfSet& element(std::size_t i) const { return elems_[i]; }
    const std::vector<HfSet>& elements() const noexcept { return elems_; }
    Mask all() const noexcept { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }

    std::optional<std::size_t> index_of(const HfSet& x) const
    {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        if (it == elems_.end() || *it != x)
            return std::nullopt;
        return static_cast<std::size_t>(it - elems_.begin());
    }

    static Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

    bool leq(std::size_t i, std::size_t j) const noexcept { return (up_[i] >> j) & 1U; }
    Mask up(std::size_t i) const noexcept { return up_[i]; }
    Mask down(std::size_t i) const noexcept { return down_[i]; }

    bool is_order() const noexcept
    {
        for (std::size_t i = 0; i < size(); ++i) {
            if (!leq(i, i))
                return false;
            for (std::size_t j = 0; j < size(); ++j) {
                if (i != j && leq(i, j) && leq(j, i))
                    return false;
                // transitivity: everything above j is above i
                if (leq(i, j) && (up_[j] & ~up_[i]) != 0)
                    return false;
            }
        }
        return true;
    }

    bool is_total() const noexcept
    {
        for (std::size_t i = 0; i < size(); ++i)
            if ((up_[i] | down_[i]) != all())
                return false;
        return true;
    }

    std::optional<std::size_t> least(Mask s) const noexcept
    {
        for (Mask m = s; m; m &= m - 1) {
            auto i = static_cast<std::size_t>(std::countr_zero(m));
            if ((s & ~up_[i]) == 0)
                return i;
        }
        return std::nullopt;
    }

    std::optional<std::size_t> greatest(Mask s) const noexcept
    {
        for (Mask m = s; m; m &= m - 1) {
            auto i = static_cast<std::size_t>(std::countr_zero(m));
            if ((s & ~down_[i]) == 0)
                return i;
        }
        return std::nullopt;
    }

    Mask lower_bounds(Mask s) const noexcept
    {
        Mask b = all();
        for (Mask m = s; m; m &= m - 1)
            b &= down_[static_cast<std::size_t>(std::countr_zero(m))];
        return b;
    }

    Mask upper_bounds(Mask s) const noexcept
    {
        Mask b = all();
        for (Mask m = s; m; m &= m - 1)
            b &= up_[static_cast<std::size_t>(std::countr_zero(m))];
        return b;
    }

    std::optional<std::size_t> inf(Mask s) const noexcept { return greatest(lower_bounds(s)); }
    std::optional<std::size_t> sup(Mask s) const noexcept { return least(upper_bounds(s)); }

    // Every pair has a sup and an inf, and the carrier is nonempty; finite,
    // hence complete.
    bool is_lattice() const noexcept
    {
        if (size() == 0)
            return false;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (!inf(bit(i) | bit(j)) || !sup(bit(i) | bit(j)))
                    return false;
        return true;
    }

    Mask mask_of(const HfSet& part) const
    {
        Mask m = 0;
        for (const HfSet& x : part) {
            auto i = index_of(x);
            if (!i)
                throw ShapeError(hf::to_string(x) + " is not in the carrier");
            m |= bit(*i);
        }
        return m;
    }

    HfSet set_of(Mask m) const
    {
        std::vector<HfSet> out;
        for (; m; m &= m - 1)
            out.push_back(elems_[static_cast<std::size_t>(std::countr_zero(m))]);
        return HfSet::from_sorted(std::move(out));
    }

private:
    std::vector<HfSet> elems_;
    std::vector<Mask> up_;
    std::vector<Mask> down_;
};

inline bool is_order(const FiniteOrder& o) { return OrderIndex(o).is_order(); }

inline constexpr std::size_t well_order_cap = 12;

// Exhaustive least-element check over all nonempty subsets.
inline bool is_well_order(const FiniteOrder& o)
{
    OrderIndex ix(o);
    if (!ix.is_order())
        throw PreconditionError("relation is not an order on the carrier");
    if (ix.size() > well_order_cap)
        throw DomainError("exhaustive well-order check is capped at 12 elements");
    for (Mask s = 1; s <= ix.all(); ++s)
        if (!ix.least(s))
            return false;
    return true;
}

// S_x = {y | y < x}
inline HfSet segment(const FiniteOrder& o, const HfSet& x)
{
    OrderIndex ix(o);
    if (!ix.is_order())
        throw PreconditionError("relation is not an order on the carrier");
    auto i = ix.index_of(x);
    if (!i)
        throw DomainError(hf::to_string(x) + " is not in the carrier");
    return ix.set_of(ix.down(*i) & ~OrderIndex::bit(*i));
}

} // namespace bourbaki::ord

#endif // BOURBAKI_ORDINAL_ORDER_HPP
