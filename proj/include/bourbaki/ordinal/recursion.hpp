#ifndef BOURBAKI_ORDINAL_RECURSION_HPP
#define BOURBAKI_ORDINAL_RECURSION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../hf/graph.hpp"
#include "../hf/set.hpp"
#include "order.hpp"

namespace bourbaki::ord {

namespace detail {

template <class T>
struct is_optional : std::false_type {};
template <class T>
struct is_optional<std::optional<T>> : std::true_type {};

} // namespace detail

// f(k) = φ(f restricted to {0, ..., k-1}) on the ω-prefix {0, ..., n-1},
// evaluated left to right. φ may return V or std::optional<V>; an empty
// optional raises EvaluationError naming the prefix length.
template <class V, class Phi>
std::vector<V> recurse_prefix(std::size_t n, Phi phi)
{
    std::vector<V> f;
    f.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto r = phi(std::span<const V>(f.data(), k));
        if constexpr (detail::is_optional<decltype(r)>::value) {
            if (!r)
                throw EvaluationError("phi undefined on the segment of length " + std::to_string(k));
            f.push_back(std::move(*r));
        } else {
            f.push_back(std::move(r));
        }
    }
    return f;
}

template <class V>
using Restriction = std::span<const std::pair<HfSet, V>>;

// f as a table, in increasing order.
template <class V>
struct RecursionResult {
    std::vector<std::pair<HfSet, V>> table;

    const V& at(const HfSet& x) const
    {
        for (const auto& [k, v] : table)
            if (k == x)
                return v;
        throw DomainError(hf::to_string(x) + " is not in the carrier");
    }
};

// Carrier positions in increasing order; throws unless `o` is a well-order.
// Finite total orders are exactly the finite well-orders, so beyond the
// exhaustive cap totality is checked instead.
inline std::vector<std::size_t> well_order_positions(const FiniteOrder& o)
{
    OrderIndex ix(o);
    if (!ix.is_order())
        throw PreconditionError("relation is not an order on the carrier");
    bool wo = ix.size() <= well_order_cap ? is_well_order(o) : ix.is_total();
    if (!wo)
        throw PreconditionError("order is not a well-order");
    std::vector<std::size_t> pos(ix.size());
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    std::sort(pos.begin(), pos.end(),
              [&](std::size_t a, std::size_t b) { return std::popcount(ix.down(a)) < std::popcount(ix.down(b)); });
    return pos;
}

// The unique f with f(x) = φ(f|S_x). φ receives the restriction as
// (element, value) pairs in increasing order.
template <class V, class Phi>
RecursionResult<V> transfinite_recurse(const FiniteOrder& o, Phi phi)
{
    auto pos = well_order_positions(o);
    const auto& el = o.carrier.elements();
    RecursionResult<V> out;
    out.table.reserve(pos.size());
    for (std::size_t k = 0; k < pos.size(); ++k) {
        auto r = phi(Restriction<V>(out.table.data(), k));
        if constexpr (detail::is_optional<decltype(r)>::value) {
            if (!r) {
                std::vector<HfSet> seg;
                for (std::size_t j = 0; j < k; ++j)
                    seg.push_back(out.table[j].first);
                throw EvaluationError("phi undefined on the segment " + hf::to_string(hf::make_set(seg)));
            }
            out.table.emplace_back(el[pos[k]], std::move(*r));
        } else {
            out.table.emplace_back(el[pos[k]], std::move(r));
        }
    }
    return out;
}

// f(x) = {f(y) | y < x}; the image of f is the order type.
inline HfSet order_type(const FiniteOrder& o)
{
    auto f = transfinite_recurse<HfSet>(o, [](Restriction<HfSet> r) {
        std::vector<HfSet> vals;
        for (const auto& [x, v] : r)
            vals.push_back(v);
        return hf::make_set(std::move(vals));
    });
    std::vector<HfSet> image;
    for (const auto& [x, v] : f.table)
        image.push_back(v);
    return hf::make_set(std::move(image));
}

// --- arithmetic by recursion ------------------------------------------------

enum class ArithOp { add, mul, pow };

inline constexpr std::uint64_t arith_step_limit = std::uint64_t{1} << 31;

namespace detail {

// Number of successor steps the recursive definitions perform, saturating
// just above the step limit.
inline std::uint64_t arith_cost(ArithOp op, std::uint64_t m, std::uint64_t n)
{
    constexpr std::uint64_t over = arith_step_limit + 1;
    auto times = [over](std::uint64_t a, std::uint64_t b) {
        return (a != 0 && b > over / a) ? over : std::min(a * b, over);
    };
    switch (op) {
    case ArithOp::add: return std::min(n, over);
    case ArithOp::mul: return times(m, n);
    case ArithOp::pow: {
        std::uint64_t total = 0, p = 1;
        for (std::uint64_t k = 0; k < n && total < over; ++k) {
            p = times(p, m);
            total = std::min(total + p + 1, over);
        }
        return total;
    }
    }
    return 0;
}

inline std::uint64_t add(std::uint64_t m, std::uint64_t n)
{
    // u_0 = m, u_{k+1} = u_k + 1
    auto u = recurse_prefix<std::uint64_t>(n + 1, [m](std::span<const std::uint64_t> r) {
        return r.empty() ? m : r.back() + 1;
    });
    return u.back();
}

inline std::uint64_t mul(std::uint64_t m, std::uint64_t n)
{
    // u_0 = 0, u_{k+1} = u_k + m
    auto u = recurse_prefix<std::uint64_t>(n + 1, [m](std::span<const std::uint64_t> r) {
        return r.empty() ? std::uint64_t{0} : add(r.back(), m);
    });
    return u.back();
}

inline std::uint64_t pow(std::uint64_t m, std::uint64_t n)
{
    // u_0 = 1, u_{k+1} = m · u_k
    auto u = recurse_prefix<std::uint64_t>(n + 1, [m](std::span<const std::uint64_t> r) {
        return r.empty() ? std::uint64_t{1} : mul(r.back(), m);
    });
    return u.back();
}

} // namespace detail

// Addition, multiplication and exponentiation defined by recursion on the
// second argument, with successor as the only primitive.
inline std::uint64_t nat_arith(ArithOp op, std::uint64_t m, std::uint64_t n)
{
    if (detail::arith_cost(op, m, n) > arith_step_limit)
        throw DomainError("recursive evaluation would exceed 2^31 successor steps");
    switch (op) {
    case ArithOp::add: return detail::add(m, n);
    case ArithOp::mul: return detail::mul(m, n);
    case ArithOp::pow: return detail::pow(m, n);
    }
    return 0;
}

// --- lexicographic product --------------------------------------------------

// Families (x_i) ordered by the first index where they differ. The empty
// product is the one-point order on {∅}.
inline FiniteOrder lex_product(const std::vector<FiniteOrder>& factors)
{
    std::vector<OrderIndex> ix;
    for (const FiniteOrder& f : factors) {
        ix.emplace_back(f);
        if (!ix.back().is_order())
            throw PreconditionError("factor is not an order");
    }
    // enumerate index tuples of the product
    std::vector<std::vector<std::size_t>> tuples{{}};
    for (const OrderIndex& f : ix) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& t : tuples)
            for (std::size_t k = 0; k < f.size(); ++k) {
                next.push_back(t);
                next.back().push_back(k);
            }
        tuples = std::move(next);
    }
    std::vector<HfSet> carrier;
    for (const auto& t : tuples) {
        std::vector<HfSet> xs;
        for (std::size_t i = 0; i < t.size(); ++i)
            xs.push_back(ix[i].element(t[i]));
        carrier.push_back(hf::tuple_of(xs));
    }
    auto leq = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return ix[i].leq(a[i], b[i]);
        return true;
    };
    std::vector<HfSet> rel;
    for (std::size_t p = 0; p < tuples.size(); ++p)
        for (std::size_t q = 0; q < tuples.size(); ++q)
            if (leq(tuples[p], tuples[q]))
                rel.push_back(hf::couple(carrier[p], carrier[q]));
    return {hf::make_set(carrier), hf::make_set(std::move(rel))};
}

} // namespace bourbaki::ord

#endif // BOURBAKI_ORDINAL_RECURSION_HPP
