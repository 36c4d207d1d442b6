#ifndef BOURBAKI_ORDINAL_ORDINAL_HPP
#define BOURBAKI_ORDINAL_ORDINAL_HPP

#include <compare>
#include <map>
#include <vector>

#include "../error.hpp"
#include "../hf/set.hpp"

namespace bourbaki::ord {

using hf::HfSet;

// x ∈ X implies x ⊆ X
inline bool is_transitive_set(const HfSet& x)
{
    for (const HfSet& e : x)
        if (!hf::is_subset(e, x))
            return false;
    return true;
}

// x ∈ X implies x ∉ x
inline bool is_decent(const HfSet& x)
{
    for (const HfSet& e : x)
        if (e.contains(e))
            return false;
    return true;
}

// Transitive with every element an ordinal.
inline bool is_ordinal(const HfSet& x)
{
    if (!is_transitive_set(x))
        return false;
    for (const HfSet& e : x)
        if (!is_ordinal(e))
            return false;
    return true;
}

inline HfSet successor(const HfSet& x) { return hf::set_union(x, hf::singleton(x)); }

enum class Comparison { less, equal, greater };

inline Comparison ordinal_compare(const HfSet& a, const HfSet& b)
{
    if (!is_ordinal(a) || !is_ordinal(b))
        throw PreconditionError("ordinal_compare expects ordinals");
    if (a == b)
        return Comparison::equal;
    if (b.contains(a))
        return Comparison::less;
    if (a.contains(b))
        return Comparison::greater;
    throw PreconditionError("ordinals are not comparable");
}

inline HfSet sup_ordinals(const HfSet& e)
{
    for (const HfSet& a : e)
        if (!is_ordinal(a))
            throw PreconditionError(hf::to_string(a) + " is not an ordinal");
    return hf::big_union(e);
}

// Finite sets are equipotent exactly when they have the same number of
// elements.
inline bool equipotent(const HfSet& a, const HfSet& b) noexcept { return a.size() == b.size(); }

// Least ordinal equipotent to X, searched upward from 0.
inline HfSet cardinal_of(const HfSet& x)
{
    HfSet alpha;
    while (!equipotent(alpha, x))
        alpha = successor(alpha);
    return alpha;
}

} // namespace bourbaki::ord

#endif // BOURBAKI_ORDINAL_ORDINAL_HPP
