#ifndef BOURBAKI_HF_SET_HPP
#define BOURBAKI_HF_SET_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "../error.hpp"

namespace bourbaki::hf {

// Hereditarily finite set in canonical form: elements sorted by
// (rank, cardinality, lexicographic) and duplicate-free, so extensional
// equality is structural equality.
class HfSet {
public:
    HfSet() : node_(empty_node()) {}

    static HfSet make(std::vector<HfSet> elems)
    {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        return from_sorted(std::move(elems));
    }

    static HfSet make(std::initializer_list<HfSet> elems) { return make(std::vector<HfSet>(elems)); }

    // `elems` must already be canonical (sorted, unique).
    static HfSet from_sorted(std::vector<HfSet> elems)
    {
        if (elems.empty())
            return HfSet();
        auto n = std::make_shared<Node>();
        std::size_t r = 0;
        for (const HfSet& e : elems)
            r = std::max(r, e.rank() + 1);
        n->rank = r;
        n->elems = std::move(elems);
        return HfSet(std::move(n));
    }

    const std::vector<HfSet>& elements() const noexcept { return node_->elems; }
    std::size_t size() const noexcept { return node_->elems.size(); }
    bool empty() const noexcept { return node_->elems.empty(); }
    std::size_t rank() const noexcept { return node_->rank; }

    auto begin() const noexcept { return node_->elems.begin(); }
    auto end() const noexcept { return node_->elems.end(); }

    bool contains(const HfSet& x) const { return std::binary_search(begin(), end(), x); }

    friend std::strong_ordering operator<=>(const HfSet& a, const HfSet& b) noexcept
    {
        if (a.node_ == b.node_)
            return std::strong_ordering::equal;
        if (auto c = a.rank() <=> b.rank(); c != 0)
            return c;
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (auto c = a.node_->elems[i] <=> b.node_->elems[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    friend bool operator==(const HfSet& a, const HfSet& b) noexcept { return (a <=> b) == 0; }

private:
    struct Node {
        std::size_t rank = 0;
        std::vector<HfSet> elems;
    };

    explicit HfSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static const std::shared_ptr<const Node>& empty_node()
    {
        static const std::shared_ptr<const Node> e = std::make_shared<Node>();
        return e;
    }

    std::shared_ptr<const Node> node_;
};

inline HfSet make_set(std::vector<HfSet> elems) { return HfSet::make(std::move(elems)); }

inline bool is_subset(const HfSet& a, const HfSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline HfSet set_union(const HfSet& a, const HfSet& b)
{
    std::vector<HfSet> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return HfSet::from_sorted(std::move(out));
}

inline HfSet set_intersection(const HfSet& a, const HfSet& b)
{
    std::vector<HfSet> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return HfSet::from_sorted(std::move(out));
}

inline HfSet set_difference(const HfSet& a, const HfSet& b)
{
    std::vector<HfSet> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return HfSet::from_sorted(std::move(out));
}

inline HfSet singleton(const HfSet& x) { return HfSet::from_sorted({x}); }

inline HfSet pair_set(const HfSet& x, const HfSet& y) { return HfSet::make({x, y}); }

inline HfSet big_union(const HfSet& family)
{
    std::vector<HfSet> out;
    for (const HfSet& s : family)
        out.insert(out.end(), s.begin(), s.end());
    return make_set(std::move(out));
}

template <class Pred>
HfSet filter(const HfSet& s, Pred keep)
{
    std::vector<HfSet> out;
    for (const HfSet& x : s)
        if (keep(x))
            out.push_back(x);
    return HfSet::from_sorted(std::move(out));
}

// Von Neumann numeral n = {0, ..., n-1}.
inline HfSet numeral(std::size_t n)
{
    std::vector<HfSet> elems;
    elems.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        elems.push_back(HfSet::from_sorted(elems));
    return HfSet::from_sorted(std::move(elems));
}

// The numeral n when `s` is one, else nothing. Numerals sort as 0 < 1 < ...,
// so a numeral's elements are exactly numerals 0..n-1 in order.
inline std::optional<std::size_t> as_numeral(const HfSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        const HfSet& e = s.elements()[i];
        if (e.size() != i || (i > 0 && !std::equal(e.begin(), e.end(), s.begin())))
            return std::nullopt;
    }
    return s.size();
}

inline HfSet powerset(const HfSet& s)
{
    if (s.size() > 20)
        throw DomainError("powerset of a set with more than 20 elements");
    std::vector<HfSet> out;
    const auto& el = s.elements();
    for (std::size_t mask = 0; mask < (std::size_t{1} << el.size()); ++mask) {
        std::vector<HfSet> part;
        for (std::size_t i = 0; i < el.size(); ++i)
            if (mask & (std::size_t{1} << i))
                part.push_back(el[i]);
        out.push_back(HfSet::from_sorted(std::move(part)));
    }
    return make_set(std::move(out));
}

// --- couples ----------------------------------------------------------------

// Kuratowski couple {{x},{x,y}}.
inline HfSet couple(const HfSet& x, const HfSet& y) { return pair_set(singleton(x), pair_set(x, y)); }

inline bool is_couple(const HfSet& z) noexcept
{
    if (z.size() == 1)
        return z.elements()[0].size() == 1;
    if (z.size() != 2)
        return false;
    const HfSet& a = z.elements()[0];
    const HfSet& b = z.elements()[1];
    // the singleton sorts first (cardinality breaks rank ties; a strictly
    // lower rank is the other possibility)
    const HfSet& s = a.size() == 1 ? a : b;
    const HfSet& p = a.size() == 1 ? b : a;
    return s.size() == 1 && p.size() == 2 && p.contains(s.elements()[0]);
}

inline std::pair<HfSet, HfSet> decouple(const HfSet& z)
{
    if (!is_couple(z))
        throw ShapeError("not a couple");
    if (z.size() == 1)
        return {z.elements()[0].elements()[0], z.elements()[0].elements()[0]};
    const HfSet& a = z.elements()[0];
    const HfSet& s = a.size() == 1 ? a : z.elements()[1];
    const HfSet& p = a.size() == 1 ? z.elements()[1] : a;
    const HfSet& x = s.elements()[0];
    return {x, p.elements()[0] == x ? p.elements()[1] : p.elements()[0]};
}

inline HfSet pr1(const HfSet& z) { return decouple(z).first; }
inline HfSet pr2(const HfSet& z) { return decouple(z).second; }

inline HfSet product(const HfSet& a, const HfSet& b)
{
    std::vector<HfSet> out;
    out.reserve(a.size() * b.size());
    for (const HfSet& x : a)
        for (const HfSet& y : b)
            out.push_back(couple(x, y));
    return make_set(std::move(out));
}

// --- text -------------------------------------------------------------------

inline void print_set(const HfSet& s, std::string& out)
{
    out += '{';
    bool first = true;
    for (const HfSet& e : s) {
        if (!first)
            out += ',';
        first = false;
        print_set(e, out);
    }
    out += '}';
}

// Canonical literal, elements in canonical order, no spaces.
inline std::string to_string(const HfSet& s)
{
    std::string out;
    print_set(s, out);
    return out;
}

// Numerals print as decimals, other sets as braces.
inline std::string to_display(const HfSet& s)
{
    if (auto n = as_numeral(s))
        return std::to_string(*n);
    std::string out = "{";
    bool first = true;
    for (const HfSet& e : s) {
        if (!first)
            out += ',';
        first = false;
        out += to_display(e);
    }
    return out + "}";
}

} // namespace bourbaki::hf

#endif // BOURBAKI_HF_SET_HPP
