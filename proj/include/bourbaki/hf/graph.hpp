#ifndef BOURBAKI_HF_GRAPH_HPP
#define BOURBAKI_HF_GRAPH_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "set.hpp"

namespace bourbaki::hf {

using Pair = std::pair<HfSet, HfSet>;

// Couples of a graph as pairs; ShapeError on a non-couple element.
inline std::vector<Pair> pairs_of(const HfSet& g)
{
    std::vector<Pair> out;
    out.reserve(g.size());
    for (const HfSet& z : g) {
        if (!is_couple(z))
            throw ShapeError("graph element " + to_string(z) + " is not a couple");
        out.push_back(decouple(z));
    }
    return out;
}

inline HfSet graph_of(const std::vector<Pair>& ps)
{
    std::vector<HfSet> out;
    out.reserve(ps.size());
    for (const auto& [x, y] : ps)
        out.push_back(couple(x, y));
    return make_set(std::move(out));
}

inline bool is_graph(const HfSet& g)
{
    return std::all_of(g.begin(), g.end(), [](const HfSet& z) { return is_couple(z); });
}

inline HfSet pr1_set(const HfSet& g)
{
    std::vector<HfSet> out;
    for (auto& p : pairs_of(g))
        out.push_back(std::move(p.first));
    return make_set(std::move(out));
}

inline HfSet pr2_set(const HfSet& g)
{
    std::vector<HfSet> out;
    for (auto& p : pairs_of(g))
        out.push_back(std::move(p.second));
    return make_set(std::move(out));
}

inline HfSet graph_inverse(const HfSet& g)
{
    auto ps = pairs_of(g);
    for (auto& p : ps)
        std::swap(p.first, p.second);
    return graph_of(ps);
}

// H∘G = {(x, z) | ∃y (x, y) ∈ G and (y, z) ∈ H}
inline HfSet graph_compose(const HfSet& h, const HfSet& g)
{
    std::multimap<HfSet, HfSet> byFirst;
    for (auto& [y, z] : pairs_of(h))
        byFirst.emplace(std::move(y), std::move(z));
    std::vector<Pair> out;
    for (const auto& [x, y] : pairs_of(g)) {
        auto [lo, hi] = byFirst.equal_range(y);
        for (auto it = lo; it != hi; ++it)
            out.emplace_back(x, it->second);
    }
    return graph_of(out);
}

// G⟨X⟩ = {y | ∃x ∈ X, (x, y) ∈ G}
inline HfSet graph_image(const HfSet& g, const HfSet& x)
{
    std::vector<HfSet> out;
    for (auto& [a, b] : pairs_of(g))
        if (x.contains(a))
            out.push_back(std::move(b));
    return make_set(std::move(out));
}

inline HfSet graph_preimage(const HfSet& g, const HfSet& y) { return graph_image(graph_inverse(g), y); }

inline bool is_functional(const HfSet& g)
{
    auto ps = pairs_of(g);
    // couples with equal first coordinate need not be adjacent in canonical
    // order, so sort by first coordinate
    std::sort(ps.begin(), ps.end(), [](const Pair& a, const Pair& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < ps.size(); ++i)
        if (ps[i].first == ps[i - 1].first)
            return false;
    return true;
}

inline HfSet apply(const HfSet& g, const HfSet& x)
{
    if (!is_functional(g))
        throw DomainError("graph is not functional");
    for (auto& [a, b] : pairs_of(g))
        if (a == x)
            return b;
    throw DomainError(to_string(x) + " is not in the domain");
}

inline HfSet diagonal(const HfSet& e)
{
    std::vector<HfSet> out;
    for (const HfSet& x : e)
        out.push_back(couple(x, x));
    return make_set(std::move(out));
}

// Γ = (G, A, B) with pr1 G ⊆ A and pr2 G ⊆ B.
struct Correspondence {
    HfSet graph;
    HfSet source;
    HfSet target;

    Correspondence(HfSet g, HfSet a, HfSet b) : graph(std::move(g)), source(std::move(a)), target(std::move(b))
    {
        if (!is_subset(pr1_set(graph), source) || !is_subset(pr2_set(graph), target))
            throw ShapeError("graph does not lie in source × target");
    }

    HfSet image(const HfSet& x) const { return graph_image(graph, x); }

    Correspondence inverse() const { return {graph_inverse(graph), target, source}; }
};

inline Correspondence compose(const Correspondence& h, const Correspondence& g)
{
    return {graph_compose(h.graph, g.graph), g.source, h.target};
}

// Finite family (x_0, ..., x_{n-1}) as the functional graph {(i, x_i)} on the
// numeral n. The empty family is ∅.
inline HfSet tuple_of(const std::vector<HfSet>& xs)
{
    std::vector<Pair> ps;
    for (std::size_t i = 0; i < xs.size(); ++i)
        ps.emplace_back(numeral(i), xs[i]);
    return graph_of(ps);
}

inline std::vector<HfSet> components(const HfSet& t)
{
    std::vector<HfSet> out(t.size());
    std::vector<bool> seen(t.size(), false);
    for (auto& [i, x] : pairs_of(t)) {
        auto k = as_numeral(i);
        if (!k || *k >= t.size() || seen[*k])
            throw ShapeError(to_string(t) + " is not a finite family indexed by a numeral");
        seen[*k] = true;
        out[*k] = std::move(x);
    }
    return out;
}

// --- equivalences -----------------------------------------------------------

struct EquivalenceReport {
    bool within;       // pr1 G ⊆ E and pr2 G ⊆ E
    bool reflexive;    // Δ_E ⊆ G
    bool transitive;   // G∘G ⊆ G
    bool symmetric;    // G⁻¹ = G
    bool sandwich;     // G∘G⁻¹∘G ⊆ G
    bool criterion_a;
    bool criterion_b;

    bool agree() const noexcept { return criterion_a == criterion_b; }
    bool verdict() const noexcept { return criterion_a; }
};

inline EquivalenceReport equivalence_check(const HfSet& e, const HfSet& g)
{
    EquivalenceReport r{};
    r.within = is_subset(pr1_set(g), e) && is_subset(pr2_set(g), e);
    r.reflexive = is_subset(diagonal(e), g);
    r.transitive = is_subset(graph_compose(g, g), g);
    HfSet inv = graph_inverse(g);
    r.symmetric = inv == g;
    r.sandwich = is_subset(graph_compose(g, graph_compose(inv, g)), g);
    r.criterion_a = r.within && r.reflexive && r.transitive && r.symmetric;
    r.criterion_b = r.within && r.reflexive && r.sandwich;
    return r;
}

// Least equivalence graph on E containing G.
inline HfSet equivalence_closure(const HfSet& e, const HfSet& g)
{
    if (!is_subset(g, product(e, e)))
        throw PreconditionError("graph is not contained in E × E");
    HfSet h = set_union(set_union(g, graph_inverse(g)), diagonal(e));
    while (true) {
        HfSet next = set_union(h, graph_compose(h, h));
        if (next == h)
            return h;
        h = std::move(next);
    }
}

inline HfSet quotient(const HfSet& e, const HfSet& g)
{
    if (!equivalence_check(e, g).verdict())
        throw PreconditionError("graph is not an equivalence on E");
    std::vector<HfSet> classes;
    for (const HfSet& x : e)
        classes.push_back(graph_image(g, singleton(x)));
    return make_set(std::move(classes));
}

// Graph of the equivalence whose classes are the blocks of `partition`.
inline HfSet partition_graph(const HfSet& partition)
{
    std::vector<HfSet> out;
    for (const HfSet& block : partition)
        for (const HfSet& x : block)
            for (const HfSet& y : block)
                out.push_back(couple(x, y));
    return make_set(std::move(out));
}

} // namespace bourbaki::hf

#endif // BOURBAKI_HF_GRAPH_HPP
