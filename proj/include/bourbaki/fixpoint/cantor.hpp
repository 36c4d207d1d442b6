#ifndef BOURBAKI_FIXPOINT_CANTOR_HPP
#define BOURBAKI_FIXPOINT_CANTOR_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../hf/graph.hpp"
#include "../hf/set.hpp"
#include "../natural.hpp"

namespace bourbaki::fix {

using hf::HfSet;
using Map = std::map<HfSet, HfSet>;

inline HfSet image(const Map& f, const HfSet& x)
{
    std::vector<HfSet> out;
    for (const HfSet& a : x)
        out.push_back(f.at(a));
    return hf::make_set(std::move(out));
}

inline HfSet graph_of(const Map& f)
{
    std::vector<HfSet> out;
    for (const auto& [x, y] : f)
        out.push_back(hf::couple(x, y));
    return hf::make_set(std::move(out));
}

// Total map from `dom` into `cod`; PreconditionError otherwise.
inline void require_map(const Map& f, const HfSet& dom, const HfSet& cod, const std::string& name)
{
    if (f.size() != dom.size())
        throw PreconditionError(name + " is not defined exactly on its domain");
    for (const auto& [x, y] : f) {
        if (!dom.contains(x))
            throw PreconditionError(name + " is defined at " + hf::to_string(x) + " outside its domain");
        if (!cod.contains(y))
            throw PreconditionError(name + " maps " + hf::to_string(x) + " outside its codomain");
    }
}

inline bool is_injective(const Map& f)
{
    std::set<HfSet> seen;
    for (const auto& [x, y] : f)
        if (!seen.insert(y).second)
            return false;
    return true;
}

struct InjectionPair {
    HfSet E;
    HfSet F;
    Map f; // E → F
    Map g; // F → E

    void validate() const
    {
        require_map(f, E, F, "f");
        require_map(g, F, E, "g");
        if (!is_injective(f))
            throw PreconditionError("f is not injective");
        if (!is_injective(g))
            throw PreconditionError("g is not injective");
    }
};

struct CantorBernsteinResult {
    HfSet A;       // E − A = g⟨F − f⟨A⟩⟩
    Map bijection; // f on A, g⁻¹ on E − A
    std::size_t iterations = 0;
};

// Least fixed point of X ↦ E − g⟨F − f⟨X⟩⟩, iterated up from ∅.
inline CantorBernsteinResult cantor_bernstein(const InjectionPair& p)
{
    p.validate();
    auto step = [&](const HfSet& x) {
        return hf::set_difference(p.E, image(p.g, hf::set_difference(p.F, image(p.f, x))));
    };
    CantorBernsteinResult r;
    HfSet x;
    while (true) {
        HfSet next = step(x);
        if (next == x)
            break;
        x = std::move(next);
        ++r.iterations;
    }
    r.A = x;
    Map ginv;
    for (const auto& [y, e] : p.g)
        ginv.emplace(e, y);
    for (const HfSet& e : p.E)
        r.bijection.emplace(e, r.A.contains(e) ? p.f.at(e) : ginv.at(e));
    if (!is_injective(r.bijection) || image(r.bijection, p.E) != p.F)
        throw EvaluationError("assembled map is not a bijection");
    return r;
}

struct DiagonalResult {
    HfSet D;                   // {x ∈ E | x ∉ f(x)}
    bool outside_image = false;
};

inline DiagonalResult cantor_diagonal(const HfSet& e, const Map& f)
{
    if (f.size() != e.size())
        throw ShapeError("f is not defined exactly on E");
    for (const auto& [x, fx] : f) {
        if (!e.contains(x))
            throw ShapeError("f is defined at " + hf::to_string(x) + " outside E");
        if (!hf::is_subset(fx, e))
            throw ShapeError("f(" + hf::to_string(x) + ") is not a subset of E");
    }
    DiagonalResult r;
    r.D = hf::filter(e, [&](const HfSet& x) { return !f.at(x).contains(x); });
    r.outside_image = true;
    for (const auto& [x, fx] : f)
        if (fx == r.D)
            r.outside_image = false;
    return r;
}

struct KoenigResult {
    std::vector<HfSet> components; // x_i ∈ B_i − pr_i(A_i)
    HfSet tuple;
    Natural sum;     // Σ |A_i|
    Natural product; // Π |B_i|
    bool uncovered = false;
    bool strict = false; // sum < product
};

// Diagonal tuple avoiding every A_i; x_i is the least available element of
// B_i in canonical order.
inline KoenigResult koenig_uncovered(const std::vector<HfSet>& b, const std::vector<HfSet>& a)
{
    if (a.size() != b.size())
        throw PreconditionError("A and B have different index sets");
    std::size_t n = b.size();
    std::vector<std::vector<std::vector<HfSet>>> members(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() >= b[i].size())
            throw PreconditionError("|A_" + std::to_string(i) + "| must be smaller than |B_" + std::to_string(i) + "|");
        for (const HfSet& t : a[i]) {
            auto xs = hf::components(t);
            if (xs.size() != n)
                throw PreconditionError(hf::to_string(t) + " is not a family of length " + std::to_string(n));
            for (std::size_t j = 0; j < n; ++j)
                if (!b[j].contains(xs[j]))
                    throw PreconditionError(hf::to_string(t) + " is not in the product of the B_i");
            members[i].push_back(std::move(xs));
        }
    }
    KoenigResult r;
    r.product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<HfSet> proj;
        for (const auto& xs : members[i])
            proj.push_back(xs[i]);
        HfSet avail = hf::set_difference(b[i], hf::make_set(std::move(proj)));
        r.components.push_back(avail.elements().front());
        r.sum += a[i].size();
        r.product *= b[i].size();
    }
    r.tuple = hf::tuple_of(r.components);
    r.uncovered = true;
    for (const HfSet& ai : a)
        if (ai.contains(r.tuple))
            r.uncovered = false;
    r.strict = r.sum < r.product;
    return r;
}

} // namespace bourbaki::fix

#endif // BOURBAKI_FIXPOINT_CANTOR_HPP
