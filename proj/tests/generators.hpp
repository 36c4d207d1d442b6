#ifndef BOURBAKI_TESTS_GENERATORS_HPP
#define BOURBAKI_TESTS_GENERATORS_HPP

// Seeded random instances shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <bourbaki/assembly.hpp>
#include <bourbaki/linear.hpp>
#include <bourbaki/expression.hpp>
#include <bourbaki/fixpoint/cantor.hpp>
#include <bourbaki/fixpoint/tarski.hpp>
#include <bourbaki/hf/graph.hpp>
#include <bourbaki/hf/set.hpp>
#include <bourbaki/ordinal/order.hpp>

namespace gen {

using bourbaki::Assembly;
using bourbaki::Expression;
using bourbaki::hf::HfSet;
using Rng = std::mt19937_64;

inline std::size_t below(Rng& r, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(r); }
inline bool coin(Rng& r) { return below(r, 2) == 0; }

inline const std::vector<std::string>& letters()
{
    static const std::vector<std::string> xs{"x", "y", "z", "u", "v"};
    return xs;
}

inline std::string some_letter(Rng& r) { return letters()[below(r, letters().size())]; }

// Well-sorted assemblies; τ binds a random letter, possibly absent.
inline Assembly term(Rng& r, int depth);

inline Assembly relation(Rng& r, int depth)
{
    switch (depth <= 0 ? 3 + below(r, 2) : below(r, 6)) {
    case 0: return Assembly::neg(relation(r, depth - 1));
    case 1:
    case 2: return Assembly::disj(relation(r, depth - 1), relation(r, depth - 1));
    case 3: return Assembly::elem(term(r, depth - 1), term(r, depth - 1));
    default: return Assembly::eq(term(r, depth - 1), term(r, depth - 1));
    }
}

inline Assembly term(Rng& r, int depth)
{
    if (depth <= 0 || below(r, 3) != 0)
        return Assembly::letter(some_letter(r));
    return bourbaki::tau_bind(some_letter(r), relation(r, depth - 1));
}

inline Assembly assembly(Rng& r, int depth = 5) { return coin(r) ? term(r, depth) : relation(r, depth); }

// Sort-correct surface expressions of bounded size.
namespace ex = bourbaki::ex;

inline Expression term_expr(Rng& r, int depth);

inline Expression rel_expr(Rng& r, int depth)
{
    auto t = [&] { return term_expr(r, depth - 1); };
    auto R = [&] { return rel_expr(r, depth - 1); };
    if (depth <= 0)
        return coin(r) ? ex::in(ex::letter(some_letter(r)), ex::letter(some_letter(r)))
                       : ex::eq(ex::letter(some_letter(r)), ex::letter(some_letter(r)));
    switch (below(r, 14)) {
    case 0: return ex::not_(R());
    case 1: return ex::or_(R(), R());
    case 2: return ex::and_(R(), R());
    case 3: return ex::implies(R(), R());
    case 4: return ex::iff(R(), R());
    case 5: return ex::eq(t(), t());
    case 6: return ex::in(t(), t());
    case 7: return ex::notin(t(), t());
    case 8: return ex::neq(t(), t());
    case 9: return ex::subset(t(), t());
    case 10: return ex::forall(some_letter(r), R());
    case 11: return ex::exists(some_letter(r), R());
    case 12: return ex::subst(R(), some_letter(r), t());
    default: return ex::coll(some_letter(r), R());
    }
}

inline Expression term_expr(Rng& r, int depth)
{
    if (depth <= 0 || below(r, 3) == 0)
        return ex::letter(some_letter(r));
    auto t = [&] { return term_expr(r, depth - 1); };
    auto R = [&] { return rel_expr(r, depth - 1); };
    switch (below(r, 11)) {
    case 0: return ex::tau(some_letter(r), R());
    case 1: return ex::setof(some_letter(r), R());
    case 2: return ex::tau(some_letter(r), ex::in(ex::letter(some_letter(r)), t()));
    case 3: {
        std::vector<Expression> items;
        for (std::size_t k = 0, n = 1 + below(r, 3); k < n; ++k)
            items.push_back(t());
        return ex::enumeration(std::move(items));
    }
    case 4: return ex::singleton(t());
    case 5: return ex::couple(t(), t());
    case 6: return ex::empty();
    case 7: return ex::union_(t(), t());
    case 8: return ex::succ(t());
    case 9: return ex::numeral(below(r, 2));
    default: return ex::subst(t(), some_letter(r), t());
    }
}

inline Expression expression(Rng& r, int depth = 3) { return coin(r) ? term_expr(r, depth) : rel_expr(r, depth); }

// --- HF instances ------------------------------------------------------------

// Random HF set of rank at most `rank`.
inline HfSet hf_set(Rng& r, int rank, std::size_t width = 3)
{
    if (rank <= 0)
        return HfSet();
    std::vector<HfSet> xs;
    for (std::size_t k = 0, n = below(r, width + 1); k < n; ++k)
        xs.push_back(hf_set(r, rank - 1, width));
    return bourbaki::hf::make_set(std::move(xs));
}

inline std::vector<HfSet> numerals(std::size_t n)
{
    std::vector<HfSet> out;
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(bourbaki::hf::numeral(k));
    return out;
}

// `k` distinct elements drawn from a pool of small HF sets.
inline std::vector<HfSet> distinct(Rng& r, std::size_t k)
{
    std::vector<HfSet> pool = numerals(16);
    for (int i = 0; i < 16; ++i)
        pool.push_back(hf_set(r, 3));
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::shuffle(pool.begin(), pool.end(), r);
    pool.resize(std::min(k, pool.size()));
    return pool;
}

inline HfSet random_subset(Rng& r, const HfSet& s)
{
    return bourbaki::hf::filter(s, [&](const HfSet&) { return coin(r); });
}

// Partition of `e` into random blocks.
inline HfSet random_partition(Rng& r, const HfSet& e)
{
    std::vector<std::vector<HfSet>> blocks;
    for (const HfSet& x : e) {
        std::size_t b = below(r, blocks.size() + 1);
        if (b == blocks.size())
            blocks.emplace_back();
        blocks[b].push_back(x);
    }
    std::vector<HfSet> out;
    for (auto& b : blocks)
        out.push_back(bourbaki::hf::make_set(std::move(b)));
    return bourbaki::hf::make_set(std::move(out));
}

// Injections E → F and F → E between sets of equal size n; E and F may
// overlap. n ≤ 12.
inline bourbaki::fix::InjectionPair injection_pair(Rng& r, std::size_t n)
{
    auto pool = distinct(r, 24);
    std::vector<HfSet> e(pool.begin(), pool.begin() + static_cast<long>(n));
    std::shuffle(pool.begin(), pool.end(), r);
    std::vector<HfSet> f(pool.begin(), pool.begin() + static_cast<long>(n));
    bourbaki::fix::InjectionPair p;
    p.E = bourbaki::hf::make_set(e);
    p.F = bourbaki::hf::make_set(f);
    auto fs = f;
    std::shuffle(fs.begin(), fs.end(), r);
    for (std::size_t i = 0; i < n; ++i)
        p.f.emplace(e[i], fs[i]);
    auto es = e;
    std::shuffle(es.begin(), es.end(), r);
    for (std::size_t i = 0; i < n; ++i)
        p.g.emplace(f[i], es[i]);
    return p;
}

inline bourbaki::ord::FiniteOrder powerset_order(const HfSet& base)
{
    return bourbaki::ord::order_from(bourbaki::hf::powerset(base),
                                     [](const HfSet& a, const HfSet& b) { return bourbaki::hf::is_subset(a, b); });
}

// Monotone self-map of P(base): coordinate b of f(X) holds iff X contains
// one of a random family of generators (an upward-closed condition).
inline std::map<HfSet, HfSet> monotone_table(Rng& r, const HfSet& base)
{
    HfSet parts = bourbaki::hf::powerset(base);
    std::map<HfSet, std::vector<HfSet>> gens;
    for (const HfSet& b : base)
        for (std::size_t k = 0, n = below(r, 4); k < n; ++k)
            gens[b].push_back(parts.elements()[below(r, parts.size())]);
    std::map<HfSet, HfSet> table;
    for (const HfSet& x : parts) {
        std::vector<HfSet> out;
        for (const HfSet& b : base)
            for (const HfSet& g : gens[b])
                if (bourbaki::hf::is_subset(g, x)) {
                    out.push_back(b);
                    break;
                }
        table.emplace(x, bourbaki::hf::make_set(std::move(out)));
    }
    return table;
}

struct KoenigCase {
    std::vector<HfSet> B;
    std::vector<HfSet> A;
};

// Up to 4 indices, |B_i| ≤ 4, A_i ⊆ ΠB_i with |A_i| < |B_i|.
inline KoenigCase koenig_case(Rng& r)
{
    KoenigCase k;
    std::size_t n = below(r, 5);
    for (std::size_t i = 0; i < n; ++i)
        k.B.push_back(bourbaki::hf::make_set(distinct(r, 1 + below(r, 4))));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<HfSet> ai;
        for (std::size_t m = 0, sz = below(r, k.B[i].size()); m < sz; ++m) {
            std::vector<HfSet> xs;
            for (std::size_t j = 0; j < n; ++j)
                xs.push_back(k.B[j].elements()[below(r, k.B[j].size())]);
            ai.push_back(bourbaki::hf::tuple_of(xs));
        }
        k.A.push_back(bourbaki::hf::make_set(std::move(ai)));
    }
    return k;
}

// --- corrupted formative sequences ----------------------------------------------

// Each corruption is invalid by construction: a dropped letter leaves its
// first user unjustified, a relation moved to the front has nothing before
// it, and `∨ x y` joins two terms.
inline std::vector<bourbaki::LinearAssembly> corrupt(Rng& r, std::vector<bourbaki::LinearAssembly> seq)
{
    using bourbaki::SignKind;
    auto is_letter = [](const bourbaki::LinearAssembly& l) { return l.size() == 1 && l.signs[0].kind == SignKind::letter; };
    switch (below(r, 3)) {
    case 0: {
        std::vector<std::size_t> ls;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (is_letter(seq[i]))
                ls.push_back(i);
        if (!ls.empty()) {
            seq.erase(seq.begin() + static_cast<long>(ls[below(r, ls.size())]));
            return seq;
        }
        [[fallthrough]];
    }
    case 1: {
        std::vector<std::size_t> rs;
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (!is_letter(seq[i]))
                rs.push_back(i);
        if (!rs.empty()) {
            std::size_t i = rs[below(r, rs.size())];
            auto moved = seq[i];
            seq.erase(seq.begin() + static_cast<long>(i));
            seq.insert(seq.begin(), moved);
            return seq;
        }
        [[fallthrough]];
    }
    default: {
        bourbaki::LinearAssembly bad;
        bad.signs = {bourbaki::Sign::of(SignKind::disj), bourbaki::Sign::letter("x"), bourbaki::Sign::letter("y")};
        seq.insert(seq.begin(), {bourbaki::LinearAssembly{{bourbaki::Sign::letter("x")}, {}},
                                 bourbaki::LinearAssembly{{bourbaki::Sign::letter("y")}, {}}});
        seq.insert(seq.begin() + static_cast<long>(2 + below(r, seq.size() - 1)), bad);
        return seq;
    }
    }
}

} // namespace gen

#endif // BOURBAKI_TESTS_GENERATORS_HPP
