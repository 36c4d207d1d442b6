#ifndef BOURBAKI_CLASSIFY_HPP
#define BOURBAKI_CLASSIFY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "assembly.hpp"
#include "error.hpp"
#include "linear.hpp"

namespace bourbaki {

enum class Classification { term, relation, neither };

inline std::string_view to_string(Classification c) noexcept
{
    switch (c) {
    case Classification::term: return "Term";
    case Classification::relation: return "Relation";
    case Classification::neither: return "Neither";
    }
    return "Neither";
}

// τ over a body that is not a relation is Neither (τ_x(A) is only formed
// from a relation A).
inline Classification classify(const Assembly& a)
{
    std::unordered_map<const void*, Classification> memo;
    std::function<Classification(const Assembly&)> go = [&](const Assembly& n) -> Classification {
        using K = Assembly::Kind;
        if (n.kind() == K::letter || n.kind() == K::bound)
            return Classification::term;
        if (auto it = memo.find(n.identity()); it != memo.end())
            return it->second;
        Classification c = Classification::neither;
        switch (n.kind()) {
        case K::tau:
            if (go(n.child(0)) == Classification::relation)
                c = Classification::term;
            break;
        case K::neg:
            if (go(n.child(0)) == Classification::relation)
                c = Classification::relation;
            break;
        case K::disj:
            if (go(n.child(0)) == Classification::relation && go(n.child(1)) == Classification::relation)
                c = Classification::relation;
            break;
        default:
            if (go(n.child(0)) == Classification::term && go(n.child(1)) == Classification::term)
                c = Classification::relation;
            break;
        }
        memo.emplace(n.identity(), c);
        return c;
    };
    return go(a);
}

inline Classification classify(const LinearAssembly& l)
{
    if (!is_balanced(l))
        return Classification::neither;
    try {
        return classify(delinearize(l));
    } catch (const LinearParseError&) {
        return Classification::neither;
    }
}

// One line of a formative-construction check. `rule` is 'a'..'e', or 0 for
// the first element that no rule justifies.
struct FormativeStep {
    char rule = 0;
    Classification sort = Classification::neither;
};

struct FormativeReport {
    bool valid = true;
    std::vector<FormativeStep> steps;
    std::optional<std::size_t> failure; // 1-based
    std::string reason;
};

// Rules: a) letter; b) ¬A, A an earlier relation; c) ∨AB, A and B earlier
// relations; d) τ_x(A), A an earlier relation; e) =TU or ∈TU, T and U
// earlier terms.
inline FormativeReport verify_formative(const std::vector<LinearAssembly>& seq)
{
    FormativeReport rep;
    std::vector<Assembly> prior;
    std::vector<Classification> sorts;

    auto earlier = [&](const Assembly& x, Classification want) {
        for (std::size_t i = 0; i < prior.size(); ++i)
            if (sorts[i] == want && prior[i] == x)
                return true;
        return false;
    };
    auto fail = [&](std::size_t k, std::string why) {
        rep.valid = false;
        rep.failure = k + 1;
        rep.reason = std::move(why);
        rep.steps.push_back({});
    };

    for (std::size_t k = 0; k < seq.size(); ++k) {
        std::optional<Assembly> a;
        try {
            a = delinearize(seq[k]);
        } catch (const LinearParseError& e) {
            fail(k, std::string("not an assembly: ") + e.what());
            return rep;
        }
        using K = Assembly::Kind;
        FormativeStep step;
        switch (a->kind()) {
        case K::letter: step = {'a', Classification::term}; break;
        case K::neg:
            if (earlier(a->child(0), Classification::relation))
                step = {'b', Classification::relation};
            break;
        case K::disj:
            if (earlier(a->child(0), Classification::relation) && earlier(a->child(1), Classification::relation))
                step = {'c', Classification::relation};
            break;
        case K::eq:
        case K::elem:
            if (earlier(a->child(0), Classification::term) && earlier(a->child(1), Classification::term))
                step = {'e', Classification::relation};
            break;
        case K::tau:
            for (std::size_t i = 0; i < prior.size() && step.rule == 0; ++i) {
                if (sorts[i] != Classification::relation)
                    continue;
                if (a->child(0).closed() && a->child(0) == prior[i]) {
                    step = {'d', Classification::term};
                    break;
                }
                for (const std::string& x : prior[i].free_letters())
                    if (tau_bind(x, prior[i]) == *a) {
                        step = {'d', Classification::term};
                        break;
                    }
            }
            break;
        case K::bound: break;
        }
        if (step.rule == 0) {
            fail(k, "no formative rule applies");
            return rep;
        }
        rep.steps.push_back(step);
        prior.push_back(*a);
        sorts.push_back(step.sort);
    }
    return rep;
}

// A formative construction ending in `a`, subassemblies listed once in
// post-order. Each τ is opened with a fresh letter `_f<k>`.
inline std::vector<Assembly> formative_construction(const Assembly& a)
{
    if (classify(a) == Classification::neither)
        throw ConstructionError("assembly is neither a term nor a relation");
    std::vector<Assembly> out;
    std::set<std::string> seen;
    const auto& used = a.free_letters();
    std::size_t next = 0;
    auto fresh = [&] {
        while (true) {
            std::string f = "_f" + std::to_string(next++);
            if (!std::binary_search(used.begin(), used.end(), f))
                return f;
        }
    };
    std::function<void(const Assembly&)> go = [&](const Assembly& n) {
        std::string key = to_text(linearize(n));
        if (seen.count(key))
            return;
        if (n.kind() == Assembly::Kind::tau) {
            std::string x = fresh();
            go(open_binder(n, x));
        } else {
            for (std::size_t i = 0; i < n.arity(); ++i)
                go(n.child(i));
        }
        seen.insert(std::move(key));
        out.push_back(n);
    };
    go(a);
    return out;
}

} // namespace bourbaki

#endif // BOURBAKI_CLASSIFY_HPP
