#ifndef BOURBAKI_COUNTS_HPP
#define BOURBAKI_COUNTS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "assembly.hpp"
#include "error.hpp"
#include "expander.hpp"
#include "expression.hpp"
#include "natural.hpp"

namespace bourbaki {

inline constexpr std::size_t default_budget = 50'000'000;

struct CountVector {
    Natural signs;
    Natural links;
    std::map<std::string, Natural, std::less<>> occ; // zero entries omitted

    Natural occurrences(std::string_view x) const
    {
        auto it = occ.find(x);
        return it == occ.end() ? Natural(0) : it->second;
    }

    friend bool operator==(const CountVector&, const CountVector&) = default;
};

// Same vector with reserved template letters dropped.
inline CountVector user_facing(CountVector c)
{
    std::erase_if(c.occ, [](const auto& kv) { return !kv.first.empty() && kv.first.front() == '_'; });
    return c;
}

// Count laws, as a carrier algebra for the expander.
struct CountAlgebra {
    using value_type = CountVector;

    CountVector letter(std::string_view x) const
    {
        CountVector c;
        c.signs = 1;
        c.occ.emplace(std::string(x), 1);
        return c;
    }

    CountVector neg(const CountVector& a) const
    {
        CountVector c = a;
        c.signs += 1;
        return c;
    }

    CountVector binary(const CountVector& a, const CountVector& b) const
    {
        CountVector c = a;
        c.signs += b.signs + 1;
        c.links += b.links;
        for (const auto& [x, n] : b.occ)
            c.occ[x] += n;
        return c;
    }

    CountVector disj(const CountVector& a, const CountVector& b) const { return binary(a, b); }
    CountVector eq(const CountVector& a, const CountVector& b) const { return binary(a, b); }
    CountVector elem(const CountVector& a, const CountVector& b) const { return binary(a, b); }

    // signs + 1, links + occ_x, occ_x ↦ 0
    CountVector tau(std::string_view x, const CountVector& a) const
    {
        CountVector c = a;
        c.signs += 1;
        if (auto it = c.occ.find(x); it != c.occ.end()) {
            c.links += it->second;
            c.occ.erase(it);
        }
        return c;
    }

    // signs' = s(A) − k + k·s(T); links' = l(A) + k·l(T);
    // occ'_y = occ_y(A) + k·occ_y(T) (y ≠ x); occ'_x = k·occ_x(T); k = occ_x(A)
    CountVector subst(const CountVector& a, std::string_view x, const CountVector& image) const
    {
        Natural k = a.occurrences(x);
        if (k == 0)
            return a;
        CountVector c = a;
        c.occ.erase(c.occ.find(x));
        c.signs = a.signs - k + k * image.signs;
        c.links = a.links + k * image.links;
        for (const auto& [y, n] : image.occ)
            c.occ[y] += k * n;
        return c;
    }
};

// Exact counts of a materialized assembly. Throws BudgetError past `budget`
// signs.
inline CountVector count_materialized(const Assembly& a, std::size_t budget = default_budget)
{
    CountVector c;
    std::size_t links = 0;
    std::map<std::string, std::size_t, std::less<>> occ;
    std::size_t n = for_each_sign(
        a,
        [&](SignKind k, const std::string& name, std::size_t, std::size_t) {
            if (k == SignKind::box)
                ++links;
            else if (k == SignKind::letter)
                ++occ[name];
        },
        budget);
    if (n > budget)
        throw BudgetError("assembly exceeds the materialization budget of " + std::to_string(budget) +
                          " signs; use symbolic counting");
    c.signs = n;
    c.links = links;
    for (const auto& [x, k] : occ)
        c.occ.emplace(x, k);
    return c;
}

inline CountVector count_symbolic(const Expression& e) { return Expander<CountAlgebra>{}(e); }

// Numeral counts, memoized over 0..n for the lifetime of the object.
class NumeralCounter {
public:
    CountVector operator()(std::size_t n) { return expander_.numeral(n); }

private:
    Expander<CountAlgebra> expander_;
};

inline std::size_t numeral_index(const Natural& n)
{
    if (n > Natural(std::numeric_limits<std::size_t>::max() / 2))
        throw ExpansionError("numeral too large to enumerate");
    return static_cast<std::size_t>(n);
}

inline CountVector numeral_counts(const Natural& n)
{
    NumeralCounter counter;
    return counter(numeral_index(n));
}

struct GrowthRow {
    std::size_t n;
    Natural signs;
    Natural links;
};

inline std::vector<GrowthRow> growth_table(std::size_t n_max)
{
    NumeralCounter counter;
    std::vector<GrowthRow> rows;
    for (std::size_t n = 0; n <= n_max; ++n) {
        CountVector c = counter(n);
        rows.push_back({n, c.signs, c.links});
    }
    return rows;
}

} // namespace bourbaki

#endif // BOURBAKI_COUNTS_HPP
