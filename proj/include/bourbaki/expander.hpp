#ifndef BOURBAKI_EXPANDER_HPP
#define BOURBAKI_EXPANDER_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "assembly.hpp"
#include "error.hpp"
#include "expression.hpp"
#include "natural.hpp"

namespace bourbaki {

// Template letters. Every template binds them completely, so one name per
// role suffices and expansions never expose them.
inline constexpr std::string_view reserved_element = "_z0";
inline constexpr std::string_view reserved_collector = "_t0";

// Carrier algebra for the expansion engine: anything with
//   value_type letter(std::string_view)
//   value_type neg(v), disj(v, v), eq(v, v), elem(v, v)
//   value_type tau(std::string_view x, v)
//   value_type subst(v body, std::string_view x, v image)
struct AssemblyAlgebra {
    using value_type = Assembly;

    Assembly letter(std::string_view x) const { return Assembly::letter(std::string(x)); }
    Assembly neg(const Assembly& a) const { return Assembly::neg(a); }
    Assembly disj(const Assembly& a, const Assembly& b) const { return Assembly::disj(a, b); }
    Assembly eq(const Assembly& a, const Assembly& b) const { return Assembly::eq(a, b); }
    Assembly elem(const Assembly& a, const Assembly& b) const { return Assembly::elem(a, b); }
    Assembly tau(std::string_view x, const Assembly& body) const { return tau_bind(x, body); }
    Assembly subst(const Assembly& body, std::string_view x, const Assembly& image) const
    {
        return substitute(body, x, image);
    }
};

// Evaluates an Expression in a carrier algebra. Numeral values are cached
// for the lifetime of the expander, so repeated numerals share structure.
template <class Algebra>
class Expander {
public:
    using value_type = typename Algebra::value_type;

    explicit Expander(Algebra alg = {}) : alg_(std::move(alg)) {}

    value_type operator()(const Expression& e)
    {
        check_letters(e);
        sort_of(e);
        return run(e);
    }

    value_type numeral(std::size_t n)
    {
        while (numerals_.size() <= n) {
            std::size_t k = numerals_.size();
            if (k == 0) {
                numerals_.push_back(empty());
            } else {
                std::vector<value_type> items(numerals_.begin(), numerals_.end());
                numerals_.push_back(enumeration(items));
            }
        }
        return numerals_[n];
    }

    Algebra& algebra() noexcept { return alg_; }

private:
    static void check_letters(const Expression& e)
    {
        if (e.kind == ExprKind::letter || !e.name.empty()) {
            if (!e.name.empty() && e.name.front() == '_')
                throw ExpansionError("letter '" + e.name + "' collides with the reserved template namespace");
            if (!is_letter_name(e.name) || is_keyword(e.name))
                throw ExpansionError("invalid letter '" + e.name + "'");
        }
        for (const Expression& a : e.args)
            check_letters(a);
    }

    value_type z() { return alg_.letter(reserved_element); }
    value_type t() { return alg_.letter(reserved_collector); }

    value_type implies(const value_type& a, const value_type& b) { return alg_.disj(alg_.neg(a), b); }
    value_type conj(const value_type& a, const value_type& b)
    {
        return alg_.neg(alg_.disj(alg_.neg(a), alg_.neg(b)));
    }
    value_type iff(const value_type& a, const value_type& b) { return conj(implies(a, b), implies(b, a)); }

    // ¬¬(τ_x(¬R)|x)R
    value_type forall(std::string_view x, const value_type& r)
    {
        return alg_.neg(alg_.neg(alg_.subst(r, x, alg_.tau(x, alg_.neg(r)))));
    }

    // (τ_x(R)|x)R
    value_type exists(std::string_view x, const value_type& r) { return alg_.subst(r, x, alg_.tau(x, r)); }

    // ∀x((x ∈ t) ⇔ R), t the collecting letter
    value_type collects(std::string_view x, const value_type& r)
    {
        return forall(x, iff(alg_.elem(alg_.letter(x), t()), r));
    }

    value_type setof(std::string_view x, const value_type& r) { return alg_.tau(reserved_collector, collects(x, r)); }

    // {z | z = T1 ou (z = T2 ou ...)}; a single element is listed twice.
    value_type enumeration(const std::vector<value_type>& items)
    {
        if (items.size() == 1)
            return enumeration({items[0], items[0]});
        value_type chain = alg_.eq(z(), items.back());
        for (std::size_t i = items.size() - 1; i-- > 0;)
            chain = alg_.disj(alg_.eq(z(), items[i]), chain);
        return setof(reserved_element, chain);
    }

    value_type empty() { return alg_.tau(reserved_collector, forall(reserved_element, alg_.neg(alg_.elem(z(), t())))); }

    value_type run(const Expression& e)
    {
        auto arg = [&](std::size_t i) { return run(e.args[i]); };
        switch (e.kind) {
        case ExprKind::letter: return alg_.letter(e.name);
        case ExprKind::not_: return alg_.neg(arg(0));
        case ExprKind::or_: return alg_.disj(arg(0), arg(1));
        case ExprKind::and_: return conj(arg(0), arg(1));
        case ExprKind::implies: return implies(arg(0), arg(1));
        case ExprKind::iff: return iff(arg(0), arg(1));
        case ExprKind::eq: return alg_.eq(arg(0), arg(1));
        case ExprKind::in: return alg_.elem(arg(0), arg(1));
        case ExprKind::notin: return alg_.neg(alg_.elem(arg(0), arg(1)));
        case ExprKind::neq: return alg_.neg(alg_.eq(arg(0), arg(1)));
        case ExprKind::subset:
            return forall(reserved_element, implies(alg_.elem(z(), arg(0)), alg_.elem(z(), arg(1))));
        case ExprKind::forall: return forall(e.name, arg(0));
        case ExprKind::exists: return exists(e.name, arg(0));
        case ExprKind::tau: return alg_.tau(e.name, arg(0));
        case ExprKind::coll: return exists(reserved_collector, collects(e.name, arg(0)));
        case ExprKind::setof: return setof(e.name, arg(0));
        case ExprKind::enumeration: {
            std::vector<value_type> items;
            for (const Expression& a : e.args)
                items.push_back(run(a));
            return enumeration(items);
        }
        case ExprKind::singleton: {
            value_type x = arg(0);
            return enumeration({x, x});
        }
        case ExprKind::couple: {
            value_type x = arg(0);
            value_type y = arg(1);
            return enumeration({enumeration({x, x}), enumeration({x, y})});
        }
        case ExprKind::empty: return empty();
        case ExprKind::union_: {
            value_type x = arg(0);
            value_type y = arg(1);
            return setof(reserved_element, alg_.disj(alg_.elem(z(), x), alg_.elem(z(), y)));
        }
        case ExprKind::succ: {
            value_type x = arg(0);
            value_type s = enumeration({x, x});
            return setof(reserved_element, alg_.disj(alg_.elem(z(), x), alg_.elem(z(), s)));
        }
        case ExprKind::numeral:
            if (e.number > Natural(std::numeric_limits<std::size_t>::max() / 2))
                throw ExpansionError("numeral too large to enumerate");
            return numeral(static_cast<std::size_t>(e.number));
        case ExprKind::subst: return alg_.subst(arg(0), e.name, arg(1));
        }
        throw ExpansionError("unknown expression node");
    }

    Algebra alg_;
    std::vector<value_type> numerals_;
};

inline Assembly expand(const Expression& e) { return Expander<AssemblyAlgebra>{}(e); }

} // namespace bourbaki

#endif // BOURBAKI_EXPANDER_HPP
