#ifndef BOURBAKI_EXPRESSION_HPP
#define BOURBAKI_EXPRESSION_HPP

#include <array>
#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "natural.hpp"
#include "sign.hpp"

namespace bourbaki {

enum class ExprKind : std::uint8_t {
    letter,
    not_,
    or_,
    and_,
    implies,
    iff,
    eq,
    in,
    notin,
    neq,
    subset,
    forall,
    exists,
    tau,
    coll,
    setof,
    enumeration,
    singleton,
    couple,
    empty,
    union_,
    succ,
    numeral,
    subst,
};

enum class Sort { term, relation };

// Surface syntax prior to expansion. `name` holds the letter, the binder of
// forall/exists/tau/coll/setof, or the replaced letter of subst.
struct Expression {
    ExprKind kind = ExprKind::letter;
    std::string name;
    Natural number;
    std::vector<Expression> args;

    friend bool operator==(const Expression&, const Expression&) = default;
};

namespace detail {

struct ExprInfo {
    ExprKind kind;
    std::string_view keyword;
    int arity;     // term/relation arguments; -1 for enum (one or more)
    bool binder;   // leading letter argument
    Sort result;
    Sort argSort;
};

inline constexpr std::array<ExprInfo, 23> expr_table{{
    {ExprKind::not_, "not", 1, false, Sort::relation, Sort::relation},
    {ExprKind::or_, "or", 2, false, Sort::relation, Sort::relation},
    {ExprKind::and_, "and", 2, false, Sort::relation, Sort::relation},
    {ExprKind::implies, "implies", 2, false, Sort::relation, Sort::relation},
    {ExprKind::iff, "iff", 2, false, Sort::relation, Sort::relation},
    {ExprKind::eq, "eq", 2, false, Sort::relation, Sort::term},
    {ExprKind::in, "in", 2, false, Sort::relation, Sort::term},
    {ExprKind::notin, "notin", 2, false, Sort::relation, Sort::term},
    {ExprKind::neq, "neq", 2, false, Sort::relation, Sort::term},
    {ExprKind::subset, "subset", 2, false, Sort::relation, Sort::term},
    {ExprKind::forall, "forall", 1, true, Sort::relation, Sort::relation},
    {ExprKind::exists, "exists", 1, true, Sort::relation, Sort::relation},
    {ExprKind::tau, "tau", 1, true, Sort::term, Sort::relation},
    {ExprKind::coll, "coll", 1, true, Sort::relation, Sort::relation},
    {ExprKind::setof, "setof", 1, true, Sort::term, Sort::relation},
    {ExprKind::enumeration, "enum", -1, false, Sort::term, Sort::term},
    {ExprKind::singleton, "singleton", 1, false, Sort::term, Sort::term},
    {ExprKind::couple, "couple", 2, false, Sort::term, Sort::term},
    {ExprKind::empty, "empty", 0, false, Sort::term, Sort::term},
    {ExprKind::union_, "union", 2, false, Sort::term, Sort::term},
    {ExprKind::succ, "succ", 1, false, Sort::term, Sort::term},
    {ExprKind::numeral, "numeral", 0, false, Sort::term, Sort::term},
    {ExprKind::subst, "subst", 2, false, Sort::term, Sort::term},
}};

inline const ExprInfo* info_of(ExprKind k) noexcept
{
    for (const auto& i : expr_table)
        if (i.kind == k)
            return &i;
    return nullptr;
}

inline const ExprInfo* info_of(std::string_view keyword) noexcept
{
    for (const auto& i : expr_table)
        if (i.keyword == keyword)
            return &i;
    return nullptr;
}

} // namespace detail

inline bool is_keyword(std::string_view s) noexcept { return detail::info_of(s) != nullptr; }

// User letters: letter names that are not keywords and do not start with
// '_' (reserved for template letters).
inline bool is_user_letter(std::string_view s) noexcept
{
    return is_letter_name(s) && s.front() != '_' && !is_keyword(s);
}

// --- constructors -----------------------------------------------------------

namespace ex {

inline Expression node(ExprKind k, std::vector<Expression> args = {}, std::string name = {})
{
    Expression e;
    e.kind = k;
    e.args = std::move(args);
    e.name = std::move(name);
    return e;
}

inline Expression letter(std::string x) { return node(ExprKind::letter, {}, std::move(x)); }
inline Expression not_(Expression a) { return node(ExprKind::not_, {std::move(a)}); }
inline Expression or_(Expression a, Expression b) { return node(ExprKind::or_, {std::move(a), std::move(b)}); }
inline Expression and_(Expression a, Expression b) { return node(ExprKind::and_, {std::move(a), std::move(b)}); }
inline Expression implies(Expression a, Expression b) { return node(ExprKind::implies, {std::move(a), std::move(b)}); }
inline Expression iff(Expression a, Expression b) { return node(ExprKind::iff, {std::move(a), std::move(b)}); }
inline Expression eq(Expression a, Expression b) { return node(ExprKind::eq, {std::move(a), std::move(b)}); }
inline Expression in(Expression a, Expression b) { return node(ExprKind::in, {std::move(a), std::move(b)}); }
inline Expression notin(Expression a, Expression b) { return node(ExprKind::notin, {std::move(a), std::move(b)}); }
inline Expression neq(Expression a, Expression b) { return node(ExprKind::neq, {std::move(a), std::move(b)}); }
inline Expression subset(Expression a, Expression b) { return node(ExprKind::subset, {std::move(a), std::move(b)}); }
inline Expression forall(std::string x, Expression r) { return node(ExprKind::forall, {std::move(r)}, std::move(x)); }
inline Expression exists(std::string x, Expression r) { return node(ExprKind::exists, {std::move(r)}, std::move(x)); }
inline Expression tau(std::string x, Expression r) { return node(ExprKind::tau, {std::move(r)}, std::move(x)); }
inline Expression coll(std::string x, Expression r) { return node(ExprKind::coll, {std::move(r)}, std::move(x)); }
inline Expression setof(std::string x, Expression r) { return node(ExprKind::setof, {std::move(r)}, std::move(x)); }
inline Expression enumeration(std::vector<Expression> items) { return node(ExprKind::enumeration, std::move(items)); }
inline Expression singleton(Expression t) { return node(ExprKind::singleton, {std::move(t)}); }
inline Expression couple(Expression a, Expression b) { return node(ExprKind::couple, {std::move(a), std::move(b)}); }
inline Expression empty() { return node(ExprKind::empty); }
inline Expression union_(Expression a, Expression b) { return node(ExprKind::union_, {std::move(a), std::move(b)}); }
inline Expression succ(Expression t) { return node(ExprKind::succ, {std::move(t)}); }

inline Expression numeral(Natural n)
{
    Expression e = node(ExprKind::numeral);
    e.number = std::move(n);
    return e;
}

inline Expression subst(Expression body, std::string x, Expression t)
{
    return node(ExprKind::subst, {std::move(body), std::move(t)}, std::move(x));
}

} // namespace ex

// NumeralE(0) ↦ EmptyE, NumeralE(n) ↦ EnumE[NumeralE(0), ..., NumeralE(n-1)].
inline Expression numeral_expr(const Natural& n)
{
    if (n == 0)
        return ex::empty();
    if (n > Natural(std::numeric_limits<std::size_t>::max() / 2))
        throw ExpansionError("numeral too large to enumerate");
    std::vector<Expression> items;
    auto count = static_cast<std::size_t>(n);
    items.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        items.push_back(ex::numeral(Natural(i)));
    return ex::enumeration(std::move(items));
}

// Sort of a well-formed expression; throws ExpansionError naming the first
// sort violation.
inline Sort sort_of(const Expression& e)
{
    if (e.kind == ExprKind::letter)
        return Sort::term;
    const auto* in = detail::info_of(e.kind);
    if (e.kind == ExprKind::subst) {
        if (e.args.size() != 2)
            throw ExpansionError("subst takes a body, a letter and a term");
        if (sort_of(e.args[1]) != Sort::term)
            throw ExpansionError("subst image must be a term");
        return sort_of(e.args[0]);
    }
    if (e.kind == ExprKind::enumeration ? e.args.empty() : e.args.size() != static_cast<std::size_t>(in->arity))
        throw ExpansionError("'" + std::string(in->keyword) + "' has the wrong number of arguments");
    for (const Expression& a : e.args)
        if (sort_of(a) != in->argSort)
            throw ExpansionError("'" + std::string(in->keyword) + "' expects " +
                                 (in->argSort == Sort::term ? "term" : "relation") + " arguments");
    return in->result;
}

// --- printing ---------------------------------------------------------------

inline void print_expression(const Expression& e, std::string& out)
{
    switch (e.kind) {
    case ExprKind::letter: out += e.name; return;
    case ExprKind::empty: out += "empty"; return;
    case ExprKind::numeral:
        out += "(numeral ";
        out += to_decimal(e.number);
        out += ')';
        return;
    default: break;
    }
    out += '(';
    out += detail::info_of(e.kind)->keyword;
    if (e.kind == ExprKind::subst) {
        out += ' ';
        print_expression(e.args.at(0), out);
        out += ' ';
        out += e.name;
        out += ' ';
        print_expression(e.args.at(1), out);
    } else {
        if (detail::info_of(e.kind)->binder) {
            out += ' ';
            out += e.name;
        }
        for (const Expression& a : e.args) {
            out += ' ';
            print_expression(a, out);
        }
    }
    out += ')';
}

inline std::string to_string(const Expression& e)
{
    std::string out;
    print_expression(e, out);
    return out;
}

// --- parsing ----------------------------------------------------------------

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expression parse_all()
    {
        skip();
        if (at_end())
            error("empty input");
        Expression e = expr();
        skip();
        if (!at_end())
            error("unexpected text after the expression");
        return e;
    }

private:
    struct Token {
        std::string text;
        std::size_t line, column;
    };

    [[noreturn]] void error(const std::string& what) const { throw SyntaxError(line_, col_, what); }
    [[noreturn]] static void error_at(const Token& t, const std::string& what)
    {
        throw SyntaxError(t.line, t.column, what);
    }

    bool at_end() const noexcept { return pos_ >= text_.size(); }

    void advance() noexcept
    {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip() noexcept
    {
        while (!at_end()) {
            char c = text_[pos_];
            if (c == ';') {
                while (!at_end() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token atom()
    {
        skip();
        Token t{{}, line_, col_};
        while (!at_end()) {
            char c = text_[pos_];
            if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c)))
                break;
            t.text += c;
            advance();
        }
        if (t.text.empty())
            error(at_end() ? "unexpected end of input" : std::string("unexpected '") + text_[pos_] + "'");
        return t;
    }

    std::string binder()
    {
        Token t = atom();
        if (!is_user_letter(t.text))
            error_at(t, "expected a letter, got '" + t.text + "'");
        return t.text;
    }

    void close()
    {
        skip();
        if (at_end())
            error("missing ')'");
        if (text_[pos_] != ')')
            error("expected ')'");
        advance();
    }

    bool peek_close()
    {
        skip();
        return !at_end() && text_[pos_] == ')';
    }

    Expression expr()
    {
        skip();
        if (at_end())
            error("unexpected end of input");
        if (text_[pos_] == ')')
            error("unexpected ')'");
        if (text_[pos_] != '(') {
            Token t = atom();
            if (t.text == "empty")
                return ex::empty();
            if (is_keyword(t.text))
                error_at(t, "'" + t.text + "' must be applied in parentheses");
            if (!is_user_letter(t.text))
                error_at(t, t.text.front() == '_' ? "letters starting with '_' are reserved"
                                                  : "invalid letter '" + t.text + "'");
            return ex::letter(t.text);
        }
        advance();
        Token head = atom();
        const ExprInfo* in = info_of(head.text);
        if (in == nullptr)
            error_at(head, "unknown abbreviation '" + head.text + "'");
        Expression e;
        e.kind = in->kind;
        switch (in->kind) {
        case ExprKind::numeral: {
            Token n = atom();
            if (n.text.find_first_not_of("0123456789") != std::string::npos)
                error_at(n, "numeral expects a decimal natural, got '" + n.text + "'");
            e.number = Natural(n.text);
            break;
        }
        case ExprKind::subst:
            e.args.push_back(expr());
            e.name = binder();
            e.args.push_back(expr());
            break;
        case ExprKind::enumeration:
            while (!peek_close())
                e.args.push_back(expr());
            if (e.args.empty())
                error("enum needs at least one element");
            break;
        default:
            if (in->binder)
                e.name = binder();
            for (int i = 0; i < in->arity; ++i) {
                if (peek_close())
                    error("'" + head.text + "' expects " + std::to_string(in->arity + (in->binder ? 1 : 0)) +
                          " arguments");
                e.args.push_back(expr());
            }
        }
        if (!peek_close())
            error("too many arguments to '" + head.text + "'");
        close();
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

} // namespace detail

inline Expression parse_expression(std::string_view text) { return detail::ExprParser(text).parse_all(); }

} // namespace bourbaki

#endif // BOURBAKI_EXPRESSION_HPP
