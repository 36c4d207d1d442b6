#ifndef BOURBAKI_HF_LANG_HPP
#define BOURBAKI_HF_LANG_HPP

#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "../error.hpp"
#include "../ordinal/ordinal.hpp"
#include "graph.hpp"
#include "set.hpp"

namespace bourbaki::hf {

// A small evaluation language over HF sets:
//
//   program := statement ((newline | ';') statement)*
//   statement := 'let' NAME '=' expr | expr
//   expr := '{' [expr (',' expr)*] '}' | DECIMAL | NAME | NAME '(' [expr (',' expr)*] ')'
//
// Decimals denote von Neumann numerals. The value of the last expression
// statement is the program's result.
using Value = std::variant<HfSet, bool>;

inline std::string to_string(const Value& v)
{
    if (const bool* b = std::get_if<bool>(&v))
        return *b ? "true" : "false";
    return to_string(std::get<HfSet>(v));
}

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return col_; }
    std::size_t offset() const noexcept { return pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, col_, what); }

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

    // Skips blanks; newlines too unless `stopAtNewline`. '#' starts a comment.
    void skip(bool stopAtNewline = false) noexcept
    {
        while (!at_end()) {
            char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n')
                    advance();
            } else if (c == '\n' && stopAtNewline) {
                return;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    bool accept(char c, bool stopAtNewline = false) noexcept
    {
        skip(stopAtNewline);
        if (peek() != c)
            return false;
        advance();
        return true;
    }

    void expect(char c, bool stopAtNewline = false)
    {
        if (!accept(c, stopAtNewline))
            fail(std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view w, bool stopAtNewline = false) noexcept
    {
        skip(stopAtNewline);
        if (text_.substr(pos_, w.size()) != w)
            return false;
        for (std::size_t i = 0; i < w.size(); ++i)
            advance();
        return true;
    }

    std::string word()
    {
        std::string out;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            out += peek();
            advance();
        }
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

inline HfSet numeral_from(const std::string& digits, const Cursor& c)
{
    if (digits.find_first_not_of("0123456789") != std::string::npos)
        c.fail("malformed numeral '" + digits + "'");
    if (digits.size() > 4 || std::stoul(digits) > 1000)
        c.fail("numeral literals are limited to 1000");
    return numeral(std::stoul(digits));
}

} // namespace detail

// One HF term in literal syntax ({...} and decimals), no names.
inline HfSet parse_term(detail::Cursor& c)
{
    c.skip(true);
    if (c.accept('{', true)) {
        std::vector<HfSet> elems;
        if (!c.accept('}', false)) {
            do
                elems.push_back(parse_term(c));
            while (c.accept(',', false));
            c.expect('}', false);
        }
        return make_set(std::move(elems));
    }
    if (std::isdigit(static_cast<unsigned char>(c.peek())))
        return detail::numeral_from(c.word(), c);
    c.fail("expected an HF literal");
}

inline HfSet parse_hf_literal(std::string_view text)
{
    detail::Cursor c(text);
    HfSet s = parse_term(c);
    c.skip();
    if (!c.at_end())
        c.fail("unexpected text after the literal");
    return s;
}

class HfInterpreter {
public:
    using Function = std::function<Value(const std::vector<Value>&)>;

    HfInterpreter() { install(); }

    void bind(const std::string& name, HfSet value) { env_[name] = std::move(value); }

    Value run(std::string_view program)
    {
        detail::Cursor c(program);
        std::optional<Value> last;
        while (true) {
            c.skip();
            if (c.at_end())
                break;
            if (c.accept_word("let ")) {
                c.skip(true);
                std::string name = c.word();
                if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front())))
                    c.fail("expected a name after 'let'");
                if (functions_.count(name))
                    c.fail("'" + name + "' is a built-in function");
                c.expect('=', true);
                Value v = expr(c);
                const HfSet* s = std::get_if<HfSet>(&v);
                if (s == nullptr)
                    c.fail("only sets can be bound");
                env_[name] = *s;
            } else {
                last = expr(c);
            }
            c.skip(true);
            if (!c.at_end() && !c.accept(';', true) && !c.accept('\n', true))
                c.fail("expected end of statement");
        }
        if (!last)
            throw EvaluationError("program has no expression to evaluate");
        return *last;
    }

private:
    static const HfSet& set_arg(const std::vector<Value>& args, std::size_t i)
    {
        const HfSet* s = std::get_if<HfSet>(&args[i]);
        if (s == nullptr)
            throw EvaluationError("argument " + std::to_string(i + 1) + " must be a set");
        return *s;
    }

    Value expr(detail::Cursor& c)
    {
        c.skip(true);
        if (c.peek() == '{') {
            c.advance();
            std::vector<HfSet> elems;
            if (!c.accept('}')) {
                do {
                    Value v = expr(c);
                    const HfSet* s = std::get_if<HfSet>(&v);
                    if (s == nullptr)
                        c.fail("set elements must be sets");
                    elems.push_back(*s);
                } while (c.accept(','));
                c.expect('}');
            }
            return make_set(std::move(elems));
        }
        if (std::isdigit(static_cast<unsigned char>(c.peek())))
            return detail::numeral_from(c.word(), c);
        std::size_t line = c.line(), col = c.column();
        std::string name = c.word();
        if (name.empty())
            c.fail(c.at_end() ? "unexpected end of input" : std::string("unexpected '") + c.peek() + "'");
        if (c.accept('(', true)) {
            auto fn = functions_.find(name);
            if (fn == functions_.end())
                throw SyntaxError(line, col, "unknown function '" + name + "'");
            std::vector<Value> args;
            if (!c.accept(')')) {
                do
                    args.push_back(expr(c));
                while (c.accept(','));
                c.expect(')');
            }
            auto ar = arity_.at(name);
            if (args.size() != ar)
                throw SyntaxError(line, col, "'" + name + "' takes " + std::to_string(ar) + " arguments");
            return fn->second(args);
        }
        auto it = env_.find(name);
        if (it == env_.end())
            throw SyntaxError(line, col, "unbound name '" + name + "'");
        return it->second;
    }

    void def(const std::string& name, std::size_t arity, Function f)
    {
        functions_[name] = std::move(f);
        arity_[name] = arity;
    }

    void install()
    {
        using A = const std::vector<Value>&;
        def("union", 2, [](A a) { return Value(set_union(set_arg(a, 0), set_arg(a, 1))); });
        def("inter", 2, [](A a) { return Value(set_intersection(set_arg(a, 0), set_arg(a, 1))); });
        def("diff", 2, [](A a) { return Value(set_difference(set_arg(a, 0), set_arg(a, 1))); });
        def("bigunion", 1, [](A a) { return Value(big_union(set_arg(a, 0))); });
        def("powerset", 1, [](A a) { return Value(powerset(set_arg(a, 0))); });
        def("singleton", 1, [](A a) { return Value(singleton(set_arg(a, 0))); });
        def("couple", 2, [](A a) { return Value(couple(set_arg(a, 0), set_arg(a, 1))); });
        def("pr1", 1, [](A a) { return Value(pr1(set_arg(a, 0))); });
        def("pr2", 1, [](A a) { return Value(pr2(set_arg(a, 0))); });
        def("product", 2, [](A a) { return Value(product(set_arg(a, 0), set_arg(a, 1))); });
        def("inverse", 1, [](A a) { return Value(graph_inverse(set_arg(a, 0))); });
        def("compose", 2, [](A a) { return Value(graph_compose(set_arg(a, 0), set_arg(a, 1))); });
        def("image", 2, [](A a) { return Value(graph_image(set_arg(a, 0), set_arg(a, 1))); });
        def("preimage", 2, [](A a) { return Value(graph_preimage(set_arg(a, 0), set_arg(a, 1))); });
        def("dom", 1, [](A a) { return Value(pr1_set(set_arg(a, 0))); });
        def("ran", 1, [](A a) { return Value(pr2_set(set_arg(a, 0))); });
        def("apply", 2, [](A a) { return Value(apply(set_arg(a, 0), set_arg(a, 1))); });
        def("diagonal", 1, [](A a) { return Value(diagonal(set_arg(a, 0))); });
        def("closure", 2, [](A a) { return Value(equivalence_closure(set_arg(a, 0), set_arg(a, 1))); });
        def("quotient", 2, [](A a) { return Value(quotient(set_arg(a, 0), set_arg(a, 1))); });
        def("successor", 1, [](A a) { return Value(ord::successor(set_arg(a, 0))); });
        def("sup", 1, [](A a) { return Value(ord::sup_ordinals(set_arg(a, 0))); });
        def("cardinal", 1, [](A a) { return Value(ord::cardinal_of(set_arg(a, 0))); });
        def("is_ordinal", 1, [](A a) { return Value(ord::is_ordinal(set_arg(a, 0))); });
        def("is_transitive", 1, [](A a) { return Value(ord::is_transitive_set(set_arg(a, 0))); });
        def("is_functional", 1, [](A a) { return Value(is_functional(set_arg(a, 0))); });
        def("is_equivalence", 2,
            [](A a) { return Value(equivalence_check(set_arg(a, 0), set_arg(a, 1)).verdict()); });
        def("member", 2, [](A a) { return Value(set_arg(a, 1).contains(set_arg(a, 0))); });
        def("subset", 2, [](A a) { return Value(is_subset(set_arg(a, 0), set_arg(a, 1))); });
        def("equal", 2, [](A a) { return Value(set_arg(a, 0) == set_arg(a, 1)); });
    }

    std::map<std::string, HfSet> env_;
    std::map<std::string, Function> functions_;
    std::map<std::string, std::size_t> arity_;
};

inline Value evaluate_hf(std::string_view program) { return HfInterpreter{}.run(program); }

} // namespace bourbaki::hf

#endif // BOURBAKI_HF_LANG_HPP
