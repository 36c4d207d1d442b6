#ifndef BOURBAKI_INSTANCE_IO_HPP
#define BOURBAKI_INSTANCE_IO_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fixpoint/cantor.hpp"
#include "fixpoint/tarski.hpp"
#include "hf/graph.hpp"
#include "hf/lang.hpp"
#include "hf/set.hpp"
#include "ordinal/order.hpp"

namespace bourbaki::io {

using hf::HfSet;

// Instance files are `key: items` lines; blank lines and '#' comments are
// ignored. Items are HF literals (braces and decimal numerals).
struct InstanceLine {
    std::string key;
    std::string rest;
    std::size_t line;
    std::size_t column; // of `rest`
};

inline std::vector<InstanceLine> split_lines(std::string_view text)
{
    std::vector<InstanceLine> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw SyntaxError(n, 1, "expected 'key: items'");
        std::size_t b = line.find_first_not_of(" \t");
        std::string key = line.substr(b, colon - b);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
            key.pop_back();
        out.push_back({key, line.substr(colon + 1), n, colon + 2});
    }
    return out;
}

// Runs `body` over a cursor on the line remainder, relocating syntax errors
// to file coordinates.
template <class Body>
auto scan(const InstanceLine& l, Body body)
{
    hf::detail::Cursor c(l.rest);
    try {
        return body(c);
    } catch (const SyntaxError& e) {
        throw SyntaxError(l.line, l.column + e.column() - 1,
                          std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

inline std::vector<HfSet> parse_items(const InstanceLine& l)
{
    return scan(l, [](hf::detail::Cursor& c) {
        std::vector<HfSet> out;
        while (true) {
            c.skip();
            if (c.at_end())
                return out;
            out.push_back(hf::parse_term(c));
        }
    });
}

inline fix::Map parse_map(const InstanceLine& l)
{
    return scan(l, [](hf::detail::Cursor& c) {
        fix::Map out;
        while (true) {
            c.skip();
            if (c.at_end())
                return out;
            HfSet x = hf::parse_term(c);
            if (!c.accept_word("->"))
                c.fail("expected '->'");
            HfSet y = hf::parse_term(c);
            if (!out.emplace(x, y).second)
                c.fail("duplicate entry for " + hf::to_string(x));
        }
    });
}

// Tuples `(x, y, ...)`, possibly `()`.
inline std::vector<std::vector<HfSet>> parse_tuples(const InstanceLine& l)
{
    return scan(l, [](hf::detail::Cursor& c) {
        std::vector<std::vector<HfSet>> out;
        while (true) {
            c.skip();
            if (c.at_end())
                return out;
            c.expect('(');
            std::vector<HfSet> t;
            if (!c.accept(')')) {
                do
                    t.push_back(hf::parse_term(c));
                while (c.accept(','));
                c.expect(')');
            }
            out.push_back(std::move(t));
        }
    });
}

namespace detail {

inline const InstanceLine& require(const std::map<std::string, const InstanceLine*>& keyed, const std::string& k)
{
    auto it = keyed.find(k);
    if (it == keyed.end())
        throw SyntaxError(1, 1, "missing '" + k + ":' line");
    return *it->second;
}

inline std::map<std::string, const InstanceLine*> by_key(const std::vector<InstanceLine>& lines,
                                                          std::initializer_list<std::string_view> allowed)
{
    std::map<std::string, const InstanceLine*> out;
    for (const auto& l : lines) {
        if (std::find(allowed.begin(), allowed.end(), l.key) == allowed.end())
            throw SyntaxError(l.line, 1, "unknown key '" + l.key + "'");
        if (!out.emplace(l.key, &l).second)
            throw SyntaxError(l.line, 1, "duplicate key '" + l.key + "'");
    }
    return out;
}

} // namespace detail

// E: ...   F: ...   f: x->y ...   g: y->x ...
inline fix::InjectionPair parse_cb_instance(std::string_view text)
{
    auto lines = split_lines(text);
    auto keyed = detail::by_key(lines, {"E", "F", "f", "g"});
    fix::InjectionPair p;
    p.E = hf::make_set(parse_items(detail::require(keyed, "E")));
    p.F = hf::make_set(parse_items(detail::require(keyed, "F")));
    p.f = parse_map(detail::require(keyed, "f"));
    p.g = parse_map(detail::require(keyed, "g"));
    return p;
}

// carrier: ... | carrier: powerset <literal>
// leq: subset | leq: a<=b ...   (reflexive pairs are added)
// map: x->y ...
inline fix::MonotoneMap parse_tarski_instance(std::string_view text)
{
    auto lines = split_lines(text);
    auto keyed = detail::by_key(lines, {"carrier", "leq", "map"});
    const InstanceLine& cl = detail::require(keyed, "carrier");
    HfSet carrier = scan(cl, [](hf::detail::Cursor& c) {
        if (c.accept_word("powerset")) {
            HfSet base = hf::parse_term(c);
            c.skip();
            if (!c.at_end())
                c.fail("unexpected text after the powerset base");
            return hf::powerset(base);
        }
        std::vector<HfSet> out;
        while (true) {
            c.skip();
            if (c.at_end())
                return hf::make_set(std::move(out));
            out.push_back(hf::parse_term(c));
        }
    });
    const InstanceLine& ll = detail::require(keyed, "leq");
    ord::FiniteOrder order = scan(ll, [&](hf::detail::Cursor& c) {
        if (c.accept_word("subset")) {
            c.skip();
            if (!c.at_end())
                c.fail("unexpected text after 'subset'");
            return ord::order_from(carrier, [](const HfSet& x, const HfSet& y) { return hf::is_subset(x, y); });
        }
        std::vector<HfSet> rel;
        for (const HfSet& x : carrier)
            rel.push_back(hf::couple(x, x));
        while (true) {
            c.skip();
            if (c.at_end())
                break;
            HfSet x = hf::parse_term(c);
            if (!c.accept_word("<="))
                c.fail("expected '<='");
            HfSet y = hf::parse_term(c);
            rel.push_back(hf::couple(x, y));
        }
        return ord::FiniteOrder{carrier, hf::make_set(std::move(rel))};
    });
    return fix::MonotoneMap(order, parse_map(detail::require(keyed, "map")));
}

struct KoenigInstance {
    std::vector<HfSet> B;
    std::vector<HfSet> A;
};

// Alternating `B:` and `A:` lines, one pair per index; A lists tuples.
inline KoenigInstance parse_koenig_instance(std::string_view text)
{
    KoenigInstance k;
    std::vector<std::vector<std::vector<HfSet>>> tuples;
    for (const auto& l : split_lines(text)) {
        if (l.key == "B") {
            if (k.B.size() != tuples.size())
                throw SyntaxError(l.line, 1, "'B:' line without a following 'A:' line");
            k.B.push_back(hf::make_set(parse_items(l)));
        } else if (l.key == "A") {
            if (k.B.size() != tuples.size() + 1)
                throw SyntaxError(l.line, 1, "'A:' line must follow a 'B:' line");
            tuples.push_back(parse_tuples(l));
        } else {
            throw SyntaxError(l.line, 1, "unknown key '" + l.key + "'");
        }
    }
    if (k.B.size() != tuples.size())
        throw SyntaxError(1, 1, "last 'B:' line has no 'A:' line");
    for (const auto& ts : tuples) {
        std::vector<HfSet> ai;
        for (const auto& t : ts)
            ai.push_back(hf::tuple_of(t));
        k.A.push_back(hf::make_set(std::move(ai)));
    }
    return k;
}

// One linear assembly per paragraph (blank-line separated `signs:`/`links:`
// pairs). Used for formative sequences.
inline std::vector<std::string> split_paragraphs(std::string_view text)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line, cur;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
            continue;
        }
        if (line.front() == '#')
            continue;
        cur += line + "\n";
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

} // namespace bourbaki::io

#endif // BOURBAKI_INSTANCE_IO_HPP
