#ifndef BOURBAKI_LINEAR_HPP
#define BOURBAKI_LINEAR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "assembly.hpp"
#include "error.hpp"
#include "sign.hpp"

namespace bourbaki {

using Link = std::pair<std::size_t, std::size_t>;

// Explicit sign string. Links are (τ index, □ index), 1-based, kept sorted.
struct LinearAssembly {
    std::vector<Sign> signs;
    std::vector<Link> links;

    std::size_t size() const noexcept { return signs.size(); }

    friend bool operator==(const LinearAssembly&, const LinearAssembly&) = default;
};

inline LinearAssembly linearize(const Assembly& a, std::size_t limit = static_cast<std::size_t>(-1))
{
    LinearAssembly out;
    std::size_t n = for_each_sign(
        a,
        [&](SignKind k, const std::string& name, std::size_t index, std::size_t tau) {
            out.signs.push_back(k == SignKind::letter ? Sign::letter(name) : Sign::of(k));
            if (k == SignKind::box)
                out.links.emplace_back(tau, index);
        },
        limit);
    if (n > limit)
        throw BudgetError("assembly exceeds " + std::to_string(limit) + " signs");
    std::sort(out.links.begin(), out.links.end());
    return out;
}

namespace detail {

class LinearReader {
public:
    explicit LinearReader(const LinearAssembly& l) : l_(l), tauOf_(l.signs.size() + 1, 0)
    {
        for (const auto& [i, j] : l.links) {
            if (i == 0 || i > l.size())
                throw LinearParseError(i == 0 ? 1 : l.size(), "link source " + std::to_string(i) + " out of range");
            if (j == 0 || j > l.size())
                throw LinearParseError(j == 0 ? 1 : l.size(), "link target " + std::to_string(j) + " out of range");
            if (l.signs[i - 1].kind != SignKind::tau)
                throw LinearParseError(i, "link source is not a tau");
            if (l.signs[j - 1].kind != SignKind::box)
                throw LinearParseError(j, "link target is not a box");
            if (tauOf_[j] != 0)
                throw LinearParseError(j, "box is the target of two links");
            tauOf_[j] = i;
        }
    }

    Assembly read()
    {
        if (l_.signs.empty())
            throw LinearParseError(1, "empty sign sequence");
        Assembly root = node(0);
        if (pos_ < l_.size())
            throw LinearParseError(pos_ + 1, "trailing signs after a complete assembly");
        return root;
    }

private:
    // `parent` is the 1-based index of the sign waiting for this argument.
    Assembly node(std::size_t parent)
    {
        if (pos_ >= l_.size())
            throw LinearParseError(parent == 0 ? 1 : parent, "missing argument");
        std::size_t here = ++pos_;
        const Sign& s = l_.signs[here - 1];
        switch (s.kind) {
        case SignKind::letter:
            if (!is_letter_name(s.name))
                throw LinearParseError(here, "invalid letter '" + s.name + "'");
            return Assembly::letter(s.name);
        case SignKind::box: {
            std::size_t t = tauOf_[here];
            if (t == 0)
                throw LinearParseError(here, "box without a link");
            auto it = std::find(taus_.rbegin(), taus_.rend(), t);
            if (it == taus_.rend())
                throw LinearParseError(here, "link from sign " + std::to_string(t) + " crosses scope");
            return Assembly::bound_ref(static_cast<std::uint32_t>(it - taus_.rbegin() + 1));
        }
        case SignKind::tau: {
            taus_.push_back(here);
            Assembly body = node(here);
            taus_.pop_back();
            return Assembly::tau_node(body);
        }
        case SignKind::neg: return Assembly::neg(node(here));
        default: {
            Assembly a = node(here);
            Assembly b = node(here);
            if (s.kind == SignKind::disj)
                return Assembly::disj(a, b);
            return s.kind == SignKind::eq ? Assembly::eq(a, b) : Assembly::elem(a, b);
        }
        }
    }

    const LinearAssembly& l_;
    std::vector<std::size_t> tauOf_;
    std::vector<std::size_t> taus_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Assembly delinearize(const LinearAssembly& l) { return detail::LinearReader(l).read(); }

// Arity parsing only; links are ignored.
inline bool is_balanced(const LinearAssembly& l) noexcept
{
    if (l.signs.empty())
        return false;
    long need = 1;
    for (const Sign& s : l.signs) {
        if (need == 0)
            return false;
        need += arity(s.kind) - 1;
    }
    return need == 0;
}

// The word AB: signs of b follow those of a, b's links shifted.
inline LinearAssembly concatenate(const LinearAssembly& a, const LinearAssembly& b)
{
    LinearAssembly out = a;
    out.signs.insert(out.signs.end(), b.signs.begin(), b.signs.end());
    for (auto [i, j] : b.links)
        out.links.emplace_back(i + a.size(), j + a.size());
    std::sort(out.links.begin(), out.links.end());
    return out;
}

inline std::string to_text(const LinearAssembly& l)
{
    std::string out = "signs:";
    for (const Sign& s : l.signs) {
        out += ' ';
        out += sign_text(s);
    }
    out += "\nlinks:";
    for (auto [i, j] : l.links)
        out += " (" + std::to_string(i) + " " + std::to_string(j) + ")";
    out += '\n';
    return out;
}

// Space-separated glyph rendering, e.g. "τ ¬ ∈ □ x".
inline std::string to_glyphs(const LinearAssembly& l)
{
    std::string out;
    for (const Sign& s : l.signs) {
        if (!out.empty())
            out += ' ';
        out += s.kind == SignKind::letter ? std::string_view(s.name) : glyph(s.kind);
    }
    return out;
}

inline LinearAssembly parse_linear_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    LinearAssembly out;
    bool haveSigns = false;
    bool haveLinks = false;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') // blank or comment
            continue;
        if (line.rfind("signs:", 0) == 0 && !haveSigns) {
            haveSigns = true;
            std::istringstream words(line.substr(6));
            std::string w;
            while (words >> w) {
                if (auto k = sign_from_token(w))
                    out.signs.push_back(Sign::of(*k));
                else if (is_letter_name(w))
                    out.signs.push_back(Sign::letter(w));
                else
                    throw SyntaxError(lineNo, line.find(w) + 1, "unknown sign token '" + w + "'");
            }
        } else if (line.rfind("links:", 0) == 0 && !haveLinks) {
            haveLinks = true;
            std::size_t p = 6;
            while (true) {
                p = line.find_first_not_of(" \t\r", p);
                if (p == std::string::npos)
                    break;
                std::size_t i = 0, j = 0;
                int used = 0;
                if (std::sscanf(line.c_str() + p, "(%zu %zu)%n", &i, &j, &used) != 2 || used == 0)
                    throw SyntaxError(lineNo, p + 1, "expected a link '(i j)'");
                out.links.emplace_back(i, j);
                p += static_cast<std::size_t>(used);
            }
        } else {
            throw SyntaxError(lineNo, 1, "expected 'signs:' or 'links:' line");
        }
    }
    if (!haveSigns)
        throw SyntaxError(lineNo == 0 ? 1 : lineNo, 1, "missing 'signs:' line");
    std::sort(out.links.begin(), out.links.end());
    return out;
}

} // namespace bourbaki

#endif // BOURBAKI_LINEAR_HPP
