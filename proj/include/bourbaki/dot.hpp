#ifndef BOURBAKI_DOT_HPP
#define BOURBAKI_DOT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "assembly.hpp"
#include "linear.hpp"

namespace bourbaki {

// Graphviz rendering of the assembly tree: solid edges from a sign to its
// arguments, dashed edges from each τ to its squares.
inline std::string to_dot(const Assembly& a, std::size_t limit = 10'000)
{
    LinearAssembly l = linearize(a, limit);
    std::string out = "digraph assembly {\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < l.size(); ++i) {
        const Sign& s = l.signs[i];
        std::string label = s.kind == SignKind::letter ? s.name : std::string(glyph(s.kind));
        out += "  n" + std::to_string(i + 1) + " [label=\"" + label + "\"];\n";
    }
    // prefix order: each sign's arguments follow it; a stack of open slots
    std::vector<std::pair<std::size_t, int>> open;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (!open.empty()) {
            out += "  n" + std::to_string(open.back().first) + " -> n" + std::to_string(i + 1) + ";\n";
            if (--open.back().second == 0)
                open.pop_back();
        }
        if (int k = arity(l.signs[i].kind); k > 0)
            open.emplace_back(i + 1, k);
    }
    for (auto [t, b] : l.links)
        out += "  n" + std::to_string(t) + " -> n" + std::to_string(b) + " [style=dashed, constraint=false];\n";
    out += "}\n";
    return out;
}

} // namespace bourbaki

#endif // BOURBAKI_DOT_HPP
