#ifndef BOURBAKI_ASSEMBLY_HPP
#define BOURBAKI_ASSEMBLY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "natural.hpp"
#include "sign.hpp"

namespace bourbaki {

// An assembly as a nameless tree. A τ node binds the BoundRef leaves whose
// depth (counted in enclosing τ nodes, innermost = 1) reaches it; those are
// the squares linked to that τ. Binders carry no names, so two assemblies are
// equal exactly when their linear sign strings and links coincide.
//
// Nodes are immutable and shared: substitution copies by reference, so large
// expansions are DAGs in memory while remaining trees by value.
class Assembly {
public:
    enum class Kind : std::uint8_t { letter, bound, neg, disj, eq, elem, tau };

    static Assembly letter(std::string name)
    {
        if (!is_letter_name(name))
            throw ConstructionError("invalid letter name '" + name + "'");
        auto n = std::make_shared<Node>();
        n->kind = Kind::letter;
        n->free.push_back(name);
        n->name = std::move(name);
        return Assembly(std::move(n));
    }

    static Assembly neg(const Assembly& a) { return make(Kind::neg, a.node_, nullptr); }
    static Assembly disj(const Assembly& a, const Assembly& b) { return make(Kind::disj, a.node_, b.node_); }
    static Assembly eq(const Assembly& a, const Assembly& b) { return make(Kind::eq, a.node_, b.node_); }
    static Assembly elem(const Assembly& a, const Assembly& b) { return make(Kind::elem, a.node_, b.node_); }

    Kind kind() const noexcept { return node_->kind; }
    const std::string& name() const noexcept { return node_->name; }
    std::uint32_t depth() const noexcept { return node_->depth; }

    std::size_t arity() const noexcept
    {
        switch (kind()) {
        case Kind::letter:
        case Kind::bound: return 0;
        case Kind::neg:
        case Kind::tau: return 1;
        default: return 2;
        }
    }

    Assembly child(std::size_t i) const { return Assembly(i == 0 ? node_->first : node_->second); }

    // Sorted, duplicate-free letters occurring in the assembly (all letter
    // occurrences are free: binding turns them into squares).
    const std::vector<std::string>& free_letters() const noexcept { return node_->free; }

    bool occurs(std::string_view x) const noexcept
    {
        return std::binary_search(node_->free.begin(), node_->free.end(), x);
    }

    // 0 when no square escapes this subtree.
    std::uint32_t open_depth() const noexcept { return node_->open; }
    bool closed() const noexcept { return node_->open == 0; }

    const void* identity() const noexcept { return node_.get(); }

    SignKind sign() const noexcept
    {
        switch (kind()) {
        case Kind::letter: return SignKind::letter;
        case Kind::bound: return SignKind::box;
        case Kind::neg: return SignKind::neg;
        case Kind::disj: return SignKind::disj;
        case Kind::eq: return SignKind::eq;
        case Kind::elem: return SignKind::elem;
        case Kind::tau: return SignKind::tau;
        }
        return SignKind::letter;
    }

    friend bool operator==(const Assembly& a, const Assembly& b)
    {
        std::set<std::pair<const void*, const void*>> seen;
        return equal(a.node_.get(), b.node_.get(), seen);
    }

    // Raw node factories. Callers (delinearize, binding) are responsible for
    // square depths.
    static Assembly bound_ref(std::uint32_t depth)
    {
        if (depth == 0)
            throw ConstructionError("square depth must be positive");
        auto n = std::make_shared<Node>();
        n->kind = Kind::bound;
        n->depth = depth;
        n->open = depth;
        return Assembly(std::move(n));
    }

    static Assembly tau_node(const Assembly& body) { return make(Kind::tau, body.node_, nullptr); }

    // Same node kind, new children.
    Assembly rebuild(const Assembly& first) const { return make(kind(), first.node_, nullptr); }
    Assembly rebuild(const Assembly& first, const Assembly& second) const
    {
        return make(kind(), first.node_, second.node_);
    }

private:
    struct Node {
        Kind kind = Kind::letter;
        std::uint32_t depth = 0;
        std::uint32_t open = 0;
        std::string name;
        std::shared_ptr<const Node> first;
        std::shared_ptr<const Node> second;
        std::vector<std::string> free;
    };

    explicit Assembly(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Assembly make(Kind k, std::shared_ptr<const Node> a, std::shared_ptr<const Node> b)
    {
        auto n = std::make_shared<Node>();
        n->kind = k;
        if (k == Kind::tau) {
            n->open = a->open > 0 ? a->open - 1 : 0;
            n->free = a->free;
        } else if (k == Kind::neg) {
            n->open = a->open;
            n->free = a->free;
        } else {
            n->open = std::max(a->open, b->open);
            std::set_union(a->free.begin(), a->free.end(), b->free.begin(), b->free.end(),
                           std::back_inserter(n->free));
        }
        n->first = std::move(a);
        n->second = std::move(b);
        return Assembly(std::move(n));
    }

    static bool equal(const Node* x, const Node* y, std::set<std::pair<const void*, const void*>>& seen)
    {
        if (x == y)
            return true;
        if (x->kind != y->kind || x->open != y->open || x->free != y->free)
            return false;
        switch (x->kind) {
        case Kind::letter: return x->name == y->name;
        case Kind::bound: return x->depth == y->depth;
        default: break;
        }
        if (!seen.emplace(x, y).second)
            return true;
        if (!equal(x->first.get(), y->first.get(), seen))
            return false;
        return !x->second || equal(x->second.get(), y->second.get(), seen);
    }

    std::shared_ptr<const Node> node_;
};

using Substitution = std::map<std::string, Assembly, std::less<>>;

// Realizes the formative constructors for ¬, ∨, =, ∈ and letters. τ and □ are
// only introduced by tau_bind.
inline Assembly build(SignKind kind, std::span<const Assembly> children)
{
    auto need = static_cast<std::size_t>(arity(kind));
    if (kind == SignKind::tau || kind == SignKind::box)
        throw ConstructionError("τ and □ arise only from binding a letter");
    if (kind == SignKind::letter)
        throw ConstructionError("a letter is built from its name");
    if (children.size() != need)
        throw ConstructionError("sign '" + std::string(token(kind)) + "' takes " + std::to_string(need) +
                                " arguments, got " + std::to_string(children.size()));
    for (const Assembly& c : children)
        if (!c.closed())
            throw ConstructionError("argument has an unlinked square");
    switch (kind) {
    case SignKind::neg: return Assembly::neg(children[0]);
    case SignKind::disj: return Assembly::disj(children[0], children[1]);
    case SignKind::eq: return Assembly::eq(children[0], children[1]);
    default: return Assembly::elem(children[0], children[1]);
    }
}

inline Assembly build(SignKind kind, std::initializer_list<Assembly> children)
{
    return build(kind, std::span<const Assembly>(children.begin(), children.size()));
}

inline Assembly build_letter(std::string name) { return Assembly::letter(std::move(name)); }

namespace detail {

// Replaces the free occurrences of `x` by squares linked to a τ placed just
// above `body`; `level` counts τ nodes crossed since then.
inline Assembly bind_letter(const Assembly& a, std::string_view x, std::uint32_t level,
                            std::map<std::pair<const void*, std::uint32_t>, Assembly>& memo)
{
    if (!a.occurs(x))
        return a;
    if (a.kind() == Assembly::Kind::letter)
        return Assembly::bound_ref(level + 1);
    auto key = std::make_pair(a.identity(), level);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Assembly out = a.kind() == Assembly::Kind::tau
                       ? a.rebuild(bind_letter(a.child(0), x, level + 1, memo))
                   : a.arity() == 1 ? a.rebuild(bind_letter(a.child(0), x, level, memo))
                                    : a.rebuild(bind_letter(a.child(0), x, level, memo),
                                                bind_letter(a.child(1), x, level, memo));
    memo.emplace(key, out);
    return out;
}

inline Assembly replace_squares(const Assembly& a, const Assembly& image, std::uint32_t level,
                                std::map<std::pair<const void*, std::uint32_t>, Assembly>& memo)
{
    if (a.open_depth() <= level)
        return a;
    if (a.kind() == Assembly::Kind::bound)
        return a.depth() == level + 1 ? image : a;
    auto key = std::make_pair(a.identity(), level);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Assembly out = a.kind() == Assembly::Kind::tau
                       ? a.rebuild(replace_squares(a.child(0), image, level + 1, memo))
                   : a.arity() == 1 ? a.rebuild(replace_squares(a.child(0), image, level, memo))
                                    : a.rebuild(replace_squares(a.child(0), image, level, memo),
                                                replace_squares(a.child(1), image, level, memo));
    memo.emplace(key, out);
    return out;
}

} // namespace detail

// τ_x(body): every free x becomes a square linked to the new τ.
inline Assembly tau_bind(std::string_view x, const Assembly& body)
{
    if (!body.closed())
        throw ConstructionError("body has an unlinked square");
    std::map<std::pair<const void*, std::uint32_t>, Assembly> memo;
    return Assembly::tau_node(detail::bind_letter(body, x, 0, memo));
}

// Inverse of tau_bind for a fresh letter: the body of τ node `t` with its
// squares replaced by `x`.
inline Assembly open_binder(const Assembly& t, std::string_view x)
{
    if (t.kind() != Assembly::Kind::tau)
        throw ConstructionError("open_binder expects a τ assembly");
    std::map<std::pair<const void*, std::uint32_t>, Assembly> memo;
    return detail::replace_squares(t.child(0), Assembly::letter(std::string(x)), 0, memo);
}

// Simultaneous substitution (T1|x1)...(Tn|xn)A. Squares are inert, and since
// images carry no unlinked squares no capture or index shifting can occur.
inline Assembly substitute(const Assembly& a, const Substitution& bindings)
{
    for (const auto& [x, image] : bindings)
        if (!image.closed())
            throw ConstructionError("image of '" + x + "' has an unlinked square");
    std::unordered_map<const void*, Assembly> memo;
    std::function<Assembly(const Assembly&)> go = [&](const Assembly& n) -> Assembly {
        const auto& fl = n.free_letters();
        bool touched = std::any_of(fl.begin(), fl.end(), [&](const std::string& l) { return bindings.contains(l); });
        if (!touched)
            return n;
        if (n.kind() == Assembly::Kind::letter)
            return bindings.find(n.name())->second;
        if (auto it = memo.find(n.identity()); it != memo.end())
            return it->second;
        Assembly out = n.arity() == 1 ? n.rebuild(go(n.child(0))) : n.rebuild(go(n.child(0)), go(n.child(1)));
        memo.emplace(n.identity(), out);
        return out;
    };
    return go(a);
}

inline Assembly substitute(const Assembly& a, std::string_view x, const Assembly& image)
{
    Substitution s;
    s.emplace(std::string(x), image);
    return substitute(a, s);
}

// Number of free occurrences of x. Exact for any size (shared subtrees are
// counted once per occurrence in the tree, not once per node in memory).
inline Natural occurrences(std::string_view x, const Assembly& a)
{
    std::unordered_map<const void*, Natural> memo;
    std::function<Natural(const Assembly&)> go = [&](const Assembly& n) -> Natural {
        if (!n.occurs(x))
            return 0;
        if (n.kind() == Assembly::Kind::letter)
            return 1;
        if (auto it = memo.find(n.identity()); it != memo.end())
            return it->second;
        Natural c = go(n.child(0));
        if (n.arity() == 2)
            c += go(n.child(1));
        memo.emplace(n.identity(), c);
        return c;
    };
    return go(a);
}

// Visits the signs of `a` in prefix order. For each square, `link` is the
// 1-based index of its τ; otherwise 0. Returns the number of signs visited.
// Stops early (returning the count so far) when `limit` is exceeded.
template <class Visitor>
std::size_t for_each_sign(const Assembly& a, Visitor&& visit, std::size_t limit = static_cast<std::size_t>(-1))
{
    std::size_t index = 0;
    std::vector<std::size_t> taus;
    bool stop = false;
    std::function<void(const Assembly&)> go = [&](const Assembly& n) {
        if (stop)
            return;
        if (++index > limit) {
            stop = true;
            return;
        }
        std::size_t here = index;
        switch (n.kind()) {
        case Assembly::Kind::letter: visit(SignKind::letter, n.name(), here, std::size_t{0}); return;
        case Assembly::Kind::bound:
            visit(SignKind::box, n.name(), here, taus[taus.size() - n.depth()]);
            return;
        case Assembly::Kind::tau:
            visit(SignKind::tau, n.name(), here, std::size_t{0});
            taus.push_back(here);
            go(n.child(0));
            taus.pop_back();
            return;
        default:
            visit(n.sign(), n.name(), here, std::size_t{0});
            go(n.child(0));
            if (n.arity() == 2)
                go(n.child(1));
        }
    };
    if (!a.closed())
        throw ConstructionError("assembly has an unlinked square");
    go(a);
    return stop ? limit + 1 : index;
}

} // namespace bourbaki

#endif // BOURBAKI_ASSEMBLY_HPP
