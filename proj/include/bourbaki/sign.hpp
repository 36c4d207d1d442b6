#ifndef BOURBAKI_SIGN_HPP
#define BOURBAKI_SIGN_HPP

#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bourbaki {

enum class SignKind : std::uint8_t { tau, box, neg, disj, eq, elem, letter };

// One sign of a linear assembly. `name` is nonempty iff kind == letter.
struct Sign {
    SignKind kind = SignKind::letter;
    std::string name;

    static Sign of(SignKind k) { return Sign{k, {}}; }
    static Sign letter(std::string n) { return Sign{SignKind::letter, std::move(n)}; }

    friend bool operator==(const Sign&, const Sign&) = default;
};

// Number of assemblies a sign consumes under prefix (arity) parsing.
constexpr int arity(SignKind k) noexcept
{
    switch (k) {
    case SignKind::tau:
    case SignKind::neg: return 1;
    case SignKind::disj:
    case SignKind::eq:
    case SignKind::elem: return 2;
    case SignKind::box:
    case SignKind::letter: return 0;
    }
    return 0;
}

// Serialization tokens: `tau box not or eq in`.
constexpr std::string_view token(SignKind k) noexcept
{
    switch (k) {
    case SignKind::tau: return "tau";
    case SignKind::box: return "box";
    case SignKind::neg: return "not";
    case SignKind::disj: return "or";
    case SignKind::eq: return "eq";
    case SignKind::elem: return "in";
    case SignKind::letter: return "";
    }
    return "";
}

inline std::optional<SignKind> sign_from_token(std::string_view t) noexcept
{
    static constexpr std::array<SignKind, 6> kinds{SignKind::tau, SignKind::box, SignKind::neg,
                                                   SignKind::disj, SignKind::eq, SignKind::elem};
    for (SignKind k : kinds)
        if (token(k) == t)
            return k;
    return std::nullopt;
}

// Conventional mathematical glyph, for human-facing renderings only.
constexpr std::string_view glyph(SignKind k) noexcept
{
    switch (k) {
    case SignKind::tau: return "τ";
    case SignKind::box: return "□";
    case SignKind::neg: return "¬";
    case SignKind::disj: return "∨";
    case SignKind::eq: return "=";
    case SignKind::elem: return "∈";
    case SignKind::letter: return "";
    }
    return "";
}

// Letters are identifiers [A-Za-z_][A-Za-z0-9_]* that do not collide with a
// sign token.
inline bool is_letter_name(std::string_view s) noexcept
{
    if (s.empty())
        return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!std::isalpha(head) && head != '_')
        return false;
    for (char c : s) {
        auto u = static_cast<unsigned char>(c);
        if (!std::isalnum(u) && u != '_')
            return false;
    }
    return !sign_from_token(s).has_value();
}

inline std::string_view sign_text(const Sign& s) noexcept
{
    return s.kind == SignKind::letter ? std::string_view(s.name) : token(s.kind);
}

} // namespace bourbaki

#endif // BOURBAKI_SIGN_HPP
