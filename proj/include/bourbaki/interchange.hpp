#ifndef BOURBAKI_INTERCHANGE_HPP
#define BOURBAKI_INTERCHANGE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "counts.hpp"
#include "error.hpp"
#include "fixpoint/cantor.hpp"
#include "fixpoint/tarski.hpp"
#include "hf/set.hpp"
#include "linear.hpp"

// Canonical JSON forms. Big integers are decimal strings; HF sets are their
// canonical literals.
namespace bourbaki::json {

using Json = nlohmann::ordered_json;

inline Json linear_to_json(const LinearAssembly& l)
{
    Json signs = Json::array();
    for (const Sign& s : l.signs)
        signs.push_back(std::string(sign_text(s)));
    Json links = Json::array();
    for (auto [i, j] : l.links)
        links.push_back(Json::array({i, j}));
    return Json{{"signs", signs}, {"links", links}};
}

inline LinearAssembly linear_from_json(const Json& j)
{
    LinearAssembly l;
    try {
        for (const auto& t : j.at("signs")) {
            auto text = t.get<std::string>();
            if (auto k = sign_from_token(text))
                l.signs.push_back(Sign::of(*k));
            else if (is_letter_name(text))
                l.signs.push_back(Sign::letter(text));
            else
                throw ConstructionError("unknown sign token '" + text + "'");
        }
        for (const auto& p : j.at("links"))
            l.links.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
    } catch (const nlohmann::json::exception& e) {
        throw ConstructionError(std::string("malformed linear assembly JSON: ") + e.what());
    }
    std::sort(l.links.begin(), l.links.end());
    return l;
}

inline Json counts_to_json(const CountVector& c)
{
    Json occ = Json::object();
    for (const auto& [x, n] : user_facing(c).occ)
        occ[x] = to_decimal(n);
    return Json{{"signs", to_decimal(c.signs)}, {"links", to_decimal(c.links)}, {"occ", occ}};
}

inline Json numeral_row_to_json(const Natural& n, const CountVector& c)
{
    return Json{{"n", to_decimal(n)}, {"signs", to_decimal(c.signs)}, {"links", to_decimal(c.links)}};
}

inline Json map_to_json(const fix::Map& f)
{
    Json out = Json::array();
    for (const auto& [x, y] : f)
        out.push_back(Json::array({hf::to_string(x), hf::to_string(y)}));
    return out;
}

inline Json cantor_bernstein_to_json(const fix::CantorBernsteinResult& r)
{
    return Json{{"A", hf::to_string(r.A)}, {"bijection", map_to_json(r.bijection)}, {"iterations", r.iterations}};
}

inline Json tarski_to_json(const fix::TarskiExtrema& t)
{
    return Json{{"v", hf::to_string(t.v)}, {"w", hf::to_string(t.w)}};
}

inline Json koenig_to_json(const fix::KoenigResult& k)
{
    Json comps = Json::array();
    for (const auto& x : k.components)
        comps.push_back(hf::to_string(x));
    return Json{{"tuple", hf::to_string(k.tuple)}, {"components", comps},       {"sum", to_decimal(k.sum)},
                {"product", to_decimal(k.product)}, {"uncovered", k.uncovered}, {"strict", k.strict}};
}

inline Json diagonal_to_json(const fix::DiagonalResult& d)
{
    return Json{{"D", hf::to_string(d.D)}, {"outside_image", d.outside_image}};
}

} // namespace bourbaki::json

#endif // BOURBAKI_INTERCHANGE_HPP
