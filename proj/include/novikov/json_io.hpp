#pragma once

// JSON views of the library values, used by the CLI's --json mode.
// Polynomials serialize as {"terms":[{"coeff":"p/q","factors":[...]}]} with
// factors {"var","order","power"} ("order" is a plain integer for one
// derivation and a multi-index array otherwise); commutative polynomials drop
// the order field; maps serialize as ordered generator-image lists; check
// reports as {"name","status","detail"}.

#include "novikov/abelian.hpp"
#include "novikov/format.hpp"
#include "novikov/maps.hpp"
#include "novikov/ring.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace novikov {

using Json = nlohmann::ordered_json;

inline Json json_of(const DiffPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [u, c] : f.terms()) {
        Json factors = Json::array();
        for (const auto& factor : u.factors()) {
            Json jf;
            jf["var"] = f.ring()->names.at(static_cast<std::size_t>(factor.variable.var));
            if (f.ring()->derivations == 1) {
                jf["order"] = factor.variable.theta[0];
            } else {
                jf["order"] = factor.variable.theta;
            }
            jf["power"] = factor.power;
            factors.push_back(std::move(jf));
        }
        terms.push_back(Json{{"coeff", c.str()}, {"factors", std::move(factors)}});
    }
    return Json{{"terms", std::move(terms)}};
}

inline Json json_of(const NovikovElement& a) {
    Json j = json_of(a.body());
    j["unit"] = a.unit().str();
    return j;
}

inline Json json_of(const CommPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [u, c] : f.terms()) {
        Json factors = Json::array();
        for (std::size_t i = 0; i < u.exponents.size(); ++i) {
            if (u.exponents[i] == 0) {
                continue;
            }
            factors.push_back(Json{{"var", f.ring()->names[i]}, {"power", u.exponents[i]}});
        }
        terms.push_back(Json{{"coeff", c.str()}, {"factors", std::move(factors)}});
    }
    return Json{{"terms", std::move(terms)}};
}

namespace detail {

template <typename Map>
Json json_images(const Map& map) {
    Json images = Json::array();
    auto rows = format_images(map);
    for (int i = 0; i < map.ring()->generators; ++i) {
        images.push_back(Json{{"generator", rows[static_cast<std::size_t>(i)].first},
                              {"image", rows[static_cast<std::size_t>(i)].second}});
    }
    return Json{{"images", std::move(images)}};
}

} // namespace detail

inline Json json_of(const Derivation& D) { return detail::json_images(D); }
inline Json json_of(const CommDerivation& D) { return detail::json_images(D); }
inline Json json_of(const CommEndomorphism& phi) { return detail::json_images(phi); }

inline Json json_of(const Endomorphism& phi) {
    Json j = detail::json_images(phi);
    j["novikov"] = phi.novikov();
    return j;
}

inline Json json_report(const std::string& name, bool pass, const std::string& detail) {
    return Json{{"name", name}, {"status", pass ? "pass" : "fail"}, {"detail", detail}};
}

} // namespace novikov
