#pragma once

// Text and JSON renderings of cyclotomics and reports for the command line.

#include <string>

#include <json.hpp>

#include "glm/equivar.hpp"

namespace glm::render {

// Shortest of: integer or fraction, e(k/n), c*e(k/n), c*sqrt(n)*e(k/n);
// otherwise the raw term list.
std::string symbol(const Cyclotomic& x);
std::string approx(const Cyclotomic& x, int digits = 6);

// {"terms": [[exp_num, exp_den, coeff_num, coeff_den], ...], "approx": [re, im]}
// Big coefficients are written as decimal strings.
nlohmann::json to_json(const Cyclotomic& x);
Cyclotomic from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoherenceReport& r);
nlohmann::json to_json(const FamilyResult& f);

}  // namespace glm::render
