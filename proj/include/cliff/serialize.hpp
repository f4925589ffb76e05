#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cliff/algebra.hpp"
#include "cliff/verifier.hpp"

namespace cliff {

// {"scalar":"p/q","vector":{"A":"p/q"},"bivector":{"A,B":"p/q"},
//  "trivector":{"A,B,C":"p/q"},"pseudoscalar":"p/q"}; zero parts are omitted.
nlohmann::ordered_json to_json(const Multivector &mv);

// Inverse of to_json. Throws std::invalid_argument on unknown keys, bad
// index lists or malformed coefficients.
Multivector multivector_from_json(const nlohmann::json &doc);

// {identity, representation, cases_checked, passed,
//  counterexamples:[{indices, label, engine, oracle}]}
nlohmann::ordered_json to_json(const IdentityReport &report);
nlohmann::ordered_json to_json(const std::vector<IdentityReport> &reports);

} // namespace cliff
