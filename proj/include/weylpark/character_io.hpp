#pragma once

#include "weylpark/degeneration.hpp"
#include "weylpark/fock.hpp"
#include "weylpark/symfunc.hpp"

#include <json.hpp>

#include <string>

namespace weylpark::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json integer_json(const mpz_class& z);
json weight_json(const combinatorics::WeightVector& w);

// [{"weight": [...], "x": i, "y": j, "dim": d}, ...] in (weight, x, y) order.
json character_json(const degeneration::BigradedCharacter& ch);
std::string character_csv(const degeneration::BigradedCharacter& ch);
std::string character_pretty(const degeneration::BigradedCharacter& ch);

// [{"x": i, "y": j, "weight": [...], "coeff": c}, ...]
json series_json(const fock::Series& s);
std::string series_csv(const fock::Series& s);
std::string series_pretty(const fock::Series& s);

// [{"partition": [...], "coeffs": [c_0, c_1, ...]}, ...]  (coefficient of x^k at index k)
json schur_json(const symfunc::SchurExpansion& e);

degeneration::BigradedCharacter character_from_json(const json& j);
fock::Series series_from_json(const json& j);

}  // namespace weylpark::io
