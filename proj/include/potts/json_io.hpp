#pragma once

#include <gmpxx.h>

#include <json.hpp>

#include "potts/class_poly.hpp"

namespace potts {

// Integers that fit a signed 64-bit value become JSON numbers, larger ones
// decimal strings.
nlohmann::ordered_json mpz_json(const mpz_class& v);
nlohmann::ordered_json class_json(const ClassPoly& c);
mpz_class mpz_from_json(const nlohmann::ordered_json& j);

}  // namespace potts
