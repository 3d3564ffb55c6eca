#include "potts/json_io.hpp"

#include "potts/errors.hpp"

namespace potts {

nlohmann::ordered_json mpz_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

nlohmann::ordered_json class_json(const ClassPoly& c) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& x : c.coeffs()) a.push_back(mpz_json(x));
    return a;
}

mpz_class mpz_from_json(const nlohmann::ordered_json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    fail(ErrorKind::Parse, "expected an integer");
}

}  // namespace potts
