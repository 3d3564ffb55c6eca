#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace potts {

// Integer polynomial in the torus class T = L - 1; coefficient i is the
// coefficient of T^i. Trailing zeros are always trimmed.
class ClassPoly {
public:
    ClassPoly() = default;
    ClassPoly(long c);  // NOLINT: constants convert implicitly
    ClassPoly(std::initializer_list<long> coeffs);
    explicit ClassPoly(std::vector<mpz_class> coeffs);

    static ClassPoly T(unsigned k = 1);
    static ClassPoly L() { return T() + ClassPoly(1); }
    // From coefficients in the L basis.
    static ClassPoly from_L_basis(const std::vector<mpz_class>& lcoeffs);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    mpz_class evaluate(const mpz_class& t) const;
    std::vector<mpz_class> to_L_basis() const;

    ClassPoly& operator+=(const ClassPoly& o);
    ClassPoly& operator-=(const ClassPoly& o);
    ClassPoly& operator*=(const ClassPoly& o);
    ClassPoly operator-() const;
    friend ClassPoly operator+(ClassPoly a, const ClassPoly& b) { return a += b; }
    friend ClassPoly operator-(ClassPoly a, const ClassPoly& b) { return a -= b; }
    friend ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);
    bool operator==(const ClassPoly& o) const { return c_ == o.c_; }

    std::string to_string(const std::string& var = "T") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

ClassPoly pow(const ClassPoly& p, unsigned e);
ClassPoly class_scale_T_power(const ClassPoly& a, unsigned k);
// Quotient of a by d; throws ExactDivisionFailure on a nonzero remainder.
ClassPoly class_div_exact(const ClassPoly& a, const ClassPoly& d);
// Returns false (and leaves q untouched) if d does not divide a exactly.
bool class_try_div(const ClassPoly& a, const ClassPoly& d, ClassPoly& q);
// Substitution T -> r.
ClassPoly compose(const ClassPoly& p, const ClassPoly& r);

}  // namespace potts
