#include "potts/class_poly.hpp"

#include <sstream>

#include "potts/errors.hpp"

namespace potts {

ClassPoly::ClassPoly(long c) : c_{mpz_class(c)} { trim(); }

ClassPoly::ClassPoly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
}

ClassPoly::ClassPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void ClassPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ClassPoly ClassPoly::T(unsigned k) {
    std::vector<mpz_class> c(k + 1, mpz_class(0));
    c[k] = 1;
    return ClassPoly(std::move(c));
}

ClassPoly ClassPoly::from_L_basis(const std::vector<mpz_class>& lcoeffs) {
    return compose(ClassPoly(lcoeffs), L());
}

std::vector<mpz_class> ClassPoly::to_L_basis() const {
    return compose(*this, ClassPoly{-1, 1}).coeffs();
}

mpz_class ClassPoly::evaluate(const mpz_class& t) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ClassPoly& ClassPoly::operator*=(const ClassPoly& o) { return *this = *this * o; }

ClassPoly ClassPoly::operator-() const {
    ClassPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ClassPoly operator*(const ClassPoly& a, const ClassPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ClassPoly(std::move(c));
}

std::string ClassPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const mpz_class& c = c_[k];
        if (c == 0) continue;
        mpz_class a = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (k == 0) {
            out << a.get_str();
            continue;
        }
        if (a != 1) out << a.get_str() << '*';
        out << var;
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

ClassPoly pow(const ClassPoly& p, unsigned e) {
    ClassPoly r(1), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

ClassPoly class_scale_T_power(const ClassPoly& a, unsigned k) {
    if (a.is_zero()) return a;
    std::vector<mpz_class> c(k, mpz_class(0));
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return ClassPoly(std::move(c));
}

bool class_try_div(const ClassPoly& a, const ClassPoly& d, ClassPoly& q) {
    if (d.is_zero()) fail(ErrorKind::ExactDivisionFailure, "division by the zero class");
    if (a.is_zero()) {
        q = ClassPoly();
        return true;
    }
    if (a.degree() < d.degree()) return false;
    std::vector<mpz_class> r = a.coeffs();
    const auto& dc = d.coeffs();
    const mpz_class& lead = dc.back();
    std::size_t dd = dc.size() - 1;
    std::vector<mpz_class> quo(r.size() - dd, mpz_class(0));
    for (std::size_t i = quo.size(); i-- > 0;) {
        const mpz_class& top = r[i + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_class f = top / lead;
        quo[i] = f;
        for (std::size_t j = 0; j <= dd; ++j) r[i + j] -= f * dc[j];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    q = ClassPoly(std::move(quo));
    return true;
}

ClassPoly class_div_exact(const ClassPoly& a, const ClassPoly& d) {
    ClassPoly q;
    if (!class_try_div(a, d, q))
        fail(ErrorKind::ExactDivisionFailure, "(" + a.to_string() + ") is not divisible by (" + d.to_string() + ")");
    return q;
}

ClassPoly compose(const ClassPoly& p, const ClassPoly& r) {
    ClassPoly acc;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + ClassPoly(std::vector<mpz_class>{c[k]});
    return acc;
}

}  // namespace potts
