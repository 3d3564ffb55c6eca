#include "potts/motivic.hpp"

#include <cmath>
#include <sstream>

namespace potts {

namespace {

mpz_class power(long b, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(b).get_mpz_t(), e);
    return r;
}

mpz_class neg_one_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

// 2^e * x for possibly negative e; x must absorb the division.
mpz_class mul_pow2(const mpz_class& x, long long e) {
    mpz_class r;
    if (e >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), power(2, unsigned(-e)).get_mpz_t());
    }
    return r;
}

}  // namespace

mpz_class chi_complex(const ClassPoly& c) { return c.evaluate(0); }

mpz_class chi_c_real(const ClassPoly& c) { return c.evaluate(-2); }

ClassPoly virtual_poincare(const ClassPoly& c) { return compose(c, ClassPoly{-1, 1}); }

EPoly e_polynomial(const ClassPoly& c) {
    // T -> xy - 1 only produces powers of xy: reuse the u-substitution.
    EPoly e;
    ClassPoly vp = virtual_poincare(c);
    const auto& u = vp.coeffs();
    for (unsigned i = 0; i < u.size(); ++i)
        if (u[i] != 0) e.terms[{i, i}] = u[i];
    return e;
}

mpz_class EPoly::evaluate(const mpz_class& x, const mpz_class& y) const {
    mpz_class acc = 0;
    for (const auto& [k, c] : terms) {
        mpz_class xi, yj;
        mpz_pow_ui(xi.get_mpz_t(), x.get_mpz_t(), k.first);
        mpz_pow_ui(yj.get_mpz_t(), y.get_mpz_t(), k.second);
        acc += c * xi * yj;
    }
    return acc;
}

std::string EPoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [k, c] = *it;
        mpz_class a = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        bool constant = k.first == 0 && k.second == 0;
        if (a != 1 || constant) out << a.get_str() << (constant ? "" : "*");
        auto var = [&](const char* v, unsigned d, bool star) {
            if (!d) return;
            if (star) out << '*';
            out << v;
            if (d > 1) out << '^' << d;
        };
        var("x", k.first, false);
        var("y", k.second, k.first > 0);
    }
    return out.str();
}

mpz_class chi_c_real_locus(const ClassPoly& c, unsigned edge_count) {
    return neg_one_pow(edge_count) - chi_c_real(c);
}

mpz_class chi_c_chain_polygons(const FamilySpec& s) {
    s.validate();
    long long m = s.m, k = s.k, N = s.N;
    mpz_class x = power(3, s.m + 1) + 1 - power(2, s.m + 3);
    mpz_class xN;
    mpz_pow_ui(xN.get_mpz_t(), x.get_mpz_t(), s.N);
    return neg_one_pow(m * N + k * N - k) * (neg_one_pow(N) - mul_pow2(xN, k * N - k - N));
}

mpz_class chi_c_chain_bananas(const FamilySpec& s) {
    s.validate();
    long long m = s.m, k = s.k, N = s.N;
    mpz_class xN;
    mpz_class x = power(2, s.m) + 1;
    mpz_pow_ui(xN.get_mpz_t(), x.get_mpz_t(), s.N);
    return neg_one_pow(m * N + k * N + N - k) * (1 - mul_pow2(xN, k * (N - 1)));
}

std::optional<DecisionBound> decision_bound(const mpz_class& chi_c, long n) {
    if (chi_c <= 0) return std::nullopt;
    DecisionBound d;
    mpz_class r = chi_c;
    long j = 0;
    while (r % 3 == 0) {
        r /= 3;
        ++j;
    }
    if (r == 1) {
        d.exact = true;
        d.value = mpq_class(mpz_class(j - n - 4), mpz_class(3));
        d.value.canonicalize();
        d.approx = d.value.get_d();
        return d;
    }
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, chi_c.get_mpz_t());
    double log3 = (std::log(mant) + double(exp2) * std::log(2.0)) / std::log(3.0);
    d.approx = (log3 - double(n) - 4.0) / 3.0;
    return d;
}

std::string DecisionBound::to_string() const {
    if (exact) return value.get_str();
    std::ostringstream out;
    out.precision(17);
    out << approx;
    return out.str();
}

}  // namespace potts
