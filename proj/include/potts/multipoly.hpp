#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "potts/graph.hpp"

namespace potts {

// Variable code: 0 is q, edge id e is t_e with code e.
class VarId {
public:
    constexpr VarId() = default;
    static constexpr VarId q() { return VarId(0); }
    static constexpr VarId t(EdgeId e) { return VarId(e.value); }
    static constexpr VarId from_code(std::uint32_t c) { return VarId(c); }

    constexpr bool is_q() const { return code_ == 0; }
    constexpr EdgeId edge() const { return EdgeId{code_}; }
    constexpr std::uint32_t code() const { return code_; }
    std::string name() const;

    auto operator<=>(const VarId&) const = default;

private:
    constexpr explicit VarId(std::uint32_t c) : code_(c) {}
    std::uint32_t code_ = 0;
};

// Sparse exponent vector, sorted by variable, exponents > 0.
using Monomial = std::vector<std::pair<VarId, unsigned>>;

unsigned total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);

// Graded order, larger monomials first; ties broken lexicographically with
// q before t1 before t2 ...
struct GradedLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MPoly {
public:
    using Terms = std::map<Monomial, mpz_class, GradedLexDesc>;

    MPoly() = default;
    MPoly(long c);  // NOLINT: constants convert implicitly
    MPoly(const mpz_class& c);
    static MPoly var(VarId v, unsigned exp = 1);
    static MPoly q() { return var(VarId::q()); }
    static MPoly t(EdgeId e) { return var(VarId::t(e)); }
    static MPoly t(std::uint32_t e) { return var(VarId::t(EdgeId{e})); }
    static MPoly term(const Monomial& m, const mpz_class& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::vector<VarId> variables() const;
    unsigned total_degree() const;      // throws on zero
    unsigned min_total_degree() const;  // throws on zero
    unsigned degree_in(VarId v) const;
    bool is_homogeneous() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly operator-() const;
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const mpz_class& c);
    Terms terms_;
};

MPoly pow(const MPoly& p, unsigned e);
MPoly substitute(const MPoly& p, VarId v, const MPoly& r);
// Residues are taken in [0, prime); every variable of p must be assigned.
std::uint64_t eval_mod(const MPoly& p, const std::map<VarId, std::uint64_t>& assignment,
                       std::uint64_t prime);
mpz_class eval(const MPoly& p, const std::map<VarId, mpz_class>& assignment);
MPoly lowest_homogeneous_part(const MPoly& p);
MPoly divide_exact_by_q_power(const MPoly& p, unsigned k);

}  // namespace potts
