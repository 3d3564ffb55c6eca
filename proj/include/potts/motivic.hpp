#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "potts/class_poly.hpp"
#include "potts/graph.hpp"

namespace potts {

// T -> 0.
mpz_class chi_complex(const ClassPoly& c);
// T -> -2.
mpz_class chi_c_real(const ClassPoly& c);
// T -> u - 1; the result is a polynomial in u.
ClassPoly virtual_poincare(const ClassPoly& c);

// Polynomial in x, y; keys are (deg_x, deg_y).
struct EPoly {
    std::map<std::pair<unsigned, unsigned>, mpz_class> terms;
    mpz_class evaluate(const mpz_class& x, const mpz_class& y) const;
    std::string to_string() const;
};
// T -> xy - 1.
EPoly e_polynomial(const ClassPoly& c);

// chi_c of the real zero locus of a fixed-q hypersurface from its
// complement class: (-1)^E - c(-2).
mpz_class chi_c_real_locus(const ClassPoly& c, unsigned edge_count);
mpz_class chi_c_chain_polygons(const FamilySpec& spec);
mpz_class chi_c_chain_bananas(const FamilySpec& spec);

// (1/3)(log_3 chi_c - n - 4). Exact when chi_c is a power of 3.
struct DecisionBound {
    bool exact = false;
    mpq_class value;      // set when exact
    double approx = 0.0;  // always set
    std::string to_string() const;
};
std::optional<DecisionBound> decision_bound(const mpz_class& chi_c, long n);

}  // namespace potts
