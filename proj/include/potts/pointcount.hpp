#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "potts/class_poly.hpp"
#include "potts/multipoly.hpp"

namespace potts {

inline constexpr std::uint64_t kDefaultPointBudget = 100'000'000;

// Reads POTTS_BUDGET from the environment, falling back to the default.
std::uint64_t point_budget();

// Points of affine space of dimension ambient_dim over F_prime where p != 0.
// Coordinates not occurring in p contribute a factor prime each.
mpz_class count_complement(const MPoly& p, unsigned ambient_dim, std::uint64_t prime);
// Same, on the slice q = q0 (the remaining ambient_dim coordinates are t's).
mpz_class count_fixed_q(const MPoly& p, std::uint64_t q0, unsigned ambient_dim, std::uint64_t prime);
// Common zeros of all polys.
mpz_class count_zero_locus(const std::vector<MPoly>& polys, unsigned ambient_dim, std::uint64_t prime);

std::vector<std::uint64_t> prime_ladder(std::size_t count, std::uint64_t min_prime = 2);

struct CountReport {
    unsigned ambient_dim = 0;
    std::vector<std::pair<std::uint64_t, mpz_class>> samples;
    ClassPoly interpolated;
    std::uint64_t check_prime = 0;
    mpz_class predicted;
    mpz_class observed;

    std::string to_json() const;
};

using Counter = std::function<mpz_class(std::uint64_t)>;

// Interpolates a class polynomial in L of degree <= ambient_dim through the
// counts at `primes` (default: the first ambient_dim+1 primes >= min_prime),
// then confirms it at `check_prime` (default: the next prime). Throws
// NotPolynomialCount when either check fails.
CountReport interpolate_report(const Counter& counter, unsigned ambient_dim,
                               std::vector<std::uint64_t> primes = {},
                               std::optional<std::uint64_t> check_prime = std::nullopt,
                               std::uint64_t min_prime = 2);
ClassPoly interpolate_class(const Counter& counter, unsigned ambient_dim,
                            std::vector<std::uint64_t> primes = {},
                            std::optional<std::uint64_t> check_prime = std::nullopt,
                            std::uint64_t min_prime = 2);

// Convenience oracles: class of {p != 0}, of the complement of the common
// zero locus, and of the fixed-q slice (q0 = 2, primes >= 3).
ClassPoly complement_class(const MPoly& p, unsigned ambient_dim);
ClassPoly zero_locus_complement_class(const std::vector<MPoly>& polys, unsigned ambient_dim);
ClassPoly fixed_q_complement_class(const MPoly& p, unsigned ambient_dim);

}  // namespace potts
