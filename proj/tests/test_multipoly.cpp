#include <doctest.h>

#include <random>

#include "potts/errors.hpp"
#include "potts/multipoly.hpp"
#include "potts/tutte.hpp"

using namespace potts;

namespace {

const MPoly q = MPoly::q();
MPoly t(std::uint32_t e) { return MPoly::t(e); }

MPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), exp(0, 2), coef(-6, 6);
    MPoly p;
    for (int i = nterms(rng); i > 0; --i) {
        MPoly m(coef(rng));
        for (std::uint32_t v = 0; v < 4; ++v) m *= MPoly::var(VarId::from_code(v), unsigned(exp(rng)));
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("ring operations") {
    CHECK((q + t(1)).to_string() == "q + t1");
    CHECK(((q + t(1)) * (q + t(2))).to_string() == "q^2 + q*t1 + q*t2 + t1*t2");
    MPoly p = q * t(3) - MPoly(4);
    CHECK((p - p).is_zero());
    CHECK((p - p).to_string() == "0");
    CHECK(pow(q + MPoly(1), 3) == q * q * q + MPoly(3) * q * q + MPoly(3) * q + MPoly(1));
}

TEST_CASE("rendering is canonical") {
    MPoly p = q * t(1) * t(2) + q * q * t(2) + q * q * t(1) + pow(q, 3);
    CHECK(p.to_string() == "q^3 + q^2*t1 + q^2*t2 + q*t1*t2");
    CHECK((MPoly(0) - MPoly(2) * q + MPoly(1)).to_string() == "-2*q + 1");
    CHECK((t(1) - t(2)).to_string() == "t1 - t2");
    CHECK(MPoly(-3).to_string() == "-3");
}

TEST_CASE("substitute") {
    CHECK(substitute(q * t(1) + q, VarId::t(EdgeId{1}), MPoly(0)) == q);
    CHECK(substitute(q + t(5), VarId::t(EdgeId{5}), -q).is_zero());
    // t1 t2 with t1 -> 1 + u, where u is stood in for by t9.
    CHECK(substitute(t(1) * t(2), VarId::t(EdgeId{1}), MPoly(1) + t(9)) == t(2) + t(2) * t(9));
}

TEST_CASE("eval_mod") {
    std::map<VarId, std::uint64_t> a{{VarId::q(), 1}, {VarId::t(EdgeId{1}), 1}};
    CHECK(eval_mod(q + q * t(1), a, 2) == 0);
    a[VarId::t(EdgeId{1})] = 0;
    CHECK(eval_mod(q + q * t(1), a, 2) == 1);

    std::map<VarId, std::uint64_t> b{{VarId::q(), 2}};
    for (std::uint32_t e = 1; e <= 3; ++e) b[VarId::t(EdgeId{e})] = 0;
    CHECK(eval_mod(z_delcon(polygon(3)), b, 3) == 2);

    std::map<VarId, std::uint64_t> missing{{VarId::q(), 1}};
    CHECK_THROWS_AS(eval_mod(q * t(1), missing, 5), PottsError);
    CHECK(eval_mod(MPoly(-1), {}, 7) == 6);
}

TEST_CASE("lowest homogeneous part") {
    CHECK(lowest_homogeneous_part(q * q + q * t(1) + q) == q);
    MPoly hom = q * q + q * t(1);
    CHECK(lowest_homogeneous_part(hom) == hom);
    MPoly e1 = t(1) + t(2) + t(3), e2 = t(1) * t(2) + t(1) * t(3) + t(2) * t(3);
    CHECK(lowest_homogeneous_part(z_delcon(polygon(3))) == pow(q, 3) + q * q * e1 + q * e2);
    try {
        lowest_homogeneous_part(MPoly(0));
        FAIL("expected an error");
    } catch (const PottsError& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("divide by q power") {
    CHECK(divide_exact_by_q_power(q * t(1) + q * q, 1) == t(1) + q);
    CHECK(divide_exact_by_q_power(pow(q, 3) + q * q * t(1), 2) == q + t(1));
    try {
        divide_exact_by_q_power(q + t(1), 1);
        FAIL("expected an error");
    } catch (const PottsError& e) {
        CHECK(e.kind() == ErrorKind::ExactDivisionFailure);
    }
}

TEST_CASE("degrees and variables") {
    MPoly p = q * q * t(3) + t(1);
    CHECK(p.total_degree() == 3);
    CHECK(p.min_total_degree() == 1);
    CHECK(p.degree_in(VarId::q()) == 2);
    CHECK(p.variables() == std::vector<VarId>{VarId::q(), VarId::t(EdgeId{1}), VarId::t(EdgeId{3})});
    CHECK_FALSE(p.is_homogeneous());
    CHECK_THROWS_AS(MPoly(0).total_degree(), PottsError);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 150; ++i) {
        MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * MPoly(1) == a);
    }
}

TEST_CASE("shift substitution round trip") {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_poly(rng);
        VarId v = VarId::from_code(std::uint32_t(rng() % 4));
        MPoly x = MPoly::var(v);
        CHECK(substitute(substitute(a, v, x + MPoly(1)), v, x - MPoly(1)) == a);
    }
}

TEST_CASE("eval_mod commutes with ring operations") {
    std::mt19937 rng(11);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17};
    for (int i = 0; i < 200; ++i) {
        MPoly a = random_poly(rng), b = random_poly(rng);
        std::uint64_t p = primes[rng() % 7];
        std::map<VarId, std::uint64_t> pt;
        for (std::uint32_t v = 0; v < 4; ++v) pt[VarId::from_code(v)] = rng() % p;
        std::uint64_t ea = eval_mod(a, pt, p), eb = eval_mod(b, pt, p);
        CHECK(eval_mod(a + b, pt, p) == (ea + eb) % p);
        CHECK(eval_mod(a * b, pt, p) == ea * eb % p);
        CHECK(eval_mod(a - b, pt, p) == (ea + p - eb) % p);
    }
}
