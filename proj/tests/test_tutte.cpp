#include <doctest.h>

#include "potts/errors.hpp"
#include "potts/tutte.hpp"
#include "potts/verify.hpp"
#include "support.hpp"

using namespace potts;

namespace {

const MPoly q = MPoly::q();
MPoly t(std::uint32_t e) { return MPoly::t(e); }
const MPoly e1 = t(1) + t(2) + t(3);
const MPoly e2 = t(1) * t(2) + t(1) * t(3) + t(2) * t(3);

}  // namespace

TEST_CASE("Z of small graphs") {
    CHECK(z_subset(edgeless(1)) == q);
    CHECK(z_subset(banana(1)) == q * t(1) + q * q);
    CHECK(z_subset(polygon(1)) == q * t(1) + q);
    CHECK(z_delcon(polygon(3)) == pow(q, 3) + q * q * e1 + q * (e2 + t(1) * t(2) * t(3)));
    CHECK(z_delcon(banana(2)) == q * q + q * (t(1) + t(2) + t(1) * t(2)));
    CHECK(z_delcon(disjoint_union(banana(1), banana(1))) == q * q * (t(1) + q) * (t(2) + q));
    CHECK(z_delcon(edgeless(3)) == pow(q, 3));
}

TEST_CASE("z_subset budget") {
    try {
        z_subset(banana(21));
        FAIL("expected an error");
    } catch (const PottsError& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
    CHECK_NOTHROW(z_subset(banana(5), 5));
    CHECK_THROWS_AS(z_subset(banana(6), 5), PottsError);
}

TEST_CASE("normalized Z") {
    CHECK(z_tilde(banana(1)) == t(1) + q);
    CHECK(z_tilde(polygon(1)) == t(1) + MPoly(1));
    CHECK(z_tilde(edgeless(2)) == MPoly(1));
}

TEST_CASE("forest polynomials") {
    CHECK(phi(polygon(3)) == e2);
    CHECK(phi(banana(1)) == t(1));
    CHECK(phi(polygon(1)) == MPoly(1));
    CHECK(psi(polygon(3)) == e1);
    CHECK(psi(banana(1)) == MPoly(1));
    CHECK(psi(banana(2)) == t(1) + t(2));
    CHECK(phi_from_z(polygon(3)) == e2);
    CHECK(phi_from_z(polygon(1)) == MPoly(1));
}

TEST_CASE("tangent-cone polynomials") {
    CHECK(p_leading(polygon(3)) == pow(q, 3) + q * q * e1 + q * e2);
    CHECK(p_leading(polygon(1)) == q);
    CHECK(p_leading(banana(2)) == q * q + q * (t(1) + t(2)));
    CHECK(q_reduced(polygon(3)) == q * q + q * e1 + e2);
    CHECK(q_reduced(banana(1)) == q + t(1));
    CHECK(substitute(q_reduced(polygon(3)), VarId::q(), MPoly(0)) == phi(polygon(3)));
}

TEST_CASE("prime split") {
    PrimeSplit s = z_prime_split(polygon(3), EdgeId{3});
    CHECK(s.connecting == q * t(1) * t(2));
    CHECK(s.disconnecting == pow(q, 3) + q * q * t(1) + q * q * t(2));

    PrimeSplit e = z_prime_split(banana(1), EdgeId{1});
    CHECK(e.connecting.is_zero());
    CHECK(e.disconnecting == q * q);

    PrimeSplit b = z_prime_split(banana(2), EdgeId{2});
    CHECK(b.connecting == q * t(1));
    CHECK(b.disconnecting == q * q);

    try {
        z_prime_split(polygon(1), EdgeId{1});
        FAIL("expected an error");
    } catch (const PottsError& x) {
        CHECK(x.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("auxiliary loci") {
    CHECK(a_locus_poly(polygon(3), EdgeId{3}) == (MPoly(1) - q) * q * t(1) * t(2));
    CHECK(a_locus_poly(banana(1), EdgeId{1}).is_zero());
    CHECK(a_locus_poly(banana(2), EdgeId{2}) == (MPoly(1) - q) * q * t(1));
    CHECK_THROWS_AS(a_locus_poly(polygon(1), EdgeId{1}), PottsError);

    CHECK(b_locus_poly(polygon(3), EdgeId{3}) == (q - MPoly(1)) * q * (q + t(1) + t(2)));
    CHECK(b_locus_poly(polygon(1), EdgeId{1}).is_zero());
    CHECK(b_locus_poly(banana(1), EdgeId{1}) == (q - MPoly(1)) * q);
}

TEST_CASE("corpus invariants") {
    for (const auto& [name, g] : graph_corpus()) {
        CAPTURE(name);
        MPoly z = z_subset(g);
        CHECK(z == z_delcon(g));
        CHECK(z == z_delcon(g, Pivot::LastEdge));

        MPoly torus(1);
        for (const auto& e : g.edges()) torus *= MPoly(1) + MPoly::t(e.id);
        CHECK(substitute(z, VarId::q(), MPoly(1)) == torus);

        for (const auto& e : g.edges())
            CHECK(z == z_delcon(delete_edge(g, e.id)) + MPoly::t(e.id) * z_delcon(contract_edge(g, e.id)));

        CHECK(phi(g) == phi_from_z(g));
        CHECK(psi(g) == psi_from_phi(g));
        MPoly p = p_leading(g);
        CHECK(p == p_forests(g));
        CHECK(p.is_homogeneous());
        CHECK(p.total_degree() == g.vertex_count());
    }
}

TEST_CASE("random multigraphs") {
    std::mt19937 rng(3);
    for (int i = 0; i < 60; ++i) {
        MultiGraph g = testing::random_multigraph(rng, 5, 7);
        MPoly z = z_subset(g);
        CHECK(z == z_delcon(g));
        CHECK(z == z_delcon(g, Pivot::LastEdge));
        CHECK(phi(g) == phi_from_z(g));
        CHECK(psi(g) == psi_from_phi(g));
        CHECK(p_leading(g) == p_forests(g));
        for (const auto& e : g.edges()) {
            if (e.is_loop()) {
                CHECK(b_locus_poly(g, e.id).is_zero());
                continue;
            }
            PrimeSplit s = z_prime_split(g, e.id);
            MPoly zd = z_delcon(delete_edge(g, e.id)), zc = z_delcon(contract_edge(g, e.id));
            CHECK(zd == s.connecting + s.disconnecting);
            CHECK(q * zc == q * s.connecting + s.disconnecting);
            CHECK(a_locus_poly(g, e.id) == zd - q * zc);
            CHECK(b_locus_poly(g, e.id) == zd - zc);
        }
    }
}
