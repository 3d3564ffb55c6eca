#include <doctest.h>

#include "potts/errors.hpp"
#include "potts/grothendieck.hpp"
#include "potts/tangent_cone.hpp"
#include "potts/tutte.hpp"
#include "potts/verify.hpp"

using namespace potts;

namespace {

const ClassPoly T = ClassPoly::T();
const ClassPoly one = ClassPoly(1);
const MPoly q = MPoly::q();
MPoly t(std::uint32_t e) { return MPoly::t(e); }

}  // namespace

TEST_CASE("cone polynomials") {
    ConePolys tri = cone_polys(polygon(3));
    MPoly e1 = t(1) + t(2) + t(3), e2 = t(1) * t(2) + t(1) * t(3) + t(2) * t(3);
    CHECK(tri.p == q * (q * q + q * e1 + e2));
    CHECK(tri.q == q * q + q * e1 + e2);
    CHECK(tri.y == e2);

    ConePolys two = cone_polys(disjoint_union(banana(1), banana(1)));
    CHECK(two.q == (q + t(1)) * (q + t(2)));
    CHECK(two.y == t(1) * t(2));

    ConePolys loop = cone_polys(polygon(1));
    CHECK(loop.p == q);
    CHECK(loop.y == MPoly(1));
}

TEST_CASE("cone seeds from counting") {
    SplitSeeds s = polygon_cone_seeds();
    CHECK(v_class(polygon(1)) == s.s0);
    CHECK(v_class(banana(2)) == s.s1);
    CHECK(v_class(polygon(3)) == s.s2);
    CHECK(s.s0 == T * (T + one));
    CHECK(s.s2 == T * (T + one) * (T * T + T - one));
    SplitSeeds y = polygon_cone_y_seeds();
    CHECK(y_class(polygon(1)) == y.s0);
    CHECK(y_class(banana(2)) == y.s1);
    CHECK(y_class(polygon(3)) == y.s2);
}

TEST_CASE("V = W - Y on the corpus") {
    for (const auto& [name, g] : graph_corpus()) {
        if (g.edge_count() + 1 > 5) continue;
        CAPTURE(name);
        CHECK(v_class(g) == w_class(g) - y_class(g));
    }
}

TEST_CASE("bridge, loop and parallel rules") {
    MultiGraph g = polygon(3);
    MultiGraph with_loop(3, {{EdgeId{1}, 0, 1}, {EdgeId{2}, 1, 2}, {EdgeId{3}, 2, 0}, {EdgeId{4}, 1, 1}});
    CHECK(v_class(with_loop) == cone_bridge_loop_rules(v_class(g), EdgeKind::Loop));
    MultiGraph with_bridge(4, {{EdgeId{1}, 0, 1}, {EdgeId{2}, 1, 2}, {EdgeId{3}, 2, 0}, {EdgeId{4}, 2, 3}});
    CHECK(v_class(with_bridge) == cone_bridge_loop_rules(v_class(g), EdgeKind::Bridge));
    CHECK(v_class(double_edge(g, EdgeId{1}, 1)) == cone_parallel_rule(v_class(g)));
    try {
        cone_bridge_loop_rules(T, EdgeKind::Regular);
        FAIL("expected an error");
    } catch (const PottsError& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
    // Splitting a bridge or a loop multiplies by T per new edge.
    CHECK(v_class(path(3)) == cone_split_bridge_loop(v_class(banana(1)), 2));
}

TEST_CASE("banana cone classes") {
    for (unsigned m = 0; m <= 3; ++m) {
        CAPTURE(m);
        CHECK(v_class(banana(m + 1)) == banana_cone_class(m));
        CHECK(y_class(banana(m + 1)) == banana_cone_y_class(m));
        CHECK(banana_cone_class(m) == pow(T + one, m) * banana_cone_class(0));
    }
}

TEST_CASE("cone splitting identity") {
    for (const MultiGraph& g : {banana(2), polygon(3), polygon(4)}) {
        ConeSplitTerms s = cone_split_terms(g, EdgeId{1});
        CHECK(s.lhs() == s.rhs());
        CHECK(cone_split_check(g, EdgeId{1}));
        // Dropping the forest-polynomial term leaves exactly (T+1){Y_{G-e}} over.
        CHECK(s.without_y() - s.lhs() == (T + one) * s.y_delete);
        CHECK_FALSE(s.y_delete.is_zero());
    }
    CHECK(cone_split_check(double_edge(polygon(3), EdgeId{2}, 1), EdgeId{1}));
    CHECK_THROWS_AS(cone_split_terms(banana(1), EdgeId{1}), PottsError);
}

TEST_CASE("polygon cone recursion and closed forms") {
    for (unsigned m = 0; m <= 10; ++m) {
        CAPTURE(m);
        CHECK(polygon_cone_class(m) == cone_split_recursion_V(polygon_cone_seeds(), m));
        CHECK(polygon_cone_class(m).evaluate(1) == 2);
    }
    for (unsigned m = 0; m <= 3; ++m) {
        CAPTURE(m);
        CHECK(v_class(polygon(m + 1)) == polygon_cone_class(m));
        CHECK(y_class(polygon(m + 1)) == polygon_cone_y_class(m));
    }
    YClosedForm f = cone_y_closed_form(polygon_cone_y_seeds());
    for (unsigned m = 0; m <= 12; ++m) CHECK(f.term(m) == cone_split_recursion_Y(polygon_cone_y_seeds(), m));
}
