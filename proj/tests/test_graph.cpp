#include <doctest.h>

#include "potts/errors.hpp"
#include "potts/graph.hpp"
#include "support.hpp"

using namespace potts;

namespace {

std::vector<std::size_t> degrees(const MultiGraph& g) {
    std::vector<std::size_t> d(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        ++d[e.a];
        ++d[e.b];
    }
    return d;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const PottsError& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("polygon shapes") {
    MultiGraph loop = polygon(1);
    CHECK(loop.vertex_count() == 1);
    REQUIRE(loop.edge_count() == 1);
    CHECK(loop.edges()[0].is_loop());

    MultiGraph b2 = polygon(2);
    CHECK(b2.vertex_count() == 2);
    CHECK(b2.edge_count() == 2);
    for (const auto& e : b2.edges()) CHECK_FALSE(e.is_loop());

    MultiGraph tri = polygon(3);
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    for (auto d : degrees(tri)) CHECK(d == 2);

    CHECK(kind_of([] { polygon(0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("banana shapes") {
    CHECK(banana(1).edge_count() == 1);
    CHECK(banana(2) == polygon(2));
    MultiGraph b3 = banana(3);
    CHECK(b3.vertex_count() == 2);
    CHECK(b3.edge_count() == 3);
    CHECK(kind_of([] { banana(0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("delete and contract keep edge ids") {
    MultiGraph tri = polygon(3);
    MultiGraph p = delete_edge(tri, EdgeId{2});
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_ids() == std::vector<EdgeId>{EdgeId{1}, EdgeId{3}});

    MultiGraph c = contract_edge(tri, EdgeId{1});
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_ids() == std::vector<EdgeId>{EdgeId{2}, EdgeId{3}});
    for (const auto& e : c.edges()) CHECK_FALSE(e.is_loop());

    MultiGraph l = contract_edge(banana(2), EdgeId{1});
    CHECK(l.vertex_count() == 1);
    REQUIRE(l.edge_count() == 1);
    CHECK(l.edges()[0].is_loop());
    CHECK(l.edges()[0].id == EdgeId{2});

    CHECK(delete_edge(polygon(1), EdgeId{1}) == edgeless(1));
    CHECK(contract_edge(polygon(1), EdgeId{1}) == edgeless(1));
    CHECK(delete_edge(banana(2), EdgeId{1}).edge_count() == 1);

    CHECK(kind_of([&] { delete_edge(tri, EdgeId{9}); }) == ErrorKind::NotFound);
    CHECK(kind_of([&] { contract_edge(tri, EdgeId{9}); }) == ErrorKind::NotFound);
}

TEST_CASE("contraction renumbers vertices canonically") {
    // 0-1, 1-2, 2-3; contracting 1-2 keeps vertex 1 and shifts 3 down.
    MultiGraph g = path(3);
    MultiGraph c = contract_edge(g, EdgeId{2});
    CHECK(c.vertex_count() == 3);
    CHECK(c.edge(EdgeId{1}).a == 0);
    CHECK(c.edge(EdgeId{1}).b == 1);
    CHECK(c.edge(EdgeId{3}).a == 1);
    CHECK(c.edge(EdgeId{3}).b == 2);
}

TEST_CASE("split and double") {
    MultiGraph loop = polygon(1);
    MultiGraph tri = split_edge(loop, EdgeId{1}, 3);
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    for (auto d : degrees(tri)) CHECK(d == 2);
    CHECK(components(tri) == 1);

    MultiGraph e = banana(1);
    CHECK(split_edge(e, EdgeId{1}, 1) == e);
    CHECK(split_edge(e, EdgeId{1}, 0) == edgeless(1));
    MultiGraph p2 = split_edge(e, EdgeId{1}, 2);
    CHECK(p2.vertex_count() == 3);
    CHECK(p2.edge_count() == 2);
    CHECK(p2.has_edge(EdgeId{1}));

    CHECK(double_edge(e, EdgeId{1}, 1).edge_count() == 2);
    CHECK(double_edge(e, EdgeId{1}, 3).edge_count() == 4);
    CHECK(double_edge(tri, EdgeId{2}, 0) == tri);
    CHECK(kind_of([&] { split_edge(e, EdgeId{7}, 2); }) == ErrorKind::NotFound);
    CHECK(kind_of([&] { double_edge(e, EdgeId{7}, 2); }) == ErrorKind::NotFound);
}

TEST_CASE("chains") {
    MultiGraph t = chain_polygons({2, 0, 1});
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);

    MultiGraph tt = chain_polygons({2, 1, 2});
    CHECK(tt.edge_count() == 7);
    CHECK(tt.vertex_count() == 6);
    std::size_t bridges = 0;
    for (const auto& e : tt.edges()) bridges += classify_edge(tt, e.id) == EdgeKind::Bridge;
    CHECK(bridges == 1);
    CHECK(classify_edge(tt, EdgeId{4}) == EdgeKind::Bridge);

    MultiGraph bb = chain_polygons({1, 0, 2});
    CHECK(bb.edge_count() == 4);
    CHECK(bb.vertex_count() == 3);

    CHECK(chain_bananas({1, 0, 1}) == banana(2));
    MultiGraph be = chain_bananas({0, 2, 2});
    CHECK(be.edge_count() == 4);
    CHECK(be == path(4));
    CHECK(chain_bananas({2, 1, 2}).edge_count() == 7);

    CHECK(kind_of([] { chain_polygons({1, 1, 0}); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { chain_bananas({1, 1, 0}); }) == ErrorKind::InvalidParameter);

    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned k = 0; k <= 4; ++k)
            for (unsigned N = 1; N <= 4; ++N) {
                FamilySpec s{m, k, N};
                CHECK(chain_polygons(s).edge_count() == N * (m + 1) + k * (N - 1));
                CHECK(chain_bananas(s).edge_count() == N * (m + 1) + k * (N - 1));
                CHECK(components(chain_polygons(s)) == 1);
            }
}

TEST_CASE("classification and components") {
    CHECK(classify_edge(polygon(3), EdgeId{1}) == EdgeKind::Regular);
    CHECK(classify_edge(polygon(1), EdgeId{1}) == EdgeKind::Loop);
    CHECK(classify_edge(banana(1), EdgeId{1}) == EdgeKind::Bridge);
    CHECK(components(polygon(3)) == 1);
    CHECK(components(disjoint_union(banana(1), banana(1))) == 2);
    CHECK(components(edgeless(3)) == 3);
    CHECK(components(edgeless(0)) == 0);
}

TEST_CASE("edge operations on random multigraphs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        MultiGraph g = testing::random_multigraph(rng, 5, 7);
        std::size_t k = components(g);
        for (const auto& e : g.edges()) {
            EdgeKind kind = classify_edge(g, e.id);
            CHECK((kind == EdgeKind::Loop) == e.is_loop());
            if (!e.is_loop()) CHECK(components(contract_edge(g, e.id)) == k);
            CHECK((components(delete_edge(g, e.id)) == k + 1) == (kind == EdgeKind::Bridge));
            for (unsigned m = 1; m <= 3; ++m) {
                MultiGraph s = split_edge(g, e.id, m);
                CHECK(s.edge_count() == g.edge_count() + m - 1);
                CHECK(s.vertex_count() == g.vertex_count() + m - 1);
                MultiGraph d = double_edge(g, e.id, m);
                CHECK(d.edge_count() == g.edge_count() + m);
                CHECK(d.vertex_count() == g.vertex_count());
            }
            // Surviving ids are untouched.
            MultiGraph c = contract_edge(g, e.id);
            for (const auto& x : c.edges()) CHECK(g.has_edge(x.id));
        }
    }
}

TEST_CASE("edge-list round trip and errors") {
    MultiGraph g = chain_polygons({2, 1, 2});
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    CHECK(parse_edge_list("# loop\nV 1\n7 0 0\n").edge(EdgeId{7}).is_loop());
    CHECK(kind_of([] { parse_edge_list(""); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge_list("V 2\n1 0 2\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge_list("V 2\n1 0 1\n1 1 0\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge_list("V 2\nx 0 1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge_list("V 2\n1 0 1 9\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge_list("E 2\n"); }) == ErrorKind::Parse);
}
