#pragma once

#include <random>

#include "potts/graph.hpp"
#include "potts/verify.hpp"

namespace testing {

// Random multigraph with loops and parallel edges.
inline potts::MultiGraph random_multigraph(std::mt19937& rng, std::size_t max_vertices, std::size_t max_edges) {
    std::size_t n = 1 + rng() % max_vertices;
    std::size_t m = rng() % (max_edges + 1);
    std::vector<potts::Edge> es;
    for (std::size_t i = 0; i < m; ++i)
        es.push_back({potts::EdgeId{std::uint32_t(i + 1)}, rng() % n, rng() % n});
    return potts::MultiGraph(n, std::move(es));
}

}  // namespace testing
