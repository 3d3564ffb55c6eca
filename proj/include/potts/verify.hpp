#pragma once

#include <string>
#include <utility>
#include <vector>

#include "potts/graph.hpp"

namespace potts {

struct NamedGraph {
    std::string name;
    MultiGraph graph;
};

// Small multigraphs exercising loops, bridges, parallel edges and several
// components.
std::vector<NamedGraph> graph_corpus();

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

inline const std::vector<std::string> kVerifySuites = {"graphcore", "multipoly", "tutte", "oracle",
                                                       "grothendieck", "cone", "motivic"};

// Runs one suite ("all" runs every suite). Oracle-backed checks skip graphs
// whose ambient dimension exceeds max_dim.
std::vector<CheckResult> run_suite(const std::string& suite, unsigned max_dim = 5);

}  // namespace potts
