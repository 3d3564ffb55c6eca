#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace potts {

struct EdgeId {
    std::uint32_t value = 0;
    auto operator<=>(const EdgeId&) const = default;
};

struct Edge {
    EdgeId id;
    std::size_t a = 0;
    std::size_t b = 0;
    bool is_loop() const { return a == b; }
    bool operator==(const Edge&) const = default;
};

enum class EdgeKind { Bridge, Loop, Regular };
const char* to_string(EdgeKind k);

// (m, k, N): block parameter, connector length, number of blocks.
struct FamilySpec {
    unsigned m = 0;
    unsigned k = 0;
    unsigned N = 1;
    void validate() const;
    std::size_t edge_count() const { return std::size_t(N) * (m + 1) + std::size_t(k) * (N - 1); }
};

// Immutable multigraph; edges keep their ids through every operation that
// does not remove them.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(std::size_t vertex_count) : n_(vertex_count) {}
    MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<EdgeId> edge_ids() const;

    bool has_edge(EdgeId e) const;
    const Edge& edge(EdgeId e) const;  // throws NotFound
    EdgeId fresh_id() const;           // max id + 1

    bool operator==(const MultiGraph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

MultiGraph edgeless(std::size_t vertices);
MultiGraph polygon(unsigned sides);
MultiGraph banana(unsigned m);
MultiGraph path(unsigned edges);
MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h);

MultiGraph delete_edge(const MultiGraph& g, EdgeId e);
MultiGraph contract_edge(const MultiGraph& g, EdgeId e);
MultiGraph split_edge(const MultiGraph& g, EdgeId e, unsigned m);
MultiGraph double_edge(const MultiGraph& g, EdgeId e, unsigned extra);

MultiGraph chain_polygons(const FamilySpec& spec);
MultiGraph chain_bananas(const FamilySpec& spec);

EdgeKind classify_edge(const MultiGraph& g, EdgeId e);
std::size_t components(const MultiGraph& g);
// Components of the spanning subgraph (V(g), edges[i] for mask bit i).
std::size_t components_of_subset(const MultiGraph& g, std::uint64_t mask);

// "V n" header then "id u v" per edge; '#' starts a comment.
MultiGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const MultiGraph& g);

}  // namespace potts
