#include "potts/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "potts/errors.hpp"

namespace potts {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::ExactDivisionFailure: return "exact-division-failure";
    case ErrorKind::NotPolynomialCount: return "not-polynomial-count";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

const char* to_string(EdgeKind k) {
    switch (k) {
    case EdgeKind::Bridge: return "bridge";
    case EdgeKind::Loop: return "loop";
    case EdgeKind::Regular: return "regular";
    }
    return "unknown";
}

void FamilySpec::validate() const {
    if (N < 1) fail(ErrorKind::InvalidParameter, "family spec: N must be >= 1");
}

namespace {

struct Dsu {
    std::vector<std::size_t> parent;
    std::size_t sets;
    explicit Dsu(std::size_t n) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent[std::max(a, b)] = std::min(a, b);
        --sets;
    }
};

std::string id_str(EdgeId e) { return std::to_string(e.value); }

}  // namespace

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    // Undirected: endpoints are stored in order, edges sorted by id.
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
    std::set<EdgeId> seen;
    for (auto& e : edges_) {
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.a >= n_ || e.b >= n_)
            fail(ErrorKind::InvalidArgument, "edge " + id_str(e.id) + " has endpoint out of range");
        if (!seen.insert(e.id).second)
            fail(ErrorKind::InvalidArgument, "duplicate edge id " + id_str(e.id));
    }
}

std::vector<EdgeId> MultiGraph::edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.id);
    return out;
}

bool MultiGraph::has_edge(EdgeId e) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& x) { return x.id == e; });
}

const Edge& MultiGraph::edge(EdgeId e) const {
    for (const auto& x : edges_)
        if (x.id == e) return x;
    fail(ErrorKind::NotFound, "no edge with id " + id_str(e));
}

EdgeId MultiGraph::fresh_id() const {
    std::uint32_t m = 0;
    for (const auto& e : edges_) m = std::max(m, e.id.value);
    return EdgeId{m + 1};
}

MultiGraph edgeless(std::size_t vertices) { return MultiGraph(vertices); }

MultiGraph polygon(unsigned sides) {
    if (sides == 0) fail(ErrorKind::InvalidParameter, "polygon needs at least one side");
    std::vector<Edge> es;
    for (unsigned i = 1; i <= sides; ++i) es.push_back({EdgeId{i}, i - 1, i % sides});
    return MultiGraph(sides, std::move(es));
}

MultiGraph banana(unsigned m) {
    if (m == 0) fail(ErrorKind::InvalidParameter, "banana needs at least one edge");
    std::vector<Edge> es;
    for (unsigned i = 1; i <= m; ++i) es.push_back({EdgeId{i}, 0, 1});
    return MultiGraph(2, std::move(es));
}

MultiGraph path(unsigned edges) {
    std::vector<Edge> es;
    for (unsigned i = 1; i <= edges; ++i) es.push_back({EdgeId{i}, i - 1, i});
    return MultiGraph(edges + 1, std::move(es));
}

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h) {
    std::vector<Edge> es = g.edges();
    std::uint32_t base = g.fresh_id().value - 1;
    for (const auto& e : h.edges())
        es.push_back({EdgeId{base + e.id.value}, e.a + g.vertex_count(), e.b + g.vertex_count()});
    return MultiGraph(g.vertex_count() + h.vertex_count(), std::move(es));
}

MultiGraph delete_edge(const MultiGraph& g, EdgeId e) {
    g.edge(e);
    std::vector<Edge> es;
    for (const auto& x : g.edges())
        if (x.id != e) es.push_back(x);
    return MultiGraph(g.vertex_count(), std::move(es));
}

MultiGraph contract_edge(const MultiGraph& g, EdgeId e) {
    const Edge& c = g.edge(e);
    if (c.is_loop()) return delete_edge(g, e);
    std::size_t keep = std::min(c.a, c.b), gone = std::max(c.a, c.b);
    auto remap = [&](std::size_t v) {
        if (v == gone) return keep;
        return v > gone ? v - 1 : v;
    };
    std::vector<Edge> es;
    for (const auto& x : g.edges())
        if (x.id != e) es.push_back({x.id, remap(x.a), remap(x.b)});
    return MultiGraph(g.vertex_count() - 1, std::move(es));
}

MultiGraph split_edge(const MultiGraph& g, EdgeId e, unsigned m) {
    const Edge& s = g.edge(e);
    if (m == 0) return contract_edge(g, e);
    if (m == 1) return g;
    std::size_t n = g.vertex_count();
    std::uint32_t next = g.fresh_id().value;
    std::vector<Edge> es;
    for (const auto& x : g.edges()) {
        if (x.id != e) {
            es.push_back(x);
            continue;
        }
        // a -> n -> n+1 -> ... -> n+m-2 -> b; the first segment keeps id e.
        std::size_t prev = s.a;
        for (unsigned i = 0; i < m; ++i) {
            std::size_t to = (i + 1 == m) ? s.b : n + i;
            es.push_back({i == 0 ? e : EdgeId{next++}, prev, to});
            prev = to;
        }
    }
    return MultiGraph(n + m - 1, std::move(es));
}

MultiGraph double_edge(const MultiGraph& g, EdgeId e, unsigned extra) {
    const Edge& s = g.edge(e);
    std::vector<Edge> es = g.edges();
    std::uint32_t next = g.fresh_id().value;
    for (unsigned i = 0; i < extra; ++i) es.push_back({EdgeId{next++}, s.a, s.b});
    return MultiGraph(g.vertex_count(), std::move(es));
}

namespace {

struct ChainBuilder {
    std::size_t n = 0;
    std::uint32_t next = 1;
    std::vector<Edge> es;

    // Copies block b; its vertex `in` is glued to `glue` if given. Returns
    // the global index of the block's vertex `out`.
    std::size_t add_block(const MultiGraph& b, std::size_t in, std::size_t out,
                          std::optional<std::size_t> glue) {
        std::vector<std::size_t> map(b.vertex_count());
        for (std::size_t v = 0; v < b.vertex_count(); ++v)
            map[v] = (glue && v == in) ? *glue : n++;
        for (const auto& e : b.edges()) es.push_back({EdgeId{next++}, map[e.a], map[e.b]});
        return map[out];
    }

    std::size_t add_path(std::size_t from, unsigned len) {
        for (unsigned i = 0; i < len; ++i) {
            es.push_back({EdgeId{next++}, from, n});
            from = n++;
        }
        return from;
    }

    MultiGraph build(const MultiGraph& block, std::size_t in, std::size_t out, const FamilySpec& s) {
        std::optional<std::size_t> glue;
        for (unsigned j = 0; j < s.N; ++j) {
            if (j > 0) glue = add_path(*glue, s.k);
            glue = add_block(block, in, out, glue);
        }
        return MultiGraph(n, std::move(es));
    }
};

}  // namespace

MultiGraph chain_polygons(const FamilySpec& spec) {
    spec.validate();
    return ChainBuilder{}.build(polygon(spec.m + 1), 0, (spec.m + 1) / 2, spec);
}

MultiGraph chain_bananas(const FamilySpec& spec) {
    spec.validate();
    return ChainBuilder{}.build(banana(spec.m + 1), 0, 1, spec);
}

std::size_t components(const MultiGraph& g) {
    Dsu d(g.vertex_count());
    for (const auto& e : g.edges()) d.unite(e.a, e.b);
    return d.sets;
}

std::size_t components_of_subset(const MultiGraph& g, std::uint64_t mask) {
    Dsu d(g.vertex_count());
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size() && i < 64; ++i)
        if (mask >> i & 1u) d.unite(es[i].a, es[i].b);
    return d.sets;
}

EdgeKind classify_edge(const MultiGraph& g, EdgeId e) {
    const Edge& x = g.edge(e);
    if (x.is_loop()) return EdgeKind::Loop;
    return components(delete_edge(g, e)) > components(g) ? EdgeKind::Bridge : EdgeKind::Regular;
}

MultiGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> n;
    std::vector<Edge> es;
    int lineno = 0;
    auto bad = [&](const std::string& why) {
        fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!n) {
            long long v = -1;
            if (first != "V" || !(ls >> v) || v < 0) bad("expected header 'V <vertex_count>'");
            n = static_cast<std::size_t>(v);
        } else {
            long long id = -1, a = -1, b = -1;
            try {
                std::size_t pos = 0;
                id = std::stoll(first, &pos);
                if (pos != first.size()) bad("bad edge id '" + first + "'");
            } catch (const std::logic_error&) {
                bad("bad edge id '" + first + "'");
            }
            if (!(ls >> a >> b)) bad("expected '<id> <u> <v>'");
            if (id <= 0 || id > 0xffffffffLL) bad("edge id must be positive");
            if (a < 0 || b < 0 || std::size_t(a) >= *n || std::size_t(b) >= *n)
                bad("vertex index out of range");
            es.push_back({EdgeId{static_cast<std::uint32_t>(id)}, std::size_t(a), std::size_t(b)});
        }
        std::string extra;
        if (ls >> extra) bad("trailing token '" + extra + "'");
    }
    if (!n) fail(ErrorKind::Parse, "missing 'V <vertex_count>' header");
    try {
        return MultiGraph(*n, std::move(es));
    } catch (const PottsError& e) {
        fail(ErrorKind::Parse, e.what());
    }
}

std::string to_edge_list(const MultiGraph& g) {
    std::ostringstream out;
    out << "V " << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) out << e.id.value << ' ' << e.a << ' ' << e.b << '\n';
    return out.str();
}

}  // namespace potts
