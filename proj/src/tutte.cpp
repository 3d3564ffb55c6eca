#include "potts/tutte.hpp"

#include <algorithm>

#include "potts/errors.hpp"

namespace potts {

namespace {

void check_budget(const MultiGraph& g, std::size_t budget) {
    if (g.edge_count() > budget || g.edge_count() >= 64)
        fail(ErrorKind::ResourceLimit, "subset enumeration over " + std::to_string(g.edge_count()) +
                                           " edges exceeds budget " + std::to_string(budget));
}

Monomial mask_monomial(const MultiGraph& g, std::uint64_t mask, unsigned qexp, bool inside) {
    Monomial m;
    if (qexp) m.push_back({VarId::q(), qexp});
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (((mask >> i) & 1u) == (inside ? 1u : 0u)) m.push_back({VarId::t(g.edges()[i].id), 1});
    std::sort(m.begin(), m.end());
    return m;
}

// Visits every edge subset whose spanning subgraph is a maximal forest.
template <class F>
void for_each_max_forest(const MultiGraph& g, F&& f) {
    check_budget(g, kSubsetEdgeBudget);
    std::size_t k = components(g);
    std::size_t rank = g.vertex_count() - k;
    std::uint64_t n = std::uint64_t(1) << g.edge_count();
    for (std::uint64_t mask = 0; mask < n; ++mask)
        if (std::size_t(__builtin_popcountll(mask)) == rank && components_of_subset(g, mask) == k)
            f(mask);
}

const Edge* first_regular(const MultiGraph& g) {
    for (const auto& e : g.edges())
        if (!e.is_loop() && classify_edge(g, e.id) == EdgeKind::Regular) return &e;
    return nullptr;
}

}  // namespace

MPoly z_subset(const MultiGraph& g, std::size_t budget) {
    check_budget(g, budget);
    MPoly z;
    std::uint64_t n = std::uint64_t(1) << g.edge_count();
    for (std::uint64_t mask = 0; mask < n; ++mask)
        z += MPoly::term(mask_monomial(g, mask, unsigned(components_of_subset(g, mask)), true), 1);
    return z;
}

MPoly z_delcon(const MultiGraph& g, Pivot pivot) {
    if (g.edge_count() == 0) return MPoly::var(VarId::q(), unsigned(g.vertex_count()));
    if (pivot == Pivot::LastEdge) {
        EdgeId e = g.edges().back().id;
        return z_delcon(delete_edge(g, e), pivot) + MPoly::t(e) * z_delcon(contract_edge(g, e), pivot);
    }
    if (const Edge* r = first_regular(g)) {
        EdgeId e = r->id;
        return z_delcon(delete_edge(g, e), pivot) + MPoly::t(e) * z_delcon(contract_edge(g, e), pivot);
    }
    // Only bridges and loops remain: each peels off as a linear factor.
    const Edge& e = g.edges().front();
    if (e.is_loop()) return (MPoly(1) + MPoly::t(e.id)) * z_delcon(delete_edge(g, e.id), pivot);
    return (MPoly::q() + MPoly::t(e.id)) * z_delcon(contract_edge(g, e.id), pivot);
}

MPoly z_tilde(const MultiGraph& g) {
    if (g.vertex_count() == 0) fail(ErrorKind::InvalidArgument, "z_tilde of the empty graph");
    return divide_exact_by_q_power(z_delcon(g), unsigned(components(g)));
}

MPoly phi(const MultiGraph& g) {
    MPoly r;
    for_each_max_forest(g, [&](std::uint64_t mask) { r += MPoly::term(mask_monomial(g, mask, 0, true), 1); });
    return r;
}

MPoly phi_from_z(const MultiGraph& g) {
    return lowest_homogeneous_part(substitute(z_tilde(g), VarId::q(), MPoly(0)));
}

MPoly psi(const MultiGraph& g) {
    MPoly r;
    for_each_max_forest(g, [&](std::uint64_t mask) { r += MPoly::term(mask_monomial(g, mask, 0, false), 1); });
    return r;
}

// Psi(t) = prod t_e * Phi(1/t): each forest monomial is replaced by its
// complement in the edge set.
MPoly psi_from_phi(const MultiGraph& g) {
    MPoly r;
    MPoly f = phi(g);
    for (const auto& [m, c] : f.terms()) {
        Monomial comp;
        for (const auto& e : g.edges()) {
            VarId v = VarId::t(e.id);
            bool in = std::any_of(m.begin(), m.end(), [&](const auto& x) { return x.first == v; });
            if (!in) comp.push_back({v, 1});
        }
        std::sort(comp.begin(), comp.end());
        r += MPoly::term(comp, c);
    }
    return r;
}

MPoly p_leading(const MultiGraph& g) { return lowest_homogeneous_part(z_delcon(g)); }

MPoly p_forests(const MultiGraph& g) {
    check_budget(g, kSubsetEdgeBudget);
    MPoly r;
    std::uint64_t n = std::uint64_t(1) << g.edge_count();
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        std::size_t k = components_of_subset(g, mask);
        if (k + std::size_t(__builtin_popcountll(mask)) == g.vertex_count())
            r += MPoly::term(mask_monomial(g, mask, unsigned(k), true), 1);
    }
    return r;
}

MPoly q_reduced(const MultiGraph& g) { return divide_exact_by_q_power(p_leading(g), unsigned(components(g))); }

PrimeSplit z_prime_split(const MultiGraph& g, EdgeId e) {
    const Edge& x = g.edge(e);
    if (x.is_loop()) fail(ErrorKind::InvalidArgument, "z_prime_split: edge " + std::to_string(e.value) + " is a loop");
    MultiGraph h = delete_edge(g, e);
    check_budget(h, kSubsetEdgeBudget);
    std::size_t ie = 0;
    while (g.edges()[ie].id != e) ++ie;
    PrimeSplit s;
    std::uint64_t n = std::uint64_t(1) << h.edge_count();
    std::uint64_t low = (std::uint64_t(1) << ie) - 1;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        std::size_t k = components_of_subset(h, mask);
        // Same subset as a mask over g's edges, with e's slot left empty.
        std::uint64_t gmask = (mask & low) | ((mask & ~low) << 1);
        bool connects = components_of_subset(g, gmask | (std::uint64_t(1) << ie)) == k;
        MPoly t = MPoly::term(mask_monomial(h, mask, unsigned(k), true), 1);
        (connects ? s.connecting : s.disconnecting) += t;
    }
    return s;
}

MPoly a_locus_poly(const MultiGraph& g, EdgeId e) {
    return (MPoly(1) - MPoly::q()) * z_prime_split(g, e).connecting;
}

MPoly b_locus_poly(const MultiGraph& g, EdgeId e) {
    if (g.edge(e).is_loop()) return MPoly(0);
    MPoly b = z_delcon(delete_edge(g, e)) - z_delcon(contract_edge(g, e));
    MPoly check = (MPoly::q() - MPoly(1)) * divide_exact_by_q_power(z_prime_split(g, e).disconnecting, 1);
    if (!(b == check))
        fail(ErrorKind::ExactDivisionFailure, "b-locus polynomial disagrees with (q-1) Z''/q");
    return b;
}

}  // namespace potts
