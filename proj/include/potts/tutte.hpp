#pragma once

#include <cstddef>
#include <utility>

#include "potts/graph.hpp"
#include "potts/multipoly.hpp"

namespace potts {

inline constexpr std::size_t kSubsetEdgeBudget = 20;

enum class Pivot {
    FirstRegular,  // split on the first regular edge, peel bridges and loops
    LastEdge,      // plain deletion-contraction on the last edge
};

// Z_G(q, t) = sum over A of q^{k(A)} prod_{e in A} t_e.
MPoly z_subset(const MultiGraph& g, std::size_t budget = kSubsetEdgeBudget);
MPoly z_delcon(const MultiGraph& g, Pivot pivot = Pivot::FirstRegular);
MPoly z_tilde(const MultiGraph& g);

// Forest polynomials: products over (phi) or outside (psi) maximal forests.
MPoly phi(const MultiGraph& g);
MPoly phi_from_z(const MultiGraph& g);
MPoly psi(const MultiGraph& g);
MPoly psi_from_phi(const MultiGraph& g);

MPoly p_leading(const MultiGraph& g);
MPoly p_forests(const MultiGraph& g);
MPoly q_reduced(const MultiGraph& g);

struct PrimeSplit {
    MPoly connecting;     // Z'
    MPoly disconnecting;  // Z''
};
PrimeSplit z_prime_split(const MultiGraph& g, EdgeId e);

// (1 - q) Z', the defining polynomial of A^e_G on the slice t_e = -q.
MPoly a_locus_poly(const MultiGraph& g, EdgeId e);
// Z_{G-e} - Z_{G/e} = (q - 1) Z''/q; zero for a loop.
MPoly b_locus_poly(const MultiGraph& g, EdgeId e);

}  // namespace potts
