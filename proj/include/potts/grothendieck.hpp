#pragma once

#include "potts/class_poly.hpp"
#include "potts/graph.hpp"

namespace potts {

// Classes of Gamma_0 G, Gamma_1 G, Gamma_2 G for one splitting family.
struct SplitSeeds {
    ClassPoly s0, s1, s2;
};

// Classes of G^(0), G^(1) for one doubling family.
struct DoubleSeeds {
    ClassPoly d0, d1;
};

// term(m) = (a(-1)^m + b T^m + c (T-1)^m) / den. The coefficients are in
// general rational in T; they are kept as numerators over the smallest
// denominator dividing T(T+1).
struct SplitClosedForm {
    ClassPoly a, b, c, den;
    ClassPoly term(unsigned m) const;
    bool polynomial() const { return den == ClassPoly(1); }
};

ClassPoly split_step(const ClassPoly& zG, const ClassPoly& zGcontract, const ClassPoly& zGdelete,
                     const ClassPoly& aClass);
ClassPoly split_recursion(const SplitSeeds& seeds, unsigned m);
SplitClosedForm split_closed_form(const SplitSeeds& seeds);
ClassPoly a_class_from_splittings(const SplitSeeds& seeds, const ClassPoly& zGdelete);

ClassPoly double_step(const ClassPoly& zG, const ClassPoly& bClass);
ClassPoly double_recursion(const DoubleSeeds& seeds, unsigned m);
ClassPoly double_closed_form(const DoubleSeeds& seeds, unsigned m);

// (m+1)-gon, variable q and fixed q not in {0, 1}.
ClassPoly polygon_class(unsigned m);
ClassPoly polygon_class_fixed_q(unsigned m);
// (m+1)-banana.
ClassPoly banana_class(unsigned m);
ClassPoly banana_class_fixed_q(unsigned m);
ClassPoly chain_polygon_class_fixed_q(const FamilySpec& spec);
ClassPoly chain_banana_class_fixed_q(const FamilySpec& spec);

// ({Z_G} - T^E)/(T - 1) and its inverse (T - 1) z_q + T^E.
ClassPoly fibration_reduce(const ClassPoly& zG, unsigned edge_count);
ClassPoly fibration_lift(const ClassPoly& zq, unsigned edge_count);
ClassPoly disjoint_union_class(const ClassPoly& z1, unsigned e1, const ClassPoly& z2, unsigned e2);

enum class JoinKind { VertexJoin, BridgeJoin, AppendEdge };
// Effect of a one-graph operation on a class: vertex joins leave it
// unchanged, a bridge or appended edge multiplies by T.
ClassPoly join_transform(const ClassPoly& z, JoinKind kind);
// Fixed-q class of two graphs joined at a vertex (or disjoint).
ClassPoly fixed_q_vertex_join(const ClassPoly& z1, const ClassPoly& z2);

// {Z_G} = L {Z_{G/e} cap Z_{G-e}} - {Z_{G/e}}, every term from the oracle.
bool delcon_identity_check(const MultiGraph& g, EdgeId e);

}  // namespace potts
