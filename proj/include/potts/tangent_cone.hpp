#pragma once

#include "potts/class_poly.hpp"
#include "potts/graph.hpp"
#include "potts/grothendieck.hpp"
#include "potts/multipoly.hpp"

namespace potts {

struct ConePolys {
    MPoly p;  // lowest homogeneous part of Z_G
    MPoly q;  // p / q^{k(G)}
    MPoly y;  // q at q = 0, the forest polynomial
};
ConePolys cone_polys(const MultiGraph& g);

// Oracle classes: V_G = V(P_G) and W_G = V(Q_G) in ambient #E+1, Y_G in
// ambient #E.
ClassPoly v_class(const MultiGraph& g);
ClassPoly w_class(const MultiGraph& g);
ClassPoly y_class(const MultiGraph& g);

// loop: (T+1) {V_{G-e}}; bridge: T {V_{G/e}}. Regular edges are rejected.
ClassPoly cone_bridge_loop_rules(const ClassPoly& z, EdgeKind kind);
// Adding an edge parallel to an existing one multiplies by T+1.
ClassPoly cone_parallel_rule(const ClassPoly& z);

// Both sides of the splitting identity for the tangent cone:
//   {V_{G2}} = (T-2){V_G} + (T-1){V_{G/e}}
//              + (T+1)({V_{G-e}} + {V(Q_{G-e} - q Q_{G/e})} - {Y_{G-e}}).
// `without_y` drops the {Y_{G-e}} correction.
struct ConeSplitTerms {
    ClassPoly v_split, v_g, v_contract, v_delete, q_difference, y_delete;
    ClassPoly lhs() const { return v_split; }
    ClassPoly rhs() const;
    ClassPoly without_y() const;
};
ConeSplitTerms cone_split_terms(const MultiGraph& g, EdgeId e);
bool cone_split_check(const MultiGraph& g, EdgeId e);

// V classes obey the same recurrence and closed form as the Z classes.
ClassPoly cone_split_recursion_V(const SplitSeeds& seeds, unsigned m);

// Y_{m+3} = (2T-1)Y_{m+2} - T(T-2)Y_{m+1} - T^2 Y_m.
ClassPoly cone_split_recursion_Y(const SplitSeeds& seeds, unsigned m);
// term(m) = (a(-1)^m + b m T^{m-1} + c T^m) / den, den dividing (T+1)^2.
struct YClosedForm {
    ClassPoly a, b, c, den;
    ClassPoly term(unsigned m) const;
};
YClosedForm cone_y_closed_form(const SplitSeeds& seeds);

// Splitting a bridge or loop m more times multiplies {V} by T^m.
ClassPoly cone_split_bridge_loop(const ClassPoly& z, unsigned m);

// (m+1)-gon and (m+1)-banana.
ClassPoly polygon_cone_class(unsigned m);
ClassPoly polygon_cone_y_class(unsigned m);
ClassPoly banana_cone_class(unsigned m);
ClassPoly banana_cone_y_class(unsigned m);
SplitSeeds polygon_cone_seeds();
SplitSeeds polygon_cone_y_seeds();

}  // namespace potts
