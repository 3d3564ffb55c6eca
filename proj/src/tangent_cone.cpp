#include "potts/tangent_cone.hpp"

#include "potts/errors.hpp"
#include "potts/pointcount.hpp"
#include "potts/tutte.hpp"

namespace potts {

namespace {

const ClassPoly kT = ClassPoly::T();
const ClassPoly kOne = ClassPoly(1);

}  // namespace

ConePolys cone_polys(const MultiGraph& g) {
    ConePolys c;
    c.p = p_leading(g);
    c.q = divide_exact_by_q_power(c.p, unsigned(components(g)));
    c.y = substitute(c.q, VarId::q(), MPoly(0));
    return c;
}

ClassPoly v_class(const MultiGraph& g) { return complement_class(p_leading(g), unsigned(g.edge_count() + 1)); }

ClassPoly w_class(const MultiGraph& g) { return complement_class(q_reduced(g), unsigned(g.edge_count() + 1)); }

ClassPoly y_class(const MultiGraph& g) { return complement_class(phi(g), unsigned(g.edge_count())); }

ClassPoly cone_bridge_loop_rules(const ClassPoly& z, EdgeKind kind) {
    switch (kind) {
    case EdgeKind::Loop: return (kT + kOne) * z;
    case EdgeKind::Bridge: return kT * z;
    case EdgeKind::Regular: break;
    }
    fail(ErrorKind::InvalidArgument, "regular edge: use the splitting identity instead");
}

ClassPoly cone_parallel_rule(const ClassPoly& z) { return (kT + kOne) * z; }

ClassPoly ConeSplitTerms::rhs() const { return without_y() - (kT + kOne) * y_delete; }

ClassPoly ConeSplitTerms::without_y() const {
    return (kT - ClassPoly(2)) * v_g + (kT - kOne) * v_contract + (kT + kOne) * (v_delete + q_difference);
}

ConeSplitTerms cone_split_terms(const MultiGraph& g, EdgeId e) {
    if (classify_edge(g, e) != EdgeKind::Regular)
        fail(ErrorKind::InvalidArgument, "cone splitting needs a regular edge");
    unsigned E = unsigned(g.edge_count());
    MultiGraph gc = contract_edge(g, e), gd = delete_edge(g, e);
    ConeSplitTerms t;
    t.v_split = v_class(split_edge(g, e, 2));
    t.v_g = v_class(g);
    t.v_contract = v_class(gc);
    t.v_delete = v_class(gd);
    t.q_difference = complement_class(q_reduced(gd) - MPoly::q() * q_reduced(gc), E);
    t.y_delete = y_class(gd);
    return t;
}

bool cone_split_check(const MultiGraph& g, EdgeId e) {
    ConeSplitTerms t = cone_split_terms(g, e);
    return t.lhs() == t.rhs();
}

ClassPoly cone_split_recursion_V(const SplitSeeds& seeds, unsigned m) { return split_recursion(seeds, m); }

ClassPoly cone_split_recursion_Y(const SplitSeeds& seeds, unsigned m) {
    ClassPoly y0 = seeds.s0, y1 = seeds.s1, y2 = seeds.s2;
    if (m == 0) return y0;
    if (m == 1) return y1;
    const ClassPoly c2 = ClassPoly{-1, 2};     // 2T - 1
    const ClassPoly c1 = ClassPoly{0, -2, 1};  // T(T - 2)
    const ClassPoly c0 = ClassPoly::T(2);
    for (unsigned i = 2; i < m; ++i) {
        ClassPoly y3 = c2 * y2 - c1 * y1 - c0 * y0;
        y0 = std::move(y1);
        y1 = std::move(y2);
        y2 = std::move(y3);
    }
    return y2;
}

ClassPoly YClosedForm::term(unsigned m) const {
    ClassPoly num = a * ClassPoly(m % 2 ? -1 : 1) + c * pow(kT, m);
    if (m > 0) num += b * ClassPoly(long(m)) * pow(kT, m - 1);
    return class_div_exact(num, den);
}

YClosedForm cone_y_closed_form(const SplitSeeds& s) {
    // Solving A + C = y0, -A + B + CT = y1, A + 2BT + CT^2 = y2 over (T+1)^2.
    const ClassPoly Tp1 = kT + kOne;
    ClassPoly u = s.s1 + s.s0;
    ClassPoly v = s.s2 + ClassPoly(2) * s.s1 + s.s0;
    YClosedForm f;
    f.a = s.s0 * Tp1 * Tp1 - ClassPoly(2) * u * Tp1 + v;
    f.b = -(u * Tp1 * Tp1) + v * Tp1;
    f.c = ClassPoly(2) * u * Tp1 - v;
    f.den = Tp1 * Tp1;
    for (int i = 0; i < 2; ++i) {
        ClassPoly qa, qb, qc;
        if (!(class_try_div(f.a, Tp1, qa) && class_try_div(f.b, Tp1, qb) && class_try_div(f.c, Tp1, qc))) break;
        f.a = qa;
        f.b = qb;
        f.c = qc;
        f.den = class_div_exact(f.den, Tp1);
    }
    return f;
}

ClassPoly cone_split_bridge_loop(const ClassPoly& z, unsigned m) { return pow(kT, m) * z; }

ClassPoly polygon_cone_class(unsigned m) {
    const ClassPoly Tm1 = kT - kOne;
    return Tm1 * ClassPoly(m % 2 ? -1 : 1) + ClassPoly(2) * pow(kT, m + 2) - (kT + kOne) * pow(Tm1, m + 1);
}

SplitSeeds polygon_cone_seeds() {
    const ClassPoly Tp1 = kT + kOne;
    return {kT * Tp1, kT * kT * Tp1, kT * Tp1 * (kT * kT + kT - kOne)};
}

SplitSeeds polygon_cone_y_seeds() {
    const ClassPoly Tp1 = kT + kOne;
    return {Tp1, kT * Tp1, kT * Tp1 * Tp1};
}

ClassPoly polygon_cone_y_class(unsigned m) { return cone_split_recursion_Y(polygon_cone_y_seeds(), m); }

ClassPoly banana_cone_class(unsigned m) { return kT * kT * pow(kT + kOne, m); }

ClassPoly banana_cone_y_class(unsigned m) { return kT * pow(kT + kOne, m); }

}  // namespace potts
