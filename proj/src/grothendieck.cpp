#include "potts/grothendieck.hpp"

#include "potts/errors.hpp"
#include "potts/pointcount.hpp"
#include "potts/tutte.hpp"

namespace potts {

namespace {

const ClassPoly kT = ClassPoly::T();
const ClassPoly kOne = ClassPoly(1);

ClassPoly sign(unsigned m) { return ClassPoly(m % 2 ? -1 : 1); }

}  // namespace

ClassPoly SplitClosedForm::term(unsigned m) const {
    ClassPoly num = a * sign(m) + b * pow(kT, m) + c * pow(kT - kOne, m);
    return class_div_exact(num, den);
}

ClassPoly split_step(const ClassPoly& zG, const ClassPoly& zGcontract, const ClassPoly& zGdelete,
                     const ClassPoly& aClass) {
    return (kT - ClassPoly(2)) * zG + (kT - kOne) * zGcontract + (kT + kOne) * (zGdelete + aClass);
}

ClassPoly split_recursion(const SplitSeeds& seeds, unsigned m) {
    ClassPoly z0 = seeds.s0, z1 = seeds.s1, z2 = seeds.s2;
    if (m == 0) return z0;
    if (m == 1) return z1;
    const ClassPoly c2 = ClassPoly{-2, 2};    // 2T - 2
    const ClassPoly c1 = ClassPoly{1, -3, 1}; // T^2 - 3T + 1
    const ClassPoly c0 = ClassPoly{0, -1, 1}; // T(T - 1)
    for (unsigned i = 2; i < m; ++i) {
        ClassPoly z3 = c2 * z2 - c1 * z1 - c0 * z0;
        z0 = std::move(z1);
        z1 = std::move(z2);
        z2 = std::move(z3);
    }
    return z2;
}

SplitClosedForm split_closed_form(const SplitSeeds& s) {
    // Solving A + B + C = s0, -A + BT + C(T-1) = s1, A + BT^2 + C(T-1)^2 = s2
    // over the common denominator T(T+1).
    const ClassPoly Tp1 = kT + kOne;
    ClassPoly u = s.s2 + s.s1;
    ClassPoly v = s.s2 + ClassPoly(3) * s.s1 + ClassPoly(2) * s.s0;
    ClassPoly w = s.s1 + s.s0;
    SplitClosedForm f;
    f.a = s.s0 * kT * Tp1 + u * Tp1 - v * kT;
    f.b = -(w * kT * Tp1) + v * kT;
    f.c = w * kT * Tp1 - u * Tp1;
    f.den = kT * Tp1;
    for (const ClassPoly& d : {kT, Tp1}) {
        ClassPoly qa, qb, qc;
        if (class_try_div(f.a, d, qa) && class_try_div(f.b, d, qb) && class_try_div(f.c, d, qc)) {
            f.a = qa;
            f.b = qb;
            f.c = qc;
            f.den = class_div_exact(f.den, d);
        }
    }
    return f;
}

ClassPoly a_class_from_splittings(const SplitSeeds& s, const ClassPoly& zGdelete) {
    ClassPoly r = s.s2 - (kT - ClassPoly(2)) * s.s1 - (kT - kOne) * s.s0;
    return class_div_exact(r, kT + kOne) - zGdelete;
}

ClassPoly double_step(const ClassPoly& zG, const ClassPoly& bClass) {
    return kT * zG + (kT + kOne) * bClass;
}

ClassPoly double_recursion(const DoubleSeeds& seeds, unsigned m) {
    if (m == 0) return seeds.d0;
    ClassPoly z0 = seeds.d0, z1 = seeds.d1;
    const ClassPoly c1 = ClassPoly{1, 2};     // 2T + 1
    const ClassPoly c0 = ClassPoly{0, 1, 1};  // T(T + 1)
    for (unsigned i = 1; i < m; ++i) {
        ClassPoly z2 = c1 * z1 - c0 * z0;
        z0 = std::move(z1);
        z1 = std::move(z2);
    }
    return z1;
}

ClassPoly double_closed_form(const DoubleSeeds& s, unsigned m) {
    const ClassPoly Tp1 = kT + kOne;
    return (Tp1 * s.d0 - s.d1) * pow(kT, m) + (s.d1 - kT * s.d0) * pow(Tp1, m);
}

ClassPoly polygon_class(unsigned m) {
    const ClassPoly Tm1 = kT - kOne;
    return pow(kT, m + 2) + kT * Tm1 * (pow(kT, m) - pow(Tm1, m)) +
           Tm1 * class_div_exact(pow(Tm1, m) - sign(m), kT);
}

ClassPoly polygon_class_fixed_q(unsigned m) {
    const ClassPoly Tm1 = kT - kOne;
    return pow(kT, m + 1) + kT * (pow(kT, m) - pow(Tm1, m)) + class_div_exact(pow(Tm1, m) - sign(m), kT);
}

ClassPoly banana_class(unsigned m) { return pow(kT, m) + (kT - kOne) * pow(kT + kOne, m + 1); }

ClassPoly banana_class_fixed_q(unsigned m) { return pow(kT + kOne, m + 1) - pow(kT, m); }

ClassPoly chain_polygon_class_fixed_q(const FamilySpec& s) {
    s.validate();
    return pow(polygon_class_fixed_q(s.m), s.N) * pow(kT, s.k * (s.N - 1));
}

ClassPoly chain_banana_class_fixed_q(const FamilySpec& s) {
    s.validate();
    return pow(banana_class_fixed_q(s.m), s.N) * pow(kT, s.k * (s.N - 1));
}

ClassPoly fibration_reduce(const ClassPoly& zG, unsigned edge_count) {
    ClassPoly q;
    if (!class_try_div(zG - pow(kT, edge_count), kT - kOne, q))
        fail(ErrorKind::ExactDivisionFailure,
             "fibration condition fails: (T-1) does not divide " + (zG - pow(kT, edge_count)).to_string());
    return q;
}

ClassPoly fibration_lift(const ClassPoly& zq, unsigned edge_count) {
    return (kT - kOne) * zq + pow(kT, edge_count);
}

ClassPoly disjoint_union_class(const ClassPoly& z1, unsigned e1, const ClassPoly& z2, unsigned e2) {
    fibration_reduce(z1, e1);
    fibration_reduce(z2, e2);
    ClassPoly num = z1 * z2 - pow(kT, e1) * z2 - pow(kT, e2) * z1 + pow(kT, e1 + e2 + 1);
    return class_div_exact(num, kT - kOne);
}

ClassPoly join_transform(const ClassPoly& z, JoinKind kind) {
    switch (kind) {
    case JoinKind::VertexJoin: return z;
    case JoinKind::BridgeJoin:
    case JoinKind::AppendEdge: return kT * z;
    }
    return z;
}

ClassPoly fixed_q_vertex_join(const ClassPoly& z1, const ClassPoly& z2) { return z1 * z2; }

bool delcon_identity_check(const MultiGraph& g, EdgeId e) {
    unsigned E = unsigned(g.edge_count());
    MPoly zc = z_delcon(contract_edge(g, e));
    MPoly zd = z_delcon(delete_edge(g, e));
    ClassPoly lhs = complement_class(z_delcon(g), E + 1);
    ClassPoly inter = zero_locus_complement_class({zc, zd}, E);
    ClassPoly contracted = complement_class(zc, E);
    return lhs == ClassPoly::L() * inter - contracted;
}

}  // namespace potts
