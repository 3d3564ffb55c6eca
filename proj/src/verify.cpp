#include "potts/verify.hpp"

#include <functional>
#include <random>

#include "potts/errors.hpp"
#include "potts/grothendieck.hpp"
#include "potts/motivic.hpp"
#include "potts/pointcount.hpp"
#include "potts/tangent_cone.hpp"
#include "potts/tutte.hpp"

namespace potts {

std::vector<NamedGraph> graph_corpus() {
    MultiGraph tri = polygon(3);
    return {
        {"vertex", edgeless(1)},
        {"two-vertices", edgeless(2)},
        {"loop", polygon(1)},
        {"edge", banana(1)},
        {"banana2", banana(2)},
        {"banana3", banana(3)},
        {"banana4", banana(4)},
        {"triangle", tri},
        {"square", polygon(4)},
        {"pentagon", polygon(5)},
        {"path2", path(2)},
        {"two-edges", disjoint_union(banana(1), banana(1))},
        {"two-loops", disjoint_union(polygon(1), polygon(1))},
        {"edge-with-loop", MultiGraph(2, {{EdgeId{1}, 0, 1}, {EdgeId{2}, 1, 1}})},
        {"triangle-parallel", double_edge(tri, EdgeId{1}, 1)},
        {"chain-polygon-1-0-2", chain_polygons({1, 0, 2})},
        {"chain-polygon-2-1-2", chain_polygons({2, 1, 2})},
        {"chain-banana-1-0-2", chain_bananas({1, 0, 2})},
        {"chain-banana-0-2-2", chain_bananas({0, 2, 2})},
        {"K4", MultiGraph(4, {{EdgeId{1}, 0, 1}, {EdgeId{2}, 0, 2}, {EdgeId{3}, 0, 3},
                              {EdgeId{4}, 1, 2}, {EdgeId{5}, 1, 3}, {EdgeId{6}, 2, 3}})},
    };
}

namespace {

class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string& name, const std::function<bool(std::string&)>& f) {
        CheckResult r{suite_, name, false, ""};
        try {
            r.passed = f(r.detail);
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }

    std::vector<CheckResult> out;

private:
    std::string suite_;
};

MPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), var(0, 3), exp(0, 2), coef(-5, 5);
    MPoly p;
    for (int i = nterms(rng); i > 0; --i) {
        MPoly t(coef(rng));
        for (int v = 0; v < 4; ++v) t *= MPoly::var(VarId::from_code(std::uint32_t(v)), unsigned(exp(rng)));
        p += t;
    }
    return p;
}

ClassPoly random_class(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6), coef(-9, 9);
    std::vector<mpz_class> c;
    for (int i = deg(rng); i >= 0; --i) c.emplace_back(coef(rng));
    return ClassPoly(std::move(c));
}

std::vector<CheckResult> suite_graphcore() {
    Recorder r("graphcore");
    r.check("chain edge counts", [](std::string& d) {
        for (unsigned m = 0; m <= 4; ++m)
            for (unsigned k = 0; k <= 4; ++k)
                for (unsigned N = 1; N <= 4; ++N) {
                    FamilySpec s{m, k, N};
                    if (chain_polygons(s).edge_count() != s.edge_count() ||
                        chain_bananas(s).edge_count() != s.edge_count()) {
                        d = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " N=" + std::to_string(N);
                        return false;
                    }
                }
        return true;
    });
    for (const auto& [name, g] : graph_corpus()) {
        r.check("edge operations: " + name, [&g = g](std::string& d) {
            std::size_t k = components(g);
            for (const auto& e : g.edges()) {
                EdgeKind kind = classify_edge(g, e.id);
                if (!e.is_loop() && components(contract_edge(g, e.id)) != k) return d = "contract", false;
                if ((components(delete_edge(g, e.id)) == k + 1) != (kind == EdgeKind::Bridge))
                    return d = "bridge", false;
                for (unsigned m = 1; m <= 4; ++m) {
                    MultiGraph s = split_edge(g, e.id, m);
                    if (s.edge_count() != g.edge_count() + m - 1 || s.vertex_count() != g.vertex_count() + m - 1)
                        return d = "split", false;
                    if (double_edge(g, e.id, m).edge_count() != g.edge_count() + m) return d = "double", false;
                }
            }
            return true;
        });
    }
    return r.out;
}

std::vector<CheckResult> suite_multipoly() {
    Recorder r("multipoly");
    std::mt19937 rng(1234);
    r.check("ring axioms", [&](std::string&) {
        for (int i = 0; i < 100; ++i) {
            MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
            if (!((a + b) + c == a + (b + c)) || !(a + b == b + a)) return false;
            if (!((a * b) * c == a * (b * c)) || !(a * b == b * a)) return false;
            if (!(a * (b + c) == a * b + a * c) || !(a - a).is_zero()) return false;
        }
        return true;
    });
    r.check("shift round trip", [&](std::string&) {
        for (int i = 0; i < 50; ++i) {
            MPoly a = random_poly(rng);
            VarId v = VarId::from_code(2);
            MPoly up = substitute(a, v, MPoly::var(v) + MPoly(1));
            if (!(substitute(up, v, MPoly::var(v) - MPoly(1)) == a)) return false;
        }
        return true;
    });
    r.check("eval_mod homomorphism", [&](std::string&) {
        const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17};
        for (int i = 0; i < 200; ++i) {
            MPoly a = random_poly(rng), b = random_poly(rng);
            std::uint64_t p = primes[rng() % 7];
            std::map<VarId, std::uint64_t> pt;
            for (std::uint32_t v = 0; v < 4; ++v) pt[VarId::from_code(v)] = rng() % p;
            std::uint64_t ea = eval_mod(a, pt, p), eb = eval_mod(b, pt, p);
            if (eval_mod(a + b, pt, p) != (ea + eb) % p || eval_mod(a * b, pt, p) != ea * eb % p) return false;
        }
        return true;
    });
    return r.out;
}

std::vector<CheckResult> suite_tutte() {
    Recorder r("tutte");
    for (const auto& [name, g] : graph_corpus()) {
        r.check("subset = delcon: " + name, [&g = g](std::string&) {
            MPoly z = z_subset(g);
            return z == z_delcon(g) && z == z_delcon(g, Pivot::LastEdge);
        });
        r.check("delcon every edge: " + name, [&g = g](std::string& d) {
            MPoly z = z_delcon(g);
            for (const auto& e : g.edges())
                if (!(z == z_delcon(delete_edge(g, e.id)) + MPoly::t(e.id) * z_delcon(contract_edge(g, e.id))))
                    return d = "edge " + std::to_string(e.id.value), false;
            return true;
        });
        r.check("torus at q=1: " + name, [&g = g](std::string&) {
            MPoly torus(1);
            for (const auto& e : g.edges()) torus *= MPoly(1) + MPoly::t(e.id);
            return substitute(z_delcon(g), VarId::q(), MPoly(1)) == torus;
        });
        r.check("forest polynomials: " + name, [&g = g](std::string&) {
            return phi(g) == phi_from_z(g) && psi(g) == psi_from_phi(g);
        });
        r.check("leading part: " + name, [&g = g](std::string&) {
            MPoly p = p_leading(g);
            return p == p_forests(g) && p.is_homogeneous() && p.total_degree() == g.vertex_count() &&
                   substitute(q_reduced(g), VarId::q(), MPoly(0)) == phi(g);
        });
        r.check("prime split: " + name, [&g = g](std::string& d) {
            for (const auto& e : g.edges()) {
                if (e.is_loop()) continue;
                PrimeSplit s = z_prime_split(g, e.id);
                MPoly zd = z_delcon(delete_edge(g, e.id)), zc = z_delcon(contract_edge(g, e.id));
                if (!(zd == s.connecting + s.disconnecting) ||
                    !(MPoly::q() * zc == MPoly::q() * s.connecting + s.disconnecting) ||
                    !(a_locus_poly(g, e.id) == zd - MPoly::q() * zc))
                    return d = "edge " + std::to_string(e.id.value), false;
                b_locus_poly(g, e.id);
            }
            return true;
        });
    }
    return r.out;
}

std::vector<CheckResult> suite_oracle(unsigned max_dim) {
    Recorder r("oracle");
    for (const auto& [name, g] : graph_corpus()) {
        unsigned dim = unsigned(g.edge_count() + 1);
        if (dim > max_dim) continue;
        r.check("torus count at F2: " + name, [&g = g, dim](std::string& d) {
            MPoly z = z_delcon(g);
            mpz_class n2 = count_complement(z, dim, 2);
            CountReport rep = interpolate_report([&](std::uint64_t p) -> mpz_class { return count_complement(z, dim, p); }, dim);
            for (const auto& [p, n] : rep.samples)
                if (rep.interpolated.evaluate(mpz_class(static_cast<unsigned long>(p - 1))) != n) return d = "round trip", false;
            if (g.edge_count() > 0 && n2 != 1) return d = "F2 count " + n2.get_str(), false;
            if (g.edge_count() > 0 && rep.interpolated.evaluate(1) != 1) return d = "class at T=1", false;
            for (std::uint64_t p : {2, 3, 5}) {
                mpz_class all;
                mpz_ui_pow_ui(all.get_mpz_t(), p, dim);
                if (count_complement(z, dim, p) + count_zero_locus({z}, dim, p) != all)
                    return d = "complement + zeros", false;
            }
            return true;
        });
        if (g.edge_count() == 0) continue;
        r.check("fixed-q independence: " + name, [&g = g](std::string& d) {
            MPoly z = z_delcon(g);
            unsigned E = unsigned(g.edge_count());
            for (std::uint64_t p : {3, 5, 7}) {
                mpz_class ref = count_fixed_q(z, 2, E, p);
                for (std::uint64_t q0 = 3; q0 < p; ++q0)
                    if (count_fixed_q(z, q0, E, p) != ref) return d = "p=" + std::to_string(p), false;
            }
            return true;
        });
    }
    return r.out;
}

std::vector<CheckResult> suite_grothendieck(unsigned max_dim) {
    Recorder r("grothendieck");
    SplitSeeds poly{polygon_class(0), polygon_class(1), polygon_class(2)};
    r.check("split recursion = polygon closed form", [&](std::string& d) {
        for (unsigned m = 0; m <= 8; ++m)
            if (!(split_recursion(poly, m) == polygon_class(m))) return d = "m=" + std::to_string(m), false;
        return true;
    });
    r.check("split closed form = recursion", [&](std::string& d) {
        for (const SplitSeeds& s : {poly, polygon_cone_seeds()}) {
            SplitClosedForm f = split_closed_form(s);
            for (unsigned m = 0; m <= 12; ++m)
                if (!(f.term(m) == split_recursion(s, m))) return d = "m=" + std::to_string(m), false;
        }
        return true;
    });
    r.check("doubling closed form = banana classes", [&](std::string& d) {
        DoubleSeeds s{banana_class(0), banana_class(1)};
        for (unsigned m = 0; m <= 8; ++m) {
            if (!(double_closed_form(s, m) == banana_class(m)) || !(double_recursion(s, m) == banana_class(m)))
                return d = "m=" + std::to_string(m), false;
        }
        return true;
    });
    r.check("fibration reduction", [&](std::string& d) {
        for (unsigned m = 0; m <= 8; ++m) {
            if (!(fibration_reduce(polygon_class(m), m + 1) == polygon_class_fixed_q(m)))
                return d = "polygon m=" + std::to_string(m), false;
            if (!(fibration_reduce(banana_class(m), m + 1) == banana_class_fixed_q(m)))
                return d = "banana m=" + std::to_string(m), false;
        }
        return true;
    });
    for (const auto& [name, g] : graph_corpus()) {
        if (g.edge_count() == 0 || g.edge_count() + 1 > max_dim) continue;
        r.check("delcon class identity: " + name, [&g = g](std::string& d) {
            for (const auto& e : g.edges())
                if (!delcon_identity_check(g, e.id)) return d = "edge " + std::to_string(e.id.value), false;
            return true;
        });
    }
    return r.out;
}

std::vector<CheckResult> suite_cone(unsigned max_dim) {
    Recorder r("cone");
    r.check("polygon cone closed form = recursion", [](std::string& d) {
        for (unsigned m = 0; m <= 6; ++m)
            if (!(polygon_cone_class(m) == cone_split_recursion_V(polygon_cone_seeds(), m)))
                return d = "m=" + std::to_string(m), false;
        return true;
    });
    r.check("Y closed form = recursion", [](std::string& d) {
        YClosedForm f = cone_y_closed_form(polygon_cone_y_seeds());
        for (unsigned m = 0; m <= 12; ++m)
            if (!(f.term(m) == polygon_cone_y_class(m))) return d = "m=" + std::to_string(m), false;
        return true;
    });
    for (const auto& [name, g] : graph_corpus()) {
        r.check("leading part delcon: " + name, [&g = g](std::string& d) {
            for (const auto& e : g.edges()) {
                if (classify_edge(g, e.id) != EdgeKind::Regular) continue;
                if (!(p_leading(g) == p_leading(delete_edge(g, e.id)) + MPoly::t(e.id) * p_leading(contract_edge(g, e.id))))
                    return d = "edge " + std::to_string(e.id.value), false;
            }
            return true;
        });
        if (g.edge_count() + 1 > max_dim) continue;
        r.check("V = W - Y: " + name, [&g = g](std::string&) { return v_class(g) == w_class(g) - y_class(g); });
    }
    for (const auto& [name, g] : {NamedGraph{"banana2", banana(2)}, NamedGraph{"triangle", polygon(3)},
                                  NamedGraph{"square", polygon(4)}}) {
        if (g.edge_count() + 3 > max_dim) continue;
        r.check("cone splitting: " + name, [&g = g](std::string&) { return cone_split_check(g, EdgeId{1}); });
    }
    return r.out;
}

std::vector<CheckResult> suite_motivic() {
    Recorder r("motivic");
    std::mt19937 rng(99);
    r.check("evaluations are homomorphisms", [&](std::string&) {
        for (int i = 0; i < 100; ++i) {
            ClassPoly a = random_class(rng), b = random_class(rng);
            if (virtual_poincare(a).evaluate(-1) != chi_c_real(a)) return false;
            if (e_polynomial(a).evaluate(1, 1) != chi_complex(a)) return false;
            if (chi_c_real(a * b) != chi_c_real(a) * chi_c_real(b)) return false;
            if (chi_complex(a + b) != chi_complex(a) + chi_complex(b)) return false;
        }
        return true;
    });
    r.check("chain chi_c closed forms", [](std::string& d) {
        for (unsigned m = 0; m <= 4; ++m)
            for (unsigned k = 0; k <= 3; ++k)
                for (unsigned N = 1; N <= 4; ++N) {
                    FamilySpec s{m, k, N};
                    unsigned E = unsigned(s.edge_count());
                    if (chi_c_chain_polygons(s) != chi_c_real_locus(chain_polygon_class_fixed_q(s), E) ||
                        chi_c_chain_bananas(s) != chi_c_real_locus(chain_banana_class_fixed_q(s), E)) {
                        d = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " N=" + std::to_string(N);
                        return false;
                    }
                }
        return true;
    });
    return r.out;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, unsigned max_dim) {
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto& s : kVerifySuites) {
            auto part = run_suite(s, max_dim);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    if (suite == "graphcore") return suite_graphcore();
    if (suite == "multipoly") return suite_multipoly();
    if (suite == "tutte") return suite_tutte();
    if (suite == "oracle") return suite_oracle(max_dim);
    if (suite == "grothendieck") return suite_grothendieck(max_dim);
    if (suite == "cone") return suite_cone(max_dim);
    if (suite == "motivic") return suite_motivic();
    fail(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
}

}  // namespace potts
