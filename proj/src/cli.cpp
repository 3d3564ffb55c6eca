#include "potts/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "potts/errors.hpp"
#include "potts/grothendieck.hpp"
#include "potts/json_io.hpp"
#include "potts/motivic.hpp"
#include "potts/pointcount.hpp"
#include "potts/tangent_cone.hpp"
#include "potts/tutte.hpp"
#include "potts/verify.hpp"

namespace potts::cli {

namespace {

using json = nlohmann::ordered_json;

struct FamilyArgs {
    std::string family;
    std::string file;
    unsigned m = 0, k = 0, N = 1;

    FamilySpec spec() const {
        FamilySpec s{m, k, N};
        s.validate();
        return s;
    }
};

void add_family_flags(CLI::App* app, FamilyArgs& f, bool with_file) {
    auto* fam = app->add_option("--family", f.family, "polygon | banana | chain-polygon | chain-banana")
                    ->check(CLI::IsMember({"polygon", "banana", "chain-polygon", "chain-banana"}));
    app->add_option("--m", f.m, "block parameter: (m+1)-gon or (m+1)-banana");
    app->add_option("--k", f.k, "connector length for chains");
    app->add_option("--N", f.N, "number of chained blocks");
    if (with_file) app->add_option("--file", f.file, "edge-list file")->excludes(fam);
}

MultiGraph family_graph(const FamilyArgs& f) {
    if (f.family == "polygon") return polygon(f.m + 1);
    if (f.family == "banana") return banana(f.m + 1);
    if (f.family == "chain-polygon") return chain_polygons(f.spec());
    if (f.family == "chain-banana") return chain_bananas(f.spec());
    fail(ErrorKind::InvalidArgument, "unknown family '" + f.family + "'");
}

MultiGraph resolve_graph(const FamilyArgs& f) {
    if (!f.file.empty()) {
        std::ifstream in(f.file);
        if (!in) fail(ErrorKind::Parse, "cannot open '" + f.file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_edge_list(buf.str());
    }
    if (f.family.empty()) fail(ErrorKind::InvalidArgument, "one of --family or --file is required");
    return family_graph(f);
}

std::vector<std::uint64_t> parse_primes(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::logic_error&) {
            fail(ErrorKind::Parse, "bad prime '" + tok + "'");
        }
    }
    return out;
}

// "a..b" or "a,b,c".
std::vector<unsigned> parse_grid(const std::string& s) {
    std::vector<unsigned> out;
    auto num = [&](const std::string& t) -> unsigned {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(t, &pos);
            if (pos != t.size() || t.empty() || t[0] == '-') throw std::invalid_argument(t);
            return unsigned(v);
        } catch (const std::logic_error&) {
            fail(ErrorKind::Parse, "bad grid value '" + t + "'");
        }
    };
    if (auto dots = s.find(".."); dots != std::string::npos) {
        unsigned a = num(s.substr(0, dots)), b = num(s.substr(dots + 2));
        if (a > b) fail(ErrorKind::Parse, "empty range '" + s + "'");
        for (unsigned x = a; x <= b; ++x) out.push_back(x);
        return out;
    }
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(num(tok));
    if (out.empty()) fail(ErrorKind::Parse, "empty grid");
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + '"';
}

json class_doc(const ClassPoly& c) { return {{"class_T", class_json(c)}, {"rendering", c.to_string()}}; }

int cmd_z(const FamilyArgs& f, const std::string& which, bool as_json, std::ostream& out) {
    MultiGraph g = resolve_graph(f);
    MPoly p;
    if (which == "z")
        p = z_delcon(g);
    else if (which == "z_tilde")
        p = z_tilde(g);
    else if (which == "phi")
        p = phi(g);
    else if (which == "psi")
        p = psi(g);
    else if (which == "p_leading")
        p = p_leading(g);
    else
        p = q_reduced(g);
    if (as_json)
        out << json{{"which", which}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()},
                    {"polynomial", p.to_string()}}.dump()
            << '\n';
    else
        out << p.to_string() << '\n';
    return kOk;
}

int cmd_class(const FamilyArgs& f, bool fixed_q, bool oracle, std::ostream& out) {
    if (f.family.empty()) fail(ErrorKind::InvalidArgument, "--family is required");
    FamilySpec s = f.spec();
    unsigned E = unsigned(f.family.rfind("chain", 0) == 0 ? s.edge_count() : f.m + 1);
    ClassPoly c;
    if (f.family == "polygon")
        c = fixed_q ? polygon_class_fixed_q(f.m) : polygon_class(f.m);
    else if (f.family == "banana")
        c = fixed_q ? banana_class_fixed_q(f.m) : banana_class(f.m);
    else {
        ClassPoly cq = f.family == "chain-polygon" ? chain_polygon_class_fixed_q(s) : chain_banana_class_fixed_q(s);
        c = fixed_q ? cq : fibration_lift(cq, E);
    }
    json j = {{"family", f.family}, {"m", f.m}, {"k", f.k}, {"N", f.N}, {"edges", E}, {"fixed_q", fixed_q}};
    j.update(class_doc(c));
    int code = kOk;
    if (oracle) {
        MPoly z = z_delcon(family_graph(f));
        ClassPoly o = fixed_q ? fixed_q_complement_class(z, E) : complement_class(z, E + 1);
        json oj = class_doc(o);
        oj["agree"] = o == c;
        j["oracle"] = oj;
        if (!(o == c)) code = kVerifyFailed;
    }
    out << j.dump() << '\n';
    return code;
}

int cmd_cone(const FamilyArgs& f, bool oracle, std::ostream& out) {
    if (f.family != "polygon" && f.family != "banana")
        fail(ErrorKind::InvalidArgument, "cone classes are available for --family polygon or banana");
    bool poly = f.family == "polygon";
    ClassPoly v = poly ? polygon_cone_class(f.m) : banana_cone_class(f.m);
    ClassPoly y = poly ? polygon_cone_y_class(f.m) : banana_cone_y_class(f.m);
    json j = {{"family", f.family}, {"m", f.m}, {"edges", f.m + 1}};
    j["V"] = class_doc(v);
    j["W"] = class_doc(v + y);
    j["Y"] = class_doc(y);
    int code = kOk;
    if (oracle) {
        MultiGraph g = family_graph(f);
        ClassPoly ov = v_class(g), oy = y_class(g), ow = w_class(g);
        bool agree = ov == v && oy == y && ow == v + y;
        j["oracle"] = {{"V", class_json(ov)}, {"W", class_json(ow)}, {"Y", class_json(oy)}, {"agree", agree}};
        if (!agree) code = kVerifyFailed;
    }
    out << j.dump() << '\n';
    return code;
}

int cmd_chi(const FamilyArgs& f, const std::string& ms, const std::string& ks, const std::string& ns,
            const std::string& format, std::ostream& out) {
    bool polys;
    if (f.family == "chain-polygon" || f.family == "polygon")
        polys = true;
    else if (f.family == "chain-banana" || f.family == "banana")
        polys = false;
    else
        fail(ErrorKind::InvalidArgument, "--family is required");
    bool single = f.family == "polygon" || f.family == "banana";
    auto mv = ms.empty() ? std::vector<unsigned>{f.m} : parse_grid(ms);
    auto kv = single ? std::vector<unsigned>{0} : ks.empty() ? std::vector<unsigned>{f.k} : parse_grid(ks);
    auto nv = single ? std::vector<unsigned>{1} : ns.empty() ? std::vector<unsigned>{f.N} : parse_grid(ns);
    json rows = json::array();
    bool all = true;
    if (format == "csv") out << "m,k,N,#E,class_at_T=-2,chi_c_locus,closed_form,agree\n";
    for (unsigned m : mv)
        for (unsigned k : kv)
            for (unsigned N : nv) {
                FamilySpec s{m, k, N};
                s.validate();
                unsigned E = unsigned(s.edge_count());
                ClassPoly c = polys ? chain_polygon_class_fixed_q(s) : chain_banana_class_fixed_q(s);
                mpz_class at = chi_c_real(c), locus = chi_c_real_locus(c, E);
                mpz_class closed = polys ? chi_c_chain_polygons(s) : chi_c_chain_bananas(s);
                bool agree = locus == closed;
                all = all && agree;
                if (format == "csv") {
                    out << m << ',' << k << ',' << N << ',' << E << ',' << csv_field(at.get_str()) << ','
                        << csv_field(locus.get_str()) << ',' << csv_field(closed.get_str()) << ','
                        << (agree ? "true" : "false") << '\n';
                } else {
                    rows.push_back({{"m", m}, {"k", k}, {"N", N}, {"#E", E}, {"class_at_T=-2", mpz_json(at)},
                                    {"chi_c_locus", mpz_json(locus)}, {"closed_form", mpz_json(closed)},
                                    {"agree", agree}});
                }
            }
    if (format != "csv") out << json{{"family", f.family}, {"rows", rows}}.dump() << '\n';
    return all ? kOk : kVerifyFailed;
}

int cmd_count(const FamilyArgs& f, const std::string& primes, std::optional<std::uint64_t> check,
              std::optional<std::uint64_t> q0, const std::string& locus, std::ostream& out) {
    MultiGraph g = resolve_graph(f);
    unsigned E = unsigned(g.edge_count());
    MPoly p;
    unsigned dim = E + 1;
    if (locus == "z")
        p = z_delcon(g);
    else if (locus == "v")
        p = p_leading(g);
    else if (locus == "w")
        p = q_reduced(g);
    else {
        p = phi(g);
        dim = E;
    }
    Counter counter = [&](std::uint64_t pr) -> mpz_class { return count_complement(p, dim, pr); };
    std::uint64_t min_prime = 2;
    if (q0) {
        if (locus != "z") fail(ErrorKind::InvalidArgument, "--fixed-q applies to --locus z only");
        dim = E;
        min_prime = std::max<std::uint64_t>(3, *q0 + 1);
        counter = [&](std::uint64_t pr) -> mpz_class {
            if (*q0 % pr < 2) fail(ErrorKind::InvalidArgument, "q0 must not reduce to 0 or 1 mod " + std::to_string(pr));
            return count_fixed_q(p, *q0, dim, pr);
        };
    }
    CountReport r = interpolate_report(counter, dim, parse_primes(primes), check, min_prime);
    out << r.to_json() << '\n';
    return kOk;
}

int cmd_verify(const std::string& suite, unsigned max_dim, std::ostream& out) {
    auto results = run_suite(suite, max_dim);
    json checks = json::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
        failed += !r.passed;
        checks.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << json{{"suite", suite}, {"passed", results.size() - failed}, {"failed", failed}, {"checks", checks}}.dump(2)
        << '\n';
    return failed ? kVerifyFailed : kOk;
}

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::ResourceLimit: return kBudget;
    case ErrorKind::NotPolynomialCount: return kOracle;
    case ErrorKind::ExactDivisionFailure: return kVerifyFailed;
    default: return kUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Potts partition polynomials and their Grothendieck classes", "potts"};
    app.require_subcommand(1);

    FamilyArgs fam;
    std::string which = "z", format = "json", primes, locus = "z", suite = "all", ms, ks, ns;
    bool fixed_q = false, variable_q = false, oracle = false, text = false;
    std::optional<std::uint64_t> check, q0;
    unsigned max_dim = 5;

    auto* z = app.add_subcommand("z", "print a graph polynomial");
    add_family_flags(z, fam, true);
    z->add_option("--which", which, "z | z_tilde | phi | psi | p_leading | q_reduced")
        ->check(CLI::IsMember({"z", "z_tilde", "phi", "psi", "p_leading", "q_reduced"}));
    z->add_flag("--json", text, "emit JSON instead of plain text");

    auto* cls = app.add_subcommand("class", "hypersurface-complement class of a family member");
    add_family_flags(cls, fam, false);
    auto* fq = cls->add_flag("--fixed-q", fixed_q, "class of the slice at fixed q not 0, 1");
    cls->add_flag("--variable-q", variable_q, "class in the full space (default)")->excludes(fq);
    cls->add_flag("--oracle", oracle, "confirm by point counting");

    auto* cone = app.add_subcommand("cone", "tangent-cone classes V, W, Y of a family member");
    add_family_flags(cone, fam, false);
    cone->add_flag("--oracle", oracle, "confirm by point counting");

    auto* chi = app.add_subcommand("chi", "Euler characteristics of chain families");
    add_family_flags(chi, fam, false);
    chi->add_option("--m-grid", ms, "values of m, 'a..b' or 'a,b,c'");
    chi->add_option("--k-grid", ks, "values of k");
    chi->add_option("--N-grid", ns, "values of N");
    chi->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* cnt = app.add_subcommand("count", "point-count a locus and interpolate its class");
    add_family_flags(cnt, fam, true);
    cnt->add_option("--primes", primes, "comma-separated sample primes");
    cnt->add_option("--check", check, "extra prime for the consistency check");
    cnt->add_option("--fixed-q", q0, "count the slice q = q0");
    cnt->add_option("--locus", locus, "z | v | w | y")->check(CLI::IsMember({"z", "v", "w", "y"}));

    auto* ver = app.add_subcommand("verify", "run invariant suites");
    std::vector<std::string> suites = kVerifySuites;
    suites.push_back("all");
    ver->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(suites));
    ver->add_option("--max-dim", max_dim, "largest ambient dimension for oracle checks");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (z->parsed()) return cmd_z(fam, which, text, out);
        if (cls->parsed()) return cmd_class(fam, fixed_q, oracle, out);
        if (cone->parsed()) return cmd_cone(fam, oracle, out);
        if (chi->parsed()) return cmd_chi(fam, ms, ks, ns, format, out);
        if (cnt->parsed()) return cmd_count(fam, primes, check, q0, locus, out);
        if (ver->parsed()) return cmd_verify(suite, max_dim, out);
    } catch (const PottsError& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace potts::cli
