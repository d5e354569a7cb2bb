#include "schur/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "schur/algebra_io.hpp"
#include "schur/bounds.hpp"
#include "schur/catalog.hpp"
#include "schur/constructions.hpp"
#include "schur/homology.hpp"
#include "schur/relative.hpp"

namespace schur {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

LieAlgebra load_algebra(const std::string& src) {
    const std::string prefix = "catalog:";
    if (src.rfind(prefix, 0) == 0) return catalog_algebra(src.substr(prefix.size()));
    return parse_algebra_file(read_file(src));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        parts.push_back(s.substr(pos, next == std::string::npos ? s.size() - pos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

// SPEC syntax: "" (zero subspace), "e0,e2" (coordinate span), or
// comma-separated vectors of semicolon-separated rationals ("1;0;0,0;1;-1/2").
Subspace parse_subspace_spec(const std::string& spec, int ambient) {
    if (spec.empty()) return Subspace::zero(ambient);
    std::vector<std::string> parts = split(spec, ',');
    bool coords = true;
    for (const auto& p : parts)
        if (p.size() < 2 || p[0] != 'e' ||
            p.find_first_not_of("0123456789", 1) != std::string::npos) {
            coords = false;
            break;
        }
    if (coords) {
        std::vector<int> idx;
        for (const auto& p : parts) {
            int i = std::stoi(p.substr(1));
            if (i >= ambient)
                throw parse_error("subspace: coordinate " + p + " out of range for dim " +
                                  std::to_string(ambient));
            idx.push_back(i);
        }
        return Subspace::coordinate_span(ambient, idx);
    }
    Matrix rows(int(parts.size()), ambient);
    for (size_t r = 0; r < parts.size(); ++r) {
        std::vector<std::string> entries = split(parts[r], ';');
        if (int(entries.size()) != ambient)
            throw parse_error("subspace: vector '" + parts[r] + "' needs " +
                              std::to_string(ambient) + " coordinates");
        for (int c = 0; c < ambient; ++c) {
            auto v = Rational::parse(entries[c]);
            if (!v) throw parse_error("subspace: bad coordinate '" + entries[c] + "'");
            rows.at(int(r), c) = *v;
        }
    }
    return Subspace::from_rows(rows);
}

int cmd_validate(const std::string& file, std::ostream& out) {
    LieAlgebra L = parse_algebra_file_raw(read_file(file));
    ValidationReport rep = validate(L);
    if (rep.ok) {
        out << "ok\n";
        return 0;
    }
    for (const auto& v : rep.violations) out << v << "\n";
    return 1;
}

int cmd_multiplier(const std::string& src, std::ostream& out) {
    out << multiplier_dim(load_algebra(src)) << "\n";
    return 0;
}

int cmd_bounds(const std::string& src, const std::string& format, std::ostream& out) {
    LieAlgebra L = load_algebra(src);
    BoundReport r = bound_report(L);
    bool ok = true;
    for (const auto& e : r.entries)
        if (e.asserted && !e.holds) ok = false;

    if (format == "json") {
        ordered_json doc;
        doc["name"] = L.name();
        doc["profile"] = {{"n", r.profile.n},
                          {"m", r.profile.m},
                          {"d", r.profile.d},
                          {"class", r.profile.cls},
                          {"gens", r.profile.gens}};
        doc["multiplier"] = r.multiplier;
        ordered_json arr = ordered_json::array();
        for (const auto& e : r.entries) {
            ordered_json b;
            b["name"] = e.name;
            if (e.value)
                b["value"] = *e.value;
            else
                b["value"] = nullptr;
            b["asserted"] = e.asserted;
            b["holds"] = e.holds;
            arr.push_back(std::move(b));
        }
        doc["bounds"] = std::move(arr);
        out << doc.dump(2) << "\n";
    } else {
        out << "algebra: " << L.name() << "\n";
        out << "profile: n=" << r.profile.n << " m=" << r.profile.m << " d=" << r.profile.d
            << " class=" << r.profile.cls << " gens=" << r.profile.gens << "\n";
        out << "multiplier: " << r.multiplier << "\n";
        for (const auto& e : r.entries) {
            out << e.name << ": ";
            if (!e.value) {
                out << "n/a\n";
                continue;
            }
            out << *e.value;
            if (e.asserted)
                out << (e.holds ? " (asserted, holds)" : " (asserted, VIOLATED)");
            else
                out << " (reported only)";
            out << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_pair(const std::string& src, const std::string& ideal_spec,
             const std::optional<std::string>& comp_spec,
             const std::optional<std::string>& k_spec, std::ostream& out) {
    LieAlgebra L = load_algebra(src);
    Subspace N = parse_subspace_spec(ideal_spec, L.dim());
    std::optional<Subspace> J;
    if (comp_spec) J = parse_subspace_spec(*comp_spec, L.dim());
    PairContext ctx = make_pair_context(L, N, std::move(J));
    out << "algebra: " << L.name() << "\n";
    out << "ideal dim: " << N.dim() << "\n";
    out << "u: " << ctx.u << "\n";
    out << "bracket dim: " << ctx.bracketLN.dim() << "\n";
    if (!ctx.complement) return 0;

    PairBoundsCheck c = check_pair_bounds(ctx);
    out << "pair multiplier: " << pair_multiplier_dim(ctx) << "\n";
    out << "pair exterior: " << c.exterior << "\n";
    out << "s: " << c.s << "\n";
    out << "t: " << c.t << "\n";
    out << "lower: " << c.lower << "\n";
    out << "upper (n = dim N): " << c.upper_dim_n << "\n";
    out << "upper (n = dim L): " << c.upper_dim_l << "\n";
    bool sandwich = c.lower_ok && c.upper_ok;
    out << "sandwich: " << (sandwich ? "holds" : "VIOLATED") << "\n";
    int rc = sandwich ? 0 : 1;

    if (k_spec) {
        Subspace K = parse_subspace_spec(*k_spec, L.dim());
        InequalityCheck ic = complement_central_check(ctx, K);
        out << "k-check lhs: " << ic.lhs << "\n";
        out << "k-check rhs: " << ic.rhs << "\n";
        out << "k-check: " << (ic.holds ? (ic.equality ? "holds (equality)" : "holds")
                                        : "VIOLATED")
            << "\n";
        if (!ic.holds) rc = 1;
    }
    return rc;
}

int cmd_triple(const std::string& src, const std::string& i_spec, const std::string& j_spec,
               const std::optional<std::string>& k_spec, std::ostream& out) {
    LieAlgebra L = load_algebra(src);
    Subspace I = parse_subspace_spec(i_spec, L.dim());
    Subspace J = parse_subspace_spec(j_spec, L.dim());
    std::optional<Subspace> K;
    if (k_spec) K = parse_subspace_spec(*k_spec, L.dim());
    TripleContext ctx = make_triple_context(L, I, J, std::move(K));
    out << "algebra: " << L.name() << "\n";
    out << "triple multiplier: " << triple_multiplier_dim(ctx) << "\n";
    if (!ctx.K) return 0;

    InequalityCheck ic = triple_inequality_check(ctx);
    out << "inequality lhs: " << ic.lhs << "\n";
    out << "inequality rhs: " << ic.rhs << "\n";
    out << "inequality: " << (ic.holds ? (ic.equality ? "holds (equality)" : "holds")
                                       : "VIOLATED")
        << "\n";
    return ic.holds ? 0 : 1;
}

int cmd_central(const std::string& src, const std::string& z_spec, std::ostream& out) {
    LieAlgebra L = load_algebra(src);
    Subspace Z = parse_subspace_spec(z_spec, L.dim());
    CentralQuotientCheck c = central_quotient_check(L, Z);
    EpicentralCheck e = epicentral_consistency(L, Z);
    out << "algebra: " << L.name() << "\n";
    out << "z dim: " << Z.dim() << "\n";
    out << "quotient multiplier: " << c.quotient_multiplier << "\n";
    out << "middle (M(L) + dim(L^2 cap Z)): " << c.middle << "\n";
    out << "upper (M(L/Z) + dim Z * gens): " << c.upper << "\n";
    out << "left inequality: " << (c.left_ok ? "holds" : "VIOLATED") << "\n";
    out << "right inequality: " << (c.right_ok ? "holds" : "VIOLATED") << "\n";
    out << "epicentral hypothesis consistent: " << (e.consistent ? "yes" : "no") << "\n";
    return c.left_ok && c.right_ok ? 0 : 1;
}

int cmd_construct(const std::string& kind, int a, const std::optional<int>& b,
                  const std::string& outfile, std::ostream& out) {
    LieAlgebra L = [&] {
        if (kind == "abelian") {
            if (b) throw parse_error("construct abelian takes one argument");
            return abelian(a);
        }
        if (kind == "heisenberg") {
            if (b) throw parse_error("construct heisenberg takes one argument");
            return heisenberg(a);
        }
        if (!b) throw parse_error("construct free-nilpotent needs two arguments");
        return free_nilpotent(a, *b);
    }();
    std::string text = write_algebra_file(L);
    if (outfile.empty()) {
        out << text;
    } else {
        std::ofstream f(outfile);
        if (!f) throw parse_error("cannot write '" + outfile + "'");
        f << text;
    }
    return 0;
}

int cmd_witt(int n, int d, std::ostream& out) {
    out << witt_dim(n, d) << "\n";
    return 0;
}

int cmd_region(int n_max, bool csv, std::ostream& out) {
    bool all_ok = true;
    if (csv)
        out << "n,m,d,nice,salemkar,region_flag,dominance\n";
    else
        out << std::setw(4) << "n" << std::setw(4) << "m" << std::setw(4) << "d" << std::setw(7)
            << "nice" << std::setw(10) << "salemkar" << std::setw(8) << "region" << std::setw(11)
            << "dominance" << "\n";
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m < n; ++m)
            for (int d = 1; d <= n; ++d) {
                long nice = nice_bound(n, m);
                std::optional<long> sal;
                if (n - d - 1 >= 0) sal = salemkar_bound(n, m, d);
                bool region = theorem1_region(n, m, d);
                std::optional<bool> dom;
                if (sal) dom = nice <= *sal;
                if (region && !(dom && *dom)) all_ok = false;
                std::string sal_s = sal ? std::to_string(*sal) : "n/a";
                std::string dom_s = dom ? (*dom ? "1" : "0") : "n/a";
                if (csv)
                    out << n << "," << m << "," << d << "," << nice << "," << sal_s << ","
                        << (region ? 1 : 0) << "," << dom_s << "\n";
                else
                    out << std::setw(4) << n << std::setw(4) << m << std::setw(4) << d
                        << std::setw(7) << nice << std::setw(10) << sal_s << std::setw(8)
                        << (region ? 1 : 0) << std::setw(11) << dom_s << "\n";
            }
    return all_ok ? 0 : 1;
}

int cmd_catalog_list(std::ostream& out) {
    size_t width = 0;
    for (const auto& e : catalog_entries()) width = std::max(width, e.name.size());
    for (const auto& e : catalog_entries())
        out << e.name << std::string(width + 2 - e.name.size(), ' ') << e.recipe << "\n";
    return 0;
}

struct EntryResult {
    bool ok = true;
    std::vector<std::string> problems;
};

EntryResult check_entry(const CatalogEntry& e) {
    EntryResult r;
    auto fail = [&](const std::string& msg) {
        r.ok = false;
        r.problems.push_back(msg);
    };

    LieAlgebra L = build_recipe(e.recipe);
    L.set_name(e.name);
    if (!validate(L).ok) {
        fail("validation failed");
        return r;
    }
    StructuralProfile p = structural_profile(L);
    long mult = multiplier_dim(L);
    auto expect = [&](const std::string& key, long actual) {
        auto it = e.expected.find(key);
        if (it != e.expected.end() && it->second != actual)
            fail(key + " = " + std::to_string(actual) + ", expected " +
                 std::to_string(it->second));
    };
    expect("multiplier", mult);
    expect("n", p.n);
    expect("m", p.m);
    expect("d", p.d);
    expect("class", p.cls);
    expect("gens", p.gens);

    for (const auto& be : bound_report(L).entries)
        if (be.asserted && !be.holds) fail("bound " + be.name + " violated");

    if (!(boundary_d2(L) * boundary_d3(L)).is_zero()) fail("d2*d3 != 0");

    if (!(parse_algebra_file(write_algebra_file(L)) == L)) fail("io round-trip mismatch");

    CentralQuotientCheck cq = central_quotient_check(L, center(L));
    if (!cq.left_ok || !cq.right_ok) fail("central quotient inequality violated");

    std::vector<LieAlgebra> parts = recipe_components(e.recipe);
    if (parts.size() == 2) {
        std::vector<int> ci, cj;
        for (int i = 0; i < parts[0].dim(); ++i) ci.push_back(i);
        for (int i = parts[0].dim(); i < L.dim(); ++i) cj.push_back(i);
        Subspace I = Subspace::coordinate_span(L.dim(), ci);
        Subspace J = Subspace::coordinate_span(L.dim(), cj);
        if (!(subalgebra(L, I) == parts[0]) || !(subalgebra(L, J) == parts[1]))
            fail("block extraction mismatch");

        StructuralProfile pi = structural_profile(parts[0]);
        StructuralProfile pj = structural_profile(parts[1]);
        long cross = long(pi.gens) * pj.gens;
        if (mult != multiplier_dim(parts[0]) + multiplier_dim(parts[1]) + cross)
            fail("Kunneth additivity violated");

        PairContext ctx = make_pair_context(L, J, I);
        PairBoundsCheck pb = check_pair_bounds(ctx);
        if (!pb.lower_ok || !pb.upper_ok) fail("pair sandwich violated");

        TripleContext tc = make_triple_context(L, I, J, Subspace::zero(L.dim()));
        if (triple_multiplier_dim(tc) != cross) fail("triple identity violated");
        InequalityCheck ic = triple_inequality_check(tc);
        if (!ic.holds || !ic.equality) fail("triple check with K = 0 is not an equality");
    }
    return r;
}

int cmd_catalog_check(std::ostream& out) {
    const auto& entries = catalog_entries();
    std::vector<EntryResult> results(entries.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < int(entries.size()); ++i) {
        try {
            results[i] = check_entry(entries[i]);
        } catch (const std::exception& ex) {
            results[i].ok = false;
            results[i].problems = {std::string("exception: ") + ex.what()};
        }
    }
    bool all = true;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (results[i].ok) {
            out << entries[i].name << ": ok\n";
        } else {
            all = false;
            out << entries[i].name << ": FAIL";
            for (const auto& pr : results[i].problems) out << " [" << pr << "]";
            out << "\n";
        }
    }
    out << (all ? "all entries ok\n" : "catalog check failed\n");
    return all ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Schur multiplier computations for nilpotent Lie algebras"};
    app.name("schur");
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    int exit_code = 0;

    std::string v_file;
    auto* c_validate =
        app.add_subcommand("validate", "Check a structure-constant file for the Lie axioms");
    c_validate->add_option("file", v_file, "algebra file")->required();
    c_validate->callback([&] { exit_code = cmd_validate(v_file, out); });

    std::string m_src;
    auto* c_mult = app.add_subcommand("multiplier", "Multiplier dimension of an algebra");
    c_mult->add_option("src", m_src, "algebra file or catalog:NAME")->required();
    c_mult->callback([&] { exit_code = cmd_multiplier(m_src, out); });

    std::string b_src, b_format = "table";
    auto* c_bounds = app.add_subcommand("bounds", "Bound report for a nilpotent algebra");
    c_bounds->add_option("src", b_src, "algebra file or catalog:NAME")->required();
    c_bounds->add_option("--format", b_format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    c_bounds->callback([&] { exit_code = cmd_bounds(b_src, b_format, out); });

    std::string p_src, p_ideal, p_comp, p_k;
    auto* c_pair = app.add_subcommand("pair", "Pair multiplier and Ganea-type bounds");
    c_pair->add_option("src", p_src, "algebra file or catalog:NAME")->required();
    c_pair->add_option("--ideal", p_ideal, "ideal N (subspace spec)")->required();
    auto* p_comp_opt = c_pair->add_option("--complement", p_comp, "complement ideal");
    auto* p_k_opt = c_pair->add_option("--k", p_k, "central K inside N");
    c_pair->callback([&] {
        exit_code = cmd_pair(
            p_src, p_ideal,
            p_comp_opt->count() ? std::optional<std::string>(p_comp) : std::nullopt,
            p_k_opt->count() ? std::optional<std::string>(p_k) : std::nullopt, out);
    });

    std::string t_src, t_i, t_j, t_k;
    auto* c_triple = app.add_subcommand("triple", "Triple multiplier for L = I + J");
    c_triple->add_option("src", t_src, "algebra file or catalog:NAME")->required();
    c_triple->add_option("--i", t_i, "ideal I (subspace spec)")->required();
    c_triple->add_option("--j", t_j, "ideal J (subspace spec)")->required();
    auto* t_k_opt = c_triple->add_option("--k", t_k, "central K inside J");
    c_triple->callback([&] {
        exit_code =
            cmd_triple(t_src, t_i, t_j,
                       t_k_opt->count() ? std::optional<std::string>(t_k) : std::nullopt, out);
    });

    std::string z_src, z_spec;
    auto* c_central =
        app.add_subcommand("central-check", "Central quotient double inequality");
    c_central->add_option("src", z_src, "algebra file or catalog:NAME")->required();
    c_central->add_option("--z", z_spec, "central subspace Z")->required();
    c_central->callback([&] { exit_code = cmd_central(z_src, z_spec, out); });

    int w_n = 0, w_d = 0;
    auto* c_witt = app.add_subcommand("witt", "Witt formula value l_n(d)");
    c_witt->add_option("n", w_n, "generator count")->required();
    c_witt->add_option("d", w_d, "degree")->required();
    c_witt->callback([&] { exit_code = cmd_witt(w_n, w_d, out); });

    std::string k_kind, k_out;
    int k_a = 0, k_b = 0;
    auto* c_construct = app.add_subcommand("construct", "Build a named algebra");
    c_construct->add_option("kind", k_kind, "abelian | heisenberg | free-nilpotent")
        ->required()
        ->check(CLI::IsMember({"abelian", "heisenberg", "free-nilpotent"}));
    c_construct->add_option("a", k_a, "first parameter")->required();
    auto* k_b_opt = c_construct->add_option("b", k_b, "second parameter (free-nilpotent)");
    c_construct->add_option("-o,--output", k_out, "write to file instead of stdout");
    c_construct->callback([&] {
        exit_code = cmd_construct(k_kind, k_a,
                                  k_b_opt->count() ? std::optional<int>(k_b) : std::nullopt,
                                  k_out, out);
    });

    int r_n_max = 0;
    bool r_csv = false;
    auto* c_region = app.add_subcommand("region", "Nice/salemkar dominance table");
    c_region->add_option("--n-max", r_n_max, "largest dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    c_region->add_flag("--csv", r_csv, "CSV output");
    c_region->callback([&] { exit_code = cmd_region(r_n_max, r_csv, out); });

    auto* c_catalog = app.add_subcommand("catalog", "Built-in algebra corpus");
    c_catalog->require_subcommand(1);
    auto* c_list = c_catalog->add_subcommand("list", "List entries");
    c_list->callback([&] { exit_code = cmd_catalog_list(out); });
    auto* c_check = c_catalog->add_subcommand("check", "Re-derive and verify every entry");
    c_check->callback([&] { exit_code = cmd_catalog_check(out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace schur
