#include "stieltjes2d/cli.hpp"

#include "stieltjes2d/bounds.hpp"
#include "stieltjes2d/cubature.hpp"
#include "stieltjes2d/functionals.hpp"
#include "stieltjes2d/grid_file.hpp"
#include "stieltjes2d/gruss.hpp"
#include "stieltjes2d/registry.hpp"
#include "stieltjes2d/report.hpp"
#include "stieltjes2d/rs_integral.hpp"
#include "stieltjes2d/taylor.hpp"
#include "stieltjes2d/variation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace stieltjes2d {

namespace {

Surface resolve_surface(const std::string& spec) {
    try {
        return registry_lookup(spec);
    } catch (const std::invalid_argument&) {
        if (spec.rfind("reg:", 0) == 0) throw;
    }
    return load_grid(spec);
}

struct Cli {
    std::string subcommand;
    std::vector<double> rect;
    std::string f_name, u_name, g_name;
    std::string rule = "riemann", bound_kind, format = "kv", out_path;
    double x = 0, y = 0, tol = 1e-6;
    bool has_x = false, has_y = false;
    std::size_t n = 64;
    bool has_n = false;
    int levels = 6;
    // certificate flags
    std::optional<double> V, H1, H2, beta1, beta2, L1, L2, m, M;
};

Rect rect_of(const Cli& c) { return Rect{c.rect[0], c.rect[1], c.rect[2], c.rect[3]}; }

double riemann_oracle(const Surface& f, const Rect& q, double tol, OracleReport* rep_out) {
    const OracleReport rep = rs_oracle(f, registry_lookup("prod_ts"), q, tol);
    if (rep_out) *rep_out = rep;
    return rep.value;
}

std::string echo_of(const std::vector<std::string>& args) {
    std::string s = "stieltjes2d";
    for (const auto& a : args) {
        s += ' ';
        s += a;
    }
    return s;
}

void emit(const Report& report, const Cli& cli, std::ostream& out) {
    std::ostringstream buf;
    if (cli.format == "csv")
        report.write_csv(buf);
    else
        report.write_kv(buf);
    out << buf.str();
    if (!cli.out_path.empty()) {
        std::ofstream file(cli.out_path);
        file << buf.str();
    }
}

int cmd_integrate(const Cli& cli, Report& report) {
    const Rect q = rect_of(cli);
    const Surface f = resolve_surface(cli.f_name);
    const std::string integrator = !cli.g_name.empty() ? cli.g_name : cli.u_name;

    if (cli.rule == "ostrowski") {
        report.put("value", ostrowski_point_rule(f, q, cli.x, cli.y));
    } else if (cli.rule == "trapezoid4") {
        report.put("value", 0.25 * q.area() * delta11(f, SubRect{q}));
    } else if (cli.rule == "midpoint") {
        const Surface g = resolve_surface(integrator);
        const MidpointResult r = rs_midpoint_rule(f, g, q, cli.tol);
        report.put("value", r.value);
        report.put("node_x", r.t);
        report.put("node_y", r.s);
    } else if (cli.rule == "rs-trapezoid") {
        const Surface g = resolve_surface(integrator);
        report.put("value", rs_trapezoid_rule(f, g, q, cli.tol));
    } else if (cli.rule == "simpson9") {
        report.put("value", simpson_rule(f, q));
    } else if (cli.rule == "companion4") {
        report.put("value", companion_rule(f, q, cli.x, cli.y));
    } else if (cli.rule == "riemann") {
        const auto p = GridPartition::uniform_midpoint(q, cli.n, cli.n);
        report.put("value", composite_riemann(f, p));
        report.put("cells", static_cast<long long>(cli.n * cli.n));
    } else if (cli.rule == "rs-composite") {
        const Surface g = resolve_surface(integrator);
        const auto p = GridPartition::uniform_midpoint(q, cli.n, cli.n);
        report.put("value", composite_rs(f, g, p, cli.tol));
        report.put("cells", static_cast<long long>(cli.n * cli.n));
    } else if (cli.rule == "mercer") {
        const Surface g = resolve_surface(integrator);
        const MercerBracketResult r = mercer_bracket(f, g, q, cli.tol);
        report.put("lower", r.lower);
        report.put("upper", r.upper);
        report.put("node_x", r.t);
        report.put("node_y", r.s);
    } else if (cli.rule == "trapfunc") {
        const Surface u = resolve_surface(integrator);
        report.put("value", trapezoid_functional(f, u, q, cli.tol));
    } else {
        throw CLI::ValidationError("--rule", "unknown rule '" + cli.rule + "'");
    }
    return 0;
}

double require(const std::optional<double>& v, const char* flag) {
    if (!v) throw CLI::ValidationError(flag, "required by this bound kind");
    return *v;
}

int cmd_certify(const Cli& cli, Report& report) {
    const Rect q = rect_of(cli);
    const Surface f = resolve_surface(cli.f_name);
    const std::string& kind = cli.bound_kind;

    const auto holder_cert = [&] {
        return Holder{require(cli.H1, "--H1"), require(cli.H2, "--H2"),
                      cli.beta1.value_or(1.0), cli.beta2.value_or(1.0)};
    };

    double estimate = 0, bound = 0;
    OracleReport oracle;
    bool two_sided = false;
    double lower = 0, upper = 0;
    std::string rule_id = cli.rule;

    if (kind == "ostrowski-bv") {
        estimate = ostrowski_point_rule(f, q, cli.x, cli.y);
        riemann_oracle(f, q, cli.tol, &oracle);
        bound = bound_ostrowski(q, cli.x, cli.y, BoundedBivariation{require(cli.V, "--V")});
    } else if (kind == "trapezoid-bv") {
        estimate = 0.25 * q.area() * delta11(f, SubRect{q});
        riemann_oracle(f, q, cli.tol, &oracle);
        bound = bound_trapezoid(q, BoundedBivariation{require(cli.V, "--V")});
    } else if (kind == "simpson-bv") {
        estimate = simpson_rule(f, q);
        riemann_oracle(f, q, cli.tol, &oracle);
        bound = bound_simpson(q, BoundedBivariation{require(cli.V, "--V")});
        // The printed combination maps constants to (4/9) area, not area.
        report.put("constant_moment", 4.0 / 9.0 * q.area());
    } else if (kind == "companion-bv") {
        estimate = companion_rule(f, q, cli.x, cli.y);
        riemann_oracle(f, q, cli.tol, &oracle);
        bound = bound_companion(q, cli.x, cli.y, BoundedBivariation{require(cli.V, "--V")});
    } else if (kind == "ostrowski-holder-u") {
        const Surface u = resolve_surface(cli.u_name);
        estimate = delta11(u, SubRect{q}) * f(cli.x, cli.y);
        oracle = rs_oracle(f, u, q, cli.tol);
        bound = bound_ostrowski_holder(q, cli.x, cli.y, holder_cert(),
                                       BoundedBivariation{require(cli.V, "--V")});
    } else if (kind == "omega-range") {
        const Surface u = resolve_surface(cli.u_name);
        estimate = 0.5 * (require(cli.m, "--m") + require(cli.M, "--M")) *
                   delta11(u, SubRect{q});
        oracle = rs_oracle(f, u, q, cli.tol);
        bound = bound_omega(BoundedBivariation{require(cli.V, "--V")},
                            Range{*cli.m, *cli.M});
    } else if (kind == "theta-quadrant") {
        const Surface u = resolve_surface(cli.u_name);
        estimate = delta11(u, SubRect{q}) * f(cli.x, cli.y);
        oracle = rs_oracle(f, u, q, cli.tol);
        std::array<double, 4> quad{};
        const auto pieces = rect_split(q, cli.x, cli.y);
        for (int k = 0; k < 4; ++k) {
            if (pieces[k].degenerate()) continue;
            const Rect sr{pieces[k].a, pieces[k].b, pieces[k].c, pieces[k].d};
            quad[k] = vitali_bivariation(f, sr, 1e-3, 8).value;
        }
        bound = bound_theta(q, cli.x, cli.y, holder_cert(), quad);
    } else if (kind == "aleph-holder-bv" || kind == "aleph-bv-bv" ||
               kind == "aleph-holder-bimono") {
        const Surface g = resolve_surface(cli.g_name.empty() ? cli.u_name : cli.g_name);
        const double dg = delta11(g, SubRect{q});
        estimate = dg / q.area() * riemann_oracle(f, q, cli.tol, nullptr);
        oracle = rs_oracle(f, g, q, cli.tol);
        if (kind == "aleph-holder-bv")
            bound = bound_aleph_holder_bv(q, holder_cert(),
                                          BoundedBivariation{require(cli.V, "--V")});
        else if (kind == "aleph-holder-bimono")
            bound = bound_aleph_holder_bimonotone(q, holder_cert(), dg);
        else
            bound = bound_aleph_bv_bv(
                BoundedBivariation{require(cli.L1, "--L1")},
                BoundedBivariation{require(cli.V, "--V")});
    } else if (kind == "psi-corners" || kind == "psi-holder") {
        const Surface u = resolve_surface(cli.u_name);
        estimate = 0;
        oracle = rs_oracle(psi_surface(f, q), u, q, cli.tol);
        bound = (kind == "psi-corners")
                    ? bound_psi_corners(f, q, BoundedBivariation{require(cli.V, "--V")})
                    : bound_psi_holder(q, holder_cert(),
                                       BoundedBivariation{require(cli.V, "--V")});
    } else if (kind == "ef-bv" || kind == "ef-bimono") {
        const Surface u = resolve_surface(cli.u_name);
        estimate = 0;
        oracle = rs_oracle(ef_kernel_surface(f, q), u, q, cli.tol);
        bound = (kind == "ef-bv")
                    ? bound_ef_bv(BoundedBivariation{require(cli.L1, "--L1")},
                                  BoundedBivariation{require(cli.V, "--V")})
                    : bound_ef_bimonotone(u, q,
                                          BoundedBivariation{require(cli.L1, "--L1")});
    } else if (kind == "trapfunc-holder-bv" || kind == "trapfunc-lipschitz-bv" ||
               kind == "trapfunc-holder-bimono") {
        const Surface u = resolve_surface(cli.u_name);
        estimate = 0.25 * (f(q.a, q.c) + f(q.a, q.d) + f(q.b, q.c) + f(q.b, q.d)) *
                   delta11(u, SubRect{q});
        oracle = rs_oracle(f, u, q, cli.tol);
        if (kind == "trapfunc-holder-bv")
            bound = bound_trapfunc_holder_bv(q, holder_cert(),
                                             BoundedBivariation{require(cli.V, "--V")});
        else if (kind == "trapfunc-lipschitz-bv")
            bound = bound_trapfunc_lipschitz_bv(
                q, Lipschitz{require(cli.L1, "--L1"), require(cli.L2, "--L2")},
                BoundedBivariation{require(cli.V, "--V")});
        else
            bound = bound_trapfunc_holder_bimonotone(q, holder_cert(), u);
    } else if (kind == "bdp-upper" || kind == "bdp-lower") {
        const Surface u = resolve_surface(cli.u_name);
        oracle = rs_oracle(f, u, q, cli.tol);
        const BdpSupInf ss = bdp_sup_inf(u, q, cli.n > 64 ? 64 : cli.n);
        const TwoSidedBound b = bound_bdp(u, q, require(cli.m, "--m"), ss.S, ss.s,
                                          BoundedBivariation{require(cli.V, "--V")});
        two_sided = true;
        lower = b.lower;
        upper = b.upper;
        estimate = (kind == "bdp-upper") ? upper : lower;
        bound = 0;
    } else if (kind == "range-e") {
        const Surface u = resolve_surface(cli.u_name);
        oracle = rs_oracle(ef_kernel_surface(f, q), u, q, cli.tol);
        const PartialRange pr{require(cli.m, "--m"), require(cli.M, "--M"),
                              *cli.m, *cli.M};
        const TwoSidedBound b = bound_range_E(f, u, q, pr);
        two_sided = true;
        lower = b.lower;
        upper = b.upper;
        estimate = 0;
        bound = 0;
    } else if (kind == "corner-growth-bv" || kind == "corner-growth-bimono") {
        const Surface u = resolve_surface(cli.u_name);
        oracle = rs_oracle(ef_kernel_surface(f, q), u, q, cli.tol);
        estimate = 0;
        const CornerGrowth cg{require(cli.L1, "--L1"), *cli.L1,
                              require(cli.L2, "--L2"), *cli.L2,
                              cli.beta1.value_or(1.0), cli.beta2.value_or(1.0),
                              cli.beta1.value_or(1.0), cli.beta2.value_or(1.0)};
        bound = (kind == "corner-growth-bv")
                    ? bound_corner_growth_bv(q, cg, BoundedBivariation{require(cli.V, "--V")})
                    : bound_corner_growth_bimonotone(q, cg, u);
    } else {
        throw CLI::ValidationError("--bound", "unknown bound kind '" + kind + "'");
    }

    report.put("rule", rule_id);
    report.put("bound_kind", kind);
    const double slack = oracle.error_estimate + 1e-9;
    bool ok;
    if (two_sided) {
        report.put("lower", lower);
        report.put("upper", upper);
        report.put("oracle", oracle.value);
        report.put("oracle_converged", oracle.converged);
        ok = (oracle.value >= lower - slack) && (oracle.value <= upper + slack);
        report.put("satisfied", ok);
    } else {
        ErrorCertificate cert(kind, estimate, bound);
        cert.attach_oracle(oracle.value, slack);
        report.put("estimate", cert.estimate);
        report.put("bound", cert.bound);
        report.put("oracle", *cert.oracle);
        report.put("oracle_converged", oracle.converged);
        report.put("residual", *cert.residual);
        report.put("satisfied", *cert.satisfied);
        ok = *cert.satisfied;
    }
    return ok ? 0 : 2;
}

int cmd_converge(const Cli& cli, Report& report) {
    const Rect q = rect_of(cli);
    const Surface f = resolve_surface(cli.f_name);
    const std::string integrator = !cli.g_name.empty() ? cli.g_name : cli.u_name;

    double reference;
    if (cli.rule == "rs-composite") {
        const Surface g = resolve_surface(integrator);
        reference = rs_oracle(f, g, q, std::min(cli.tol, 1e-8)).value;
    } else if (f.has_cell_integral()) {
        reference = f.exact_cell_integral()(SubRect{q});
    } else {
        reference = riemann_oracle(f, q, std::min(cli.tol, 1e-8), nullptr);
    }

    std::ostringstream csv;
    csv << "level,cells_per_axis,value,reference,error,cell_bound_sum\n";
    for (int level = 1; level <= cli.levels; ++level) {
        const std::size_t n = std::size_t{1} << level;
        // Left-corner tags keep the probe first-order so the error
        // column actually moves; midpoint tags are exact for bilinear f.
        const auto p = GridPartition::uniform_left(q, n, n);
        double value, bound_sum = 0;
        if (cli.rule == "rs-composite") {
            const Surface g = resolve_surface(integrator);
            value = composite_rs(f, g, p, cli.tol);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    bound_sum += std::fabs(delta11(g, p.cell(i, j)));
        } else {
            value = composite_riemann(f, p);
            // Per-cell Ostrowski bound with the actual tags and
            // V_cell = |Delta11| (exact for bimonotone f).
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) {
                    const SubRect cell = p.cell(i, j);
                    const double bx = 0.5 * cell.width() +
                                      std::fabs(p.tag_x(i, j) - 0.5 * (cell.a + cell.b));
                    const double by = 0.5 * cell.height() +
                                      std::fabs(p.tag_y(i, j) - 0.5 * (cell.c + cell.d));
                    bound_sum += bx * by * std::fabs(delta11(f, cell));
                }
        }
        csv << level << ',' << n << ',' << format_number(value) << ','
            << format_number(reference) << ','
            << format_number(std::fabs(value - reference)) << ','
            << format_number(bound_sum) << '\n';
    }
    report.put("table", "inline");
    report.put("csv", csv.str());
    return 0;
}

int cmd_variation(const Cli& cli, Report& report) {
    const Rect q = rect_of(cli);
    const Surface f = resolve_surface(cli.f_name);
    const VariationEstimate vit = vitali_bivariation(f, q, cli.tol);
    const VariationEstimate arz = arzela_variation(f, q, cli.tol);
    const BimonotoneReport bi = bimonotone_check(f, q, std::max<std::size_t>(cli.n, 2));
    const BdpSupInf ss = bdp_sup_inf(f, q, std::min<std::size_t>(cli.n, 64));
    report.put("vitali", vit.value);
    report.put("vitali_converged", vit.converged);
    report.put("vitali_resolution", static_cast<long long>(vit.resolution));
    report.put("arzela", arz.value);
    report.put("arzela_converged", arz.converged);
    report.put("bimonotone",
               bi.cls == BimonotoneReport::Class::Increasing
                   ? (bi.flat ? "increasing(flat)" : "increasing")
                   : (bi.cls == BimonotoneReport::Class::Decreasing ? "decreasing"
                                                                    : "neither"));
    report.put("bdp_S", ss.S);
    report.put("bdp_s", ss.s);
    return 0;
}

int cmd_gruss(const Cli& cli, Report& report) {
    const Rect q = rect_of(cli);
    const Surface f = resolve_surface(cli.f_name);
    const Surface g = resolve_surface(cli.g_name.empty() ? cli.u_name : cli.g_name);

    const ChebyshevReport cr = chebyshev(f, g, q, cli.tol);
    report.put("T", cr.T_value);
    report.put("T_korkine", cr.T_korkine);
    report.put("route_disagreement", cr.route_disagreement);
    report.put("korkine_residual", korkine_residual(f, g, q, cli.tol));

    Range f_range = cli.m && cli.M
                        ? Range{*cli.m, *cli.M}
                        : estimate_constants(f, q, ConstantKind::Range, 256).as<Range>();
    Range g_range = estimate_constants(g, q, ConstantKind::Range, 256).as<Range>();
    const double bound = gruss_bound(f_range, g_range);
    report.put("gruss_bound", bound);
    report.put("satisfied", std::fabs(cr.T_value) <= bound + 1e-9);
    return std::fabs(cr.T_value) <= bound + 1e-9 ? 0 : 2;
}

int cmd_taylor(const Cli& cli, Report& report) {
    const Rect q = rect_of(cli);
    const Surface f = resolve_surface(cli.f_name);
    const std::size_t order = cli.has_n ? cli.n : 0;
    if (order > 4) throw CLI::ValidationError("--n", "taylor order is capped at 4");
    const int n = static_cast<int>(order);
    const DnField dn(f, q, n);
    const double x = cli.has_x ? cli.x : q.mid_x();
    const double y = cli.has_y ? cli.y : q.mid_y();
    const double A = taylor_blend_An(f, dn, q, x, y);
    const double B = taylor_remainder_Bn(f, dn, q, x, y, cli.tol);
    report.put("n", static_cast<long long>(n));
    report.put("A_n", A);
    report.put("B_n", B);
    report.put("sum", A + B);
    report.put("f_value", f(x, y));
    report.put("representation_residual", std::fabs(A + B - f(x, y)));
    const TaylorMidpoint mid = taylor_midpoint(f, dn, q, cli.tol);
    report.put("midpoint_E", mid.E_M);
    report.put("midpoint_F", mid.F_M);
    if (cli.V) {
        TaylorBoundInput in;
        in.total_variation = *cli.V;
        report.put("midpoint_bound",
                   taylor_bounds(q, n, q.mid_x(), q.mid_y(), TaylorBoundFamily::MidpointBV, in));
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Riemann-Stieltjes double integrals with certified error bounds"};
    app.require_subcommand(1);

    Cli cli;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--rect", cli.rect, "a b c d")->expected(4)->required();
        sub->add_option("--f", cli.f_name, "integrand: registry name or grid file");
        sub->add_option("--u", cli.u_name, "integrator: registry name or grid file");
        sub->add_option("--g", cli.g_name, "integrator: registry name or grid file");
        sub->add_option("--rule", cli.rule);
        sub->add_option("--bound", cli.bound_kind);
        sub->add_option("--x", cli.x)->each([&](const std::string&) { cli.has_x = true; });
        sub->add_option("--y", cli.y)->each([&](const std::string&) { cli.has_y = true; });
        sub->add_option("--n", cli.n)->each([&](const std::string&) { cli.has_n = true; });
        sub->add_option("--tol", cli.tol);
        sub->add_option("--levels", cli.levels);
        sub->add_option("--V", cli.V);
        sub->add_option("--H1", cli.H1);
        sub->add_option("--H2", cli.H2);
        sub->add_option("--beta1", cli.beta1);
        sub->add_option("--beta2", cli.beta2);
        sub->add_option("--L1", cli.L1);
        sub->add_option("--L2", cli.L2);
        sub->add_option("--m", cli.m);
        sub->add_option("--M", cli.M);
        sub->add_option("--out", cli.out_path);
        sub->add_option("--format", cli.format)->check(CLI::IsMember({"kv", "csv"}));
    };

    for (const char* name : {"integrate", "certify", "converge", "variation", "gruss", "taylor"})
        add_common(app.add_subcommand(name));

    std::vector<const char*> argv;
    argv.push_back("stieltjes2d");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 1;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Report report(echo_of(args));
    cli.subcommand = app.get_subcommands().front()->get_name();
    report.put("subcommand", cli.subcommand);

    int code = 1;
    try {
        if (cli.subcommand == "integrate") code = cmd_integrate(cli, report);
        else if (cli.subcommand == "certify") code = cmd_certify(cli, report);
        else if (cli.subcommand == "converge") code = cmd_converge(cli, report);
        else if (cli.subcommand == "variation") code = cmd_variation(cli, report);
        else if (cli.subcommand == "gruss") code = cmd_gruss(cli, report);
        else if (cli.subcommand == "taylor") code = cmd_taylor(cli, report);
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    const auto t1 = std::chrono::steady_clock::now();
    report.stamp_timing(std::chrono::duration<double>(t1 - t0).count());
    emit(report, cli, out);
    return code;
}

} // namespace stieltjes2d
