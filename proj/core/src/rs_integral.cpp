#include "stieltjes2d/rs_integral.hpp"

#include "stieltjes2d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace stieltjes2d {

namespace {

std::size_t cell_cap_from_env(std::size_t requested) {
    if (requested != 0) return requested;
    if (const char* env = std::getenv("STIELTJES2D_MAX_CELLS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 2) return static_cast<std::size_t>(v);
    }
    return 2048;
}

// Nudge any node that lands on a declared jump coordinate. The shift is
// a fixed fraction of the local spacing so refinement stays dyadic in
// spirit and deterministic.
void jitter_axis(std::vector<double>& nodes, const std::vector<double>& jumps) {
    if (jumps.empty()) return;
    const double lo = nodes.front(), hi = nodes.back();
    const double h = (hi - lo) / static_cast<double>(nodes.size() - 1);
    const double eps = h * 1e-9, shift = h * 1e-3;
    for (std::size_t k = 1; k + 1 < nodes.size(); ++k)
        for (double j : jumps)
            if (std::fabs(nodes[k] - j) < eps) nodes[k] = std::min(j + shift, hi);
}

double rs_sum_uniform(const Surface& f, const Surface& u, const Rect& q, std::size_t n) {
    std::vector<double> xs = GridPartition::linspace(q.a, q.b, n);
    std::vector<double> ys = GridPartition::linspace(q.c, q.d, n);
    jitter_axis(xs, u.jump_lines_t());
    jitter_axis(xs, f.jump_lines_t());
    jitter_axis(ys, u.jump_lines_s());
    jitter_axis(ys, f.jump_lines_s());

    // u at grid nodes, row-major (j outer).
    std::vector<double> un((n + 1) * (n + 1));
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n; ++i)
            un[j * (n + 1) + i] = u(xs[i], ys[j]);

    double sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        double row = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d11 = un[j * (n + 1) + i] - un[(j + 1) * (n + 1) + i] -
                               un[j * (n + 1) + i + 1] + un[(j + 1) * (n + 1) + i + 1];
            if (d11 != 0.0)
                row += f(0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1])) * d11;
        }
        sum += row;
    }
    return sum;
}

} // namespace

double rs_double_sum(const Surface& f, const Surface& u, const GridPartition& p) {
    const std::size_t nx = p.nx(), ny = p.ny();
    double sum = 0;
    for (std::size_t j = 0; j < ny; ++j) {
        double row = 0;
        for (std::size_t i = 0; i < nx; ++i) {
            const SubRect cell = p.cell(i, j);
            row += f(p.tag_x(i, j), p.tag_y(i, j)) * delta11(u, cell);
        }
        sum += row;
    }
    return sum;
}

OracleReport rs_oracle(const Surface& f, const Surface& u, const Rect& q, double tol,
                       std::size_t max_cells_per_axis) {
    if (!(tol > 0)) throw std::invalid_argument("rs_oracle: tol must be > 0");
    const std::size_t cap = cell_cap_from_env(max_cells_per_axis);

    OracleReport rep;
    double prev = 0;
    for (std::size_t n = 2;; n *= 2) {
        const double s = rs_sum_uniform(f, u, q, n);
        rep.levels.push_back(s);
        rep.finest_cells_per_axis = n;
        if (rep.levels.size() > 1) {
            const double delta = s - prev;
            rep.deltas.push_back(delta);
            if (std::fabs(delta) < tol * std::max(1.0, std::fabs(s))) {
                rep.value = s;
                rep.converged = true;
                rep.error_estimate = 2.0 * std::fabs(delta);
                return rep;
            }
        }
        prev = s;
        if (n * 2 > cap) break;
    }
    rep.value = rep.levels.back();
    rep.converged = false;
    rep.error_estimate = rep.deltas.empty() ? std::fabs(rep.value)
                                            : 2.0 * std::fabs(rep.deltas.back());
    return rep;
}

double rs_oracle_1d(const std::function<double(double)>& w,
                    const std::function<double(double)>& g, double lo, double hi,
                    double tol, std::size_t max_cells) {
    if (lo == hi) return 0.0;
    double prev = 0;
    for (std::size_t n = 2;; n *= 2) {
        const double h = (hi - lo) / static_cast<double>(n);
        double sum = 0;
        double g_left = g(lo);
        for (std::size_t k = 0; k < n; ++k) {
            const double right = (k + 1 == n) ? hi : lo + (k + 1) * h;
            const double g_right = g(right);
            sum += w(lo + (k + 0.5) * h) * (g_right - g_left);
            g_left = g_right;
        }
        if (n > 2 && std::fabs(sum - prev) < tol * std::max(1.0, std::fabs(sum)))
            return sum;
        if (n * 2 > max_cells) return sum;
        prev = sum;
    }
}

namespace {

// int w d(alpha) over q. Declared (1,1)-partial metadata of the
// integrator switches to the smooth form w * alpha_ts, which reaches
// quadrature accuracy; otherwise the refinement oracle referees.
double rs_integral_value(const Surface& w, const Surface& alpha, const Rect& q,
                         double tol, bool& converged) {
    if (const Surface* ats = alpha.exact_partial(1, 1)) {
        converged = true;
        return integrate_2d(
            [&](double t, double s) { return w(t, s) * (*ats)(t, s); }, SubRect{q},
            std::min(tol, 1e-10));
    }
    const OracleReport rep = rs_oracle(w, alpha, q, tol);
    converged = rep.converged;
    return rep.value;
}

double edge_stieltjes(const Surface& u, const Surface& f, const Rect& q, bool x_edge,
                      double fixed, double tol) {
    const int di = x_edge ? 1 : 0, dj = x_edge ? 0 : 1;
    const double lo = x_edge ? q.a : q.c, hi = x_edge ? q.b : q.d;
    auto w = [&](double v) { return x_edge ? u(v, fixed) : u(fixed, v); };
    if (const Surface* fp = f.exact_partial(di, dj)) {
        return integrate_1d(
            [&](double v) {
                return w(v) * (x_edge ? (*fp)(v, fixed) : (*fp)(fixed, v));
            },
            lo, hi, std::min(tol, 1e-11));
    }
    auto g = [&](double v) { return x_edge ? f(v, fixed) : f(fixed, v); };
    return rs_oracle_1d(w, g, lo, hi, tol);
}

} // namespace

PartsReport integration_by_parts(const Surface& f, const Surface& u, const Rect& q,
                                 double tol) {
    PartsReport rep;
    bool ok1 = false, ok2 = false;
    const double f_du = rs_integral_value(f, u, q, tol, ok1);
    const double u_df = rs_integral_value(u, f, q, tol, ok2);
    rep.lhs = f_du - u_df;
    rep.corner_term = f(q.b, q.d) * u(q.b, q.d) - f(q.b, q.c) * u(q.b, q.c) -
                      f(q.a, q.d) * u(q.a, q.d) + f(q.a, q.c) * u(q.a, q.c);
    rep.edge_term = edge_stieltjes(u, f, q, true, q.d, tol) -
                    edge_stieltjes(u, f, q, true, q.c, tol) +
                    edge_stieltjes(u, f, q, false, q.b, tol) -
                    edge_stieltjes(u, f, q, false, q.a, tol);
    rep.rhs = rep.corner_term - rep.edge_term;
    rep.residual = std::fabs(rep.lhs - rep.rhs);
    rep.converged = ok1 && ok2;
    return rep;
}

} // namespace stieltjes2d
