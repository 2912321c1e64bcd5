#include "stieltjes2d/cubature.hpp"

#include "stieltjes2d/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace stieltjes2d {

std::string to_string(RuleId id) {
    switch (id) {
        case RuleId::OstrowskiPoint: return "ostrowski-point";
        case RuleId::Trapezoid4: return "trapezoid4";
        case RuleId::MidpointRS: return "midpoint-rs";
        case RuleId::Simpson9: return "simpson9";
        case RuleId::Companion4: return "companion4";
        case RuleId::TrapezoidFunctional: return "trapezoid-functional";
        case RuleId::RiemannComposite: return "riemann-composite";
        case RuleId::RsComposite: return "rs-composite";
        case RuleId::MercerBracket: return "mercer-bracket";
    }
    return "unknown";
}

double ostrowski_point_rule(const Surface& f, const Rect& q, double x, double y) {
    if (!q.contains(x, y))
        throw std::domain_error("ostrowski_point_rule: point outside rectangle");
    return q.area() * f(x, y);
}

namespace {

double corner_scale(const Surface& g, const Rect& q) {
    return std::max({1.0, std::fabs(g(q.a, q.c)), std::fabs(g(q.a, q.d)),
                     std::fabs(g(q.b, q.c)), std::fabs(g(q.b, q.d))});
}

} // namespace

TrapezoidWeights rs_trapezoid_weights(const Surface& g, const Rect& q, double tol) {
    const double mean_c = edge_mean_x(g, q.a, q.b, q.c, tol);
    const double mean_d = edge_mean_x(g, q.a, q.b, q.d, tol);
    const double mean_a = edge_mean_y(g, q.c, q.d, q.a, tol);
    const double mean_b = edge_mean_y(g, q.c, q.d, q.b, tol);
    const double G = integrate_2d(g, SubRect{q}, tol) / q.area();

    TrapezoidWeights w{};
    w.A = g(q.a, q.c) - mean_c - mean_a + G;
    w.B = -(g(q.a, q.d) - mean_d - mean_a + G);
    w.C = -(g(q.b, q.c) - mean_c - mean_b + G);
    w.D = g(q.b, q.d) - mean_d - mean_b + G;
    return w;
}

double rs_trapezoid_rule(const Surface& f, const Surface& g, const Rect& q, double tol) {
    const TrapezoidWeights w = rs_trapezoid_weights(g, q, tol);
    return w.A * f(q.a, q.c) + w.B * f(q.a, q.d) + w.C * f(q.b, q.c) + w.D * f(q.b, q.d);
}

std::pair<double, double> rs_midpoint_node(const Surface& g, const Rect& q, double tol) {
    const double dg = delta11_corners(g(q.a, q.c), g(q.a, q.d), g(q.b, q.c), g(q.b, q.d));
    if (std::fabs(dg) <= 1e-12 * corner_scale(g, q))
        throw DegenerateIntegrator("rs_midpoint_node: Delta11 g vanishes on Q");

    const double edge_x =
        integrate_1d([&](double x) { return g(x, q.d) - g(x, q.c); }, q.a, q.b, tol);
    const double edge_y =
        integrate_1d([&](double y) { return g(q.b, y) - g(q.a, y); }, q.c, q.d, tol);

    double t = (q.b * (g(q.b, q.d) - g(q.b, q.c)) - q.a * (g(q.a, q.d) - g(q.a, q.c)) -
                edge_x) / dg;
    double s = (q.d * (g(q.b, q.d) - g(q.a, q.d)) - q.c * (g(q.b, q.c) - g(q.a, q.c)) -
                edge_y) / dg;

    const double ex = 1e-12 * std::max(1.0, q.width());
    const double ey = 1e-12 * std::max(1.0, q.height());
    if (t < q.a - ex || t > q.b + ex || s < q.c - ey || s > q.d + ey)
        throw NodeOutOfDomain("rs_midpoint_node: node outside Q");
    t = std::clamp(t, q.a, q.b);
    s = std::clamp(s, q.c, q.d);
    return {t, s};
}

MidpointResult rs_midpoint_rule(const Surface& f, const Surface& g, const Rect& q,
                                double tol) {
    const auto [t, s] = rs_midpoint_node(g, q, tol);
    const double dg = delta11_corners(g(q.a, q.c), g(q.a, q.d), g(q.b, q.c), g(q.b, q.d));
    return MidpointResult{dg * f(t, s), t, s};
}

double simpson_rule(const Surface& f, const Rect& q) {
    const double area = q.area();
    const double mx = q.mid_x(), my = q.mid_y();
    const double corner_part = f(q.b, q.d) - f(q.b, q.c) - f(q.a, q.d) + f(q.a, q.c);
    const double edge_part =
        f(mx, q.d) + f(q.b, my) + 4.0 * f(mx, my) - f(mx, q.c) - f(q.a, my);
    return area / 36.0 * corner_part + area / 9.0 * edge_part;
}

double companion_rule(const Surface& f, const Rect& q, double x, double y) {
    if (x < q.a || x > q.mid_x() || y < q.c || y > q.mid_y())
        throw std::domain_error("companion_rule: (x,y) outside the lower half-ranges");
    const double xr = q.a + q.b - x, yr = q.c + q.d - y;
    return q.area() / 4.0 * (f(x, y) + f(xr, y) + f(x, yr) + f(xr, yr));
}

double trapezoid_functional(const Surface& f, const Surface& u, const Rect& q,
                            double tol) {
    const OracleReport rep = rs_oracle(f, u, q, tol);
    if (!rep.converged)
        throw Unconverged("trapezoid_functional: RS oracle did not converge");
    const double corner_avg =
        0.25 * (f(q.a, q.c) + f(q.a, q.d) + f(q.b, q.c) + f(q.b, q.d));
    const double du = delta11_corners(u(q.a, q.c), u(q.a, q.d), u(q.b, q.c), u(q.b, q.d));
    return corner_avg * du - rep.value;
}

double composite_riemann(const Surface& f, const GridPartition& p) {
    if (p.scheme() != TagScheme::Restricted)
        throw std::invalid_argument("composite_riemann: restricted tags required");
    double sum = 0;
    for (std::size_t j = 0; j < p.ny(); ++j) {
        double row = 0;
        for (std::size_t i = 0; i < p.nx(); ++i) {
            const SubRect cell = p.cell(i, j);
            row += cell.area() * f(p.tag_x(i, j), p.tag_y(i, j));
        }
        sum += row;
    }
    return sum;
}

double composite_rs(const Surface& f, const Surface& g, const GridPartition& p,
                    double tol) {
    const double cell_tol = tol / static_cast<double>(p.nx() * p.ny());
    double sum = 0;
    for (std::size_t j = 0; j < p.ny(); ++j) {
        double row = 0;
        for (std::size_t i = 0; i < p.nx(); ++i) {
            const SubRect cell = p.cell(i, j);
            const double dg = delta11(g, cell);
            if (dg != 0.0)
                row += dg / cell.area() * integrate_2d(f, cell, cell_tol);
        }
        sum += row;
    }
    return sum;
}

MercerBracketResult mercer_bracket(const Surface& f, const Surface& g, const Rect& q,
                                   double tol) {
    const double dg = delta11_corners(g(q.a, q.c), g(q.a, q.d), g(q.b, q.c), g(q.b, q.d));
    if (std::fabs(dg) <= 1e-12 * corner_scale(g, q))
        throw DegenerateIntegrator("mercer_bracket: Delta11 g vanishes on Q");

    // Sampled hypothesis check: mixed second partial of f nonnegative.
    {
        const Surface* fxy = f.exact_partial(1, 1);
        double scale = 1.0;
        double worst = 0.0;
        const int n = 8;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const double x = q.a + q.width() * i / n;
                const double y = q.c + q.height() * j / n;
                double v;
                if (fxy) {
                    v = (*fxy)(x, y);
                } else {
                    const double hx = q.width() * 1e-4, hy = q.height() * 1e-4;
                    const double x0 = std::clamp(x, q.a + hx, q.b - hx);
                    const double y0 = std::clamp(y, q.c + hy, q.d - hy);
                    v = (f(x0 + hx, y0 + hy) - f(x0 + hx, y0 - hy) - f(x0 - hx, y0 + hy) +
                         f(x0 - hx, y0 - hy)) / (4.0 * hx * hy);
                }
                scale = std::max(scale, std::fabs(v));
                worst = std::min(worst, v);
            }
        if (worst < -1e-9 * scale)
            throw HypothesisError("mercer_bracket: sampled mixed partial of f negative");
    }

    // The two defining equations are linear in the node coordinate; solve
    // by bisection on the residual as the equations are displayed.
    const double edge_x =
        integrate_1d([&](double x) { return g(x, q.d) - g(x, q.c); }, q.a, q.b, tol);
    const double edge_y =
        integrate_1d([&](double y) { return g(q.b, y) - g(q.a, y); }, q.c, q.d, tol);

    auto bisect = [&](auto residual, double lo, double hi, const char* what) {
        double rlo = residual(lo), rhi = residual(hi);
        if (rlo == 0) return lo;
        if (rhi == 0) return hi;
        if ((rlo > 0) == (rhi > 0))
            throw NodeOutOfDomain(what);
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double rm = residual(mid);
            if (std::fabs(rm) <= tol) return mid;
            if ((rm > 0) == (rlo > 0)) {
                lo = mid;
                rlo = rm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    const double rowd = g(q.b, q.d) - g(q.b, q.c), rowa = g(q.a, q.d) - g(q.a, q.c);
    const double cold = g(q.b, q.d) - g(q.a, q.d), colc = g(q.b, q.c) - g(q.a, q.c);
    const double t = bisect(
        [&](double tt) { return (q.b - tt) * rowd + (tt - q.a) * rowa - edge_x; },
        q.a, q.b, "mercer_bracket: t equation unsolvable in [a,b]");
    const double s = bisect(
        [&](double ss) { return (q.d - ss) * cold + (ss - q.c) * colc - edge_y; },
        q.c, q.d, "mercer_bracket: s equation unsolvable in [c,d]");

    MercerBracketResult res{};
    res.t = t;
    res.s = s;
    res.lower = dg * f(t, s);
    res.upper = rs_trapezoid_rule(f, g, q, tol);
    return res;
}

} // namespace stieltjes2d
