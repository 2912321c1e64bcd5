#include "stieltjes2d/gruss.hpp"

#include "stieltjes2d/quadrature.hpp"
#include "stieltjes2d/rs_integral.hpp"
#include "stieltjes2d/variation.hpp"

#include <algorithm>
#include <cmath>

namespace stieltjes2d {

namespace {

double mean2(const Surface& f, const Rect& q, double tol) {
    return integrate_2d(f, SubRect{q}, tol) / q.area();
}

double product_mean(const Surface& f, const Surface& g, const Rect& q, double tol) {
    return integrate_2d([&](double x, double y) { return f(x, y) * g(x, y); },
                        SubRect{q}, tol) / q.area();
}

// (1/2) * quadruple integral of (f(P1)-f(P2))(g(P1)-g(P2)) over Q x Q,
// as a tensor of two Gauss-Legendre grids.
double korkine_quadruple(const Surface& f, const Surface& g, const Rect& q) {
    const int panels = 4;
    auto outer = [&](double x1, double y1) {
        const double f1 = f(x1, y1), g1 = g(x1, y1);
        return gauss5_integrate_2d(
            [&](double x2, double y2) {
                return (f1 - f(x2, y2)) * (g1 - g(x2, y2));
            },
            SubRect{q}, panels);
    };
    return 0.5 * gauss5_integrate_2d(outer, SubRect{q}, panels);
}

} // namespace

double korkine_residual(const Surface& f, const Surface& g, const Rect& q, double tol) {
    const double lhs = q.area() * integrate_2d([&](double x, double y) {
                           return f(x, y) * g(x, y);
                       }, SubRect{q}, tol) -
                       integrate_2d(f, SubRect{q}, tol) * integrate_2d(g, SubRect{q}, tol);
    return std::fabs(lhs - korkine_quadruple(f, g, q));
}

ChebyshevReport chebyshev(const Surface& f, const Surface& g, const Rect& q, double tol) {
    ChebyshevReport rep;
    rep.mean_f = mean2(f, q, tol);
    rep.mean_g = mean2(g, q, tol);
    rep.T_value = product_mean(f, g, q, tol) - rep.mean_f * rep.mean_g;
    rep.T_korkine = korkine_quadruple(f, g, q) / (q.area() * q.area());
    rep.route_disagreement = std::fabs(rep.T_value - rep.T_korkine);

    // T(f,g) = M(S(f) g) with S(f) = f - M(f).
    const double shifted = integrate_2d(
        [&](double x, double y) { return (f(x, y) - rep.mean_f) * g(x, y); },
        SubRect{q}, tol) / q.area();
    rep.shift_identity_residual = std::fabs(rep.T_value - shifted);

    const auto f_range = estimate_constants(f, q, ConstantKind::Range, 128).as<Range>();
    const auto g_range = estimate_constants(g, q, ConstantKind::Range, 128).as<Range>();
    rep.bound = gruss_bound(f_range, g_range);
    return rep;
}

double gruss_bound(const Range& f_cert, const Range& g_cert) {
    return 0.25 * (f_cert.M - f_cert.m) * (g_cert.M - g_cert.m);
}

double gruss_lipschitz_bounds(double L1, double L2, const Rect& q,
                              GrussLipschitzVariant variant) {
    switch (variant) {
        case GrussLipschitzVariant::Euclidean:
            return L1 * L2 / 12.0 * (q.width() * q.width() + q.height() * q.height());
        case GrussLipschitzVariant::ProductIncrement:
            return L1 * L2 / 36.0 * std::pow(q.height(), 4) * std::pow(q.width(), 4);
    }
    return 0;
}

Surface cheby_psi_surface(const Surface& g, const Rect& q, double tol) {
    const double A = integrate_2d(g, SubRect{q}, tol);
    const Rect box = q;
    auto eval = [=](double t, double s) {
        const double partial = integrate_2d(g, SubRect{box.a, t, box.c, s}, tol);
        return A * (t - box.a) * (s - box.c) - box.area() * partial;
    };
    return Surface(eval, "cheby-psi(" + g.descriptor() + ")");
}

ChebyKernelReport cheby_kernel_psi(const Surface& f, const Surface& g, const Rect& q,
                                   double tol, double f_variation, double f_lipschitz) {
    const double area = q.area();
    const double A = integrate_2d(g, SubRect{q}, tol);

    // psi_ts(t,s) = A - area*g(t,s); the kernel route evaluates
    // T = -(1/area^2) int f psi_ts.
    ChebyKernelReport rep;
    rep.T_via_kernel = -integrate_2d(
        [&](double t, double s) { return f(t, s) * (A - area * g(t, s)); },
        SubRect{q}, tol) / (area * area);

    const ChebyshevReport direct = chebyshev(f, g, q, tol);
    rep.residual_vs_direct = std::fabs(rep.T_via_kernel - direct.T_value);

    // Bound triple over a fixed evaluation grid of the kernel surface.
    const Surface psi = cheby_psi_surface(g, q, tol * 10);
    const int n = 24;
    double sup_psi = 0, int_abs = 0, bimono = 0;
    std::vector<double> psi_nodes((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            const double x = q.a + q.width() * i / n;
            const double y = q.c + q.height() * j / n;
            psi_nodes[j * (n + 1) + i] = psi(x, y);
            sup_psi = std::max(sup_psi, psi_nodes[j * (n + 1) + i]);
        }
    const double hx = q.width() / n, hy = q.height() / n;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double mid = 0.25 * (psi_nodes[j * (n + 1) + i] +
                                       psi_nodes[j * (n + 1) + i + 1] +
                                       psi_nodes[(j + 1) * (n + 1) + i] +
                                       psi_nodes[(j + 1) * (n + 1) + i + 1]);
            int_abs += std::fabs(mid) * hx * hy;
            const double x0 = q.a + hx * i, y0 = q.c + hy * j;
            const double d11f = f(x0, y0) - f(x0, y0 + hy) - f(x0 + hx, y0) +
                                f(x0 + hx, y0 + hy);
            bimono += std::fabs(mid) * d11f;
        }
    const double inv = 1.0 / (area * area);
    rep.bound_sup_variation = inv * sup_psi * f_variation;
    rep.bound_lipschitz = inv * f_lipschitz * int_abs;
    rep.bound_bimonotone = inv * bimono;
    return rep;
}

Surface weighted_psi_surface(const Surface& g, const Surface& p, const Rect& q,
                             double tol) {
    const Rect box = q;
    const Surface weight = p;
    const Surface product([p, g](double x, double y) { return p(x, y) * g(x, y); },
                          "pg");
    const double P_bd = integrate_2d([weight](double x, double y) { return weight(x, y); },
                                     SubRect{q}, tol);
    const double G_bd = integrate_2d([product](double x, double y) { return product(x, y); },
                                     SubRect{q}, tol);
    auto eval = [box, weight, product, P_bd, G_bd, tol](double t, double s) {
        auto block = [&](const Surface& h, double tt, double ss) {
            return integrate_2d([&h](double x, double y) { return h(x, y); },
                                SubRect{box.a, tt, box.c, ss}, tol);
        };
        const double P = block(weight, t, s);
        const double G = block(product, t, s);
        const double P_star = P_bd - block(weight, box.b, s) - block(weight, t, box.d) + P;
        const double G_star = G_bd - block(product, box.b, s) - block(product, t, box.d) + G;
        return P * G_star - P_star * G;
    };
    return Surface(eval, "weighted-psi(" + g.descriptor() + ")");
}

WeightedChebyshevReport weighted_chebyshev(const Surface& f, const Surface& g,
                                           const Surface& p, const Rect& q, double tol,
                                           double f_variation, double f_lipschitz) {
    WeightedChebyshevReport rep;
    const double P_bd = integrate_2d([&](double x, double y) { return p(x, y); },
                                     SubRect{q}, tol);
    if (!(P_bd > 0))
        throw std::invalid_argument("weighted_chebyshev: total weight must be positive");
    rep.total_weight = P_bd;
    const double Rfg = integrate_2d(
        [&](double x, double y) { return p(x, y) * f(x, y) * g(x, y); }, SubRect{q}, tol);
    const double Rf = integrate_2d(
        [&](double x, double y) { return p(x, y) * f(x, y); }, SubRect{q}, tol);
    const double Rg = integrate_2d(
        [&](double x, double y) { return p(x, y) * g(x, y); }, SubRect{q}, tol);
    rep.value = Rfg / P_bd - (Rf / P_bd) * (Rg / P_bd);

    const Surface psi = weighted_psi_surface(g, p, q, std::max(tol, 1e-8));
    const int n = 16;
    double sup_psi = 0, int_abs = 0, bimono = 0;
    std::vector<double> nodes((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            nodes[j * (n + 1) + i] = psi(q.a + q.width() * i / n, q.c + q.height() * j / n);
            sup_psi = std::max(sup_psi, nodes[j * (n + 1) + i]);
        }
    const double hx = q.width() / n, hy = q.height() / n;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double mid = 0.25 * (nodes[j * (n + 1) + i] + nodes[j * (n + 1) + i + 1] +
                                       nodes[(j + 1) * (n + 1) + i] +
                                       nodes[(j + 1) * (n + 1) + i + 1]);
            int_abs += std::fabs(mid) * hx * hy;
            const double x0 = q.a + hx * i, y0 = q.c + hy * j;
            bimono += std::fabs(mid) * (f(x0, y0) - f(x0, y0 + hy) - f(x0 + hx, y0) +
                                        f(x0 + hx, y0 + hy));
        }
    const double inv = 1.0 / (P_bd * P_bd);
    rep.bound_sup_variation = inv * sup_psi * f_variation;
    rep.bound_lipschitz = inv * f_lipschitz * int_abs;
    rep.bound_bimonotone = inv * bimono;
    return rep;
}

AlephGrussBound aleph_gruss_bound(const Range& f_cert, double g_lipschitz,
                                  const Surface& f, const Rect& q, double tol) {
    AlephGrussBound b;
    b.printed = 0.5 * (f_cert.M - f_cert.m) * q.area();
    const double mean_f = mean2(f, q, tol);
    b.intermediate = g_lipschitz * integrate_2d([&](double x, double y) {
                         return std::fabs(f(x, y) - mean_f);
                     }, SubRect{q}, tol);
    b.intermediate_tighter = b.intermediate < b.printed;
    return b;
}

} // namespace stieltjes2d
