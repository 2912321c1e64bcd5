#include "stieltjes2d/taylor.hpp"

#include "stieltjes2d/errors.hpp"
#include "stieltjes2d/quadrature.hpp"
#include "stieltjes2d/rs_integral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stieltjes2d {

namespace {

double binomial(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double factorial(int n) {
    double r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Central difference coefficients for d^m/dx^m on a symmetric stencil.
std::vector<double> central_coeffs(int m) {
    switch (m) {
        case 0: return {1.0};
        case 1: return {-0.5, 0.0, 0.5};
        case 2: return {1.0, -2.0, 1.0};
        case 3: return {-0.5, 1.0, 0.0, -1.0, 0.5};
        case 4: return {1.0, -4.0, 6.0, -4.0, 1.0};
        default: throw std::invalid_argument("derivative_surface: order above 4");
    }
}

double fd_step(int total_order, double extent) {
    // The base step cell*1e-3 loses too many digits above second order.
    const double base = (total_order <= 2) ? 1e-3 : (total_order == 3 ? 5e-3 : 2e-2);
    return extent * base;
}

} // namespace

Surface derivative_surface(const Surface& f, const Rect& q, int i, int j) {
    if (i == 0 && j == 0) return f;
    if (const Surface* exact = f.exact_partial(i, j)) return *exact;

    const double hx = fd_step(i + j, q.width());
    const double hy = fd_step(i + j, q.height());
    const auto cx = central_coeffs(i);
    const auto cy = central_coeffs(j);
    const int rx = static_cast<int>(cx.size() / 2);
    const int ry = static_cast<int>(cy.size() / 2);
    const Rect box = q;

    auto eval = [=](double x, double y) {
        // Keep the stencil inside the rectangle by sliding its center.
        const double x0 = std::clamp(x, box.a + rx * hx, box.b - rx * hx);
        const double y0 = std::clamp(y, box.c + ry * hy, box.d - ry * hy);
        double acc = 0;
        for (std::size_t ki = 0; ki < cx.size(); ++ki) {
            if (cx[ki] == 0.0) continue;
            double inner = 0;
            for (std::size_t kj = 0; kj < cy.size(); ++kj) {
                if (cy[kj] == 0.0) continue;
                inner += cy[kj] * f(x0 + (static_cast<int>(ki) - rx) * hx,
                                    y0 + (static_cast<int>(kj) - ry) * hy);
            }
            acc += cx[ki] * inner;
        }
        return acc / (std::pow(hx, i) * std::pow(hy, j));
    };
    return Surface(eval, f.descriptor() + "_d" + std::to_string(i) + std::to_string(j));
}

DnField::DnField(const Surface& f, const Rect& q, int n) : f_(f), n_(n) {
    if (n < 0 || n > 4)
        throw std::invalid_argument("DnField: order must lie in [0,4]");
    for (int j = 0; j <= n; ++j) partials_.push_back(derivative_surface(f, q, n - j, j));
    mixed_ = (n == 0) ? f : derivative_surface(f, q, n, n);

    // Consistency of supplied partials with finite differences of f.
    if (n >= 1) {
        const double probes[3][2] = {{0.31, 0.47}, {0.55, 0.71}, {0.73, 0.29}};
        for (int j = 0; j <= n; ++j) {
            if (!f.exact_partial(n - j, j)) continue;
            // Strip metadata so the reference really is a finite difference.
            const Surface bare([g = f](double x, double y) { return g(x, y); },
                               f.descriptor());
            const Surface fd = derivative_surface(bare, q, n - j, j);
            for (const auto& pr : probes) {
                const double x = q.a + pr[0] * q.width();
                const double y = q.c + pr[1] * q.height();
                const double got = partials_[j](x, y);
                const double ref = fd(x, y);
                const double scale = std::max({1.0, std::fabs(got), std::fabs(ref)});
                if (std::fabs(got - ref) > 1e-4 * scale)
                    throw std::invalid_argument(
                        "DnField: supplied partial disagrees with finite differences");
            }
        }
    }
}

const Surface& DnField::partial(int j) const {
    if (j < 0 || j > n_) throw std::out_of_range("DnField::partial");
    return partials_[static_cast<std::size_t>(j)];
}

double taylor_blend_An(const Surface& f, const DnField& dn, const Rect& q, double x,
                       double y) {
    if (!q.contains(x, y))
        throw std::domain_error("taylor_blend_An: point outside rectangle");
    const int n = dn.order();
    const double area = q.area();
    double value = ((q.b - x) * (q.d - y) * f(q.a, q.c) +
                    (q.b - x) * (y - q.c) * f(q.a, q.d) +
                    (x - q.a) * (q.d - y) * f(q.b, q.c) +
                    (x - q.a) * (y - q.c) * f(q.b, q.d)) / area;
    if (n >= 1) {
        double sum = 0;
        for (int j = 1; j <= n; ++j) {
            const Surface& Dn = dn.partial(j);
            const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
            const double left =
                (q.b - x) * std::pow(x - q.a, n - j) *
                (std::pow(y - q.c, j - 1) * Dn(q.a, q.c) +
                 sgn * std::pow(q.d - y, j - 1) * Dn(q.a, q.d));
            const double right =
                (x - q.a) * std::pow(q.b - x, n - j) *
                (sgn * std::pow(y - q.c, j - 1) * Dn(q.b, q.c) +
                 std::pow(q.d - y, j - 1) * Dn(q.b, q.d));
            sum += binomial(n, j) / factorial(j) * (left + right);
        }
        value += (y - q.c) * (q.d - y) / area * sum;
    }
    return value;
}

namespace {

struct QuadrantKernel {
    SubRect rect;
    double sign;
    Surface kernel; // positive monomial on the quadrant
};

// The four kernel branches around (x,y) with the assembled-remainder
// signs: SW +1, SE (-1)^{n+1}, NW (-1)^{n+1}, NE +1.
std::array<QuadrantKernel, 4> kernel_quadrants(const Rect& q, int n, double x, double y) {
    const double mixed_sign = ((n + 1) % 2 == 0) ? 1.0 : -1.0;
    auto monomial = [n](double cx, double fx, double cy, double fy, bool flip_x,
                        bool flip_y) {
        // (±(t-cx))^n * fx * (±(s-cy))^n * fy
        return Surface(
            [=](double t, double s) {
                const double u = flip_x ? cx - t : t - cx;
                const double v = flip_y ? cy - s : s - cy;
                return std::pow(u, n) * fx * std::pow(v, n) * fy;
            },
            "taylor-kernel");
    };
    return {
        QuadrantKernel{SubRect{q.a, x, q.c, y}, 1.0,
                       monomial(x, q.b - x, y, q.d - y, true, true)},
        QuadrantKernel{SubRect{x, q.b, q.c, y}, mixed_sign,
                       monomial(x, x - q.a, y, q.d - y, false, true)},
        QuadrantKernel{SubRect{q.a, x, y, q.d}, mixed_sign,
                       monomial(x, q.b - x, y, y - q.c, true, false)},
        QuadrantKernel{SubRect{x, q.b, y, q.d}, 1.0,
                       monomial(x, x - q.a, y, y - q.c, false, false)},
    };
}

} // namespace

double taylor_remainder_Bn(const Surface& f, const DnField& dn, const Rect& q, double x,
                           double y, double tol) {
    if (!q.contains(x, y))
        throw std::domain_error("taylor_remainder_Bn: point outside rectangle");
    const int n = dn.order();
    const Surface& w = dn.mixed();
    const double norm = factorial(n) * factorial(n) * q.area();

    double sum = 0;
    if (n == 0) {
        // Piecewise-constant kernel: the quadrant integrals telescope.
        for (const QuadrantKernel& qk : kernel_quadrants(q, 0, x, y)) {
            if (qk.rect.degenerate()) continue;
            sum += qk.sign * qk.kernel(qk.rect.a, qk.rect.c) * delta11(w, qk.rect);
        }
        return sum / norm;
    }

    // Against a declared (n+1,n+1) density the RS quadrant integrals are
    // plain integrals of kernel x density; otherwise fall back to the
    // refinement oracle.
    if (const Surface* density = f.exact_partial(n + 1, n + 1)) {
        for (const QuadrantKernel& qk : kernel_quadrants(q, n, x, y)) {
            if (qk.rect.degenerate()) continue;
            sum += qk.sign * integrate_2d(
                                 [&](double t, double s) {
                                     return qk.kernel(t, s) * (*density)(t, s);
                                 },
                                 qk.rect, tol * norm / 8.0);
        }
        return sum / norm;
    }
    return taylor_remainder_Bn_oracle(f, dn, q, x, y, tol);
}

double taylor_remainder_Bn_oracle(const Surface& f, const DnField& dn, const Rect& q,
                                  double x, double y, double tol) {
    (void)f;
    const int n = dn.order();
    const Surface& w = dn.mixed();
    const double norm = factorial(n) * factorial(n) * q.area();
    double sum = 0;
    for (const QuadrantKernel& qk : kernel_quadrants(q, n, x, y)) {
        if (qk.rect.degenerate()) continue;
        const Rect sub{qk.rect.a, qk.rect.b, qk.rect.c, qk.rect.d};
        const OracleReport rep = rs_oracle(qk.kernel, w, sub, tol);
        if (!rep.converged)
            throw Unconverged("taylor_remainder_Bn_oracle: quadrant oracle stalled");
        sum += qk.sign * rep.value;
    }
    return sum / norm;
}

TaylorMidpoint taylor_midpoint(const Surface& f, const DnField& dn, const Rect& q,
                               double tol) {
    const int n = dn.order();
    double e = 0.25 * (f(q.a, q.c) + f(q.a, q.d) + f(q.b, q.c) + f(q.b, q.d));
    if (n >= 1) {
        double sum = 0;
        for (int j = 1; j <= n; ++j) {
            const Surface& Dn = dn.partial(j);
            const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
            sum += binomial(n, j) / factorial(j) * std::pow(q.width(), n - j) *
                   std::pow(q.height(), j) *
                   (Dn(q.a, q.c) + sgn * Dn(q.a, q.d) + sgn * Dn(q.b, q.c) + Dn(q.b, q.d));
        }
        e += sum / std::pow(2.0, n + 2);
    }
    const double fm = taylor_remainder_Bn(f, dn, q, q.mid_x(), q.mid_y(), tol);
    return TaylorMidpoint{e, fm};
}

double taylor_bounds(const Rect& q, int n, double x, double y, TaylorBoundFamily family,
                     const TaylorBoundInput& in) {
    if (!q.contains(x, y))
        throw std::domain_error("taylor_bounds: point outside rectangle");
    const double xa = x - q.a, bx = q.b - x, yc = y - q.c, dy = q.d - y;
    const double area = q.area();
    const double nf = factorial(n);

    switch (family) {
        case TaylorBoundFamily::BVQuadrants: {
            if (n == 0)
                return (bx * dy * in.quadrant_variation[0] +
                        xa * dy * in.quadrant_variation[1] +
                        bx * yc * in.quadrant_variation[2] +
                        xa * yc * in.quadrant_variation[3]) / area;
            const double pre = xa * bx * yc * dy / (nf * area);
            return pre * (std::pow(xa, n - 1) * std::pow(yc, n - 1) * in.quadrant_variation[0] +
                          std::pow(bx, n - 1) * std::pow(yc, n - 1) * in.quadrant_variation[1] +
                          std::pow(xa, n - 1) * std::pow(dy, n - 1) * in.quadrant_variation[2] +
                          std::pow(bx, n - 1) * std::pow(dy, n - 1) * in.quadrant_variation[3]);
        }
        case TaylorBoundFamily::BVWhole: {
            if (n == 0)
                return std::max(xa, bx) * std::max(yc, dy) / area * in.total_variation;
            const double pre = xa * bx * yc * dy / (nf * area);
            const double mx = 0.5 * q.width() + std::fabs(x - q.mid_x());
            const double my = 0.5 * q.height() + std::fabs(y - q.mid_y());
            return pre * std::pow(mx, n - 1) * std::pow(my, n - 1) * in.total_variation;
        }
        case TaylorBoundFamily::MidpointBV:
            return std::pow(q.width(), n) * std::pow(q.height(), n) /
                   (std::pow(2.0, 2 * n + 2) * nf) * in.total_variation;
        case TaylorBoundFamily::LipschitzQuadrants: {
            const double pre = bx * xa * dy * yc / (nf * (n + 1.0) * (n + 1.0) * area);
            return pre * (std::pow(xa, n) * (in.quadrant_lipschitz[0] * std::pow(yc, n) +
                                             in.quadrant_lipschitz[2] * std::pow(dy, n)) +
                          std::pow(bx, n) * (in.quadrant_lipschitz[1] * std::pow(yc, n) +
                                             in.quadrant_lipschitz[3] * std::pow(dy, n)));
        }
        case TaylorBoundFamily::LipschitzWhole: {
            const double pre = bx * xa * dy * yc / (nf * (n + 1.0) * (n + 1.0) * area);
            return in.lipschitz * pre * (std::pow(xa, n) + std::pow(bx, n)) *
                   (std::pow(yc, n) + std::pow(dy, n));
        }
        case TaylorBoundFamily::AbsContinuousLinf: {
            const double np1 = (n + 1.0) * (n + 1.0);
            return (bx * dy * std::pow(xa, n + 1) * std::pow(yc, n + 1) * in.quadrant_norm[0] +
                    xa * dy * std::pow(bx, n + 1) * std::pow(yc, n + 1) * in.quadrant_norm[1] +
                    bx * yc * std::pow(xa, n + 1) * std::pow(dy, n + 1) * in.quadrant_norm[2] +
                    xa * yc * std::pow(bx, n + 1) * std::pow(dy, n + 1) * in.quadrant_norm[3]) /
                   (nf * area * np1);
        }
        case TaylorBoundFamily::AbsContinuousLp: {
            if (!(in.p > 1))
                throw std::invalid_argument("taylor_bounds: L_p family needs p > 1");
            const double qq = in.p / (in.p - 1.0);
            const double denom = std::pow(n * qq + 1.0, 1.0 / qq);
            auto piece = [&](double w1, double w2, double e1, double e2, double norm) {
                return w1 * w2 * std::pow(e1, n + 1.0 / qq) * std::pow(e2, n + 1.0 / qq) *
                       norm / denom;
            };
            return (piece(bx, dy, xa, yc, in.quadrant_norm[0]) +
                    piece(xa, dy, bx, yc, in.quadrant_norm[1]) +
                    piece(bx, yc, xa, dy, in.quadrant_norm[2]) +
                    piece(xa, yc, bx, dy, in.quadrant_norm[3])) /
                   (nf * area);
        }
        case TaylorBoundFamily::AbsContinuousL1: {
            return (bx * dy * std::pow(xa, n) * std::pow(yc, n) * in.quadrant_norm[0] +
                    xa * dy * std::pow(bx, n) * std::pow(yc, n) * in.quadrant_norm[1] +
                    bx * yc * std::pow(xa, n) * std::pow(dy, n) * in.quadrant_norm[2] +
                    xa * yc * std::pow(bx, n) * std::pow(dy, n) * in.quadrant_norm[3]) /
                   (nf * area);
        }
    }
    throw std::invalid_argument("taylor_bounds: unknown family");
}

} // namespace stieltjes2d
