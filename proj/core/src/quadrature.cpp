#include "stieltjes2d/quadrature.hpp"

#include <cmath>

namespace stieltjes2d {

namespace {

double simpson(double lo, double hi, double flo, double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double adaptive(const std::function<double(double)>& f, double lo, double hi,
                double flo, double fmid, double fhi, double whole, double tol,
                double floor, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    const double flm = f(lmid), frm = f(rmid);
    const double left = simpson(lo, mid, flo, flm, fmid);
    const double right = simpson(mid, hi, fmid, frm, fhi);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol || depth <= 0) {
        if (depth <= 0 && std::fabs(delta) > 15.0 * std::max(tol, floor) * 1e3)
            throw QuadratureError("integrate_1d: recursion depth exhausted");
        return left + right + delta / 15.0;
    }
    const double subtol = std::max(0.5 * tol, floor);
    return adaptive(f, lo, mid, flo, flm, fmid, left, subtol, floor, depth - 1) +
           adaptive(f, mid, hi, fmid, frm, fhi, right, subtol, floor, depth - 1);
}

} // namespace

double integrate_1d(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (lo == hi) return 0.0;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = simpson(lo, hi, flo, fmid, fhi);
    // Roundoff floor: absolute tolerances below the integrand's machine
    // noise would recurse forever.
    const double magnitude =
        (std::fabs(flo) + 4.0 * std::fabs(fmid) + std::fabs(fhi)) / 6.0 * (hi - lo);
    const double floor = 4e-16 * std::max(1.0, magnitude);
    return adaptive(f, lo, hi, flo, fmid, fhi, whole, std::max(tol, floor), floor, 40);
}

double integrate_2d(const Surface& f, const SubRect& cell, double tol) {
    if (cell.degenerate()) return 0.0;
    if (f.has_cell_integral()) return f.exact_cell_integral()(cell);
    auto inner = [&](double y) {
        return integrate_1d([&](double x) { return f(x, y); }, cell.a, cell.b,
                            tol / std::max(1.0, cell.height()));
    };
    return integrate_1d(inner, cell.c, cell.d, tol);
}

double integrate_2d(const std::function<double(double, double)>& f, const SubRect& cell,
                    double tol) {
    if (cell.degenerate()) return 0.0;
    auto inner = [&](double y) {
        return integrate_1d([&](double x) { return f(x, y); }, cell.a, cell.b,
                            tol / std::max(1.0, cell.height()));
    };
    return integrate_1d(inner, cell.c, cell.d, tol);
}

double gauss5_integrate_2d(const std::function<double(double, double)>& f,
                           const SubRect& cell, int panels_per_axis) {
    if (cell.degenerate()) return 0.0;
    // 5-node Gauss-Legendre on [-1,1].
    static constexpr double node[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                       0.5384693101056831, 0.9061798459386640};
    static constexpr double weight[5] = {0.2369268850561891, 0.4786286704993665,
                                         0.5688888888888889, 0.4786286704993665,
                                         0.2369268850561891};
    const int m = std::max(1, panels_per_axis);
    const double hx = cell.width() / m, hy = cell.height() / m;
    double sum = 0;
    for (int px = 0; px < m; ++px)
        for (int py = 0; py < m; ++py) {
            const double x0 = cell.a + px * hx, y0 = cell.c + py * hy;
            double panel = 0;
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    const double x = x0 + 0.5 * hx * (1.0 + node[i]);
                    const double y = y0 + 0.5 * hy * (1.0 + node[j]);
                    panel += weight[i] * weight[j] * f(x, y);
                }
            sum += panel * 0.25 * hx * hy;
        }
    return sum;
}

double edge_mean_x(const Surface& f, double a, double b, double y0, double tol) {
    if (a == b) return f(a, y0);
    return integrate_1d([&](double x) { return f(x, y0); }, a, b, tol) / (b - a);
}

double edge_mean_y(const Surface& f, double c, double d, double x0, double tol) {
    if (c == d) return f(x0, c);
    return integrate_1d([&](double y) { return f(x0, y); }, c, d, tol) / (d - c);
}

} // namespace stieltjes2d
