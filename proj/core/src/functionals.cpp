#include "stieltjes2d/functionals.hpp"

#include "stieltjes2d/errors.hpp"

namespace stieltjes2d {

namespace {

double oracle_value(const Surface& f, const Surface& u, const Rect& q, double tol,
                    const char* what) {
    const OracleReport rep = rs_oracle(f, u, q, tol);
    if (!rep.converged) throw Unconverged(what);
    return rep.value;
}

} // namespace

double omega_functional(const Surface& f, const Surface& u, const Rect& q, double m,
                        double M, double tol) {
    const double du = delta11_corners(u(q.a, q.c), u(q.a, q.d), u(q.b, q.c), u(q.b, q.d));
    return oracle_value(f, u, q, tol, "omega_functional: oracle did not converge") -
           0.5 * (m + M) * du;
}

double theta_functional(const Surface& f, const Surface& u, const Rect& q, double x,
                        double y, double tol) {
    const double du = delta11_corners(u(q.a, q.c), u(q.a, q.d), u(q.b, q.c), u(q.b, q.d));
    return du * f(x, y) -
           oracle_value(f, u, q, tol, "theta_functional: oracle did not converge");
}

double aleph_functional(const Surface& f, const Surface& g, const Rect& q, double tol) {
    const double dg = delta11_corners(g(q.a, q.c), g(q.a, q.d), g(q.b, q.c), g(q.b, q.d));
    const OracleReport riemann = rs_oracle(
        f, Surface([](double x, double y) { return x * y; }, "xy"), q, tol);
    if (!riemann.converged)
        throw Unconverged("aleph_functional: Riemann oracle did not converge");
    return oracle_value(f, g, q, tol, "aleph_functional: RS oracle did not converge") -
           dg / q.area() * riemann.value;
}

Surface psi_surface(const Surface& f, const Rect& q) {
    const double fac = f(q.a, q.c), fad = f(q.a, q.d);
    const double fbc = f(q.b, q.c), fbd = f(q.b, q.d);
    const Rect box = q;
    auto eval = [=](double t, double s) {
        const double phi = (t - box.a) * ((s - box.c) * fac + (box.d - s) * fad) +
                           (box.b - t) * ((box.d - s) * fbd + (s - box.c) * fbc);
        return f(t, s) - phi / box.area();
    };
    return Surface(eval, "psi(" + f.descriptor() + ")");
}

double psi_error_integral(const Surface& f, const Surface& u, const Rect& q, double tol) {
    return oracle_value(psi_surface(f, q), u, q, tol,
                        "psi_error_integral: oracle did not converge");
}

Surface ef_kernel_surface(const Surface& f, const Rect& q) {
    const Rect box = q;
    auto eval = [=](double t, double s) {
        // Quadrant increments of f around (t,s).
        const double i_sw = f(t, s) - f(t, box.c) - f(box.a, s) + f(box.a, box.c);
        const double i_nw = f(t, box.d) - f(t, s) - f(box.a, box.d) + f(box.a, s);
        const double i_se = f(box.b, s) - f(box.b, box.c) - f(t, s) + f(t, box.c);
        const double i_ne = f(box.b, box.d) - f(box.b, s) - f(t, box.d) + f(t, s);
        const double w = (t - box.a) * (s - box.c) * i_sw +
                         (t - box.a) * (s - box.d) * i_nw +
                         (t - box.b) * (s - box.c) * i_se +
                         (t - box.b) * (s - box.d) * i_ne;
        return w / box.area();
    };
    return Surface(eval, "ef-kernel(" + f.descriptor() + ")");
}

double ef_functional_E(const Surface& f, const Surface& u, const Rect& q, double tol) {
    return oracle_value(ef_kernel_surface(f, q), u, q, tol,
                        "ef_functional_E: oracle did not converge");
}

double ef_functional_F(const Surface& f, const Surface& u, const Rect& q, double tol) {
    return oracle_value(ef_kernel_surface(u, q), f, q, tol,
                        "ef_functional_F: oracle did not converge");
}

} // namespace stieltjes2d
