#include "stieltjes2d/bounds.hpp"

#include "stieltjes2d/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace stieltjes2d {

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::OstrowskiBV: return "ostrowski-bv";
        case BoundKind::OstrowskiHolderU: return "ostrowski-holder-u";
        case BoundKind::CompanionBV: return "companion-bv";
        case BoundKind::TrapezoidBV: return "trapezoid-bv";
        case BoundKind::SimpsonBV: return "simpson-bv";
        case BoundKind::OmegaRange: return "omega-range";
        case BoundKind::ThetaQuadrant: return "theta-quadrant";
        case BoundKind::BdpUpper: return "bdp-upper";
        case BoundKind::BdpLower: return "bdp-lower";
        case BoundKind::FunctionalHolderBV: return "aleph-holder-bv";
        case BoundKind::FunctionalHolderBimono: return "aleph-holder-bimono";
        case BoundKind::FunctionalBVBV: return "aleph-bv-bv";
        case BoundKind::PsiCorners: return "psi-corners";
        case BoundKind::PsiHolder: return "psi-holder";
        case BoundKind::RangeE: return "range-e";
        case BoundKind::CornerGrowthBV: return "corner-growth-bv";
        case BoundKind::CornerGrowthBimono: return "corner-growth-bimono";
        case BoundKind::EF_BV: return "ef-bv";
        case BoundKind::EF_Bimono: return "ef-bimono";
        case BoundKind::TrapFuncHolderBV: return "trapfunc-holder-bv";
        case BoundKind::TrapFuncLipschitzBV: return "trapfunc-lipschitz-bv";
        case BoundKind::TrapFuncHolderBimono: return "trapfunc-holder-bimono";
    }
    return "unknown";
}

namespace {

double half_plus_offset(double lo, double hi, double x) {
    return 0.5 * (hi - lo) + std::fabs(x - 0.5 * (lo + hi));
}

double delta11_of(const Surface& u, const Rect& q) {
    return delta11_corners(u(q.a, q.c), u(q.a, q.d), u(q.b, q.c), u(q.b, q.d));
}

} // namespace

double bound_ostrowski(const Rect& q, double x, double y, const BoundedBivariation& f_cert) {
    if (!q.contains(x, y))
        throw std::domain_error("bound_ostrowski: point outside rectangle");
    return half_plus_offset(q.a, q.b, x) * half_plus_offset(q.c, q.d, y) * f_cert.V;
}

double bound_ostrowski_holder(const Rect& q, double x, double y, const Holder& f_cert,
                              const BoundedBivariation& u_variation) {
    if (!q.contains(x, y))
        throw std::domain_error("bound_ostrowski_holder: point outside rectangle");
    return (f_cert.H1 * std::pow(half_plus_offset(q.a, q.b, x), f_cert.beta1) +
            f_cert.H2 * std::pow(half_plus_offset(q.c, q.d, y), f_cert.beta2)) *
           u_variation.V;
}

double bound_trapezoid(const Rect& q, const BoundedBivariation& f_cert) {
    return 0.25 * q.area() * f_cert.V;
}

double bound_simpson(const Rect& q, const BoundedBivariation& f_cert) {
    return q.area() / 9.0 * f_cert.V;
}

double bound_companion(const Rect& q, double x, double y, const BoundedBivariation& f_cert) {
    if (x < q.a || x > q.mid_x() || y < q.c || y > q.mid_y())
        throw std::domain_error("bound_companion: (x,y) outside lower half-ranges");
    const double bx = 0.25 * q.width() + std::fabs(x - (3.0 * q.a + q.b) / 4.0);
    const double by = 0.25 * q.height() + std::fabs(y - (3.0 * q.c + q.d) / 4.0);
    return bx * by * f_cert.V;
}

double bound_omega(const BoundedBivariation& u_cert, const Range& f_cert) {
    return 0.5 * (f_cert.M - f_cert.m) * u_cert.V;
}

double bound_theta(const Rect& q, double x, double y, const Holder& u_cert,
                   const std::array<double, 4>& f_quadrant_variation) {
    const double pa = std::pow(x - q.a, u_cert.beta1);
    const double pb = std::pow(q.b - x, u_cert.beta1);
    const double pc = std::pow(y - q.c, u_cert.beta2);
    const double pd = std::pow(q.d - y, u_cert.beta2);
    // rect_split order: SW, SE, NW, NE.
    return (u_cert.H1 * pa + u_cert.H2 * pc) * f_quadrant_variation[0] +
           (u_cert.H1 * pb + u_cert.H2 * pc) * f_quadrant_variation[1] +
           (u_cert.H1 * pa + u_cert.H2 * pd) * f_quadrant_variation[2] +
           (u_cert.H1 * pb + u_cert.H2 * pd) * f_quadrant_variation[3];
}

TwoSidedBound bound_bdp(const Surface& u, const Rect& q, double inf_f, double S_u,
                        double s_u, const BoundedBivariation& f_cert) {
    const double base = delta11_of(u, q) * inf_f;
    return TwoSidedBound{base + s_u * f_cert.V, base + S_u * f_cert.V};
}

double bound_aleph_holder_bv(const Rect& q, const Holder& f_cert,
                             const BoundedBivariation& g_cert) {
    const double t1 = f_cert.H1 * std::pow(q.width(), f_cert.beta1) /
                      (std::pow(2.0, f_cert.beta1 + 1.0) * (f_cert.beta1 + 1.0));
    const double t2 = f_cert.H2 * std::pow(q.height(), f_cert.beta2) /
                      (std::pow(2.0, f_cert.beta2 + 1.0) * (f_cert.beta2 + 1.0));
    return (t1 + t2) * g_cert.V;
}

double bound_aleph_holder_bimonotone(const Rect& q, const Holder& f_cert,
                                     double delta11_g) {
    const double t1 = f_cert.H1 * std::pow(q.width(), f_cert.beta1) / (f_cert.beta1 + 1.0);
    const double t2 = f_cert.H2 * std::pow(q.height(), f_cert.beta2) / (f_cert.beta2 + 1.0);
    return (t1 + t2) * delta11_g;
}

double bound_aleph_bv_bv(const BoundedBivariation& f_cert, const BoundedBivariation& g_cert) {
    return f_cert.V * g_cert.V;
}

double bound_psi_corners(const Surface& f, const Rect& q, const BoundedBivariation& u_cert) {
    const double fac = f(q.a, q.c), fad = f(q.a, q.d);
    const double fbc = f(q.b, q.c), fbd = f(q.b, q.d);
    const double spread = std::max({std::fabs(fbd - fac), std::fabs(fbc - fad),
                                    std::fabs(fad - fbd), std::fabs(fac - fbc)});
    return spread * u_cert.V;
}

double bound_psi_holder(const Rect& q, const Holder& f_cert, const BoundedBivariation& u_cert) {
    return (f_cert.H1 * std::pow(q.width(), f_cert.beta1) / (f_cert.beta1 + 1.0) +
            f_cert.H2 * std::pow(q.height(), f_cert.beta2) / (f_cert.beta2 + 1.0)) *
           u_cert.V;
}

TwoSidedBound bound_range_E(const Surface& f, const Surface& u, const Rect& q,
                            const PartialRange& f_cert) {
    const double m = std::min(f_cert.m1, f_cert.m2);
    const double M = std::max(f_cert.M1, f_cert.M2);
    const double fac = f(q.a, q.c), fad = f(q.a, q.d);
    const double fbc = f(q.b, q.c), fbd = f(q.b, q.d);
    const double uac = u(q.a, q.c), uad = u(q.a, q.d);
    const double ubc = u(q.b, q.c), ubd = u(q.b, q.d);

    TwoSidedBound b{};
    b.lower = -(fbd - fac) * (ubd - uac) -
              (f_cert.M1 - fad + f_cert.M2 - m) * (ubd - ubc) -
              (f_cert.M2 - fbc + f_cert.M1 - m) * (ubd - uad);
    b.upper = (fbd - fac) * (ubd - uac) +
              (f_cert.m1 - fad + f_cert.m2 - M) * (ubc - uac) +
              (f_cert.m2 - fbc + f_cert.m1 - M) * (uad - uac);
    return b;
}

double bound_corner_growth_bv(const Rect& q, const CornerGrowth& f_cert,
                              const BoundedBivariation& u_cert) {
    const double horizontal = f_cert.La * std::pow(q.width(), f_cert.alpha1) +
                              f_cert.Lb * std::pow(q.width(), f_cert.beta1);
    const double vertical = f_cert.Lc * std::pow(q.height(), f_cert.alpha2) +
                            f_cert.Ld * std::pow(q.height(), f_cert.beta2);
    return 4.0 * std::max(horizontal, vertical) * u_cert.V;
}

double bound_corner_growth_bimonotone(const Rect& q, const CornerGrowth& f_cert,
                                      const Surface& u) {
    const double up = u(q.b, q.d) - u(q.a, q.d);
    const double low = u(q.b, q.c) - u(q.a, q.c);
    const double horizontal = 2.0 * f_cert.La * std::pow(q.width(), f_cert.alpha1) * up -
                              2.0 * f_cert.Lb * std::pow(q.width(), f_cert.beta1) * low;
    const double vertical = 2.0 * f_cert.Lc * std::pow(q.height(), f_cert.alpha2) * up -
                            2.0 * f_cert.Ld * std::pow(q.height(), f_cert.beta2) * low;
    return std::max(horizontal, vertical);
}

double bound_ef_bv(const BoundedBivariation& f_cert, const BoundedBivariation& u_cert) {
    return f_cert.V * u_cert.V;
}

double bound_ef_bimonotone(const Surface& u, const Rect& q,
                           const BoundedBivariation& f_cert) {
    return delta11_of(u, q) * f_cert.V;
}

double bound_trapfunc_holder_bv(const Rect& q, const Holder& f_cert,
                                const BoundedBivariation& u_cert) {
    return (f_cert.H1 * std::pow(0.5 * q.width(), f_cert.beta1) +
            f_cert.H2 * std::pow(0.5 * q.height(), f_cert.beta2)) *
           u_cert.V;
}

double bound_trapfunc_lipschitz_bv(const Rect& q, const Lipschitz& f_cert,
                                   const BoundedBivariation& u_cert) {
    return 0.5 * (f_cert.L1 * q.width() + f_cert.L2 * q.height()) * u_cert.V;
}

double bound_trapfunc_holder_bimonotone(const Rect& q, const Holder& f_cert,
                                        const Surface& u) {
    const double h1 = 0.5 * f_cert.H1 * std::pow(q.width(), f_cert.beta1);
    const double h2 = 0.5 * f_cert.H2 * std::pow(q.height(), f_cert.beta2);
    const double first = (h1 + h2) * delta11_of(u, q);
    const double second = (h1 * q.height() + h2 * q.width()) *
                          (u(q.b, q.d) - u(q.a, q.c));
    return first + second;
}

} // namespace stieltjes2d
