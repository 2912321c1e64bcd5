#pragma once

#include "stieltjes2d/certificates.hpp"
#include "stieltjes2d/geometry.hpp"
#include "stieltjes2d/surface.hpp"

namespace stieltjes2d {

// Korkine identity residual:
//   | area*M2(fg) - M2(f)M2(g) - (1/2) quadruple integral of the
//     increment product over Q x Q |
// The quadruple integral is a tensor of two Gauss-Legendre grids, an
// independent route from the product-of-means side.
double korkine_residual(const Surface& f, const Surface& g, const Rect& q, double tol);

enum class ChebyshevMethod { Direct, Kernel };

struct ChebyshevReport {
    double T_value = 0;  // M(fg) - M(f)M(g)
    double mean_f = 0;
    double mean_g = 0;
    double bound = 0; // Gruss bound from sampled ranges
    ChebyshevMethod method = ChebyshevMethod::Direct;
    double T_korkine = 0;          // same functional through the Korkine route
    double route_disagreement = 0; // |T_value - T_korkine|
    double shift_identity_residual = 0; // |T(f,g) - M(S(f) g)|
};

ChebyshevReport chebyshev(const Surface& f, const Surface& g, const Rect& q, double tol);

// |T(f,g)| <= (1/4)(Phi - phi)(Gamma - gamma); 1/4 is best possible.
double gruss_bound(const Range& f_cert, const Range& g_cert);

enum class GrussLipschitzVariant {
    Euclidean,        // |T| <= (L1 L2 / 12)[(b-a)^2 + (d-c)^2]
    ProductIncrement, // |T| <= (L1 L2 / 36)(d-c)^4 (b-a)^4, as printed
};

double gruss_lipschitz_bounds(double L1, double L2, const Rect& q,
                              GrussLipschitzVariant variant);

// Peano-kernel route for the Chebyshev functional. The kernel psi
// vanishes at the four corners and has mixed derivative
// area*g(t,s) - int g, so -1/area^2 * int f psi_ts recovers T(f,g).
struct ChebyKernelReport {
    double T_via_kernel = 0;
    double residual_vs_direct = 0;
    // Bound triple in the printed order: sup psi x variation, Lipschitz,
    // bimonotone. Reported values, not certified inequalities.
    double bound_sup_variation = 0;
    double bound_lipschitz = 0;
    double bound_bimonotone = 0;
};

ChebyKernelReport cheby_kernel_psi(const Surface& f, const Surface& g, const Rect& q,
                                   double tol, double f_variation = 0,
                                   double f_lipschitz = 0);

// The kernel surface itself (corners vanish).
Surface cheby_psi_surface(const Surface& g, const Rect& q, double tol);

// Weighted Chebyshev functional and its kernel Psi = P G* - P* G.
struct WeightedChebyshevReport {
    double value = 0;   // Im(f,g;p)
    double total_weight = 0; // P(b,d)
    double bound_sup_variation = 0;
    double bound_lipschitz = 0;
    double bound_bimonotone = 0;
};

WeightedChebyshevReport weighted_chebyshev(const Surface& f, const Surface& g,
                                           const Surface& p, const Rect& q, double tol,
                                           double f_variation = 0, double f_lipschitz = 0);

Surface weighted_psi_surface(const Surface& g, const Surface& p, const Rect& q,
                             double tol);

// |aleph(f,g,Q)| <= (1/2)(M - m) area(q) for L-Lipschitz g; the printed
// constant does not involve L. The intermediate display L int|f - M(f)|
// can be tighter; both values are reported.
struct AlephGrussBound {
    double printed = 0;
    double intermediate = 0; // L * int |f - M(f)|
    bool intermediate_tighter = false;
};

AlephGrussBound aleph_gruss_bound(const Range& f_cert, double g_lipschitz,
                                  const Surface& f, const Rect& q, double tol);

} // namespace stieltjes2d
