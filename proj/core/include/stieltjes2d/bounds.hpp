#pragma once

#include "stieltjes2d/certificates.hpp"
#include "stieltjes2d/geometry.hpp"
#include "stieltjes2d/surface.hpp"

#include <array>
#include <string>

namespace stieltjes2d {

// Theorem families of the a-priori bound catalog. Dispatch is by this
// key; two source theorems share a printed number, so names, not
// numbers, identify them.
enum class BoundKind {
    OstrowskiBV,
    OstrowskiHolderU,
    CompanionBV,
    TrapezoidBV,
    SimpsonBV,
    OmegaRange,
    ThetaQuadrant,
    BdpUpper,
    BdpLower,
    FunctionalHolderBV,
    FunctionalHolderBimono,
    FunctionalBVBV,
    PsiCorners,
    PsiHolder,
    RangeE,
    CornerGrowthBV,
    CornerGrowthBimono,
    EF_BV,
    EF_Bimono,
    TrapFuncHolderBV,
    TrapFuncLipschitzBV,
    TrapFuncHolderBimono,
};

std::string to_string(BoundKind k);

// |area(q) f(x,y) - int f| <= [(b-a)/2 + |x-mid|][(d-c)/2 + |y-mid|] V(f).
double bound_ostrowski(const Rect& q, double x, double y, const BoundedBivariation& f_cert);

// |Delta11 u(Q) f(x,y) - int f du| <= (H1 [..]^b1 + H2 [..]^b2) V(u),
// with the Holder data describing the integrand f.
double bound_ostrowski_holder(const Rect& q, double x, double y, const Holder& f_cert,
                              const BoundedBivariation& u_variation);

// |(area/4) Delta11 f(Q) - int f| <= (area/4) V(f). The constant 1/4 is
// best possible.
double bound_trapezoid(const Rect& q, const BoundedBivariation& f_cert);

// Simpson-type combination: (area/9) V(f).
double bound_simpson(const Rect& q, const BoundedBivariation& f_cert);

// Companion four-point rule: [(b-a)/4 + |x-(3a+b)/4|][(d-c)/4 + |y-(3c+d)/4|] V(f).
double bound_companion(const Rect& q, double x, double y, const BoundedBivariation& f_cert);

// |omega(f,u,m,M;Q)| <= (M-m)/2 * V(u).
double bound_omega(const BoundedBivariation& u_cert, const Range& f_cert);

// Theta functional: four quadrant terms, Holder data of u against the
// quadrant bivariations of f in rect_split order (SW, SE, NW, NE).
double bound_theta(const Rect& q, double x, double y, const Holder& u_cert,
                   const std::array<double, 4>& f_quadrant_variation);

// Beesack-Darst-Pollard two-sided pair:
//   lower = Delta11 u(Q) inf f + s(u;Q) V(f) <= int f du <= Delta11 u(Q) inf f + S(u;Q) V(f).
struct TwoSidedBound {
    double lower, upper;
};

TwoSidedBound bound_bdp(const Surface& u, const Rect& q, double inf_f, double S_u,
                        double s_u, const BoundedBivariation& f_cert);

// aleph(f,g,Q) bounds, one per certificate pairing.
double bound_aleph_holder_bv(const Rect& q, const Holder& f_cert,
                             const BoundedBivariation& g_cert);
double bound_aleph_holder_bimonotone(const Rect& q, const Holder& f_cert,
                                     double delta11_g);
double bound_aleph_bv_bv(const BoundedBivariation& f_cert, const BoundedBivariation& g_cert);

// int psi_f du bounds: corner-spread and Holder variants.
double bound_psi_corners(const Surface& f, const Rect& q, const BoundedBivariation& u_cert);
double bound_psi_holder(const Rect& q, const Holder& f_cert, const BoundedBivariation& u_cert);

// E(f,u;Q) two-sided range bound from slice-wise bounds of f, for
// bimonotonically nondecreasing u. Implemented exactly as displayed; the
// constant-f fixture pins the signs.
TwoSidedBound bound_range_E(const Surface& f, const Surface& u, const Rect& q,
                            const PartialRange& f_cert);

// Corner-growth bounds for E (dual statements hold for F with roles swapped).
double bound_corner_growth_bv(const Rect& q, const CornerGrowth& f_cert,
                              const BoundedBivariation& u_cert);
double bound_corner_growth_bimonotone(const Rect& q, const CornerGrowth& f_cert,
                                      const Surface& u);

// E/F bounds for bivariation / bimonotone integrators.
double bound_ef_bv(const BoundedBivariation& f_cert, const BoundedBivariation& u_cert);
double bound_ef_bimonotone(const Surface& u, const Rect& q,
                           const BoundedBivariation& f_cert);

// T(f,u;Q) bounds.
double bound_trapfunc_holder_bv(const Rect& q, const Holder& f_cert,
                                const BoundedBivariation& u_cert);
double bound_trapfunc_lipschitz_bv(const Rect& q, const Lipschitz& f_cert,
                                   const BoundedBivariation& u_cert);
double bound_trapfunc_holder_bimonotone(const Rect& q, const Holder& f_cert,
                                        const Surface& u);

} // namespace stieltjes2d
