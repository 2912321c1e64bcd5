#pragma once

#include "stieltjes2d/geometry.hpp"
#include "stieltjes2d/surface.hpp"

#include <array>
#include <vector>

namespace stieltjes2d {

// Partial-derivative data of order n: the (n-j, j) family entering the
// corner-correction sum, plus the (n,n) mixed partial that drives the
// kernel remainder. Supplied partials come from Surface metadata when
// present, otherwise from central differences; either way they are
// validated against finite differences of f at interior probe points.
class DnField {
public:
    DnField(const Surface& f, const Rect& q, int n);

    int order() const { return n_; }
    const Surface& source() const { return f_; }

    // Mixed order (n-j, j), j = 0..n. For n = 0 this is f itself.
    const Surface& partial(int j) const;

    // Mixed order (n,n), the integrator of the kernel remainder.
    const Surface& mixed() const { return mixed_; }

private:
    Surface f_;
    int n_;
    std::vector<Surface> partials_;
    Surface mixed_;
};

// Numeric mixed partial of order (i,j), metadata-backed when available.
Surface derivative_surface(const Surface& f, const Rect& q, int i, int j);

// A_n(f,Q) at (x,y): bilinear corner blend plus the corner-derivative
// correction sum, exactly as displayed. For n = 0 it is the pure blend.
double taylor_blend_An(const Surface& f, const DnField& dn, const Rect& q, double x,
                       double y);

// B_n(f,Q) at (x,y): kernel remainder over the four quadrants around
// (x,y). Signs follow the assembled remainder (the two mixed quadrants
// carry (-1)^{n+1}) and the normalization is 1/(n!^2 area); both choices
// are pinned by the representation identity A_n + B_n = f.
double taylor_remainder_Bn(const Surface& f, const DnField& dn, const Rect& q, double x,
                           double y, double tol);

// Same quantity through the raw refinement oracle (slower; used to
// cross-check the by-parts evaluation).
double taylor_remainder_Bn_oracle(const Surface& f, const DnField& dn, const Rect& q,
                                  double x, double y, double tol);

struct TaylorMidpoint {
    double E_M; // corner/derivative sum
    double F_M; // kernel remainder at the midpoint
};

// f(mid) = E_M + F_M.
TaylorMidpoint taylor_midpoint(const Surface& f, const DnField& dn, const Rect& q,
                               double tol);

enum class TaylorBoundFamily {
    BVQuadrants,        // four quadrant variations of the kernel integrator
    BVWhole,            // whole-rectangle variation weakening (n >= 1)
    MidpointBV,         // (b-a)^n (d-c)^n / (2^{2n+2} n!) * V
    LipschitzQuadrants, // L1..L4 per quadrant
    LipschitzWhole,
    AbsContinuousLinf, // L_infty norms of the (n+1,n+1) mixed partial
    AbsContinuousLp,
    AbsContinuousL1,
};

struct TaylorBoundInput {
    // Quadrant data in rect_split order (SW, SE, NW, NE).
    std::array<double, 4> quadrant_variation{};
    std::array<double, 4> quadrant_lipschitz{};
    std::array<double, 4> quadrant_norm{};
    double total_variation = 0;
    double lipschitz = 0;
    double p = 2; // exponent of the L_p family
};

double taylor_bounds(const Rect& q, int n, double x, double y, TaylorBoundFamily family,
                     const TaylorBoundInput& in);

} // namespace stieltjes2d
