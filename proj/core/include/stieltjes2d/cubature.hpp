#pragma once

#include "stieltjes2d/errors.hpp"
#include "stieltjes2d/grid.hpp"
#include "stieltjes2d/rs_integral.hpp"
#include "stieltjes2d/surface.hpp"

#include <string>

namespace stieltjes2d {

// Dispatch key for rules and the bound catalog.
enum class RuleId {
    OstrowskiPoint,
    Trapezoid4,
    MidpointRS,
    Simpson9,
    Companion4,
    TrapezoidFunctional,
    RiemannComposite,
    RsComposite,
    MercerBracket,
};

std::string to_string(RuleId id);

// One-point estimate of the Riemann double integral: area(q) * f(x,y).
double ostrowski_point_rule(const Surface& f, const Rect& q, double x, double y);

// Corner weights of the RS-trapezoid rule, sign-folded so the rule value
// is A f(a,c) + B f(a,d) + C f(b,c) + D f(b,d). Each weight combines g at
// a corner, two averaged edge integrals of g, and the double mean of g.
struct TrapezoidWeights {
    double A, B, C, D;
    double sum() const { return A + B + C + D; }
};

TrapezoidWeights rs_trapezoid_weights(const Surface& g, const Rect& q,
                                      double quadrature_tol = 1e-10);

// RS-trapezoid rule, exact for f in {1, x, y, xy}.
double rs_trapezoid_rule(const Surface& f, const Surface& g, const Rect& q,
                         double quadrature_tol = 1e-10);

// RS-midpoint rule, exact for f in {1, x, y}: Delta11 g(Q) * f(t,s) with the
// node (t,s) given by the edge-integral quotient formulas.
struct MidpointResult {
    double value;
    double t, s;
};

MidpointResult rs_midpoint_rule(const Surface& f, const Surface& g, const Rect& q,
                                double quadrature_tol = 1e-10);

// The node alone (shared with the Mercer lower bound).
std::pair<double, double> rs_midpoint_node(const Surface& g, const Rect& q,
                                           double quadrature_tol = 1e-10);

// Simpson-type combination, exactly as printed including its
// non-normalization for constants (the combination maps f = 1 to
// (4/9) area(q), not area(q)).
double simpson_rule(const Surface& f, const Rect& q);

// Symmetric four-point average: (area/4)[f(x,y) + f(a+b-x,y) + f(x,c+d-y)
// + f(a+b-x,c+d-y)] for x,y in the lower half-ranges.
double companion_rule(const Surface& f, const Rect& q, double x, double y);

// T(f,u;Q): corner-average of f times Delta11 u minus the RS integral,
// evaluated against the refinement oracle.
double trapezoid_functional(const Surface& f, const Surface& u, const Rect& q,
                            double tol);

// Riemann sum R(f, I_n, J_m, xi, eta) over a restricted-tagged partition.
double composite_riemann(const Surface& f, const GridPartition& p);

// Composite RS rule: sum over cells of [Delta11 g(cell)/area(cell)] times
// the cell integral of f.
double composite_rs(const Surface& f, const Surface& g, const GridPartition& p,
                    double tol);

// Two-sided bracket around the RS integral for increasing smooth g and f
// with nonnegative mixed second partial: midpoint value below, trapezoid
// combination above. Nodes are found by bisection on the defining edge
// integral equations; tol applies to the defining-equation residual.
struct MercerBracketResult {
    double lower, upper;
    double t, s;
};

MercerBracketResult mercer_bracket(const Surface& f, const Surface& g, const Rect& q,
                                   double tol);

} // namespace stieltjes2d
