#pragma once

#include "stieltjes2d/rs_integral.hpp"
#include "stieltjes2d/surface.hpp"

namespace stieltjes2d {

// Error functionals whose a-priori bounds live in bounds.hpp. Each is
// evaluated through the refinement oracle so certification stays
// independent of the bound formulas.

// omega(f,u,m,M;Q) = int f du - (m+M)/2 * Delta11 u(Q).
double omega_functional(const Surface& f, const Surface& u, const Rect& q, double m,
                        double M, double tol);

// Theta(f,u;x,a,b;y,c,d) = Delta11 u(Q) * f(x,y) - int f du.
double theta_functional(const Surface& f, const Surface& u, const Rect& q, double x,
                        double y, double tol);

// aleph(f,g,Q) = int f dg - [Delta11 g(Q)/area] * int f dt ds.
double aleph_functional(const Surface& f, const Surface& g, const Rect& q, double tol);

// psi_f(t,s) = f(t,s) - phi_f(t,s)/area, the deviation of f from the
// corner cross-blend; its corner values are the corner spreads of f.
Surface psi_surface(const Surface& f, const Rect& q);

// int psi_f d u, by the oracle on the explicit psi surface.
double psi_error_integral(const Surface& f, const Surface& u, const Rect& q, double tol);

// Quadrant-kernel integrand of E(f,u;Q): the (1/area)-scaled sum of the
// four signed corner-difference products around (t,s).
Surface ef_kernel_surface(const Surface& f, const Rect& q);

// E(f,u;Q) = int e_f(t,s) d_t d_s u(t,s) and its dual
// F(f,u;Q) = int e_u(t,s) d_t d_s f(t,s).
double ef_functional_E(const Surface& f, const Surface& u, const Rect& q, double tol);
double ef_functional_F(const Surface& f, const Surface& u, const Rect& q, double tol);

} // namespace stieltjes2d
