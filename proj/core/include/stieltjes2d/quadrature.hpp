#pragma once

#include "stieltjes2d/geometry.hpp"
#include "stieltjes2d/surface.hpp"

#include <functional>
#include <stdexcept>

namespace stieltjes2d {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Simpson on [lo, hi] to absolute tolerance tol.
double integrate_1d(const std::function<double(double)>& f, double lo, double hi,
                    double tol = 1e-10);

// Double integral of f over cell. Uses the surface's closed-form cell
// integral when present, otherwise iterated adaptive Simpson.
double integrate_2d(const Surface& f, const SubRect& cell, double tol = 1e-10);

// Iterated adaptive Simpson for a plain callable (no metadata).
double integrate_2d(const std::function<double(double, double)>& f, const SubRect& cell,
                    double tol = 1e-10);

// Fixed composite 5-node Gauss-Legendre, exact for polynomials of degree
// <= 9 per variable on each panel. The 4D Korkine integral tensors two of
// these, so polynomial fixtures evaluate exactly.
double gauss5_integrate_2d(const std::function<double(double, double)>& f,
                           const SubRect& cell, int panels_per_axis = 4);

// Mean of f along the horizontal edge s = y0 resp. vertical edge t = x0.
double edge_mean_x(const Surface& f, double a, double b, double y0, double tol = 1e-10);
double edge_mean_y(const Surface& f, double c, double d, double x0, double tol = 1e-10);

} // namespace stieltjes2d
