#pragma once

#include "stieltjes2d/grid.hpp"
#include "stieltjes2d/surface.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace stieltjes2d {

// Refinement record of the brute-force oracle. levels holds the RS sum
// per dyadic level, deltas the successive differences.
struct OracleReport {
    double value = 0;
    std::vector<double> levels;
    std::vector<double> deltas;
    bool converged = false;
    double error_estimate = 0; // |last delta| x 2

    std::size_t finest_cells_per_axis = 0;
};

// Fréchet double sum  S = sum f(tag_ij) * Delta11 u(cell_ij).
double rs_double_sum(const Surface& f, const Surface& u, const GridPartition& p);

// Dyadic uniform refinement with cell-midpoint tags until the change
// between consecutive levels drops below tol*max(1,|value|) or the cell
// cap is hit. The cap is per axis; STIELTJES2D_MAX_CELLS overrides it.
OracleReport rs_oracle(const Surface& f, const Surface& u, const Rect& q, double tol,
                       std::size_t max_cells_per_axis = 0);

// One-dimensional refinement oracle for int w dg along a segment.
double rs_oracle_1d(const std::function<double(double)>& w,
                    const std::function<double(double)>& g, double lo, double hi,
                    double tol, std::size_t max_cells = 1u << 20);

struct PartsReport {
    double lhs = 0;         // int f du - int u df
    double rhs = 0;         // corner term minus the four edge terms
    double corner_term = 0; // Delta11(f*u)(Q)
    double edge_term = 0;   // the four 1D edge Stieltjes integrals
    double residual = 0;    // |lhs - rhs|
    bool converged = false;
};

// Two-variable integration by parts. The corner combination alone does
// not close the identity (the f = t, u = s fixture arbitrates); the
// working form is
//   int f du - int u df = Delta11(fu)(Q)
//       - int_a^b u(t,d) d_t f(t,d) + int_a^b u(t,c) d_t f(t,c)
//       - int_c^d u(b,s) d_s f(b,s) + int_c^d u(a,s) d_s f(a,s).
PartsReport integration_by_parts(const Surface& f, const Surface& u, const Rect& q,
                                 double tol);

} // namespace stieltjes2d
