#pragma once

#include "stieltjes2d/certificates.hpp"
#include "stieltjes2d/grid.hpp"
#include "stieltjes2d/surface.hpp"

#include <cstddef>
#include <vector>

namespace stieltjes2d {

// Lower estimate of a variation supremum obtained by dyadic refinement.
// Vitali sums are nondecreasing under refinement, so value is the last
// (largest) level sum.
struct VariationEstimate {
    double value = 0;
    std::vector<double> levels;
    bool converged = false;
    std::size_t resolution = 0; // finest cells per axis
};

// Exact double sum of |delta11| over the partition cells.
double vitali_sum(const Surface& f, const GridPartition& p);

// Dyadic refinement of vitali_sum until the relative increase between
// consecutive levels drops below tol, or level_cap is exhausted.
VariationEstimate vitali_bivariation(const Surface& f, const Rect& q, double tol,
                                     int level_cap = 10);

// Arzela variation: supremum of sum |f(p_k) - f(p_{k-1})| over increasing
// chains from (a,c) to (b,d), estimated by a monotone-lattice-path dynamic
// program per dyadic level.
VariationEstimate arzela_variation(const Surface& f, const Rect& q, double tol,
                                   int level_cap = 10);

struct BimonotoneReport {
    enum class Class { Increasing, Decreasing, Neither };
    Class cls = Class::Neither;
    bool flat = false; // delta11 vanished identically on the test grid
};

// Classifies by the sign of delta11 over all n x n grid cells.
BimonotoneReport bimonotone_check(const Surface& f, const Rect& q, std::size_t n);

enum class ConstantKind { Range, Lipschitz, Holder };

// Sampled regularity constants. Lipschitz and Holder maxima are inflated
// by 1.25 and marked Estimated; Range is reported as sampled.
RegularityCertificate estimate_constants(const Surface& f, const Rect& q,
                                         ConstantKind kind, std::size_t samples,
                                         double beta1 = 1.0, double beta2 = 1.0);

// S(u;Q) and s(u;Q): extrema of delta11 over all sub-rectangles of an
// n x n grid. Degenerate sub-rectangles contribute 0, so S >= 0 >= s.
struct BdpSupInf {
    double S = 0;
    double s = 0;
    SubRect arg_max{0, 0, 0, 0};
    SubRect arg_min{0, 0, 0, 0};
    bool stable = false; // one refinement changed the extrema by < 1e-6 relative
};

BdpSupInf bdp_sup_inf(const Surface& u, const Rect& q, std::size_t n);

} // namespace stieltjes2d
