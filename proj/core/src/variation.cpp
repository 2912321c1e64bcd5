#include "stieltjes2d/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stieltjes2d {

namespace {

std::vector<double> node_values(const Surface& f, const Rect& q, std::size_t n) {
    const auto xs = GridPartition::linspace(q.a, q.b, n);
    const auto ys = GridPartition::linspace(q.c, q.d, n);
    std::vector<double> v((n + 1) * (n + 1));
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n; ++i)
            v[j * (n + 1) + i] = f(xs[i], ys[j]);
    return v;
}

double vitali_sum_nodes(const std::vector<double>& v, std::size_t n) {
    double sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        double row = 0;
        for (std::size_t i = 0; i < n; ++i)
            row += std::fabs(v[j * (n + 1) + i] - v[(j + 1) * (n + 1) + i] -
                             v[j * (n + 1) + i + 1] + v[(j + 1) * (n + 1) + i + 1]);
        sum += row;
    }
    return sum;
}

double arzela_dp_nodes(const std::vector<double>& v, std::size_t n) {
    // Best chain value reaching node (i,j) with unit right/up steps.
    // Inserting points never decreases a chain sum, so lattice staircases
    // dominate all increasing chains on the grid.
    std::vector<double> prev(n + 1), cur(n + 1);
    prev[0] = 0;
    for (std::size_t i = 1; i <= n; ++i)
        prev[i] = prev[i - 1] + std::fabs(v[i] - v[i - 1]);
    for (std::size_t j = 1; j <= n; ++j) {
        cur[0] = prev[0] + std::fabs(v[j * (n + 1)] - v[(j - 1) * (n + 1)]);
        for (std::size_t i = 1; i <= n; ++i) {
            const double from_left = cur[i - 1] + std::fabs(v[j * (n + 1) + i] - v[j * (n + 1) + i - 1]);
            const double from_below = prev[i] + std::fabs(v[j * (n + 1) + i] - v[(j - 1) * (n + 1) + i]);
            cur[i] = std::max(from_left, from_below);
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

VariationEstimate refine(const Surface& f, const Rect& q, double tol, int level_cap,
                         double (*level_value)(const std::vector<double>&, std::size_t)) {
    if (!(tol > 0)) throw std::invalid_argument("variation estimate: tol must be > 0");
    VariationEstimate est;
    std::size_t n = 2;
    for (int level = 0; level < level_cap; ++level, n *= 2) {
        const double s = level_value(node_values(f, q, n), n);
        est.levels.push_back(s);
        est.resolution = n;
        if (est.levels.size() > 1) {
            const double prev = est.levels[est.levels.size() - 2];
            if (s - prev <= tol * std::max(1.0, std::fabs(s))) {
                est.value = s;
                est.converged = true;
                return est;
            }
        }
    }
    est.value = est.levels.back();
    est.converged = false;
    return est;
}

} // namespace

double vitali_sum(const Surface& f, const GridPartition& p) {
    double sum = 0;
    for (std::size_t j = 0; j < p.ny(); ++j) {
        double row = 0;
        for (std::size_t i = 0; i < p.nx(); ++i)
            row += std::fabs(delta11(f, p.cell(i, j)));
        sum += row;
    }
    return sum;
}

VariationEstimate vitali_bivariation(const Surface& f, const Rect& q, double tol,
                                     int level_cap) {
    return refine(f, q, tol, level_cap, &vitali_sum_nodes);
}

VariationEstimate arzela_variation(const Surface& f, const Rect& q, double tol,
                                   int level_cap) {
    return refine(f, q, tol, level_cap, &arzela_dp_nodes);
}

BimonotoneReport bimonotone_check(const Surface& f, const Rect& q, std::size_t n) {
    if (n < 2) throw std::invalid_argument("bimonotone_check: n must be >= 2");
    const auto v = node_values(f, q, n);
    double scale = 0;
    for (double x : v) scale = std::max(scale, std::fabs(x));
    const double eps = 1e-12 * std::max(1.0, scale);

    bool any_pos = false, any_neg = false;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const double d = v[j * (n + 1) + i] - v[(j + 1) * (n + 1) + i] -
                             v[j * (n + 1) + i + 1] + v[(j + 1) * (n + 1) + i + 1];
            if (d > eps) any_pos = true;
            if (d < -eps) any_neg = true;
        }

    BimonotoneReport rep;
    if (any_pos && any_neg) {
        rep.cls = BimonotoneReport::Class::Neither;
    } else if (!any_pos && !any_neg) {
        // Flat: bimonotonically increasing and decreasing at once;
        // reported as Increasing with the flat flag.
        rep.cls = BimonotoneReport::Class::Increasing;
        rep.flat = true;
    } else {
        rep.cls = any_pos ? BimonotoneReport::Class::Increasing
                          : BimonotoneReport::Class::Decreasing;
    }
    return rep;
}

RegularityCertificate estimate_constants(const Surface& f, const Rect& q,
                                         ConstantKind kind, std::size_t samples,
                                         double beta1, double beta2) {
    if (samples < 64)
        throw std::invalid_argument("estimate_constants: need at least 64 samples");

    // Deterministic low-discrepancy points: 2D Kronecker sequence from the
    // plastic ratio, plus the grid corners.
    constexpr double a1 = 0.7548776662466927; // 1/rho
    constexpr double a2 = 0.5698402909980532; // 1/rho^2
    std::vector<std::pair<double, double>> pts;
    pts.reserve(samples + 4);
    for (std::size_t k = 1; k <= samples; ++k) {
        const double u = std::fmod(0.5 + a1 * static_cast<double>(k), 1.0);
        const double v = std::fmod(0.5 + a2 * static_cast<double>(k), 1.0);
        pts.emplace_back(q.a + u * q.width(), q.c + v * q.height());
    }
    pts.emplace_back(q.a, q.c);
    pts.emplace_back(q.a, q.d);
    pts.emplace_back(q.b, q.c);
    pts.emplace_back(q.b, q.d);

    const double inflate = 1.25;
    // Estimation resolution: the mean spacing of the sample cloud.
    const double resolution = std::max(q.width(), q.height()) /
                              std::sqrt(static_cast<double>(samples));

    if (kind == ConstantKind::Range) {
        double lo = pts.front().second, hi = lo;
        lo = hi = f(pts.front().first, pts.front().second);
        for (const auto& [x, y] : pts) {
            const double v = f(x, y);
            if (!std::isfinite(v))
                throw std::runtime_error("estimate_constants: non-finite evaluation");
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return RegularityCertificate::estimated(Range{lo, hi}, resolution);
    }

    const double b1 = (kind == ConstantKind::Lipschitz) ? 1.0 : beta1;
    const double b2 = (kind == ConstantKind::Lipschitz) ? 1.0 : beta2;

    // Coordinate-increment ratio maxima: pairs sharing one coordinate.
    double H1 = 0, H2 = 0;
    const std::size_t stride = 7;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& [x, y] = pts[k];
        for (std::size_t l = k + 1; l < std::min(pts.size(), k + 1 + stride); ++l) {
            const double x2 = pts[l].first, y2 = pts[l].second;
            const double dfx = std::fabs(f(x2, y) - f(x, y));
            if (std::fabs(x2 - x) > 1e-14)
                H1 = std::max(H1, dfx / std::pow(std::fabs(x2 - x), b1));
            const double dfy = std::fabs(f(x, y2) - f(x, y));
            if (std::fabs(y2 - y) > 1e-14)
                H2 = std::max(H2, dfy / std::pow(std::fabs(y2 - y), b2));
            if (!std::isfinite(dfx) || !std::isfinite(dfy))
                throw std::runtime_error("estimate_constants: non-finite evaluation");
        }
    }
    if (kind == ConstantKind::Lipschitz)
        return RegularityCertificate::estimated(Lipschitz{H1 * inflate, H2 * inflate},
                                                resolution);
    return RegularityCertificate::estimated(Holder{H1 * inflate, H2 * inflate, b1, b2},
                                            resolution);
}

BdpSupInf bdp_sup_inf(const Surface& u, const Rect& q, std::size_t n) {
    if (n < 2) throw std::invalid_argument("bdp_sup_inf: n must be >= 2");
    n = std::min<std::size_t>(n, 64);

    auto scan = [&](std::size_t m, BdpSupInf& out) {
        const auto xs = GridPartition::linspace(q.a, q.b, m);
        const auto ys = GridPartition::linspace(q.c, q.d, m);
        const auto v = node_values(u, q, m);
        // Degenerate sub-rectangles contribute 0.
        out.S = 0;
        out.s = 0;
        out.arg_max = SubRect{q.a, q.a, q.c, q.c};
        out.arg_min = SubRect{q.a, q.a, q.c, q.c};
        for (std::size_t i0 = 0; i0 < m; ++i0)
            for (std::size_t i1 = i0 + 1; i1 <= m; ++i1)
                for (std::size_t j0 = 0; j0 < m; ++j0)
                    for (std::size_t j1 = j0 + 1; j1 <= m; ++j1) {
                        const double d = v[j0 * (m + 1) + i0] - v[j1 * (m + 1) + i0] -
                                         v[j0 * (m + 1) + i1] + v[j1 * (m + 1) + i1];
                        if (d > out.S) {
                            out.S = d;
                            out.arg_max = SubRect{xs[i0], xs[i1], ys[j0], ys[j1]};
                        }
                        if (d < out.s) {
                            out.s = d;
                            out.arg_min = SubRect{xs[i0], xs[i1], ys[j0], ys[j1]};
                        }
                    }
    };

    BdpSupInf coarse, fine;
    scan(n, coarse);
    const std::size_t n2 = std::min<std::size_t>(2 * n, 64);
    if (n2 > n) {
        scan(n2, fine);
        const double scale = std::max({1.0, std::fabs(fine.S), std::fabs(fine.s)});
        fine.stable = std::fabs(fine.S - coarse.S) + std::fabs(fine.s - coarse.s) <
                      1e-6 * scale;
        return fine;
    }
    coarse.stable = true;
    return coarse;
}

} // namespace stieltjes2d
