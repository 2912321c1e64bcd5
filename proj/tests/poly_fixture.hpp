#pragma once

// Bivariate polynomial surfaces with full analytic metadata: partials,
// closed-form cell integrals, exact corner data. The acceptance sweep
// leans on these so certificates are tight and reference values exact.

#include "stieltjes2d/surface.hpp"

#include <array>
#include <cmath>
#include <random>

namespace fixtures {

// f(t,s) = sum c[i][j] t^i s^j, degree <= 3 per variable.
struct Poly33 {
    std::array<std::array<double, 4>, 4> c{};

    double eval(double t, double s) const {
        double acc = 0;
        for (int i = 3; i >= 0; --i) {
            double row = 0;
            for (int j = 3; j >= 0; --j) row = row * s + c[i][j];
            acc = acc * t + row;
        }
        return acc;
    }

    Poly33 d_t() const {
        Poly33 d{};
        for (int i = 1; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) d.c[i - 1][j] = i * c[i][j];
        return d;
    }
    Poly33 d_s() const {
        Poly33 d{};
        for (int i = 0; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) d.c[i][j - 1] = j * c[i][j];
        return d;
    }

    // int over [a,b] x [c,d].
    double cell_integral(const stieltjes2d::SubRect& r) const {
        double acc = 0;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) {
                if (c[i][j] == 0) continue;
                const double ix = (std::pow(r.b, i + 1) - std::pow(r.a, i + 1)) / (i + 1);
                const double iy = (std::pow(r.d, j + 1) - std::pow(r.c, j + 1)) / (j + 1);
                acc += c[i][j] * ix * iy;
            }
        return acc;
    }
};

inline stieltjes2d::Surface poly_surface(const Poly33& p, const std::string& name) {
    const Poly33 pt = p.d_t(), ps = p.d_s(), pts = p.d_t().d_s();
    stieltjes2d::Surface f([p](double t, double s) { return p.eval(t, s); }, name);
    return f.with_cell_integral(
                [p](const stieltjes2d::SubRect& r) { return p.cell_integral(r); })
        .with_partial(1, 0, stieltjes2d::Surface(
                                [pt](double t, double s) { return pt.eval(t, s); }, name))
        .with_partial(0, 1, stieltjes2d::Surface(
                                [ps](double t, double s) { return ps.eval(t, s); }, name))
        .with_partial(1, 1, stieltjes2d::Surface(
                                [pts](double t, double s) { return pts.eval(t, s); }, name));
}

// Random degree-3 polynomial with coefficients in [-2, 2].
inline Poly33 random_poly(std::mt19937& rng) {
    std::uniform_real_distribution<double> coef(-2, 2);
    Poly33 p;
    for (auto& row : p.c)
        for (auto& v : row) v = coef(rng);
    return p;
}

// Random "pure mixed" polynomial: nonnegative coefficients on monomials
// t^i s^j with i, j >= 1 only. Vanishes on the lower-left edges, is
// bimonotonically increasing, and its Vitali bivariation over any cell is
// the plain corner increment.
inline Poly33 random_pure_mixed(std::mt19937& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> coef(0.05, 1.0);
    Poly33 p;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) p.c[i][j] = coef(rng) * scale;
    return p;
}

inline stieltjes2d::Rect random_rect(std::mt19937& rng) {
    std::uniform_real_distribution<double> lo(-1.5, 1.0);
    std::uniform_real_distribution<double> len(0.4, 1.8);
    const double a = lo(rng), c = lo(rng);
    return stieltjes2d::Rect{a, a + len(rng), c, c + len(rng)};
}

} // namespace fixtures
