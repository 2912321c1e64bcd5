#pragma once

// Shared test fixtures: bilinear-plus-bump surfaces whose partial
// derivatives are exact. The bump factors are (polynomial x e^t), closed
// under differentiation, so every mixed partial has a closed form.

#include "stieltjes2d/surface.hpp"

#include <cmath>
#include <vector>

namespace fixtures {

// c(t) = sum coef[k] t^k, value of c(t) e^t.
struct PolyExp {
    std::vector<double> coef;

    double operator()(double t) const {
        double p = 0;
        for (std::size_t k = coef.size(); k-- > 0;) p = p * t + coef[k];
        return p * std::exp(t);
    }

    PolyExp derivative() const {
        std::vector<double> d(coef.size(), 0.0);
        for (std::size_t k = 0; k < coef.size(); ++k) {
            d[k] += coef[k];
            if (k + 1 < coef.size()) d[k] += coef[k + 1] * static_cast<double>(k + 1);
        }
        return PolyExp{d};
    }
};

// (t(1-t))^p as a PolyExp-compatible coefficient vector times e^t.
inline PolyExp bump_factor(int p) {
    std::vector<double> c{1.0};
    for (int rep = 0; rep < p; ++rep) {
        // multiply by (t - t^2)
        std::vector<double> nxt(c.size() + 2, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            nxt[k + 1] += c[k];
            nxt[k + 2] -= c[k];
        }
        c = std::move(nxt);
    }
    return PolyExp{c};
}

// f = b0 + b1 t + b2 s + b3 ts + amp * phi(t) phi(s) with phi = (t(1-t))^p e^t.
// Partials up to (4,4) are attached exactly.
inline stieltjes2d::Surface taylor_fixture(int p, double b0, double b1, double b2,
                                           double b3, double amp,
                                           const std::string& name) {
    std::vector<PolyExp> d(9);
    d[0] = bump_factor(p);
    for (int k = 1; k <= 8; ++k) d[k] = d[k - 1].derivative();

    auto value = [=](int i, int j, double t, double s) {
        double blin = 0;
        if (i == 0 && j == 0) blin = b0 + b1 * t + b2 * s + b3 * t * s;
        else if (i == 1 && j == 0) blin = b1 + b3 * s;
        else if (i == 0 && j == 1) blin = b2 + b3 * t;
        else if (i == 1 && j == 1) blin = b3;
        return blin + amp * d[i](t) * d[j](s);
    };

    stieltjes2d::Surface f([=](double t, double s) { return value(0, 0, t, s); }, name);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            if (i == 0 && j == 0) continue;
            f = f.with_partial(i, j,
                               stieltjes2d::Surface(
                                   [=](double t, double s) { return value(i, j, t, s); },
                                   name + "_d"));
        }
    return f;
}

} // namespace fixtures
