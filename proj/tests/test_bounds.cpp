#include <doctest.h>

#include "stieltjes2d/bounds.hpp"
#include "stieltjes2d/functionals.hpp"
#include "stieltjes2d/registry.hpp"
#include "stieltjes2d/variation.hpp"

#include <cmath>

using namespace stieltjes2d;

namespace {
const Rect unit{0, 1, 0, 1};
}

TEST_CASE("Ostrowski bound values") {
    const BoundedBivariation v1{1.0};
    CHECK(bound_ostrowski(unit, 0.5, 0.5, v1) == doctest::Approx(0.25));
    CHECK(bound_ostrowski(unit, 0, 0, v1) == doctest::Approx(1.0));
    // f = ts at the corner: estimate 0, integral 1/4, residual within bound.
    CHECK(std::fabs(0.0 - 0.25) <= bound_ostrowski(unit, 0, 0, v1));
    CHECK_THROWS_AS(bound_ostrowski(unit, 2, 0, v1), std::domain_error);
}

TEST_CASE("trapezoid and Simpson bounds") {
    CHECK(bound_trapezoid(unit, BoundedBivariation{1.0}) == doctest::Approx(0.25));
    CHECK(bound_trapezoid(unit, BoundedBivariation{0.0}) == doctest::Approx(0.0));
    CHECK(bound_simpson(unit, BoundedBivariation{1.0}) == doctest::Approx(1.0 / 9.0));
    CHECK(bound_simpson(unit, BoundedBivariation{0.0}) == doctest::Approx(0.0));
}

TEST_CASE("companion bound values") {
    const BoundedBivariation v1{1.0};
    CHECK(bound_companion(unit, 0.25, 0.25, v1) == doctest::Approx(1.0 / 16.0));
    CHECK(bound_companion(unit, 0, 0, v1) == doctest::Approx(0.25));
    CHECK_THROWS_AS(bound_companion(unit, 0.7, 0.2, v1), std::domain_error);
}

TEST_CASE("omega functional and range bound") {
    SUBCASE("f = ts against u = ts") {
        const double omega = omega_functional(registry_lookup("prod_ts"),
                                              registry_lookup("prod_ts"), unit, 0, 1, 1e-7);
        CHECK(omega == doctest::Approx(-0.25).epsilon(1e-5));
        const double b = bound_omega(BoundedBivariation{1.0}, Range{0, 1});
        CHECK(b == doctest::Approx(0.5));
        CHECK(std::fabs(omega) <= b);
    }
    SUBCASE("degenerate range") {
        CHECK(bound_omega(BoundedBivariation{1.0}, Range{2, 2}) == doctest::Approx(0.0));
    }
    SUBCASE("wide range arithmetic") {
        CHECK(bound_omega(BoundedBivariation{1.0}, Range{-1, 1}) == doctest::Approx(1.0));
    }
}

TEST_CASE("theta functional and quadrant bound") {
    const Holder u_holder{1, 1, 1, 1};
    SUBCASE("corner split leaves a single term") {
        const std::array<double, 4> quads{0, 0, 0, 2.0}; // only NE alive at (a,c)
        const double b = bound_theta(unit, 0, 0, u_holder, quads);
        CHECK(b == doctest::Approx((1 + 1) * 2.0));
    }
    SUBCASE("symmetric center split") {
        const std::array<double, 4> quads{0.25, 0.25, 0.25, 0.25};
        const double b = bound_theta(unit, 0.5, 0.5, u_holder, quads);
        CHECK(b == doctest::Approx(4 * (std::pow(0.5, 1) + std::pow(0.5, 1)) * 0.25));
    }
    SUBCASE("f = ts, u = ts at the center: bound dominates the functional") {
        const double theta = theta_functional(registry_lookup("prod_ts"),
                                              registry_lookup("prod_ts"), unit, 0.5, 0.5,
                                              1e-7);
        const std::array<double, 4> quads{0.25, 0.25, 0.25, 0.25};
        CHECK(std::fabs(theta) <= bound_theta(unit, 0.5, 0.5, u_holder, quads) + 1e-6);
    }
}

TEST_CASE("Beesack-Darst-Pollard two-sided pair") {
    SUBCASE("f = ts, u = ts") {
        const auto ss = bdp_sup_inf(registry_lookup("prod_ts"), unit, 32);
        const auto b = bound_bdp(registry_lookup("prod_ts"), unit, 0.0, ss.S, ss.s,
                                 BoundedBivariation{1.0});
        CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(b.lower <= 0.25);
        CHECK(0.25 <= b.upper);
    }
    SUBCASE("constant f pins both sides") {
        const Surface c([](double, double) { return 2.0; }, "2");
        const auto ss = bdp_sup_inf(registry_lookup("prod_ts"), unit, 16);
        const auto b = bound_bdp(registry_lookup("prod_ts"), unit, 2.0, ss.S, ss.s,
                                 BoundedBivariation{0.0});
        CHECK(b.lower == doctest::Approx(2.0));
        CHECK(b.upper == doctest::Approx(2.0));
    }
    SUBCASE("u = -ts flips the bracket") {
        const Surface neg([](double t, double s) { return -t * s; }, "-ts");
        const auto ss = bdp_sup_inf(neg, unit, 32);
        const auto b = bound_bdp(neg, unit, 0.0, ss.S, ss.s, BoundedBivariation{1.0});
        CHECK(b.lower == doctest::Approx(-1.0).epsilon(1e-6));
        CHECK(b.lower <= -0.25);
    }
}

TEST_CASE("aleph functional bounds") {
    SUBCASE("Holder x BV variant on the unit square") {
        const double b = bound_aleph_holder_bv(unit, Holder{1, 1, 1, 1},
                                               BoundedBivariation{1.0});
        CHECK(b == doctest::Approx(0.25)); // 2 * 1/(2^2 * 2)
        const double aleph = aleph_functional(registry_lookup("prod_ts"),
                                              registry_lookup("prod_ts"), unit, 1e-7);
        CHECK(std::fabs(aleph) <= b + 1e-6);
        CHECK(aleph == doctest::Approx(0.0).epsilon(1e-5));
    }
    SUBCASE("constant integrator collapses") {
        const Surface c([](double, double) { return 7.0; }, "7");
        const double aleph = aleph_functional(registry_lookup("prod_ts"), c, unit, 1e-7);
        CHECK(aleph == doctest::Approx(0.0).epsilon(1e-8));
        CHECK(bound_aleph_holder_bimonotone(unit, Holder{1, 1, 1, 1}, 0.0) ==
              doctest::Approx(0.0));
    }
    SUBCASE("BV x BV variant") {
        CHECK(bound_aleph_bv_bv(BoundedBivariation{1.0}, BoundedBivariation{1.0}) ==
              doctest::Approx(1.0));
    }
}

TEST_CASE("psi representation bounds") {
    SUBCASE("constant f has zero psi") {
        const Surface c([](double, double) { return 3.0; }, "3");
        const Surface psi = psi_surface(c, unit);
        CHECK(psi(0.3, 0.8) == doctest::Approx(0.0));
        CHECK(bound_psi_corners(c, unit, BoundedBivariation{5.0}) == doctest::Approx(0.0));
    }
    SUBCASE("f = ts corner spread is 1") {
        CHECK(bound_psi_corners(registry_lookup("prod_ts"), unit,
                                BoundedBivariation{2.0}) == doctest::Approx(2.0));
    }
    SUBCASE("f = t+s against u = ts stays under the corner bound") {
        const double val = psi_error_integral(registry_lookup("sum_ts"),
                                              registry_lookup("prod_ts"), unit, 1e-7);
        const double b = bound_psi_corners(registry_lookup("sum_ts"), unit,
                                           BoundedBivariation{1.0});
        CHECK(b == doctest::Approx(2.0));
        CHECK(std::fabs(val) <= b + 1e-6);
    }
    SUBCASE("Holder variant value") {
        CHECK(bound_psi_holder(unit, Holder{1, 1, 1, 1}, BoundedBivariation{1.0}) ==
              doctest::Approx(1.0)); // 1/2 + 1/2
    }
}

TEST_CASE("E and F kernel functionals") {
    SUBCASE("E vanishes for constant f") {
        const Surface c([](double, double) { return 4.0; }, "4");
        CHECK(ef_functional_E(c, registry_lookup("sq_prod"), unit, 1e-7) ==
              doctest::Approx(0.0).epsilon(1e-8));
    }
    SUBCASE("E(ts, ts) through the kernel") {
        const double e = ef_functional_E(registry_lookup("prod_ts"),
                                         registry_lookup("prod_ts"), unit, 1e-7);
        CHECK(e == doctest::Approx(0.0).epsilon(1e-5));
        CHECK(std::fabs(e) <= bound_ef_bv(BoundedBivariation{1.0}, BoundedBivariation{1.0}));
    }
    SUBCASE("bimonotone variant uses Delta11 u") {
        CHECK(bound_ef_bimonotone(registry_lookup("prod_ts"), unit,
                                  BoundedBivariation{2.0}) == doctest::Approx(2.0));
    }
    SUBCASE("F is the dual of E") {
        const double f_val = ef_functional_F(registry_lookup("prod_ts"),
                                             registry_lookup("sq_prod"), unit, 1e-6);
        const double e_swapped = ef_functional_E(registry_lookup("sq_prod"),
                                                 registry_lookup("prod_ts"), unit, 1e-6);
        CHECK(f_val == doctest::Approx(e_swapped).epsilon(1e-4));
    }
}

TEST_CASE("range bound for E pins its signs on constant f") {
    const Surface c([](double, double) { return 5.0; }, "5");
    const auto b = bound_range_E(c, registry_lookup("prod_ts"), unit,
                                 PartialRange{5, 5, 5, 5});
    CHECK(b.lower == doctest::Approx(0.0));
    CHECK(b.upper == doctest::Approx(0.0));
    const double e = ef_functional_E(c, registry_lookup("prod_ts"), unit, 1e-7);
    CHECK(e == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("corner growth bounds") {
    const CornerGrowth cg{1, 1, 1, 1, 1, 1, 1, 1};
    CHECK(bound_corner_growth_bv(unit, cg, BoundedBivariation{1.0}) ==
          doctest::Approx(8.0)); // 4 max{1+1, 1+1}
    const double b = bound_corner_growth_bimonotone(unit, cg, registry_lookup("prod_ts"));
    // up = u(b,d)-u(a,d) = 1, low = u(b,c)-u(a,c) = 0.
    CHECK(b == doctest::Approx(2.0));
}

TEST_CASE("trapezoid functional bounds") {
    CHECK(bound_trapfunc_lipschitz_bv(unit, Lipschitz{1, 1}, BoundedBivariation{1.0}) ==
          doctest::Approx(1.0));
    CHECK(bound_trapfunc_holder_bv(unit, Holder{1, 1, 1, 1}, BoundedBivariation{1.0}) ==
          doctest::Approx(1.0)); // Holder alpha=1 matches the Lipschitz form
    const double b = bound_trapfunc_holder_bimonotone(unit, Holder{1, 1, 1, 1},
                                                      registry_lookup("prod_ts"));
    CHECK(b == doctest::Approx(1.0 * 1 + 1.0 * 1)); // (1/2+1/2)*1 + (1/2+1/2)*1
}

TEST_CASE("bounds are nondecreasing in the certificate constants") {
    const double base = bound_ostrowski(unit, 0.3, 0.7, BoundedBivariation{1.0});
    CHECK(bound_ostrowski(unit, 0.3, 0.7, BoundedBivariation{1.1}) >= base);

    const double h0 = bound_aleph_holder_bv(unit, Holder{1, 1, 1, 1},
                                            BoundedBivariation{1.0});
    CHECK(bound_aleph_holder_bv(unit, Holder{1.2, 1, 1, 1}, BoundedBivariation{1.0}) >= h0);
    CHECK(bound_aleph_holder_bv(unit, Holder{1, 1.2, 1, 1}, BoundedBivariation{1.0}) >= h0);

    const double o0 = bound_omega(BoundedBivariation{1.0}, Range{0, 1});
    CHECK(bound_omega(BoundedBivariation{1.0}, Range{0, 1.5}) >= o0);
    CHECK(bound_omega(BoundedBivariation{1.3}, Range{0, 1}) >= o0);

    const double t0 = bound_trapfunc_lipschitz_bv(unit, Lipschitz{1, 1},
                                                  BoundedBivariation{1.0});
    CHECK(bound_trapfunc_lipschitz_bv(unit, Lipschitz{1.5, 1}, BoundedBivariation{1.0}) >=
          t0);
}

TEST_CASE("one-point bounds scale linearly under dilation") {
    const double lam = 3.0;
    const Rect big{0, lam, 0, lam};
    // V held fixed: each bracket scales by lambda, the product by lambda^2.
    const double small_b = bound_ostrowski(unit, 0.25, 0.5, BoundedBivariation{1.0});
    const double big_b = bound_ostrowski(big, lam * 0.25, lam * 0.5, BoundedBivariation{1.0});
    CHECK(big_b == doctest::Approx(lam * lam * small_b));

    const double small_c = bound_companion(unit, 0.25, 0.25, BoundedBivariation{1.0});
    const double big_c =
        bound_companion(big, lam * 0.25, lam * 0.25, BoundedBivariation{1.0});
    CHECK(big_c == doctest::Approx(lam * lam * small_c));
}
