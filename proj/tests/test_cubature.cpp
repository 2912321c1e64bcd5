#include <doctest.h>

#include "stieltjes2d/cubature.hpp"
#include "stieltjes2d/quadrature.hpp"
#include "stieltjes2d/registry.hpp"

#include <cmath>
#include <random>

using namespace stieltjes2d;

namespace {
const Rect unit{0, 1, 0, 1};

// int f dg through the smooth form, registry fixtures carry g_ts.
double rs_exact(const Surface& f, const Surface& g, const Rect& q) {
    const Surface* gts = g.exact_partial(1, 1);
    REQUIRE(gts != nullptr);
    return integrate_2d([&](double t, double s) { return f(t, s) * (*gts)(t, s); },
                        SubRect{q}, 1e-12);
}
} // namespace

TEST_CASE("ostrowski point rule") {
    const Surface& prod = registry_lookup("prod_ts");
    CHECK(ostrowski_point_rule(prod, unit, 0.5, 0.5) == doctest::Approx(0.25));
    const Surface one([](double, double) { return 1.0; }, "1");
    CHECK(ostrowski_point_rule(one, Rect{0, 2, 1, 4}, 1, 2) == doctest::Approx(6.0));
    CHECK(ostrowski_point_rule(prod, unit, 0, 0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(ostrowski_point_rule(prod, unit, 2, 0), std::domain_error);
}

TEST_CASE("RS trapezoid weights and rule") {
    SUBCASE("g = ts gives equal quarter weights") {
        const auto w = rs_trapezoid_weights(registry_lookup("prod_ts"), unit);
        CHECK(w.A == doctest::Approx(0.25));
        CHECK(w.B == doctest::Approx(0.25));
        CHECK(w.C == doctest::Approx(0.25));
        CHECK(w.D == doctest::Approx(0.25));
    }
    SUBCASE("weights sum to Delta11 g for any g (f = 1 moment)") {
        for (const char* name : {"prod_ts", "sq_prod", "exp_sum", "sin_prod"}) {
            const Surface& g = registry_lookup(name);
            const auto w = rs_trapezoid_weights(g, unit);
            CHECK(w.sum() == doctest::Approx(delta11(g, SubRect{unit})).epsilon(1e-10));
        }
    }
    SUBCASE("rule reproduces f = xy against g = ts") {
        CHECK(rs_trapezoid_rule(registry_lookup("prod_ts"), registry_lookup("prod_ts"),
                                unit) == doctest::Approx(0.25));
    }
    SUBCASE("moment exactness for f in {1, x, y, xy}") {
        const Surface moments[4] = {
            Surface([](double, double) { return 1.0; }, "1"),
            Surface([](double t, double) { return t; }, "x"),
            Surface([](double, double s) { return s; }, "y"),
            Surface([](double t, double s) { return t * s; }, "xy"),
        };
        for (const char* gname : {"prod_ts", "sq_prod", "exp_sum"}) {
            const Surface& g = registry_lookup(gname);
            for (const auto& f : moments) {
                const double rule = rs_trapezoid_rule(f, g, unit);
                const double exact = rs_exact(f, g, unit);
                CHECK(std::fabs(rule - exact) <= 1e-10 * std::max(1.0, std::fabs(exact)));
            }
        }
    }
}

TEST_CASE("RS midpoint rule") {
    SUBCASE("g = ts puts the node at the center") {
        const auto r = rs_midpoint_rule(registry_lookup("sum_ts"),
                                        registry_lookup("prod_ts"), unit);
        CHECK(r.t == doctest::Approx(0.5));
        CHECK(r.s == doctest::Approx(0.5));
        CHECK(r.value == doctest::Approx(1.0)); // exact for f = x + y
    }
    SUBCASE("g = t^2 s^2 puts the node at 2/3") {
        const auto [t, s] = rs_midpoint_node(registry_lookup("sq_prod"), unit);
        CHECK(t == doctest::Approx(2.0 / 3.0));
        CHECK(s == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("moment exactness for f in {1, x, y}") {
        const Surface moments[3] = {
            Surface([](double, double) { return 1.0; }, "1"),
            Surface([](double t, double) { return t; }, "x"),
            Surface([](double, double s) { return s; }, "y"),
        };
        for (const char* gname : {"prod_ts", "sq_prod", "exp_sum"}) {
            const Surface& g = registry_lookup(gname);
            for (const auto& f : moments) {
                const double rule = rs_midpoint_rule(f, g, unit).value;
                const double exact = rs_exact(f, g, unit);
                CHECK(std::fabs(rule - exact) <= 1e-10 * std::max(1.0, std::fabs(exact)));
            }
        }
    }
    SUBCASE("degenerate integrator is rejected") {
        CHECK_THROWS_AS(rs_midpoint_rule(registry_lookup("prod_ts"),
                                         registry_lookup("sum_ts"), unit),
                        DegenerateIntegrator);
    }
    SUBCASE("node outside the rectangle is a diagnostic error, not a clamp") {
        // The row increment t^3 - 0.9t pushes the t quotient to 3.
        const Surface g([](double t, double s) { return (t * t * t - 0.9 * t) * s; },
                        "skewed");
        CHECK_THROWS_AS(rs_midpoint_node(g, unit), NodeOutOfDomain);
    }
}

TEST_CASE("Simpson-type combination") {
    CHECK(simpson_rule(registry_lookup("prod_ts"), unit) == doctest::Approx(0.25));
    const Surface one([](double, double) { return 1.0; }, "1");
    // The printed combination is not normalized for constants.
    CHECK(simpson_rule(one, unit) == doctest::Approx(4.0 / 9.0));
    CHECK(simpson_rule(one, Rect{0, 2, 0, 3}) == doctest::Approx(4.0 / 9.0 * 6.0));
    CHECK(simpson_rule(registry_lookup("diff_ts"), unit) == doctest::Approx(0.0));
}

TEST_CASE("companion four-point rule") {
    const Surface& prod = registry_lookup("prod_ts");
    SUBCASE("x = a, y = c reflects to the corner average") {
        const double corner_avg = 0.25 * (prod(0, 0) + prod(1, 0) + prod(0, 1) + prod(1, 1));
        CHECK(companion_rule(prod, unit, 0, 0) == doctest::Approx(corner_avg));
    }
    SUBCASE("center collapses to the Ostrowski center rule") {
        const Surface f([](double t, double s) { return std::sin(t + 2 * s); }, "f");
        CHECK(companion_rule(f, unit, 0.5, 0.5) ==
              doctest::Approx(ostrowski_point_rule(f, unit, 0.5, 0.5)));
    }
    SUBCASE("quarter point is exact for ts") {
        CHECK(companion_rule(prod, unit, 0.25, 0.25) == doctest::Approx(0.25));
    }
    SUBCASE("outside the half-ranges is a domain error") {
        CHECK_THROWS_AS(companion_rule(prod, unit, 0.75, 0.25), std::domain_error);
    }
}

TEST_CASE("trapezoid functional T(f,u;Q)") {
    const Surface c([](double, double) { return 2.5; }, "2.5");
    CHECK(trapezoid_functional(c, registry_lookup("sq_prod"), unit, 1e-7) ==
          doctest::Approx(0.0).epsilon(1e-7));
    CHECK(trapezoid_functional(registry_lookup("sum_ts"), registry_lookup("prod_ts"),
                               unit, 1e-7) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(trapezoid_functional(registry_lookup("prod_ts"), registry_lookup("prod_ts"),
                               unit, 1e-7) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("composite Riemann rule") {
    const Surface one([](double, double) { return 1.0; }, "1");
    const auto p1 = GridPartition::uniform_midpoint(Rect{0, 2, 0, 3}, 5, 4);
    CHECK(composite_riemann(one, p1) == doctest::Approx(6.0));

    const auto p2 = GridPartition::uniform_midpoint(unit, 2, 2);
    CHECK(composite_riemann(registry_lookup("prod_ts"), p2) == doctest::Approx(0.25));

    SUBCASE("error eventually decreases under refinement") {
        const Surface& f = registry_lookup("sin_prod");
        const double exact = f.exact_cell_integral()(SubRect{unit});
        double prev_err = 1e9;
        for (int level = 2; level <= 6; ++level) {
            const auto p = GridPartition::uniform_midpoint(unit, 1u << level, 1u << level);
            const double err = std::fabs(composite_riemann(f, p) - exact);
            CHECK(err <= prev_err + 1e-15);
            prev_err = err;
        }
    }
}

TEST_CASE("composite RS rule") {
    SUBCASE("g = ts collapses to the exact integral") {
        const Surface& f = registry_lookup("exp_sum");
        const auto p = GridPartition::uniform_midpoint(unit, 8, 8);
        CHECK(composite_rs(f, registry_lookup("prod_ts"), p, 1e-10) ==
              doctest::Approx(f.exact_cell_integral()(SubRect{unit})).epsilon(1e-9));
    }
    SUBCASE("f = 1 telescopes to Delta11 g") {
        const Surface one([](double, double) { return 1.0; }, "1");
        const Surface& g = registry_lookup("sin_prod");
        const auto p = GridPartition::uniform_midpoint(unit, 6, 9);
        CHECK(composite_rs(one, g, p, 1e-10) ==
              doctest::Approx(delta11(g, SubRect{unit})).epsilon(1e-10));
    }
    SUBCASE("f = ts, g = t^2 s^2 tightens toward 4/9") {
        const auto p = GridPartition::uniform_midpoint(unit, 64, 64);
        CHECK(composite_rs(registry_lookup("prod_ts"), registry_lookup("sq_prod"), p,
                           1e-9) == doctest::Approx(4.0 / 9.0).epsilon(1e-3));
    }
}

TEST_CASE("Mercer bracket") {
    SUBCASE("f = ts, g = ts encloses the integral") {
        const auto r = mercer_bracket(registry_lookup("prod_ts"),
                                      registry_lookup("prod_ts"), unit, 1e-10);
        const double oracle = rs_exact(registry_lookup("prod_ts"),
                                       registry_lookup("prod_ts"), unit);
        CHECK(r.lower <= oracle + 1e-9);
        CHECK(oracle <= r.upper + 1e-9);
        CHECK(std::fabs(r.upper - r.lower) <= 1e-9); // degenerate on the exactness set
    }
    SUBCASE("g = t + s has no Delta11 mass") {
        CHECK_THROWS_AS(mercer_bracket(registry_lookup("prod_ts"),
                                       registry_lookup("sum_ts"), unit, 1e-9),
                        DegenerateIntegrator);
    }
    SUBCASE("negative mixed partial violates the hypothesis") {
        const Surface bad([](double t, double s) { return -t * s; }, "-ts");
        CHECK_THROWS_AS(mercer_bracket(bad, registry_lookup("prod_ts"), unit, 1e-9),
                        HypothesisError);
    }
    SUBCASE("random hypothesis-satisfying fixtures bracket the oracle") {
        std::mt19937 rng(23);
        std::uniform_real_distribution<double> pos(0.1, 1.5);
        for (int k = 0; k < 40; ++k) {
            const double c1 = pos(rng), c2 = pos(rng), c3 = pos(rng), c4 = pos(rng);
            const Surface f(
                [=](double t, double s) { return c1 * t * s + c2 * t * t * s * s; }, "f");
            Surface g([=](double t, double s) { return c3 * (t + s) + c4 * t * s; }, "g");
            g = g.with_partial(1, 1, Surface([=](double, double) { return c4; }, "g_ts"));
            const auto r = mercer_bracket(f, g, unit, 1e-10);
            const double oracle = rs_exact(f, g, unit);
            CHECK(r.lower <= oracle + 1e-8);
            CHECK(oracle <= r.upper + 1e-8);
        }
    }
}
