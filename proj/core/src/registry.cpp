#include "stieltjes2d/registry.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace stieltjes2d {

namespace {

Surface constant(double c, const std::string& name) {
    Surface s([c](double, double) { return c; }, name);
    return s.with_cell_integral([c](const SubRect& r) { return c * r.area(); })
        .with_partial(1, 0, Surface([](double, double) { return 0.0; }, name + "_t"))
        .with_partial(0, 1, Surface([](double, double) { return 0.0; }, name + "_s"))
        .with_partial(1, 1, Surface([](double, double) { return 0.0; }, name + "_ts"));
}

Surface make_prod_ts() {
    Surface s([](double t, double u) { return t * u; }, "prod_ts");
    return s
        .with_cell_integral([](const SubRect& r) {
            return 0.25 * (r.b * r.b - r.a * r.a) * (r.d * r.d - r.c * r.c);
        })
        .with_partial(1, 0, Surface([](double, double u) { return u; }, "prod_ts_t"))
        .with_partial(0, 1, Surface([](double t, double) { return t; }, "prod_ts_s"))
        .with_partial(1, 1, Surface([](double, double) { return 1.0; }, "prod_ts_ts"))
        .with_partial(2, 2, Surface([](double, double) { return 0.0; }, "prod_ts_2222"));
}

Surface make_sum_ts() {
    Surface s([](double t, double u) { return t + u; }, "sum_ts");
    return s
        .with_cell_integral([](const SubRect& r) {
            return 0.5 * (r.b * r.b - r.a * r.a) * r.height() +
                   0.5 * (r.d * r.d - r.c * r.c) * r.width();
        })
        .with_partial(1, 0, Surface([](double, double) { return 1.0; }, "sum_ts_t"))
        .with_partial(0, 1, Surface([](double, double) { return 1.0; }, "sum_ts_s"))
        .with_partial(1, 1, Surface([](double, double) { return 0.0; }, "sum_ts_ts"));
}

Surface make_diff_ts() {
    Surface s([](double t, double u) { return t - u; }, "diff_ts");
    return s
        .with_cell_integral([](const SubRect& r) {
            return 0.5 * (r.b * r.b - r.a * r.a) * r.height() -
                   0.5 * (r.d * r.d - r.c * r.c) * r.width();
        })
        .with_partial(1, 1, Surface([](double, double) { return 0.0; }, "diff_ts_ts"));
}

Surface make_sq_prod() {
    Surface s([](double t, double u) { return t * t * u * u; }, "sq_prod");
    return s
        .with_cell_integral([](const SubRect& r) {
            return (r.b * r.b * r.b - r.a * r.a * r.a) *
                   (r.d * r.d * r.d - r.c * r.c * r.c) / 9.0;
        })
        .with_partial(1, 0, Surface([](double t, double u) { return 2 * t * u * u; }, "d10"))
        .with_partial(0, 1, Surface([](double t, double u) { return 2 * t * t * u; }, "d01"))
        .with_partial(1, 1, Surface([](double t, double u) { return 4 * t * u; }, "d11"))
        .with_partial(2, 0, Surface([](double, double u) { return 2 * u * u; }, "d20"))
        .with_partial(0, 2, Surface([](double t, double) { return 2 * t * t; }, "d02"))
        .with_partial(2, 1, Surface([](double, double u) { return 4 * u; }, "d21"))
        .with_partial(1, 2, Surface([](double t, double) { return 4 * t; }, "d12"))
        .with_partial(2, 2, Surface([](double, double) { return 4.0; }, "d22"));
}

Surface make_exp_sum() {
    auto e = [](double t, double u) { return std::exp(t + u); };
    Surface s(e, "exp_sum");
    s = s.with_cell_integral([](const SubRect& r) {
        return (std::exp(r.b) - std::exp(r.a)) * (std::exp(r.d) - std::exp(r.c));
    });
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            if (i || j) s = s.with_partial(i, j, Surface(e, "exp_sum_d"));
    return s;
}

Surface make_sin_prod() {
    Surface s([](double t, double u) { return std::sin(t) * std::sin(u); }, "sin_prod");
    return s
        .with_cell_integral([](const SubRect& r) {
            return (std::cos(r.a) - std::cos(r.b)) * (std::cos(r.c) - std::cos(r.d));
        })
        .with_partial(1, 0, Surface([](double t, double u) { return std::cos(t) * std::sin(u); }, "d10"))
        .with_partial(0, 1, Surface([](double t, double u) { return std::sin(t) * std::cos(u); }, "d01"))
        .with_partial(1, 1, Surface([](double t, double u) { return std::cos(t) * std::cos(u); }, "d11"))
        .with_partial(2, 2, Surface([](double t, double u) { return std::sin(t) * std::sin(u); }, "d22"));
}

Surface make_sin_sum() {
    Surface s([](double t, double u) { return std::sin(t + u); }, "sin_sum");
    return s
        .with_cell_integral([](const SubRect& r) {
            return -std::sin(r.b + r.d) + std::sin(r.b + r.c) + std::sin(r.a + r.d) -
                   std::sin(r.a + r.c);
        })
        .with_partial(1, 1, Surface([](double t, double u) { return -std::sin(t + u); }, "d11"));
}

Surface make_cos_plus_sin() {
    Surface s([](double t, double u) { return std::cos(t) + std::sin(u); }, "cos_plus_sin");
    return s.with_cell_integral([](const SubRect& r) {
        return (std::sin(r.b) - std::sin(r.a)) * r.height() +
               (std::cos(r.c) - std::cos(r.d)) * r.width();
    });
}

Surface make_sqrt_sum() {
    Surface s([](double t, double u) { return std::sqrt(std::fabs(t)) + std::sqrt(std::fabs(u)); },
              "sqrt_sum");
    return s.with_cell_integral([](const SubRect& r) {
        auto prim = [](double v) { return 2.0 / 3.0 * std::pow(v, 1.5); };
        return (prim(r.b) - prim(r.a)) * r.height() + (prim(r.d) - prim(r.c)) * r.width();
    });
}

// sgn with sgn(0) := 1, so the squared fixture is identically 1.
double sgnp(double v) { return v >= 0 ? 1.0 : -1.0; }

double signed_length(double a, double b, double pivot) {
    // int_a^b sgn(x - pivot) dx
    return std::max(0.0, b - std::max(a, pivot)) - (std::min(b, pivot) - std::min(a, pivot));
}

Surface make_sign_prod() {
    Surface s([](double t, double u) { return sgnp(t - 0.5) * sgnp(u - 0.5); }, "sign_prod");
    return s
        .with_cell_integral([](const SubRect& r) {
            return signed_length(r.a, r.b, 0.5) * signed_length(r.c, r.d, 0.5);
        })
        .with_jumps({0.5}, {0.5});
}

Surface make_step_t() {
    Surface s([](double t, double) { return t >= 0.5 ? 1.0 : 0.0; }, "step_t");
    return s
        .with_cell_integral([](const SubRect& r) {
            return std::max(0.0, r.b - std::max(r.a, 0.5)) * r.height();
        })
        .with_jumps({0.5}, {});
}

Surface make_unit_step() {
    // Unit step at the interior point (0.3, 0.6).
    Surface s([](double t, double u) { return (t >= 0.3 && u >= 0.6) ? 1.0 : 0.0; },
              "unit_step");
    return s.with_jumps({0.3}, {0.6});
}

Surface make_bimono_neither() {
    // Monotone but not bimonotonic on [-1,1]^2: the product form switches
    // at the antidiagonal.
    return Surface(
        [](double t, double u) {
            return (t + u < 0) ? (t + 1) * (u + 1) : (t + 2) * (u + 2);
        },
        "bimono_neither");
}

Surface make_poly_mix() {
    Surface s([](double t, double u) { return t * t * u; }, "poly_mix");
    return s
        .with_cell_integral([](const SubRect& r) {
            return (r.b * r.b * r.b - r.a * r.a * r.a) / 3.0 *
                   (r.d * r.d - r.c * r.c) / 2.0;
        })
        .with_partial(1, 0, Surface([](double t, double u) { return 2 * t * u; }, "d10"))
        .with_partial(0, 1, Surface([](double t, double) { return t * t; }, "d01"))
        .with_partial(1, 1, Surface([](double t, double) { return 2 * t; }, "d11"))
        .with_partial(2, 2, Surface([](double, double) { return 0.0; }, "d22"));
}

Surface make_runge() {
    return Surface([](double t, double u) { return 1.0 / (1.0 + t * t + u * u); }, "runge");
}

// Bilinear plus a boundary-flat bump: the family on which the order-n
// blend/remainder split reproduces the function.
Surface make_bump_bilinear(int flatness, const std::string& name) {
    const int p = flatness;
    auto h = [p](double t, double u) {
        return std::pow(t * (1 - t), p) * std::pow(u * (1 - u), p) * std::exp(t + u);
    };
    auto f = [h](double t, double u) { return 1 + 2 * t + 3 * u - 0.5 * t * u + h(t, u); };
    return Surface(f, name);
}

std::map<std::string, Surface> build_registry() {
    std::map<std::string, Surface> r;
    r.emplace("one", constant(1.0, "one"));
    r.emplace("prod_ts", make_prod_ts());
    r.emplace("sum_ts", make_sum_ts());
    r.emplace("diff_ts", make_diff_ts());
    r.emplace("sq_prod", make_sq_prod());
    r.emplace("exp_sum", make_exp_sum());
    r.emplace("sin_prod", make_sin_prod());
    r.emplace("sin_sum", make_sin_sum());
    r.emplace("cos_plus_sin", make_cos_plus_sin());
    r.emplace("sqrt_sum", make_sqrt_sum());
    r.emplace("sign_prod", make_sign_prod());
    r.emplace("step_t", make_step_t());
    r.emplace("unit_step", make_unit_step());
    r.emplace("bimono_neither", make_bimono_neither());
    r.emplace("poly_mix", make_poly_mix());
    r.emplace("runge", make_runge());
    r.emplace("bump1", make_bump_bilinear(1, "bump1"));
    r.emplace("bump2", make_bump_bilinear(2, "bump2"));
    r.emplace("bump3", make_bump_bilinear(3, "bump3"));
    return r;
}

const std::map<std::string, Surface>& registry() {
    static const std::map<std::string, Surface> r = build_registry();
    return r;
}

} // namespace

const Surface& registry_lookup(const std::string& name) {
    std::string key = name;
    if (key.rfind("reg:", 0) == 0) key = key.substr(4);
    const auto& r = registry();
    auto it = r.find(key);
    if (it == r.end())
        throw std::invalid_argument("registry: unknown function '" + name + "'");
    return it->second;
}

std::vector<std::string> registry_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) names.push_back(k);
    return names;
}

} // namespace stieltjes2d
