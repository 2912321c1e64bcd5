#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace stieltjes2d {

enum class Direction { Increasing, Decreasing };

// Regularity data consumed by the bound catalog. Each alternative
// validates its numeric constraints on construction.

struct BoundedBivariation {
    double V; // Vitali total bivariation
    explicit BoundedBivariation(double v) : V(v) {
        if (!(v >= 0) || !std::isfinite(v))
            throw std::invalid_argument("BoundedBivariation: V must be finite and >= 0");
    }
};

struct ArzelaVariation {
    double V;
    explicit ArzelaVariation(double v) : V(v) {
        if (!(v >= 0) || !std::isfinite(v))
            throw std::invalid_argument("ArzelaVariation: V must be finite and >= 0");
    }
};

struct Holder {
    double H1, H2, beta1, beta2;
    Holder(double h1, double h2, double b1, double b2)
        : H1(h1), H2(h2), beta1(b1), beta2(b2) {
        if (!(H1 >= 0) || !(H2 >= 0))
            throw std::invalid_argument("Holder: constants must be >= 0");
        if (!(beta1 > 0) || beta1 > 1 || !(beta2 > 0) || beta2 > 1)
            throw std::invalid_argument("Holder: exponents must lie in (0,1]");
    }
};

struct Lipschitz {
    double L1, L2;
    Lipschitz(double l1, double l2) : L1(l1), L2(l2) {
        if (!(L1 >= 0) || !(L2 >= 0))
            throw std::invalid_argument("Lipschitz: constants must be >= 0");
    }
};

struct Range {
    double m, M;
    Range(double lo, double hi) : m(lo), M(hi) {
        if (!(m <= M)) throw std::invalid_argument("Range: require m <= M");
    }
};

// Slice-wise bounds: m1 <= f(t,.) <= M1 for every t, m2 <= f(.,s) <= M2.
struct PartialRange {
    double m1, M1, m2, M2;
    PartialRange(double lo1, double hi1, double lo2, double hi2)
        : m1(lo1), M1(hi1), m2(lo2), M2(hi2) {
        if (!(m1 <= M1) || !(m2 <= M2))
            throw std::invalid_argument("PartialRange: require m_i <= M_i");
    }
};

struct Bimonotone {
    Direction direction;
};

struct Monotone {
    Direction direction;
};

// Growth conditions at the four corners; the exponents may exceed 1.
struct CornerGrowth {
    double La, Lb, Lc, Ld;
    double alpha1, alpha2, beta1, beta2;
    CornerGrowth(double la, double lb, double lc, double ld,
                 double a1, double a2, double b1, double b2)
        : La(la), Lb(lb), Lc(lc), Ld(ld), alpha1(a1), alpha2(a2), beta1(b1), beta2(b2) {
        if (!(La >= 0) || !(Lb >= 0) || !(Lc >= 0) || !(Ld >= 0))
            throw std::invalid_argument("CornerGrowth: constants must be >= 0");
        if (!(alpha1 > 0) || !(alpha2 > 0) || !(beta1 > 0) || !(beta2 > 0))
            throw std::invalid_argument("CornerGrowth: exponents must be > 0");
    }
};

enum class Provenance { Declared, Estimated };

struct RegularityCertificate {
    using Data = std::variant<BoundedBivariation, ArzelaVariation, Holder, Lipschitz,
                              Range, PartialRange, Bimonotone, Monotone, CornerGrowth>;

    Data data;
    Provenance provenance = Provenance::Declared;
    double resolution = 0; // estimation resolution when Estimated

    template <class T>
    static RegularityCertificate declared(T t) {
        return RegularityCertificate{Data{std::move(t)}, Provenance::Declared, 0};
    }
    template <class T>
    static RegularityCertificate estimated(T t, double resolution) {
        return RegularityCertificate{Data{std::move(t)}, Provenance::Estimated, resolution};
    }

    template <class T> const T& as() const {
        if (const T* p = std::get_if<T>(&data)) return *p;
        throw std::invalid_argument("RegularityCertificate: wrong certificate kind");
    }
    template <class T> bool holds() const { return std::holds_alternative<T>(data); }
};

// A rule's estimate, the theorem-derived a-priori bound, and (when an
// oracle reference is available) the residual and satisfied verdict.
struct ErrorCertificate {
    std::string rule_id;
    double estimate = 0;
    double bound = 0;
    std::optional<double> oracle;
    std::optional<double> residual;
    std::optional<bool> satisfied;

    ErrorCertificate(std::string id, double est, double bnd)
        : rule_id(std::move(id)), estimate(est), bound(bnd) {
        if (!(bound >= 0) || !std::isfinite(bound))
            throw std::invalid_argument("ErrorCertificate: bound must be finite and >= 0");
    }

    ErrorCertificate& attach_oracle(double oracle_value, double slack) {
        oracle = oracle_value;
        residual = std::fabs(estimate - oracle_value);
        satisfied = (*residual <= bound + slack);
        return *this;
    }
};

} // namespace stieltjes2d
