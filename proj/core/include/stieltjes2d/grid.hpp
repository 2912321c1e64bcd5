#pragma once

#include "stieltjes2d/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stieltjes2d {

enum class TagScheme { Restricted, Unrestricted };

// Rectangular partition of Q with per-cell tag points. Restricted tags
// share one zeta per column and one eta per row; unrestricted tags are
// free per cell. Tags may sit on cell edges (closed cells).
class GridPartition {
public:
    GridPartition(std::vector<double> xs, std::vector<double> ys,
                  std::vector<double> zetas, std::vector<double> etas)
        : xs_(std::move(xs)), ys_(std::move(ys)), zetas_(std::move(zetas)),
          etas_(std::move(etas)), scheme_(TagScheme::Restricted) {
        validate_axes();
        if (zetas_.size() != nx() || etas_.size() != ny())
            throw std::invalid_argument("GridPartition: one tag per column/row required");
        for (std::size_t i = 0; i < nx(); ++i)
            if (zetas_[i] < xs_[i] || zetas_[i] > xs_[i + 1])
                throw std::invalid_argument("GridPartition: zeta outside its column");
        for (std::size_t j = 0; j < ny(); ++j)
            if (etas_[j] < ys_[j] || etas_[j] > ys_[j + 1])
                throw std::invalid_argument("GridPartition: eta outside its row");
    }

    GridPartition(std::vector<double> xs, std::vector<double> ys,
                  std::vector<double> tag_x, std::vector<double> tag_y, TagScheme)
        : xs_(std::move(xs)), ys_(std::move(ys)), tag_x_(std::move(tag_x)),
          tag_y_(std::move(tag_y)), scheme_(TagScheme::Unrestricted) {
        validate_axes();
        if (tag_x_.size() != nx() * ny() || tag_y_.size() != nx() * ny())
            throw std::invalid_argument("GridPartition: one tag per cell required");
        for (std::size_t j = 0; j < ny(); ++j)
            for (std::size_t i = 0; i < nx(); ++i) {
                const double tx = tag_x_[j * nx() + i], ty = tag_y_[j * nx() + i];
                if (tx < xs_[i] || tx > xs_[i + 1] || ty < ys_[j] || ty > ys_[j + 1])
                    throw std::invalid_argument("GridPartition: tag outside its cell");
            }
    }

    static GridPartition uniform_midpoint(const Rect& q, std::size_t n, std::size_t m) {
        auto xs = linspace(q.a, q.b, n);
        auto ys = linspace(q.c, q.d, m);
        std::vector<double> zetas(n), etas(m);
        for (std::size_t i = 0; i < n; ++i) zetas[i] = 0.5 * (xs[i] + xs[i + 1]);
        for (std::size_t j = 0; j < m; ++j) etas[j] = 0.5 * (ys[j] + ys[j + 1]);
        return GridPartition(std::move(xs), std::move(ys), std::move(zetas), std::move(etas));
    }

    static GridPartition uniform_left(const Rect& q, std::size_t n, std::size_t m) {
        auto xs = linspace(q.a, q.b, n);
        auto ys = linspace(q.c, q.d, m);
        std::vector<double> zetas(xs.begin(), xs.end() - 1);
        std::vector<double> etas(ys.begin(), ys.end() - 1);
        return GridPartition(std::move(xs), std::move(ys), std::move(zetas), std::move(etas));
    }

    std::size_t nx() const { return xs_.size() - 1; }
    std::size_t ny() const { return ys_.size() - 1; }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    TagScheme scheme() const { return scheme_; }

    SubRect cell(std::size_t i, std::size_t j) const {
        return SubRect{xs_[i], xs_[i + 1], ys_[j], ys_[j + 1]};
    }

    double tag_x(std::size_t i, std::size_t j) const {
        return scheme_ == TagScheme::Restricted ? zetas_[i] : tag_x_[j * nx() + i];
    }
    double tag_y(std::size_t i, std::size_t j) const {
        return scheme_ == TagScheme::Restricted ? etas_[j] : tag_y_[j * nx() + i];
    }

    Rect domain() const { return Rect{xs_.front(), xs_.back(), ys_.front(), ys_.back()}; }

    // Largest cell edge, the mesh norm l(Delta_{n,m}).
    double mesh_norm() const {
        double h = 0;
        for (std::size_t i = 0; i < nx(); ++i) h = std::max(h, xs_[i + 1] - xs_[i]);
        for (std::size_t j = 0; j < ny(); ++j) h = std::max(h, ys_[j + 1] - ys_[j]);
        return h;
    }

    static std::vector<double> linspace(double lo, double hi, std::size_t cells) {
        if (cells == 0) throw std::invalid_argument("linspace: need at least one cell");
        std::vector<double> v(cells + 1);
        for (std::size_t k = 0; k <= cells; ++k)
            v[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(cells);
        v.front() = lo;
        v.back() = hi;
        return v;
    }

private:
    void validate_axes() const {
        if (xs_.size() < 2 || ys_.size() < 2)
            throw std::invalid_argument("GridPartition: need at least one cell per axis");
        for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
            if (!(xs_[i] < xs_[i + 1]))
                throw std::invalid_argument("GridPartition: xs not strictly increasing");
        for (std::size_t j = 0; j + 1 < ys_.size(); ++j)
            if (!(ys_[j] < ys_[j + 1]))
                throw std::invalid_argument("GridPartition: ys not strictly increasing");
    }

    std::vector<double> xs_, ys_;
    std::vector<double> zetas_, etas_;  // restricted tags
    std::vector<double> tag_x_, tag_y_; // unrestricted tags, row-major
    TagScheme scheme_;
};

} // namespace stieltjes2d
