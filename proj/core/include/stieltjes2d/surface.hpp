#pragma once

#include "stieltjes2d/geometry.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stieltjes2d {

// An evaluatable real-valued function of two variables with optional
// analytic metadata. Immutable after construction; the with_* builders
// return modified copies. Evaluation must be deterministic.
class Surface {
public:
    using Eval = std::function<double(double, double)>;
    using CellIntegral = std::function<double(const SubRect&)>;

    Surface() = default;
    Surface(Eval eval, std::string descriptor)
        : eval_(std::move(eval)), descriptor_(std::move(descriptor)) {}

    double operator()(double x, double y) const { return eval_(x, y); }

    const std::string& descriptor() const { return descriptor_; }

    // Mixed partial of order (i in t, j in s), when supplied.
    Surface with_partial(int i, int j, Surface p) const {
        Surface s = *this;
        s.partials_[{i, j}] = std::make_shared<Surface>(std::move(p));
        return s;
    }
    const Surface* exact_partial(int i, int j) const {
        auto it = partials_.find({i, j});
        return it == partials_.end() ? nullptr : it->second.get();
    }

    // Closed-form integral of the surface over a sub-rectangle.
    Surface with_cell_integral(CellIntegral ci) const {
        Surface s = *this;
        s.cell_integral_ = std::move(ci);
        return s;
    }
    const CellIntegral& exact_cell_integral() const { return cell_integral_; }
    bool has_cell_integral() const { return static_cast<bool>(cell_integral_); }

    // Declared jump lines (t = const, s = const). The refinement oracle
    // nudges grid nodes off these coordinates.
    Surface with_jumps(std::vector<double> jump_t, std::vector<double> jump_s) const {
        Surface s = *this;
        s.jump_t_ = std::move(jump_t);
        s.jump_s_ = std::move(jump_s);
        return s;
    }
    const std::vector<double>& jump_lines_t() const { return jump_t_; }
    const std::vector<double>& jump_lines_s() const { return jump_s_; }

private:
    Eval eval_;
    std::string descriptor_;
    std::map<std::pair<int, int>, std::shared_ptr<Surface>> partials_;
    CellIntegral cell_integral_;
    std::vector<double> jump_t_, jump_s_;
};

// Corner-alternating second difference of u over a cell [a',b'] x [c',d']:
//   u(a',c') - u(a',d') - u(b',c') + u(b',d').
inline double delta11(const Surface& u, const SubRect& cell) {
    return u(cell.a, cell.c) - u(cell.a, cell.d) - u(cell.b, cell.c) + u(cell.b, cell.d);
}

// Same alternating sum from four pre-fetched corner values.
inline double delta11_corners(double u_ac, double u_ad, double u_bc, double u_bd) {
    return u_ac - u_ad - u_bc + u_bd;
}

} // namespace stieltjes2d
