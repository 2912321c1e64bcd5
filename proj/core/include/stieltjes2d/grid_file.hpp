#pragma once

#include "stieltjes2d/surface.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace stieltjes2d {

struct GridParseError : std::runtime_error {
    GridParseError(const std::string& msg, std::size_t row, std::size_t col);
    std::size_t row, col;
};

// Comma-separated grid: cell (0,0) empty, first row lists xs, first
// column lists ys, interior values row-major with values[i][j] =
// f(xs[j], ys[i]). LF or CRLF line endings.
struct GridFile {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<std::vector<double>> values; // values[i][j] = f(xs[j], ys[i])
};

GridFile parse_grid(std::istream& in);
GridFile read_grid(const std::string& path);
void write_grid(std::ostream& out, const GridFile& g);
void write_grid(const std::string& path, const GridFile& g);

// A Surface evaluating by bilinear interpolation inside the grid hull,
// exact at the nodes. Queries outside the hull raise a domain error.
// The descriptor records the path and a content hash.
Surface grid_surface(const GridFile& g, const std::string& path_label);
Surface load_grid(const std::string& path);

} // namespace stieltjes2d
