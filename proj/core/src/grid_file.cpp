#include "stieltjes2d/grid_file.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

namespace stieltjes2d {

GridParseError::GridParseError(const std::string& msg, std::size_t row_, std::size_t col_)
    : std::runtime_error(msg + " (row " + std::to_string(row_) + ", column " +
                         std::to_string(col_) + ")"),
      row(row_), col(col_) {}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

double parse_number(const std::string& cell, std::size_t row, std::size_t col) {
    // strtod, not std::stod: subnormal literals must round-trip, not throw.
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin)
        throw GridParseError("non-numeric cell '" + cell + "'", row, col);
    while (*end == ' ' || *end == '\t') ++end;
    if (*end != '\0')
        throw GridParseError("non-numeric cell '" + cell + "'", row, col);
    if (!std::isfinite(v)) throw GridParseError("non-finite value", row, col);
    return v;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string canonical_text(const GridFile& g) {
    std::ostringstream os;
    write_grid(os, g);
    return os.str();
}

} // namespace

GridFile parse_grid(std::istream& in) {
    GridFile g;
    std::string line;
    std::size_t row = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        const auto cells = split_csv(line);
        if (row == 1) {
            if (!cells[0].empty())
                throw GridParseError("corner cell (0,0) must be empty", 1, 1);
            if (cells.size() < 3)
                throw GridParseError("need at least two x nodes", 1, cells.size());
            for (std::size_t j = 1; j < cells.size(); ++j)
                g.xs.push_back(parse_number(cells[j], 1, j + 1));
            width = cells.size();
            continue;
        }
        if (cells.size() != width)
            throw GridParseError("ragged row", row, cells.size());
        g.ys.push_back(parse_number(cells[0], row, 1));
        std::vector<double> vals;
        for (std::size_t j = 1; j < cells.size(); ++j)
            vals.push_back(parse_number(cells[j], row, j + 1));
        g.values.push_back(std::move(vals));
    }
    if (g.ys.size() < 2) throw GridParseError("need at least two y nodes", row, 1);
    for (std::size_t j = 0; j + 1 < g.xs.size(); ++j)
        if (!(g.xs[j] < g.xs[j + 1]))
            throw GridParseError("x axis not strictly increasing", 1, j + 3);
    for (std::size_t i = 0; i + 1 < g.ys.size(); ++i)
        if (!(g.ys[i] < g.ys[i + 1]))
            throw GridParseError("y axis not strictly increasing", i + 3, 1);
    return g;
}

GridFile read_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open grid file: " + path);
    return parse_grid(in);
}

void write_grid(std::ostream& out, const GridFile& g) {
    char buf[40];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf;
    };
    for (double x : g.xs) {
        out << ',';
        put(x);
    }
    out << '\n';
    for (std::size_t i = 0; i < g.ys.size(); ++i) {
        put(g.ys[i]);
        for (double v : g.values[i]) {
            out << ',';
            put(v);
        }
        out << '\n';
    }
}

void write_grid(const std::string& path, const GridFile& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open grid file for write: " + path);
    write_grid(out, g);
}

Surface grid_surface(const GridFile& g, const std::string& path_label) {
    auto data = std::make_shared<GridFile>(g);
    auto eval = [data](double x, double y) {
        const auto& xs = data->xs;
        const auto& ys = data->ys;
        if (x < xs.front() || x > xs.back() || y < ys.front() || y > ys.back())
            throw std::domain_error("grid surface: query outside hull");
        auto locate = [](const std::vector<double>& v, double t) {
            std::size_t lo = 0, hi = v.size() - 1;
            while (hi - lo > 1) {
                const std::size_t mid = (lo + hi) / 2;
                if (v[mid] <= t) lo = mid; else hi = mid;
            }
            return lo;
        };
        const std::size_t j = locate(xs, x);
        const std::size_t i = locate(ys, y);
        // Exact at nodes: avoid interpolation roundoff there.
        const bool on_x0 = x == xs[j], on_x1 = x == xs[j + 1];
        const bool on_y0 = y == ys[i], on_y1 = y == ys[i + 1];
        if ((on_x0 || on_x1) && (on_y0 || on_y1))
            return data->values[on_y1 ? i + 1 : i][on_x1 ? j + 1 : j];
        const double tx = (x - xs[j]) / (xs[j + 1] - xs[j]);
        const double ty = (y - ys[i]) / (ys[i + 1] - ys[i]);
        const double v00 = data->values[i][j], v01 = data->values[i][j + 1];
        const double v10 = data->values[i + 1][j], v11 = data->values[i + 1][j + 1];
        return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v01 + (1 - tx) * ty * v10 +
               tx * ty * v11;
    };
    char digest[20];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(fnv1a(canonical_text(g))));
    return Surface(eval, path_label + "#" + digest);
}

Surface load_grid(const std::string& path) {
    return grid_surface(read_grid(path), path);
}

} // namespace stieltjes2d
