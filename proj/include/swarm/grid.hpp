#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swarm {

enum class Goal { Maximize, Minimize };

inline const char* to_string(Goal g) {
    return g == Goal::Maximize ? "maximize" : "minimize";
}

/// Rectangular region of the continuous function space.
struct Domain2D {
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;

    void validate() const {
        if (!(x_min < x_max) || !(y_min < y_max)) {
            throw std::invalid_argument("Domain2D: require x_min < x_max and y_min < y_max");
        }
    }

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }

    bool operator==(const Domain2D&) const = default;
};

/// Lattice cell coordinate. x is the column, y the row.
struct Cell {
    int x = 0;
    int y = 0;

    bool operator==(const Cell&) const = default;
};

template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(int width, int height, T fill = T{})
        : width_(width), height_(height), cells_(static_cast<std::size_t>(width) * height, fill) {
        if (width < 1 || height < 1) {
            throw std::invalid_argument("Grid: dimensions must be positive");
        }
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return cells_.size(); }

    T& at(int x, int y) { return cells_[index(x, y)]; }
    const T& at(int x, int y) const { return cells_[index(x, y)]; }
    T& at(Cell c) { return at(c.x, c.y); }
    const T& at(Cell c) const { return at(c.x, c.y); }

    Cell wrap(Cell c) const {
        return {mod(c.x, width_), mod(c.y, height_)};
    }

    const std::vector<T>& values() const { return cells_; }
    std::vector<T>& values() { return cells_; }

    bool operator==(const Grid&) const = default;

private:
    static int mod(int v, int n) { return ((v % n) + n) % n; }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<T> cells_;
};

/// Compass offsets, clockwise from North; heading indices use the same order.
/// North is +y on the lattice.
inline constexpr std::array<Cell, 8> kCompassOffsets{{
    {0, 1},   // 0 N
    {1, 1},   // 1 NE
    {1, 0},   // 2 E
    {1, -1},  // 3 SE
    {0, -1},  // 4 S
    {-1, -1}, // 5 SW
    {-1, 0},  // 6 W
    {-1, 1},  // 7 NW
}};

/// The 8 toroidally wrapped neighbors of a cell, clockwise from North.
inline std::array<Cell, 8> neighbors8(Cell c, int width, int height) {
    std::array<Cell, 8> out{};
    auto mod = [](int v, int n) { return ((v % n) + n) % n; };
    for (int d = 0; d < 8; ++d) {
        out[d] = {mod(c.x + kCompassOffsets[d].x, width), mod(c.y + kCompassOffsets[d].y, height)};
    }
    return out;
}

/// Minimal angular distance between two compass indices, in 45-degree steps.
/// 0 = same direction, 4 = U-turn.
inline int direction_delta(int heading, int candidate) {
    int d = std::abs(heading - candidate) % 8;
    return d > 4 ? 8 - d : d;
}

/// Non-wrapping Euclidean distance between two cells, in cell units.
inline double cell_distance(Cell a, Cell b) {
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

} // namespace swarm
