#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "swarm/grid.hpp"

namespace swarm {

/// Plain-text grayscale (P2) rendering of a scalar grid. Values are linearly
/// rescaled to 0..255 by the current maximum; an all-zero (or non-positive)
/// maximum maps everything to 0. Rows are written from y = 0 upward.
inline std::string to_pgm(const Grid<double>& grid) {
    double max_v = 0.0;
    for (double v : grid.values()) max_v = std::max(max_v, v);
    std::string out = "P2\n" + std::to_string(grid.width()) + " " +
                      std::to_string(grid.height()) + "\n255\n";
    char buf[16];
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            int level = 0;
            if (max_v > 0.0) {
                level = static_cast<int>(std::lround(grid.at(x, y) / max_v * 255.0));
                level = std::clamp(level, 0, 255);
            }
            std::snprintf(buf, sizeof(buf), x + 1 == grid.width() ? "%d\n" : "%d ", level);
            out += buf;
        }
    }
    return out;
}

/// Raw comma-separated values, one row of the grid per line, y = 0 first.
inline std::string to_csv(const Grid<double>& grid) {
    std::string out;
    char buf[64];
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            std::snprintf(buf, sizeof(buf), x + 1 == grid.width() ? "%.17g\n" : "%.17g,",
                          grid.at(x, y));
            out += buf;
        }
    }
    return out;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace swarm
