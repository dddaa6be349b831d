#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarm/grid.hpp"
#include "swarm/habitat.hpp"
#include "swarm/ssa.hpp"

namespace swarm {

struct MetricsRecord {
    int t = 0;
    double best_z = 0.0;        // extremal ant altitude w.r.t. the active goal
    double mean_z = 0.0;
    Cell pher_argmax;
    double dist_to_opt = 0.0;   // cell units, non-wrapping
    double mass_fraction_r = 0.0;
    double ants_near_opt = 0.0;
};

struct GridOptimum {
    Cell cell;
    double value = 0.0;
};

/// Exhaustive scan for the goal's extremum on the sampled grid. Ties break
/// toward the lowest (row, column), i.e. smallest y then smallest x.
inline GridOptimum grid_optimum(const Habitat& habitat) {
    GridOptimum best{{0, 0}, habitat.altitude.at(0, 0)};
    for (int cy = 0; cy < habitat.height; ++cy) {
        for (int cx = 0; cx < habitat.width; ++cx) {
            double z = habitat.altitude.at(cx, cy);
            bool better = (habitat.goal == Goal::Maximize) ? z > best.value : z < best.value;
            if (better) best = {{cx, cy}, z};
        }
    }
    return best;
}

/// Argmax of the pheromone field, ties toward lowest (row, column).
inline Cell pheromone_argmax(const PheromoneField& field) {
    Cell best{0, 0};
    double best_v = field.at(0, 0);
    for (int cy = 0; cy < field.height(); ++cy) {
        for (int cx = 0; cx < field.width(); ++cx) {
            if (field.at(cx, cy) > best_v) {
                best_v = field.at(cx, cy);
                best = {cx, cy};
            }
        }
    }
    return best;
}

/// Fraction of the field's total mass within (non-wrapping) radius r of a
/// cell. An all-zero field yields 0.
inline double mass_fraction_within(const PheromoneField& field, Cell center, double radius) {
    double total = 0.0;
    double inside = 0.0;
    for (int cy = 0; cy < field.height(); ++cy) {
        for (int cx = 0; cx < field.width(); ++cx) {
            double v = field.at(cx, cy);
            total += v;
            if (cell_distance({cx, cy}, center) <= radius) inside += v;
        }
    }
    return total > 0.0 ? inside / total : 0.0;
}

inline MetricsRecord compute_metrics(const ColonyState& state, const Habitat& habitat,
                                     double radius) {
    MetricsRecord rec;
    rec.t = state.t;
    GridOptimum opt = grid_optimum(habitat);

    double sum_z = 0.0;
    bool first = true;
    int near = 0;
    for (const auto& ant : state.ants) {
        double z = habitat.altitude_at(ant.cell);
        sum_z += z;
        bool better = first || ((habitat.goal == Goal::Maximize) ? z > rec.best_z : z < rec.best_z);
        if (better) rec.best_z = z;
        first = false;
        if (cell_distance(ant.cell, opt.cell) <= radius) ++near;
    }
    rec.mean_z = state.ants.empty() ? 0.0 : sum_z / static_cast<double>(state.ants.size());
    rec.ants_near_opt = state.ants.empty() ? 0.0 : static_cast<double>(near) / state.ants.size();
    rec.pher_argmax = pheromone_argmax(state.field);
    rec.dist_to_opt = cell_distance(rec.pher_argmax, opt.cell);
    rec.mass_fraction_r = mass_fraction_within(state.field, opt.cell, radius);
    return rec;
}

/// Steps after the switch until the localization mass first reaches the
/// threshold; nullopt when it never does within the record stream.
inline std::optional<int> adaptation_time(std::span<const MetricsRecord> records, int switch_step,
                                          double threshold) {
    if (records.empty() || records.front().t > switch_step || records.back().t < switch_step) {
        throw std::invalid_argument("adaptation_time: switch_step outside record range");
    }
    for (const auto& rec : records) {
        if (rec.t < switch_step) continue;
        if (rec.mass_fraction_r >= threshold) return rec.t - switch_step;
    }
    return std::nullopt;
}

inline std::string metrics_csv_header() {
    return "t,best_z,mean_z,pher_argmax_x,pher_argmax_y,dist_to_opt,mass_fraction_r,ants_near_opt\n";
}

inline std::string metrics_csv_row(const MetricsRecord& rec) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%d,%.9g,%.9g,%d,%d,%.9g,%.9g,%.9g\n", rec.t, rec.best_z,
                  rec.mean_z, rec.pher_argmax.x, rec.pher_argmax.y, rec.dist_to_opt,
                  rec.mass_fraction_r, rec.ants_near_opt);
    return buf;
}

/// Default localization radius: 5% of the longer grid side, at least 1.
/// Gives r = 5 on 100x100 and r = 2 on 30x30.
inline double default_localization_radius(int width, int height) {
    long r = std::lround(0.05 * std::max(width, height));
    return static_cast<double>(std::max(1L, r));
}

} // namespace swarm
