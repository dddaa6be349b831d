#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarm/benchmarks.hpp"
#include "swarm/grid.hpp"

namespace swarm {

/// Toroidal altitude lattice sampled from a continuous function.
/// Movement wraps at the edges; the altitude values do not.
struct Habitat {
    int width = 0;
    int height = 0;
    Domain2D domain;
    Goal goal = Goal::Maximize;
    std::string function_id;
    Grid<double> altitude;

    /// Continuous point at the center of a cell.
    std::pair<double, double> point_of(Cell c) const {
        double x = domain.x_min + (c.x + 0.5) * domain.width() / width;
        double y = domain.y_min + (c.y + 0.5) * domain.height() / height;
        return {x, y};
    }

    double altitude_at(Cell c) const { return altitude.at(c); }
    std::size_t cell_count() const { return altitude.size(); }
};

inline Habitat sample_function(const BenchmarkFunction& fn, Domain2D domain, int width, int height) {
    domain.validate();
    if (width < 3 || height < 3) {
        throw std::invalid_argument("sample_function: grid must be at least 3x3");
    }
    Habitat h;
    h.width = width;
    h.height = height;
    h.domain = domain;
    h.function_id = fn.id;
    h.altitude = Grid<double>(width, height);
    for (int cy = 0; cy < height; ++cy) {
        for (int cx = 0; cx < width; ++cx) {
            auto [x, y] = h.point_of({cx, cy});
            double z = fn.evaluate(x, y);
            if (!std::isfinite(z)) {
                throw std::runtime_error("sample_function: non-finite value for '" + fn.id +
                                         "' at cell (" + std::to_string(cx) + ", " +
                                         std::to_string(cy) + ")");
            }
            h.altitude.at(cx, cy) = z;
        }
    }
    return h;
}

inline Habitat sample_function(std::string_view id, Domain2D domain, int width, int height) {
    return sample_function(find_benchmark(id), domain, width, height);
}

inline Habitat sample_function(std::string_view id, int width, int height) {
    const auto& fn = find_benchmark(id);
    return sample_function(fn, fn.default_domain, width, height);
}

/// Scripted environment change. At least one of the two fields is set.
struct ScheduleEvent {
    int at_step = 0;
    std::optional<std::string> new_function;
    std::optional<Goal> new_goal;
};

struct Schedule {
    std::vector<ScheduleEvent> events;

    Schedule() = default;
    explicit Schedule(std::vector<ScheduleEvent> evs) : events(std::move(evs)) { validate(); }

    void validate() const {
        int prev = 0;
        for (const auto& e : events) {
            if (e.at_step < 1) {
                throw std::invalid_argument("Schedule: at_step must be positive");
            }
            if (e.at_step == prev) {
                throw std::invalid_argument("Schedule: duplicate at_step " + std::to_string(e.at_step));
            }
            if (e.at_step < prev) {
                throw std::invalid_argument("Schedule: events must be ordered by at_step");
            }
            if (!e.new_function && !e.new_goal) {
                throw std::invalid_argument("Schedule: event at step " + std::to_string(e.at_step) +
                                            " changes nothing");
            }
            prev = e.at_step;
        }
    }
};

struct ChangeFlags {
    bool landscape_changed = false;
    bool goal_changed = false;
};

/// Applies the event scheduled for step t, if any, before agents move at t.
/// A function change re-samples the grid; the new function's default domain
/// is used when the function id actually changes.
inline ChangeFlags apply_schedule(Habitat& habitat, const Schedule& schedule, int t) {
    ChangeFlags flags;
    for (const auto& e : schedule.events) {
        if (e.at_step != t) continue;
        if (e.new_function) {
            const auto& fn = find_benchmark(*e.new_function);
            Domain2D domain = (fn.id == habitat.function_id) ? habitat.domain : fn.default_domain;
            Goal goal = habitat.goal;
            habitat = sample_function(fn, domain, habitat.width, habitat.height);
            habitat.goal = goal;
            flags.landscape_changed = true;
        }
        if (e.new_goal && *e.new_goal != habitat.goal) {
            habitat.goal = *e.new_goal;
            flags.goal_changed = true;
        }
        break;
    }
    return flags;
}

} // namespace swarm
