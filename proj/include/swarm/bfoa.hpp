#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "swarm/grid.hpp"

namespace swarm::bfoa {

struct Bacterium {
    double x = 0.0;
    double y = 0.0;
    double health = 0.0; // accumulated combined cost over the chemotactic lifetime
};

struct SwarmCoeffs {
    double d_attract = 0.1;
    double w_attract = 0.2;
    double h_repel = 0.1;
    double w_repel = 10.0;
};

struct BfoaParams {
    int s = 50;       // population size, even
    int nc = 100;     // chemotactic steps per generation
    int ns = 4;       // max swim length
    int n_re = 4;     // reproduction events
    int n_ed = 1;     // elimination-dispersal events
    double p_ed = 0.25;
    std::optional<double> step_size; // defaults to 0.1 * domain width / 30
    SwarmCoeffs swarm_coeffs;
    bool swarming = true;
    std::uint64_t rng_seed = 1;

    void validate() const {
        if (s < 2 || s % 2 != 0) throw std::invalid_argument("bfoa: population size must be even and >= 2");
        if (nc < 1 || ns < 0 || n_re < 1 || n_ed < 1) {
            throw std::invalid_argument("bfoa: loop counts must be positive (ns may be 0)");
        }
        if (p_ed < 0.0 || p_ed > 1.0) throw std::invalid_argument("bfoa: p_ed outside [0,1]");
        if (step_size && *step_size < 0.0) throw std::invalid_argument("bfoa: step_size must be >= 0");
    }

    double resolved_step_size(const Domain2D& domain) const {
        return step_size ? *step_size : 0.1 * domain.width() / 30.0;
    }
};

using Landscape = std::function<double(double, double)>;

/// Cell-to-cell attraction/repulsion cost summed over the population.
inline double swarming_cost(double x, double y, std::span<const Bacterium> population,
                            const SwarmCoeffs& c) {
    if (population.empty()) throw std::invalid_argument("swarming_cost: empty population");
    double j = 0.0;
    for (const auto& b : population) {
        double d2 = (x - b.x) * (x - b.x) + (y - b.y) * (y - b.y);
        j += -c.d_attract * std::exp(-c.w_attract * d2) + c.h_repel * std::exp(-c.w_repel * d2);
    }
    return j;
}

namespace detail {

inline void clamp_to(Bacterium& b, const Domain2D& d) {
    b.x = std::clamp(b.x, d.x_min, d.x_max);
    b.y = std::clamp(b.y, d.y_min, d.y_max);
}

} // namespace detail

/// One tumble followed by up to ns swims while the combined cost keeps
/// strictly decreasing. Health accumulates the combined cost at every point
/// visited; returns the number of landscape evaluations performed.
inline int chemotactic_step(Bacterium& b, std::span<const Bacterium> population,
                            const Landscape& landscape, const Domain2D& domain,
                            const BfoaParams& params, std::mt19937_64& rng) {
    const double step = params.resolved_step_size(domain);
    auto combined = [&](double x, double y) {
        double j = landscape(x, y);
        if (params.swarming) j += swarming_cost(x, y, population, params.swarm_coeffs);
        return j;
    };

    int evals = 1;
    double j_last = combined(b.x, b.y);

    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double a = angle(rng);
    double dx = std::cos(a);
    double dy = std::sin(a);

    b.x += step * dx;
    b.y += step * dy;
    detail::clamp_to(b, domain);
    double j_new = combined(b.x, b.y);
    ++evals;
    b.health += j_new;

    int swims = 0;
    while (swims < params.ns && j_new < j_last) {
        j_last = j_new;
        b.x += step * dx;
        b.y += step * dy;
        detail::clamp_to(b, domain);
        j_new = combined(b.x, b.y);
        ++evals;
        b.health += j_new;
        ++swims;
    }
    return evals;
}

/// Healthiest half survives and is duplicated in place of the worst half.
/// Lower accumulated health means better fed. Health is reset.
inline std::vector<Bacterium> reproduce(std::vector<Bacterium> population) {
    if (population.size() % 2 != 0) throw std::invalid_argument("reproduce: odd population");
    std::stable_sort(population.begin(), population.end(),
                     [](const Bacterium& a, const Bacterium& b) { return a.health < b.health; });
    std::size_t half = population.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        population[half + i] = population[i];
    }
    for (auto& b : population) b.health = 0.0;
    return population;
}

struct TraceRecord {
    int step = 0; // global chemotactic step counter across generations
    double best_x = 0.0;
    double best_y = 0.0;
    double best_cost = 0.0; // raw landscape cost, excluding the swarming term
};

struct BfoaResult {
    std::vector<TraceRecord> trace;
    std::vector<Bacterium> final_population;
};

using PopulationObserver = std::function<void(int global_step, std::span<const Bacterium>)>;

/// Full n_ed x n_re x nc loop. Emits one best-so-far record per chemotactic
/// step so traces align with an SSA run of n_ed * n_re * nc steps.
inline BfoaResult run_bfoa(const Landscape& landscape, const Domain2D& domain,
                           const BfoaParams& params, const PopulationObserver& observer = {}) {
    params.validate();
    domain.validate();
    std::mt19937_64 rng(params.rng_seed);
    std::uniform_real_distribution<double> ux(domain.x_min, domain.x_max);
    std::uniform_real_distribution<double> uy(domain.y_min, domain.y_max);

    std::vector<Bacterium> population(params.s);
    for (auto& b : population) b = {ux(rng), uy(rng), 0.0};

    BfoaResult result;
    double best_cost = std::numeric_limits<double>::infinity();
    double best_x = 0.0;
    double best_y = 0.0;
    auto consider = [&](const Bacterium& b) {
        double j = landscape(b.x, b.y);
        if (j < best_cost) {
            best_cost = j;
            best_x = b.x;
            best_y = b.y;
        }
    };
    for (const auto& b : population) consider(b);

    int global_step = 0;
    for (int l = 0; l < params.n_ed; ++l) {
        for (int k = 0; k < params.n_re; ++k) {
            for (int j = 0; j < params.nc; ++j) {
                for (auto& b : population) {
                    chemotactic_step(b, population, landscape, domain, params, rng);
                    consider(b);
                }
                ++global_step;
                result.trace.push_back({global_step, best_x, best_y, best_cost});
                if (observer) observer(global_step, population);
            }
            population = reproduce(std::move(population));
        }
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (auto& b : population) {
            if (coin(rng) < params.p_ed) {
                b = {ux(rng), uy(rng), 0.0};
                consider(b);
            }
        }
    }
    result.final_population = std::move(population);
    return result;
}

inline std::string trace_csv_header() { return "global_step,best_x,best_y,best_cost\n"; }

inline std::string trace_csv_row(const TraceRecord& rec) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d,%.9g,%.9g,%.9g\n", rec.step, rec.best_x, rec.best_y,
                  rec.best_cost);
    return buf;
}

inline std::string population_csv(std::span<const Bacterium> population) {
    std::string out = "x,y\n";
    char buf[96];
    for (const auto& b : population) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g\n", b.x, b.y);
        out += buf;
    }
    return out;
}

} // namespace swarm::bfoa
