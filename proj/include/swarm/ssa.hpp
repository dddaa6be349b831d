#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "swarm/grid.hpp"
#include "swarm/habitat.hpp"

namespace swarm {

using PheromoneField = Grid<double>;

/// How the evaporation parameter k is read. DecayRate keeps (1-k) of the
/// field each step; Retention keeps k of it.
enum class EvaporationMode { DecayRate, Retention };

struct DirectionWeights {
    // w(delta) for delta = 0 (straight ahead) .. 4 (U-turn).
    std::array<double, 5> w{1.0, 0.5, 0.25, 1.0 / 12.0, 0.05};

    double sum_over_compass() const {
        // each delta 1..3 occurs twice around the compass, 0 and 4 once
        return w[0] + 2.0 * (w[1] + w[2] + w[3]) + w[4];
    }
};

struct SsaParams {
    int n_ants = 1;
    int t_max = 0;
    double k = 0.015;       // evaporation rate
    double eta = 0.07;      // constant deposition term
    double beta = 3.5;      // osmotropotaxic sensitivity
    double gamma = 0.2;     // inverse sensory capacity
    double p = 1.93;        // altitude-scaled deposition gain
    DirectionWeights direction_weights;
    std::uint64_t rng_seed = 1;
    EvaporationMode evaporation = EvaporationMode::DecayRate;
    bool reset_extremes_on_landscape_change = true;

    void validate(std::size_t cell_count) const {
        if (n_ants < 1) throw std::invalid_argument("n_ants must be positive");
        if (t_max < 0) throw std::invalid_argument("t_max must be non-negative");
        if (k < 0.0 || k > 1.0) throw std::invalid_argument("k outside [0,1]");
        if (eta < 0.0) throw std::invalid_argument("eta must be >= 0");
        if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
        if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
        if (p < 0.0) throw std::invalid_argument("p must be >= 0");
        if (static_cast<std::size_t>(n_ants) >= cell_count) {
            throw std::invalid_argument("n_ants must be smaller than the number of grid cells");
        }
    }
};

struct AntState {
    Cell cell;
    int heading = 0; // compass index, same ordering as neighbors8
};

struct ColonyState {
    std::vector<AntState> ants;
    PheromoneField field;
    Grid<std::int32_t> occupant; // ant index per cell, -1 when free
    double z_min_seen = 0.0;
    double z_max_seen = 0.0;
    bool extremes_valid = false;
    int t = 0;

    bool occupied(Cell c) const { return occupant.at(c) >= 0; }

    void note_altitude(double z) {
        if (!extremes_valid) {
            z_min_seen = z_max_seen = z;
            extremes_valid = true;
        } else {
            z_min_seen = std::min(z_min_seen, z);
            z_max_seen = std::max(z_max_seen, z);
        }
    }
};

/// Eq. 1 pheromone weighting: W(sigma) = (1 + sigma / (1 + gamma*sigma))^beta.
inline double pheromone_weight(double sigma, double beta, double gamma) {
    if (!(sigma >= 0.0)) {
        throw std::invalid_argument("pheromone_weight: sigma must be non-negative");
    }
    return std::pow(1.0 + sigma / (1.0 + gamma * sigma), beta);
}

/// Normalized move distribution over the 8 neighbors. prob[d] is zero for
/// occupied neighbors; blocked means no neighbor was admissible.
struct TransitionDistribution {
    std::array<double, 8> prob{};
    bool blocked = true;
};

template <typename OccupiedFn>
TransitionDistribution transition_probabilities(const AntState& ant, const PheromoneField& field,
                                                OccupiedFn&& occupied, const SsaParams& params) {
    auto nbrs = neighbors8(ant.cell, field.width(), field.height());
    TransitionDistribution dist;
    std::array<double, 8> weight{};
    double total = 0.0;
    for (int d = 0; d < 8; ++d) {
        if (occupied(nbrs[d])) continue;
        double w = pheromone_weight(field.at(nbrs[d]), params.beta, params.gamma) *
                   params.direction_weights.w[direction_delta(ant.heading, d)];
        weight[d] = w;
        total += w;
    }
    if (total <= 0.0) return dist;
    dist.blocked = false;
    for (int d = 0; d < 8; ++d) dist.prob[d] = weight[d] / total;
    return dist;
}

/// Eq. 3 deposition: T = eta + p * |z - reference extreme| / |z_max - z_min|.
/// The reference is the colony minimum when maximizing and the maximum when
/// minimizing; a flat history (delta_max = 0) reduces to the constant eta.
inline double deposit_amount(double z, double z_min_seen, double z_max_seen, Goal goal,
                             double eta, double p) {
    double delta_max = std::abs(z_max_seen - z_min_seen);
    if (delta_max == 0.0) return eta;
    double delta = (goal == Goal::Minimize) ? std::abs(z - z_max_seen) : std::abs(z - z_min_seen);
    return eta + p * delta / delta_max;
}

inline void evaporate(PheromoneField& field, double k,
                      EvaporationMode mode = EvaporationMode::DecayRate) {
    if (k < 0.0 || k > 1.0) throw std::invalid_argument("evaporate: k outside [0,1]");
    double keep = (mode == EvaporationMode::DecayRate) ? 1.0 - k : k;
    for (auto& v : field.values()) v *= keep;
}

/// Random non-colliding placement with uniform random headings. The colony's
/// altitude extremes are seeded from the occupied cells.
inline ColonyState init_colony(const Habitat& habitat, const SsaParams& params,
                               std::mt19937_64& rng) {
    params.validate(habitat.cell_count());
    ColonyState state;
    state.field = PheromoneField(habitat.width, habitat.height, 0.0);
    state.occupant = Grid<std::int32_t>(habitat.width, habitat.height, -1);
    state.ants.reserve(params.n_ants);
    std::uniform_int_distribution<int> pick_x(0, habitat.width - 1);
    std::uniform_int_distribution<int> pick_y(0, habitat.height - 1);
    std::uniform_int_distribution<int> pick_heading(0, 7);
    for (int i = 0; i < params.n_ants; ++i) {
        Cell c;
        do {
            c = {pick_x(rng), pick_y(rng)};
        } while (state.occupied(c));
        state.occupant.at(c) = i;
        state.ants.push_back({c, pick_heading(rng)});
        state.note_altitude(habitat.altitude_at(c));
    }
    return state;
}

/// One pass of the main loop before evaporation: every ant, in a freshly
/// shuffled order, samples a move, turns toward it, and deposits at its new
/// cell. Blocked ants stay put (and still deposit where they stand).
inline void move_and_deposit(ColonyState& state, const Habitat& habitat, const SsaParams& params,
                             std::mt19937_64& rng) {
    std::vector<int> order(state.ants.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int idx : order) {
        AntState& ant = state.ants[idx];
        auto dist = transition_probabilities(
            ant, state.field, [&](Cell c) { return state.occupied(c); }, params);
        if (!dist.blocked) {
            double u = unit(rng);
            double acc = 0.0;
            int chosen = -1;
            for (int d = 0; d < 8; ++d) {
                acc += dist.prob[d];
                if (dist.prob[d] > 0.0 && u <= acc) {
                    chosen = d;
                    break;
                }
            }
            if (chosen < 0) { // u landed on accumulated round-off past the last slot
                for (int d = 7; d >= 0; --d) {
                    if (dist.prob[d] > 0.0) {
                        chosen = d;
                        break;
                    }
                }
            }
            Cell dest = neighbors8(ant.cell, habitat.width, habitat.height)[chosen];
            state.occupant.at(ant.cell) = -1;
            state.occupant.at(dest) = idx;
            ant.cell = dest;
            ant.heading = chosen;
        }
        state.note_altitude(habitat.altitude_at(ant.cell));
        state.field.at(ant.cell) += deposit_amount(habitat.altitude_at(ant.cell), state.z_min_seen,
                                                   state.z_max_seen, habitat.goal, params.eta,
                                                   params.p);
    }
}

/// Full simulation step: move + deposit, then one evaporation pass.
inline void step_colony(ColonyState& state, const Habitat& habitat, const SsaParams& params,
                        std::mt19937_64& rng) {
    move_and_deposit(state, habitat, params, rng);
    evaporate(state.field, params.k, params.evaporation);
    ++state.t;
}

/// Called once per step after all deposits and before evaporation, so the
/// observed field is meaningful even at k = 1.
using StepObserver = std::function<void(const ColonyState&, const Habitat&, const ChangeFlags&)>;

/// Table I main loop with scheduled habitat changes. The habitat is mutated
/// in place by schedule events.
inline ColonyState run_ssa(Habitat& habitat, const Schedule& schedule, const SsaParams& params,
                           const StepObserver& observer = {}) {
    schedule.validate();
    for (const auto& e : schedule.events) {
        if (e.at_step > params.t_max) {
            throw std::invalid_argument("run_ssa: schedule event beyond t_max");
        }
    }
    std::mt19937_64 rng(params.rng_seed);
    ColonyState state = init_colony(habitat, params, rng);
    for (int t = 1; t <= params.t_max; ++t) {
        ChangeFlags flags = apply_schedule(habitat, schedule, t);
        if (flags.landscape_changed && params.reset_extremes_on_landscape_change) {
            state.extremes_valid = false;
            for (const auto& ant : state.ants) {
                state.note_altitude(habitat.altitude_at(ant.cell));
            }
        }
        move_and_deposit(state, habitat, params, rng);
        state.t = t;
        if (observer) observer(state, habitat, flags);
        evaporate(state.field, params.k, params.evaporation);
    }
    return state;
}

} // namespace swarm
