#pragma once

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "swarm/bfoa.hpp"
#include "swarm/config.hpp"
#include "swarm/metrics.hpp"
#include "swarm/snapshot.hpp"
#include "swarm/ssa.hpp"

namespace swarm {

/// Localization mass threshold used for the summary's adaptation times.
inline constexpr double kAdaptationThreshold = 0.5;

struct SwitchAdaptation {
    int at_step = 0;
    std::optional<int> steps; // nullopt when the threshold was never reached
};

struct SeedResult {
    std::uint64_t seed = 0;
    // SSA
    std::vector<MetricsRecord> records;
    std::vector<SwitchAdaptation> adaptation;
    bool localized = false; // pher_argmax within radius of the grid optimum at t_max
    // BFOA
    std::vector<bfoa::TraceRecord> trace;
    double final_best = 0.0;
};

struct ExperimentResult {
    std::vector<SeedResult> seeds;
    int localized_count = 0;
};

namespace run_detail {

inline std::string step_tag(int t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d", t);
    return buf;
}

inline SeedResult run_ssa_seed(const ExperimentConfig& cfg, std::uint64_t seed,
                               const std::filesystem::path& dir, bool write_files) {
    SeedResult result;
    result.seed = seed;
    SsaParams params = cfg.ssa;
    params.rng_seed = seed;

    Habitat habitat = sample_function(cfg.function_id, cfg.domain, cfg.width, cfg.height);
    habitat.goal = cfg.goal;

    std::string csv = metrics_csv_header();
    auto snapshot_wanted = [&](int t) {
        for (int s : cfg.snapshot_steps) {
            if (s == t) return true;
        }
        return false;
    };
    auto write_snapshot = [&](int t, const PheromoneField& field) {
        if (!write_files) return;
        write_text_file(dir / ("snapshot_t" + step_tag(t) + ".pgm"), to_pgm(field));
        write_text_file(dir / ("snapshot_t" + step_tag(t) + ".csv"), to_csv(field));
    };
    if (snapshot_wanted(0)) {
        write_snapshot(0, PheromoneField(cfg.width, cfg.height, 0.0));
    }

    StepObserver observer = [&](const ColonyState& state, const Habitat& hab, const ChangeFlags&) {
        MetricsRecord rec = compute_metrics(state, hab, cfg.radius);
        result.records.push_back(rec);
        csv += metrics_csv_row(rec);
        if (snapshot_wanted(state.t)) write_snapshot(state.t, state.field);
    };
    run_ssa(habitat, cfg.schedule, params, observer);

    for (const auto& event : cfg.schedule.events) {
        result.adaptation.push_back(
            {event.at_step, adaptation_time(result.records, event.at_step, kAdaptationThreshold)});
    }
    if (!result.records.empty()) {
        const auto& last = result.records.back();
        result.localized = last.dist_to_opt <= cfg.radius;
        result.final_best = last.best_z;
    }
    if (write_files) {
        write_text_file(dir / "metrics.csv", csv);
        ExperimentConfig echo = cfg;
        echo.seeds = {seed};
        write_text_file(dir / "resolved.cfg", render_config(echo));
    }
    return result;
}

inline SeedResult run_bfoa_seed(const ExperimentConfig& cfg, std::uint64_t seed,
                                const std::filesystem::path& dir, bool write_files) {
    SeedResult result;
    result.seed = seed;
    bfoa::BfoaParams params = cfg.bfoa;
    params.rng_seed = seed;

    // BFOA minimizes; a maximize goal runs on the negated landscape.
    const BenchmarkFunction& fn = find_benchmark(cfg.function_id);
    double sign = cfg.goal == Goal::Maximize ? -1.0 : 1.0;
    bfoa::Landscape landscape = [&fn, sign](double x, double y) {
        return sign * fn.evaluate(x, y);
    };

    std::vector<std::pair<int, std::string>> snapshots;
    bfoa::PopulationObserver observer = [&](int step, std::span<const bfoa::Bacterium> population) {
        for (int s : cfg.snapshot_steps) {
            if (s == step) snapshots.emplace_back(step, bfoa::population_csv(population));
        }
    };
    auto run = bfoa::run_bfoa(landscape, cfg.domain, params, observer);
    result.trace = std::move(run.trace);
    result.final_best = result.trace.empty() ? 0.0 : result.trace.back().best_cost;
    result.localized = true; // localization is an SSA-side notion

    if (write_files) {
        std::string csv = bfoa::trace_csv_header();
        for (const auto& rec : result.trace) csv += bfoa::trace_csv_row(rec);
        write_text_file(dir / "trace.csv", csv);
        for (const auto& [step, content] : snapshots) {
            write_text_file(dir / ("population_t" + step_tag(step) + ".csv"), content);
        }
        ExperimentConfig echo = cfg;
        echo.seeds = {seed};
        write_text_file(dir / "resolved.cfg", render_config(echo));
    }
    return result;
}

} // namespace run_detail

/// Runs the experiment for every configured seed and writes per-seed output
/// directories plus an aggregate summary. Set write_files = false to run
/// in memory (used by tests).
inline ExperimentResult run_experiment(const ExperimentConfig& cfg, bool write_files = true) {
    namespace fs = std::filesystem;
    ExperimentResult result;
    fs::path out_root(cfg.output_dir);
    if (write_files) fs::create_directories(out_root);

    std::string summary;
    for (std::uint64_t seed : cfg.seeds) {
        fs::path dir = out_root / ("seed_" + std::to_string(seed));
        if (write_files) fs::create_directories(dir);
        SeedResult sr = cfg.algorithm == Algorithm::Ssa
                            ? run_detail::run_ssa_seed(cfg, seed, dir, write_files)
                            : run_detail::run_bfoa_seed(cfg, seed, dir, write_files);
        char buf[256];
        if (cfg.algorithm == Algorithm::Ssa) {
            const MetricsRecord last = sr.records.empty() ? MetricsRecord{} : sr.records.back();
            std::snprintf(buf, sizeof(buf),
                          "seed=%llu final_best_z=%.9g dist_to_opt=%.9g mass_fraction=%.9g "
                          "localized=%s",
                          static_cast<unsigned long long>(seed), last.best_z, last.dist_to_opt,
                          last.mass_fraction_r, sr.localized ? "yes" : "no");
            summary += buf;
            for (const auto& a : sr.adaptation) {
                std::snprintf(buf, sizeof(buf), " adapt@%d=%s", a.at_step,
                              a.steps ? std::to_string(*a.steps).c_str() : "not-reached");
                summary += buf;
            }
            summary += "\n";
        } else {
            std::snprintf(buf, sizeof(buf), "seed=%llu final_best_cost=%.9g\n",
                          static_cast<unsigned long long>(seed), sr.final_best);
            summary += buf;
        }
        if (sr.localized) ++result.localized_count;
        result.seeds.push_back(std::move(sr));
    }
    if (cfg.algorithm == Algorithm::Ssa) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "localized %d/%zu\n", result.localized_count,
                      cfg.seeds.size());
        summary += buf;
    }
    if (write_files) write_text_file(out_root / "summary.txt", summary);
    return result;
}

/// Samples a function onto a grid and writes the altitude CSV plus a sidecar
/// describing the cell-center mapping.
inline void dump_function(const std::string& id, Domain2D domain, int width, int height,
                          const std::filesystem::path& csv_path) {
    Habitat habitat = sample_function(id, domain, width, height);
    write_text_file(csv_path, to_csv(habitat.altitude));
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "function = %s\nwidth = %d\nheight = %d\n"
                  "x_min = %.17g\nx_max = %.17g\ny_min = %.17g\ny_max = %.17g\n"
                  "# cell (cx, cy) samples the cell center:\n"
                  "# x = x_min + (cx + 0.5) * (x_max - x_min) / width\n"
                  "# y = y_min + (cy + 0.5) * (y_max - y_min) / height\n"
                  "# row cy of the CSV holds cells (0..width-1, cy)\n",
                  id.c_str(), width, height, domain.x_min, domain.x_max, domain.y_min,
                  domain.y_max);
    std::filesystem::path sidecar = csv_path;
    sidecar += ".meta";
    write_text_file(sidecar, buf);
}

} // namespace swarm
