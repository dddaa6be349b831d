#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swarm/benchmarks.hpp"
#include "swarm/bfoa.hpp"
#include "swarm/habitat.hpp"
#include "swarm/metrics.hpp"
#include "swarm/ssa.hpp"

namespace swarm {

enum class Algorithm { Ssa, Bfoa };

/// Fully resolved experiment description. parse_config() fills defaults so a
/// rendered echo of this struct round-trips exactly.
struct ExperimentConfig {
    Algorithm algorithm = Algorithm::Ssa;
    std::string function_id;
    Domain2D domain;
    int width = 100;
    int height = 100;
    Goal goal = Goal::Maximize;
    Schedule schedule;
    SsaParams ssa;
    bfoa::BfoaParams bfoa;
    std::vector<int> snapshot_steps;
    std::vector<std::uint64_t> seeds{1};
    std::string output_dir = "out";
    double radius = 0.0; // localization radius in cells

    int total_steps() const {
        return algorithm == Algorithm::Ssa ? ssa.t_max : bfoa.n_ed * bfoa.n_re * bfoa.nc;
    }
};

namespace cfg_detail {

struct Entry {
    std::string section;
    std::string key;
    std::string value;
    int line = 0;
};

inline std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] inline void fail_line(int line, const std::string& msg) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] inline void fail_field(const std::string& field, const std::string& msg) {
    throw std::invalid_argument("config field '" + field + "': " + msg);
}

inline std::vector<Entry> tokenize(std::string_view text) {
    std::vector<Entry> entries;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        std::string line;
        {
            std::size_t cut = raw.find_first_of("#;");
            line = trim(raw.substr(0, cut));
        }
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) fail_line(line_no, "malformed section header");
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail_line(line_no, "expected 'key = value'");
        if (section.empty()) fail_line(line_no, "entry before any [section]");
        Entry e;
        e.section = section;
        e.key = trim(std::string_view(line).substr(0, eq));
        e.value = trim(std::string_view(line).substr(eq + 1));
        e.line = line_no;
        if (e.key.empty()) fail_line(line_no, "empty key");
        entries.push_back(std::move(e));
    }
    return entries;
}

inline double parse_real(const Entry& e) {
    try {
        std::size_t used = 0;
        double v = std::stod(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument("trailing garbage");
        return v;
    } catch (const std::exception&) {
        fail_line(e.line, "'" + e.key + "' expects a real number, got '" + e.value + "'");
    }
}

inline long long parse_int(const Entry& e) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument("trailing garbage");
        return v;
    } catch (const std::exception&) {
        fail_line(e.line, "'" + e.key + "' expects an integer, got '" + e.value + "'");
    }
}

inline bool parse_bool(const Entry& e) {
    if (e.value == "true") return true;
    if (e.value == "false") return false;
    fail_line(e.line, "'" + e.key + "' expects true or false");
}

inline Goal parse_goal(const Entry& e) {
    if (e.value == "maximize") return Goal::Maximize;
    if (e.value == "minimize") return Goal::Minimize;
    fail_line(e.line, "'" + e.key + "' expects maximize or minimize");
}

inline std::vector<std::string> split_commas(std::string_view value) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = value.find(',', pos);
        parts.push_back(trim(value.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return parts;
}

} // namespace cfg_detail

inline ExperimentConfig parse_config(std::string_view text) {
    using namespace cfg_detail;
    auto entries = tokenize(text);

    ExperimentConfig cfg;
    bool saw_ssa = false;
    bool saw_bfoa = false;
    bool saw_domain = false;
    std::optional<double> radius;
    std::vector<ScheduleEvent> events;

    for (const auto& e : entries) {
        if (e.section == "habitat") {
            if (e.key == "function") cfg.function_id = e.value;
            else if (e.key == "x_min") { cfg.domain.x_min = parse_real(e); saw_domain = true; }
            else if (e.key == "x_max") { cfg.domain.x_max = parse_real(e); saw_domain = true; }
            else if (e.key == "y_min") { cfg.domain.y_min = parse_real(e); saw_domain = true; }
            else if (e.key == "y_max") { cfg.domain.y_max = parse_real(e); saw_domain = true; }
            else if (e.key == "width") cfg.width = static_cast<int>(parse_int(e));
            else if (e.key == "height") cfg.height = static_cast<int>(parse_int(e));
            else if (e.key == "goal") cfg.goal = parse_goal(e);
            else fail_line(e.line, "unknown key '" + e.key + "' in [habitat]");
        } else if (e.section == "ssa") {
            saw_ssa = true;
            if (e.key == "ants") cfg.ssa.n_ants = static_cast<int>(parse_int(e));
            else if (e.key == "t_max") cfg.ssa.t_max = static_cast<int>(parse_int(e));
            else if (e.key == "k") cfg.ssa.k = parse_real(e);
            else if (e.key == "eta") cfg.ssa.eta = parse_real(e);
            else if (e.key == "beta") cfg.ssa.beta = parse_real(e);
            else if (e.key == "gamma") cfg.ssa.gamma = parse_real(e);
            else if (e.key == "p") cfg.ssa.p = parse_real(e);
            else if (e.key == "w0") cfg.ssa.direction_weights.w[0] = parse_real(e);
            else if (e.key == "w1") cfg.ssa.direction_weights.w[1] = parse_real(e);
            else if (e.key == "w2") cfg.ssa.direction_weights.w[2] = parse_real(e);
            else if (e.key == "w3") cfg.ssa.direction_weights.w[3] = parse_real(e);
            else if (e.key == "w4") cfg.ssa.direction_weights.w[4] = parse_real(e);
            else if (e.key == "evaporation") {
                if (e.value == "decay") cfg.ssa.evaporation = EvaporationMode::DecayRate;
                else if (e.value == "retention") cfg.ssa.evaporation = EvaporationMode::Retention;
                else fail_line(e.line, "'evaporation' expects decay or retention");
            } else if (e.key == "reset_extremes") {
                cfg.ssa.reset_extremes_on_landscape_change = parse_bool(e);
            } else fail_line(e.line, "unknown key '" + e.key + "' in [ssa]");
        } else if (e.section == "bfoa") {
            saw_bfoa = true;
            if (e.key == "s") cfg.bfoa.s = static_cast<int>(parse_int(e));
            else if (e.key == "nc") cfg.bfoa.nc = static_cast<int>(parse_int(e));
            else if (e.key == "ns") cfg.bfoa.ns = static_cast<int>(parse_int(e));
            else if (e.key == "n_re") cfg.bfoa.n_re = static_cast<int>(parse_int(e));
            else if (e.key == "n_ed") cfg.bfoa.n_ed = static_cast<int>(parse_int(e));
            else if (e.key == "p_ed") cfg.bfoa.p_ed = parse_real(e);
            else if (e.key == "step_size") {
                if (e.value == "auto") cfg.bfoa.step_size.reset();
                else cfg.bfoa.step_size = parse_real(e);
            }
            else if (e.key == "d_attract") cfg.bfoa.swarm_coeffs.d_attract = parse_real(e);
            else if (e.key == "w_attract") cfg.bfoa.swarm_coeffs.w_attract = parse_real(e);
            else if (e.key == "h_repel") cfg.bfoa.swarm_coeffs.h_repel = parse_real(e);
            else if (e.key == "w_repel") cfg.bfoa.swarm_coeffs.w_repel = parse_real(e);
            else if (e.key == "swarming") cfg.bfoa.swarming = parse_bool(e);
            else fail_line(e.line, "unknown key '" + e.key + "' in [bfoa]");
        } else if (e.section == "schedule") {
            if (e.key != "event") fail_line(e.line, "only 'event' entries belong in [schedule]");
            auto parts = split_commas(e.value);
            if (parts.size() != 3) {
                fail_line(e.line, "event expects 'at_step, function, goal' (use - for no change)");
            }
            ScheduleEvent ev;
            try {
                std::size_t used = 0;
                ev.at_step = std::stoi(parts[0], &used);
                if (used != parts[0].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                fail_line(e.line, "event at_step expects an integer, got '" + parts[0] + "'");
            }
            if (parts[1] != "-") ev.new_function = parts[1];
            if (parts[2] != "-") {
                if (parts[2] == "maximize") ev.new_goal = Goal::Maximize;
                else if (parts[2] == "minimize") ev.new_goal = Goal::Minimize;
                else fail_line(e.line, "event goal expects maximize, minimize or -");
            }
            if (!ev.new_function && !ev.new_goal) {
                fail_line(e.line, "event changes neither function nor goal");
            }
            events.push_back(std::move(ev));
        } else if (e.section == "output") {
            if (e.key == "dir") cfg.output_dir = e.value;
            else if (e.key == "seeds") {
                cfg.seeds.clear();
                for (const auto& part : split_commas(e.value)) {
                    try {
                        std::size_t used = 0;
                        cfg.seeds.push_back(std::stoull(part, &used));
                        if (used != part.size()) throw std::invalid_argument("");
                    } catch (const std::exception&) {
                        fail_line(e.line, "seeds expects a comma list of integers");
                    }
                }
            } else if (e.key == "snapshots") {
                cfg.snapshot_steps.clear();
                if (!e.value.empty() && e.value != "-") {
                    for (const auto& part : split_commas(e.value)) {
                        try {
                            std::size_t used = 0;
                            cfg.snapshot_steps.push_back(std::stoi(part, &used));
                            if (used != part.size()) throw std::invalid_argument("");
                        } catch (const std::exception&) {
                            fail_line(e.line, "snapshots expects a comma list of integers");
                        }
                    }
                }
            } else if (e.key == "radius") radius = parse_real(e);
            else fail_line(e.line, "unknown key '" + e.key + "' in [output]");
        } else {
            fail_line(e.line, "unknown section [" + e.section + "]");
        }
    }

    // validation
    if (cfg.function_id.empty()) fail_field("habitat.function", "missing");
    const BenchmarkFunction& fn = find_benchmark(cfg.function_id);
    if (!saw_domain) cfg.domain = fn.default_domain;
    cfg.domain.validate();
    if (cfg.width < 3 || cfg.height < 3) fail_field("habitat.width/height", "grid must be at least 3x3");
    if (saw_ssa && saw_bfoa) fail_field("algorithm", "config has both [ssa] and [bfoa] sections");
    cfg.algorithm = saw_bfoa ? Algorithm::Bfoa : Algorithm::Ssa;

    cfg.schedule = Schedule(std::move(events));
    if (cfg.seeds.empty()) fail_field("output.seeds", "at least one seed required");

    if (cfg.algorithm == Algorithm::Ssa) {
        try {
            cfg.ssa.validate(static_cast<std::size_t>(cfg.width) * cfg.height);
        } catch (const std::exception& ex) {
            fail_field("ssa", ex.what());
        }
    } else {
        try {
            cfg.bfoa.validate();
        } catch (const std::exception& ex) {
            fail_field("bfoa", ex.what());
        }
    }
    for (int t : cfg.snapshot_steps) {
        if (t < 0 || t > cfg.total_steps()) {
            fail_field("output.snapshots", "snapshot step " + std::to_string(t) +
                                               " outside [0, " + std::to_string(cfg.total_steps()) + "]");
        }
    }
    for (const auto& e : cfg.schedule.events) {
        if (e.at_step > cfg.total_steps()) {
            fail_field("schedule", "event at step " + std::to_string(e.at_step) + " beyond the run");
        }
        if (e.new_function) find_benchmark(*e.new_function);
    }
    cfg.radius = radius ? *radius : default_localization_radius(cfg.width, cfg.height);
    if (cfg.radius <= 0.0) fail_field("output.radius", "must be positive");
    return cfg;
}

namespace cfg_detail {

inline std::string real_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace cfg_detail

/// Renders a configuration with every value resolved. Re-parsing the result
/// reproduces the configuration exactly.
inline std::string render_config(const ExperimentConfig& cfg) {
    using cfg_detail::real_str;
    std::ostringstream out;
    out << "[habitat]\n";
    out << "function = " << cfg.function_id << "\n";
    out << "x_min = " << real_str(cfg.domain.x_min) << "\n";
    out << "x_max = " << real_str(cfg.domain.x_max) << "\n";
    out << "y_min = " << real_str(cfg.domain.y_min) << "\n";
    out << "y_max = " << real_str(cfg.domain.y_max) << "\n";
    out << "width = " << cfg.width << "\n";
    out << "height = " << cfg.height << "\n";
    out << "goal = " << to_string(cfg.goal) << "\n\n";
    if (cfg.algorithm == Algorithm::Ssa) {
        const auto& s = cfg.ssa;
        out << "[ssa]\n";
        out << "ants = " << s.n_ants << "\n";
        out << "t_max = " << s.t_max << "\n";
        out << "k = " << real_str(s.k) << "\n";
        out << "eta = " << real_str(s.eta) << "\n";
        out << "beta = " << real_str(s.beta) << "\n";
        out << "gamma = " << real_str(s.gamma) << "\n";
        out << "p = " << real_str(s.p) << "\n";
        for (int i = 0; i < 5; ++i) {
            out << "w" << i << " = " << real_str(s.direction_weights.w[i]) << "\n";
        }
        out << "evaporation = "
            << (s.evaporation == EvaporationMode::DecayRate ? "decay" : "retention") << "\n";
        out << "reset_extremes = " << (s.reset_extremes_on_landscape_change ? "true" : "false")
            << "\n\n";
    } else {
        const auto& b = cfg.bfoa;
        out << "[bfoa]\n";
        out << "s = " << b.s << "\n";
        out << "nc = " << b.nc << "\n";
        out << "ns = " << b.ns << "\n";
        out << "n_re = " << b.n_re << "\n";
        out << "n_ed = " << b.n_ed << "\n";
        out << "p_ed = " << real_str(b.p_ed) << "\n";
        out << "step_size = " << (b.step_size ? real_str(*b.step_size) : "auto") << "\n";
        out << "d_attract = " << real_str(b.swarm_coeffs.d_attract) << "\n";
        out << "w_attract = " << real_str(b.swarm_coeffs.w_attract) << "\n";
        out << "h_repel = " << real_str(b.swarm_coeffs.h_repel) << "\n";
        out << "w_repel = " << real_str(b.swarm_coeffs.w_repel) << "\n";
        out << "swarming = " << (b.swarming ? "true" : "false") << "\n\n";
    }
    if (!cfg.schedule.events.empty()) {
        out << "[schedule]\n";
        for (const auto& e : cfg.schedule.events) {
            out << "event = " << e.at_step << ", " << (e.new_function ? *e.new_function : "-")
                << ", " << (e.new_goal ? to_string(*e.new_goal) : "-") << "\n";
        }
        out << "\n";
    }
    out << "[output]\n";
    out << "dir = " << cfg.output_dir << "\n";
    out << "seeds = ";
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
        out << (i ? "," : "") << cfg.seeds[i];
    }
    out << "\n";
    out << "snapshots = ";
    if (cfg.snapshot_steps.empty()) {
        out << "-";
    } else {
        for (std::size_t i = 0; i < cfg.snapshot_steps.size(); ++i) {
            out << (i ? "," : "") << cfg.snapshot_steps[i];
        }
    }
    out << "\n";
    out << "radius = " << real_str(cfg.radius) << "\n";
    return out.str();
}

/// Built-in experiment presets. fig2..fig5 carry the published parameter
/// rows for the 100x100 runs; sv1..sv3 are the 50-agent, 400-step, 30x30
/// comparison runs (sv1 uses beta = 6, the others beta = 7).
inline const std::map<std::string, std::string>& preset_configs() {
    static const std::map<std::string, std::string> presets = {
        {"fig2",
         "[habitat]\n"
         "function = F0a\n"
         "width = 100\nheight = 100\n"
         "goal = maximize\n"
         "[ssa]\n"
         "ants = 3000\nt_max = 1000\n"
         "k = 0.015\neta = 0.07\nbeta = 3.5\ngamma = 0.2\np = 1.93\n"
         "[output]\n"
         "dir = out/fig2\n"
         "snapshots = 0,250,500,750,1000\n"},
        {"fig3",
         "[habitat]\n"
         "function = F0a\n"
         "width = 100\nheight = 100\n"
         "goal = maximize\n"
         "[ssa]\n"
         "ants = 3000\nt_max = 1150\n"
         "k = 0.015\neta = 0.07\nbeta = 3.5\ngamma = 0.2\np = 1.93\n"
         "[schedule]\n"
         "event = 1001, F0b, -\n"
         "[output]\n"
         "dir = out/fig3\n"
         "snapshots = 0,500,1000,1010,1050,1080,1100,1150\n"},
        {"fig4",
         "[habitat]\n"
         "function = F0a\n"
         "width = 100\nheight = 100\n"
         "goal = maximize\n"
         "[ssa]\n"
         "ants = 2000\nt_max = 500\n"
         "k = 1.0\neta = 0.10\nbeta = 3.5\ngamma = 0.2\np = 1.90\n"
         "[schedule]\n"
         "event = 251, -, minimize\n"
         "[output]\n"
         "dir = out/fig4\n"
         "snapshots = 50,150,250,300,350,400,450,500\n"},
        {"fig5",
         "[habitat]\n"
         "function = F6\n"
         "width = 100\nheight = 100\n"
         "goal = minimize\n"
         "[ssa]\n"
         "ants = 3000\nt_max = 600\n"
         "k = 1.0\neta = 0.01\nbeta = 3.5\ngamma = 0.2\np = 1.90\n"
         "[schedule]\n"
         "event = 301, F0a, maximize\n"
         "[output]\n"
         "dir = out/fig5\n"
         "snapshots = 20,100,300,320,400,500,600\n"},
        {"sv1",
         "[habitat]\n"
         "function = P1\n"
         "width = 30\nheight = 30\n"
         "goal = minimize\n"
         "[ssa]\n"
         "ants = 50\nt_max = 400\n"
         "k = 1.0\neta = 0.1\nbeta = 6\ngamma = 0.2\np = 1.9\n"
         "[output]\n"
         "dir = out/sv1\n"
         "snapshots = 0,100,200,300,400\n"},
        {"sv2",
         "[habitat]\n"
         "function = P2\n"
         "width = 30\nheight = 30\n"
         "goal = minimize\n"
         "[ssa]\n"
         "ants = 50\nt_max = 400\n"
         "k = 1.0\neta = 0.1\nbeta = 7\ngamma = 0.2\np = 1.9\n"
         "[output]\n"
         "dir = out/sv2\n"
         "snapshots = 0,100,200,300,400\n"},
        {"sv3",
         "[habitat]\n"
         "function = P1\n"
         "width = 30\nheight = 30\n"
         "goal = minimize\n"
         "[ssa]\n"
         "ants = 50\nt_max = 400\n"
         "k = 1.0\neta = 0.1\nbeta = 7\ngamma = 0.2\np = 1.9\n"
         "[schedule]\n"
         "event = 201, -, maximize\n"
         "[output]\n"
         "dir = out/sv3\n"
         "snapshots = 0,100,200,300,400\n"},
        {"sv1_bfoa",
         "[habitat]\n"
         "function = P1\n"
         "width = 30\nheight = 30\n"
         "goal = minimize\n"
         "[bfoa]\n"
         "s = 50\nnc = 100\nns = 4\nn_re = 4\nn_ed = 1\np_ed = 0.25\n"
         "step_size = auto\n"
         "[output]\n"
         "dir = out/sv1_bfoa\n"
         "snapshots = 100,200,300,400\n"},
        {"sv2_bfoa",
         "[habitat]\n"
         "function = P2\n"
         "width = 30\nheight = 30\n"
         "goal = minimize\n"
         "[bfoa]\n"
         "s = 50\nnc = 100\nns = 4\nn_re = 4\nn_ed = 1\np_ed = 0.25\n"
         "step_size = auto\n"
         "[output]\n"
         "dir = out/sv2_bfoa\n"
         "snapshots = 100,200,300,400\n"},
    };
    return presets;
}

inline std::string preset_config(std::string_view name) {
    const auto& presets = preset_configs();
    auto it = presets.find(std::string(name));
    if (it == presets.end()) {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    }
    return it->second;
}

} // namespace swarm
