#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swarm/grid.hpp"

namespace swarm {

struct KnownOptimum {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
    Goal kind = Goal::Minimize;
};

/// A registered 2-variable test function.
struct BenchmarkFunction {
    std::string id;
    std::function<double(double, double)> evaluate;
    Domain2D default_domain;
    std::optional<KnownOptimum> known_optimum;
};

/// Sum of isotropic Gaussian bumps/pits over a constant baseline.
/// z(x, y) = plateau + sum_i weight_i * exp(-((x-cx_i)^2 + (y-cy_i)^2) / spread_i)
struct GaussianTerm {
    double weight = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    double spread = 1.0; // > 0
};

struct GaussianMixtureLandscape {
    std::vector<GaussianTerm> terms;
    double plateau = 0.0;

    double operator()(double x, double y) const {
        double z = plateau;
        for (const auto& t : terms) {
            double dx = x - t.cx;
            double dy = y - t.cy;
            z += t.weight * std::exp(-(dx * dx + dy * dy) / t.spread);
        }
        return z;
    }
};

/// Nutrient-style landscapes for the 30x30 comparison runs. P1 is multimodal:
/// a dominant pit at (15,15), a dominant two-scale bump at (18,18) (wide skirt
/// plus narrow tip), and minor extrema elsewhere. P2 is zero at (15,15) and
/// falls off to a flat plateau of -5.
inline GaussianMixtureLandscape passino_landscape(std::string_view preset) {
    if (preset == "P1") {
        return GaussianMixtureLandscape{
            {
                {-4.0, 15.0, 15.0, 8.0},
                {2.0, 18.0, 18.0, 14.0},
                {2.0, 18.0, 18.0, 3.0},
                {-1.2, 8.0, 22.0, 4.0},
                {1.2, 22.0, 8.0, 6.0},
                {-1.0, 6.0, 6.0, 4.0},
            },
            0.0};
    }
    if (preset == "P2") {
        return GaussianMixtureLandscape{{{5.0, 15.0, 15.0, 30.0}}, -5.0};
    }
    throw std::invalid_argument("passino_landscape: unknown preset '" + std::string(preset) + "'");
}

inline GaussianMixtureLandscape passino_landscape(std::vector<GaussianTerm> terms, double plateau = 0.0) {
    if (terms.empty()) {
        throw std::invalid_argument("passino_landscape: empty term list");
    }
    return GaussianMixtureLandscape{std::move(terms), plateau};
}

namespace detail {

inline double f0a(double x, double y) {
    return x * std::exp(-0.2 * (x * x + y * y));
}

inline double rastrigin(double x, double y) {
    using std::numbers::pi;
    return 20.0 + x * x - 10.0 * std::cos(2.0 * pi * x) + y * y - 10.0 * std::cos(2.0 * pi * y);
}

// |x| under the root keeps the negative half of the domain evaluable.
inline double schwefel_sine(double x, double y) {
    return -x * std::sin(std::sqrt(std::abs(x))) - y * std::sin(std::sqrt(std::abs(y)));
}

inline std::vector<BenchmarkFunction> make_registry() {
    const double f0a_peak_x = std::sqrt(2.5);
    const double f0a_peak_z = f0a_peak_x * std::exp(-0.5);
    std::vector<BenchmarkFunction> fns;
    fns.push_back({"F0a", f0a, {-5, 5, -5, 5},
                   KnownOptimum{f0a_peak_x, 0.0, f0a_peak_z, Goal::Maximize}});
    fns.push_back({"F0b", [](double x, double y) { return -f0a(x, y); }, {-5, 5, -5, 5},
                   KnownOptimum{f0a_peak_x, 0.0, -f0a_peak_z, Goal::Minimize}});
    fns.push_back({"F1", [](double x, double y) { return x * x + y * y; },
                   {-5.12, 5.12, -5.12, 5.12}, KnownOptimum{0, 0, 0, Goal::Minimize}});
    fns.push_back({"F2", [](double x, double y) { return x * x + 2.0 * y * y; },
                   {-5.12, 5.12, -5.12, 5.12}, KnownOptimum{0, 0, 0, Goal::Minimize}});
    fns.push_back({"F3", [](double x, double y) { return x * x + (x + y) * (x + y); },
                   {-65.536, 65.536, -65.536, 65.536}, KnownOptimum{0, 0, 0, Goal::Minimize}});
    fns.push_back({"F4",
                   [](double x, double y) {
                       double a = y - x * x;
                       double b = 1.0 - x;
                       return 100.0 * a * a + b * b;
                   },
                   {-2.048, 2.048, -2.048, 2.048}, KnownOptimum{1, 1, 0, Goal::Minimize}});
    fns.push_back({"F5", rastrigin, {-5.12, 5.12, -5.12, 5.12},
                   KnownOptimum{0, 0, 0, Goal::Minimize}});
    fns.push_back({"F6", schwefel_sine, {-500, 500, -500, 500},
                   KnownOptimum{420.9687, 420.9687,
                                schwefel_sine(420.9687, 420.9687), Goal::Minimize}});
    fns.push_back({"P1", passino_landscape("P1"), {0, 30, 0, 30}, std::nullopt});
    fns.push_back({"P2", passino_landscape("P2"), {0, 30, 0, 30}, std::nullopt});
    return fns;
}

} // namespace detail

inline const std::vector<BenchmarkFunction>& benchmark_registry() {
    static const std::vector<BenchmarkFunction> registry = detail::make_registry();
    return registry;
}

inline const BenchmarkFunction* try_find_benchmark(std::string_view id) {
    for (const auto& fn : benchmark_registry()) {
        if (fn.id == id) return &fn;
    }
    return nullptr;
}

inline const BenchmarkFunction& find_benchmark(std::string_view id) {
    if (const auto* fn = try_find_benchmark(id)) return *fn;
    throw std::invalid_argument("unknown benchmark function '" + std::string(id) + "'");
}

inline double evaluate(std::string_view id, double x, double y) {
    return find_benchmark(id).evaluate(x, y);
}

} // namespace swarm
