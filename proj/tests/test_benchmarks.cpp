#include "doctest.h"

#include <cmath>
#include <random>

#include "swarm/benchmarks.hpp"

using namespace swarm;

TEST_CASE("registered optima evaluate exactly") {
    CHECK(evaluate("F1", 0, 0) == 0.0);
    CHECK(evaluate("F4", 1, 1) == 0.0);
    CHECK(evaluate("F5", 0, 0) == 0.0);
}

TEST_CASE("F6 at the deceptive minimum matches direct evaluation") {
    // regression constant fixed from a high-precision evaluation of
    // -2 * 420.9687 * sin(sqrt(420.9687))
    double z = evaluate("F6", 420.9687, 420.9687);
    CHECK(z == doctest::Approx(-837.96577454432501).epsilon(1e-12));
}

TEST_CASE("F0b is the pointwise negation of F0a") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 10000; ++i) {
        double x = u(rng), y = u(rng);
        CHECK(evaluate("F0b", x, y) == -evaluate("F0a", x, y));
    }
}

TEST_CASE("F2 dominates F1 by exactly y^2") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-5.12, 5.12);
    for (int i = 0; i < 1000; ++i) {
        double x = u(rng), y = u(rng);
        double diff = evaluate("F2", x, y) - evaluate("F1", x, y);
        CHECK(diff == doctest::Approx(y * y).epsilon(1e-12));
        CHECK(diff >= 0.0);
    }
}

TEST_CASE("F5 is non-negative and zero only at the origin sample") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-5.12, 5.12);
    for (int i = 0; i < 1000; ++i) {
        double x = u(rng), y = u(rng);
        CHECK(evaluate("F5", x, y) >= 0.0);
    }
    CHECK(evaluate("F5", 0, 0) == 0.0);
}

TEST_CASE("evaluators are deterministic") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (const auto& fn : benchmark_registry()) {
        double x = u(rng), y = u(rng);
        CHECK(fn.evaluate(x, y) == fn.evaluate(x, y));
    }
}

TEST_CASE("known optima are consistent with their evaluators") {
    for (const auto& fn : benchmark_registry()) {
        if (!fn.known_optimum) continue;
        const auto& opt = *fn.known_optimum;
        CHECK(std::abs(fn.evaluate(opt.x, opt.y) - opt.value) <= 1e-9);
    }
}

TEST_CASE("unknown function id is rejected") {
    CHECK_THROWS_AS(evaluate("F99", 0, 0), std::invalid_argument);
    CHECK(try_find_benchmark("F99") == nullptr);
}

TEST_CASE("P2 is zero at its center and decreases to the plateau") {
    auto p2 = passino_landscape("P2");
    CHECK(p2(15, 15) == doctest::Approx(0.0).epsilon(1e-12));
    const double plateau = p2.terms.empty() ? 0.0 : p2.plateau;
    // strictly decreasing along rays until within 1% of the plateau
    for (double angle : {0.0, 0.7, 1.4, 2.1, 2.8, 3.5, 4.2, 4.9}) {
        double prev = p2(15, 15);
        for (double r = 0.25; r <= 15.0; r += 0.25) {
            double x = 15 + r * std::cos(angle);
            double y = 15 + r * std::sin(angle);
            double z = p2(x, y);
            if (std::abs(prev - plateau) <= 0.01 * std::abs(plateau)) break;
            CHECK(z < prev);
            prev = z;
        }
    }
}

TEST_CASE("zero-weight single term gives a constant plateau") {
    auto flat = passino_landscape({{0.0, 10.0, 10.0, 4.0}}, -3.0);
    CHECK(flat(0, 0) == -3.0);
    CHECK(flat(17.2, 29.9) == -3.0);
}

TEST_CASE("empty custom term list is rejected") {
    CHECK_THROWS_AS(passino_landscape(std::vector<GaussianTerm>{}), std::invalid_argument);
}

namespace {

// Exhaustive strict-local-extremum counter on a sampled grid, 8-neighbor,
// non-wrapping interior scan.
template <typename F>
int count_strict_extrema(F&& f, double lo, double hi, int n) {
    std::vector<double> z(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double x = lo + (i + 0.5) * (hi - lo) / n;
            double y = lo + (j + 0.5) * (hi - lo) / n;
            z[static_cast<std::size_t>(j) * n + i] = f(x, y);
        }
    }
    int count = 0;
    for (int j = 1; j + 1 < n; ++j) {
        for (int i = 1; i + 1 < n; ++i) {
            double c = z[static_cast<std::size_t>(j) * n + i];
            bool lt_all = true, gt_all = true;
            for (int dj = -1; dj <= 1; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    if (di == 0 && dj == 0) continue;
                    double v = z[static_cast<std::size_t>(j + dj) * n + i + di];
                    lt_all = lt_all && c < v;
                    gt_all = gt_all && c > v;
                }
            }
            if (lt_all || gt_all) ++count;
        }
    }
    return count;
}

} // namespace

TEST_CASE("P1 is multimodal on a 30x30 sampling") {
    auto p1 = passino_landscape("P1");
    int extrema = count_strict_extrema(p1, 0.0, 30.0, 30);
    CHECK(extrema >= 3);
}
