#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "swarm/bfoa.hpp"

using namespace swarm;
using namespace swarm::bfoa;

TEST_CASE("swarming cost cancels when attraction equals repulsion") {
    SwarmCoeffs c{0.3, 0.7, 0.3, 0.7};
    std::vector<Bacterium> pop{{1, 2}, {3, -1}, {0.5, 0.5}};
    CHECK(swarming_cost(0.0, 0.0, pop, c) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("single bacterium at its own position") {
    SwarmCoeffs c; // defaults
    std::vector<Bacterium> pop{{2.0, 3.0}};
    CHECK(swarming_cost(2.0, 3.0, pop, c) ==
          doctest::Approx(-c.d_attract + c.h_repel).epsilon(1e-15));
}

TEST_CASE("three-bacterium configuration matches a direct summation oracle") {
    SwarmCoeffs c{0.1, 0.2, 0.1, 10.0};
    std::vector<Bacterium> pop{{1.0, 0.0}, {-0.5, 2.0}, {3.0, 3.0}};
    double x = 0.25, y = -0.75;
    double oracle = 0.0;
    for (const auto& b : pop) {
        double d2 = (x - b.x) * (x - b.x) + (y - b.y) * (y - b.y);
        oracle += -0.1 * std::exp(-0.2 * d2) + 0.1 * std::exp(-10.0 * d2);
    }
    CHECK(swarming_cost(x, y, pop, c) == doctest::Approx(oracle).epsilon(1e-14));
}

TEST_CASE("empty population is rejected") {
    CHECK_THROWS_AS(swarming_cost(0, 0, std::vector<Bacterium>{}, SwarmCoeffs{}),
                    std::invalid_argument);
}

namespace {

BfoaParams basic_params() {
    BfoaParams p;
    p.s = 2;
    p.nc = 1;
    p.ns = 4;
    p.n_re = 1;
    p.n_ed = 1;
    p.p_ed = 0.0;
    p.swarming = false;
    return p;
}

} // namespace

TEST_CASE("no swim extension on a constant landscape") {
    BfoaParams params = basic_params();
    params.step_size = 0.5;
    Domain2D domain{-10, 10, -10, 10};
    Landscape flat = [](double, double) { return 4.0; };
    std::mt19937_64 rng(17);
    Bacterium b{0, 0, 0};
    std::vector<Bacterium> pop{b};
    int evals = chemotactic_step(b, pop, flat, domain, params, rng);
    CHECK(evals == 2); // start + tumble, never a swim
    CHECK(b.health == 4.0);
}

TEST_CASE("downhill tumble on a linear ramp swims the full ns budget") {
    BfoaParams params = basic_params();
    params.ns = 6;
    params.step_size = 0.25;
    Domain2D domain{-1e6, 1e6, -1e6, 1e6}; // wide enough that clamping never binds
    Landscape ramp = [](double x, double) { return x; };
    std::mt19937_64 rng(1);
    // try seeds until the tumble points downhill (dx < 0)
    int downhill_runs = 0;
    for (std::uint64_t seed = 1; seed <= 50 && downhill_runs < 5; ++seed) {
        std::mt19937_64 r(seed);
        Bacterium b{0, 0, 0};
        std::vector<Bacterium> pop{b};
        double before = b.x;
        int evals = chemotactic_step(b, pop, ramp, domain, params, r);
        if (b.x < before) {
            // strictly decreasing every move: 1 tumble + exactly ns swims
            CHECK(evals == 2 + params.ns);
            ++downhill_runs;
        }
    }
    CHECK(downhill_runs == 5);
}

TEST_CASE("zero step size freezes position and accumulates equal health terms") {
    BfoaParams params = basic_params();
    params.nc = 7;
    params.step_size = 0.0;
    Domain2D domain{0, 30, 0, 30};
    Landscape fn = [](double x, double y) { return x + 2 * y; };
    std::mt19937_64 rng(5);
    Bacterium b{10, 10, 0};
    std::vector<Bacterium> pop{b};
    for (int j = 0; j < params.nc; ++j) {
        chemotactic_step(b, pop, fn, domain, params, rng);
    }
    CHECK(b.x == 10.0);
    CHECK(b.y == 10.0);
    CHECK(b.health == doctest::Approx(7.0 * fn(10, 10)).epsilon(1e-12));
}

TEST_CASE("positions are clamped to the domain") {
    BfoaParams params = basic_params();
    params.step_size = 100.0;
    Domain2D domain{0, 1, 0, 1};
    Landscape fn = [](double x, double y) { return x * x + y * y; };
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        Bacterium b{0.5, 0.5, 0};
        std::vector<Bacterium> pop{b};
        chemotactic_step(b, pop, fn, domain, params, rng);
        CHECK(b.x >= 0.0);
        CHECK(b.x <= 1.0);
        CHECK(b.y >= 0.0);
        CHECK(b.y <= 1.0);
    }
}

TEST_CASE("reproduction keeps an all-equal population as a multiset") {
    std::vector<Bacterium> pop{{1, 1, 5}, {2, 2, 5}, {3, 3, 5}, {4, 4, 5}};
    auto out = reproduce(pop);
    REQUIRE(out.size() == 4);
    // stable sort keeps order; best half {1,2} duplicated over {3,4}
    std::multiset<std::pair<double, double>> expect{{1, 1}, {2, 2}, {1, 1}, {2, 2}};
    std::multiset<std::pair<double, double>> got;
    for (const auto& b : out) got.insert({b.x, b.y});
    CHECK(got == expect);
    for (const auto& b : out) CHECK(b.health == 0.0);
}

TEST_CASE("distinct healths: best half appears twice, worst half vanishes") {
    std::vector<Bacterium> pop{{1, 0, 9.0}, {2, 0, 1.0}, {3, 0, 7.0}, {4, 0, 3.0}};
    auto out = reproduce(pop);
    std::multiset<double> xs;
    for (const auto& b : out) xs.insert(b.x);
    CHECK(xs.count(2) == 2);
    CHECK(xs.count(4) == 2);
    CHECK(xs.count(1) == 0);
    CHECK(xs.count(3) == 0);
}

TEST_CASE("randomized reproduction matches a sort-and-copy oracle") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Bacterium> pop(10);
        for (auto& b : pop) b = {u(rng), u(rng), u(rng)};
        auto oracle = pop;
        std::stable_sort(oracle.begin(), oracle.end(),
                         [](const Bacterium& a, const Bacterium& b) { return a.health < b.health; });
        auto out = reproduce(pop);
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(out[i].x == oracle[i].x);
            CHECK(out[i].y == oracle[i].y);
            CHECK(out[5 + i].x == oracle[i].x);
            CHECK(out[5 + i].y == oracle[i].y);
        }
    }
}

TEST_CASE("odd populations are rejected") {
    std::vector<Bacterium> pop{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
    CHECK_THROWS_AS(reproduce(pop), std::invalid_argument);
}

TEST_CASE("trace length equals the chemotactic step budget") {
    BfoaParams params;
    params.s = 4;
    params.nc = 25;
    params.n_re = 4;
    params.n_ed = 1;
    params.rng_seed = 7;
    Domain2D domain{0, 30, 0, 30};
    Landscape fn = [](double x, double y) { return (x - 15) * (x - 15) + (y - 15) * (y - 15); };
    auto res = run_bfoa(fn, domain, params);
    CHECK(res.trace.size() == 100);
    CHECK(res.trace.front().step == 1);
    CHECK(res.trace.back().step == 100);
    CHECK(res.final_population.size() == 4);
}

TEST_CASE("minimal budget performs exactly one tumble per bacterium") {
    BfoaParams params;
    params.s = 2;
    params.nc = 1;
    params.ns = 0;
    params.n_re = 1;
    params.n_ed = 1;
    params.p_ed = 0.0;
    params.rng_seed = 3;
    Domain2D domain{0, 10, 0, 10};
    Landscape fn = [](double x, double y) { return x + y; };
    auto res = run_bfoa(fn, domain, params);
    CHECK(res.trace.size() == 1);
}

TEST_CASE("best-so-far trace is monotonically non-increasing") {
    Domain2D domain{0, 30, 0, 30};
    Landscape fn = [](double x, double y) {
        return std::sin(x) * std::cos(y) + 0.01 * ((x - 7) * (x - 7) + (y - 23) * (y - 23));
    };
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        BfoaParams params;
        params.s = 10;
        params.nc = 30;
        params.n_re = 2;
        params.rng_seed = seed;
        auto res = run_bfoa(fn, domain, params);
        for (std::size_t i = 1; i < res.trace.size(); ++i) {
            CHECK(res.trace[i].best_cost <= res.trace[i - 1].best_cost);
        }
        for (const auto& b : res.final_population) {
            CHECK(b.x >= 0.0);
            CHECK(b.x <= 30.0);
            CHECK(b.y >= 0.0);
            CHECK(b.y <= 30.0);
        }
    }
}

TEST_CASE("identical seeds give bit-identical traces") {
    Domain2D domain{0, 30, 0, 30};
    Landscape fn = [](double x, double y) { return x * x + y * y; };
    BfoaParams params;
    params.s = 6;
    params.nc = 20;
    params.rng_seed = 44;
    auto a = run_bfoa(fn, domain, params);
    auto b = run_bfoa(fn, domain, params);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].best_cost == b.trace[i].best_cost);
        CHECK(a.trace[i].best_x == b.trace[i].best_x);
        CHECK(a.trace[i].best_y == b.trace[i].best_y);
    }
}

TEST_CASE("odd or tiny populations are rejected up front") {
    BfoaParams params;
    params.s = 5;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params.s = 0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
}
