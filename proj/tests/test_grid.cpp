// Tests for the occupancy grid: rasterization of balls, covered-window
// construction, box counting, serialization, and window statistics.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ucov/errors.hpp"
#include "ucov/experiments.hpp"
#include "ucov/grid.hpp"
#include "ucov/measure.hpp"
#include "ucov/parallel.hpp"
#include "ucov/sampling.hpp"
#include "ucov/schedule.hpp"
#include "ucov/torus.hpp"

using namespace ucov;

namespace {

struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

// Reference rasterizer: test every cell center against the open ball.
GridCover brute_ball(const double* center, double r, int d, int m) {
    GridCover g(d, m);
    double buf[k_max_dim];
    for (std::uint64_t idx = 0; idx < g.cell_count(); ++idx) {
        g.cell_center(idx, buf);
        if (within_open_ball(buf, center, d, r)) g.set(idx);
    }
    return g;
}

bool grids_equal(const GridCover& a, const GridCover& b) {
    return a.dim() == b.dim() && a.bits() == b.bits() &&
           a.difference_popcount(b) == 0 && b.difference_popcount(a) == 0;
}

}  // namespace

TEST_CASE("grid basics: indexing, centers, fill, clear") {
    GridCover g(2, 3);
    CHECK(g.dim() == 2);
    CHECK(g.bits() == 3);
    CHECK(g.cell_count() == 64);
    CHECK(g.popcount() == 0);
    CHECK(g.fraction() == 0.0);

    std::uint64_t axes[2] = {5, 2};
    std::uint64_t idx = g.index_of(axes);
    std::uint64_t back[2];
    g.axes_of(idx, back);
    CHECK(back[0] == 5);
    CHECK(back[1] == 2);
    double center[2];
    g.cell_center(idx, center);
    CHECK(center[0] == doctest::Approx((5 + 0.5) / 8.0));
    CHECK(center[1] == doctest::Approx((2 + 0.5) / 8.0));

    g.set(idx);
    CHECK(g.test(idx));
    CHECK(g.popcount() == 1);
    CHECK(g.fraction() == doctest::Approx(1.0 / 64));
    g.clear();
    CHECK(g.popcount() == 0);

    // Roundtrip every index at this size.
    for (std::uint64_t i = 0; i < g.cell_count(); ++i) {
        g.axes_of(i, back);
        REQUIRE(g.index_of(back) == i);
    }
}

TEST_CASE("fill covers exactly the valid cells in a partial word") {
    GridCover g(1, 5);
    g.fill();
    CHECK(g.cell_count() == 32);
    CHECK(g.popcount() == 32);
    CHECK(g.fraction() == 1.0);
    std::uint64_t visited = 0;
    g.for_each_set([&](std::uint64_t) { ++visited; });
    CHECK(visited == 32);
}

TEST_CASE("grid rejects sizes beyond the index budget") {
    CHECK_THROWS_AS(GridCover(1, 35), Error);
    CHECK_THROWS_AS(GridCover(2, 18), Error);
    CHECK_THROWS_AS(GridCover(0, 3), Error);
    CHECK_THROWS_AS(GridCover(1, -1), Error);
    // m = 0 is the degenerate one-cell grid.
    CHECK(GridCover(1, 0).cell_count() == 1);
    CHECK(GridCover(2, 17).cell_count() == (std::uint64_t(1) << 34));
}

TEST_CASE("add_ball marks exactly the cells whose centers fall in the open ball") {
    TestRng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 1 + static_cast<int>(rng.next() % 3);
        int m = 3 + static_cast<int>(rng.next() % (d == 3 ? 2 : 4));
        double center[3];
        for (int a = 0; a < d; ++a) {
            double u = rng.uniform();
            // Mix in exact grid-boundary coordinates to stress ties.
            if (rng.next() % 4 == 0) u = std::floor(u * 16.0) / 16.0;
            center[a] = u;
        }
        double r;
        switch (trial % 4) {
            case 0: r = 0.01 + 0.1 * rng.uniform(); break;
            case 1: r = 0.3 + 0.2 * rng.uniform(); break;
            case 2: r = 0.5 + rng.uniform(); break;
            default: r = std::ldexp(1.0, -(1 + int(rng.next() % m))); break;
        }
        GridCover fast(d, m);
        fast.add_ball(center, r);
        GridCover slow = brute_ball(center, r, d, m);
        REQUIRE(grids_equal(fast, slow));
    }
}

TEST_CASE("add_ball frozen example: two small balls on the circle") {
    GridCover g(1, 3);
    double a = 0.1, b = 0.6;
    g.add_ball(&a, 0.1);
    g.add_ball(&b, 0.1);
    std::set<std::uint64_t> cells;
    g.for_each_set([&](std::uint64_t idx) { cells.insert(idx); });
    CHECK(cells == std::set<std::uint64_t>{0, 1, 4, 5});
}

TEST_CASE("add_ball frozen example: open radius one-half misses the antipode") {
    GridCover g(1, 3);
    double x = 0.0625;
    g.add_ball(&x, 0.5);
    CHECK(g.popcount() == 7);
    CHECK(!g.test(4));  // center 0.5625 sits at distance exactly 1/2
}

TEST_CASE("union, intersection and difference behave like bitsets") {
    GridCover a(1, 4), b(1, 4);
    a.set(1);
    a.set(2);
    b.set(2);
    b.set(9);
    GridCover u = a;
    u.union_with(b);
    CHECK(u.popcount() == 3);
    GridCover i = a;
    i.intersect_with(b);
    CHECK(i.popcount() == 1);
    CHECK(i.test(2));
    CHECK(a.difference_popcount(b) == 1);
    CHECK(b.difference_popcount(a) == 1);
}

TEST_CASE("covered-window grid equals a brute-force intersection of unions") {
    TestRng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 3 + static_cast<int>(rng.next() % 4);
        std::uint64_t n_max = 2 + rng.next() % 7;
        std::uint64_t p = 1 + rng.next() % n_max;
        double c = 0.1 + 1.5 * rng.uniform();
        double alpha = 0.3 + 1.2 * rng.uniform();
        auto schedule = RadiusSchedule::power_law(c, alpha);
        SampleStream stream(1000 + trial, MeasureModel::uniform_torus(1));
        auto checkpoints = dyadic_checkpoints(p, n_max);

        GridCover fast = build_cover_grid(stream, schedule, p, checkpoints, m);

        GridCover slow(1, m);
        bool first = true;
        for (std::uint64_t cp : checkpoints) {
            GridCover stage(1, m);
            double r = schedule.at(cp);
            double pt[1];
            for (std::uint64_t n = 1; n <= cp; ++n) {
                stream.point(n, pt);
                GridCover one = brute_ball(pt, r, 1, m);
                stage.union_with(one);
            }
            if (first) {
                slow = stage;
                first = false;
            } else {
                slow.intersect_with(stage);
            }
        }
        REQUIRE(grids_equal(fast, slow));
    }
}

TEST_CASE("covered-window grid validates its checkpoint list") {
    auto schedule = RadiusSchedule::power_law(1.0, 1.0);
    SampleStream stream(1, MeasureModel::uniform_torus(1));
    CHECK_THROWS_AS(build_cover_grid(stream, schedule, 4, {2, 8}, 3), Error);
    CHECK_THROWS_AS(build_cover_grid(stream, schedule, 2, {4, 4}, 3), Error);
    CHECK_THROWS_AS(build_cover_grid(stream, schedule, 2, {}, 3), Error);
    auto fixed = RadiusSchedule::explicit_list({0.5, 0.4, 0.3});
    CHECK_THROWS_AS(build_cover_grid(stream, fixed, 2, {2, 4}, 3), Error);
}

TEST_CASE("box counting is monotone under coarsening") {
    TestRng rng(15);
    GridCover g(2, 6);
    for (int i = 0; i < 40; ++i) {
        double center[2] = {rng.uniform(), rng.uniform()};
        g.add_ball(center, 0.02 + 0.05 * rng.uniform());
    }
    CHECK(g.box_count(6) == g.popcount());
    std::uint64_t prev = g.box_count(1);
    CHECK(g.box_count(1) >= 1);
    for (int mc = 2; mc <= 6; ++mc) {
        std::uint64_t cur = g.box_count(mc);
        REQUIRE(cur >= prev);
        REQUIRE(cur <= prev * 4);  // refining one level splits a box into 2^d
        prev = cur;
    }
    CHECK(g.box_count(0) == 1);  // the whole torus is one box
    CHECK_THROWS_AS(g.box_count(-1), Error);
    CHECK_THROWS_AS(g.box_count(7), Error);
}

TEST_CASE("box dimension estimate is exact on full sub-grids") {
    // Full grid: every coarsening has 2^(mc*d) boxes, slope d.
    GridCover full(2, 5);
    full.fill();
    auto est = full.estimate_box_dim(1, 5);
    REQUIRE(est.has_value());
    CHECK(*est == doctest::Approx(2.0).epsilon(1e-12));

    // One-dimensional slice of a 2-d grid: slope exactly 1.
    GridCover slice(2, 5);
    std::uint64_t axes[2];
    for (std::uint64_t i = 0; i < 32; ++i) {
        axes[0] = i;
        axes[1] = 0;
        slice.set(slice.index_of(axes));
    }
    est = slice.estimate_box_dim(1, 5);
    REQUIRE(est.has_value());
    CHECK(*est == doctest::Approx(1.0).epsilon(1e-12));

    // A single cell never splits: slope exactly 0.
    GridCover dot(2, 5);
    dot.set(17);
    est = dot.estimate_box_dim(1, 5);
    REQUIRE(est.has_value());
    CHECK(*est == doctest::Approx(0.0).epsilon(1e-12));

    GridCover empty(2, 5);
    CHECK(!empty.estimate_box_dim(1, 5).has_value());

    CHECK_THROWS_AS(full.estimate_box_dim(-1, 5), Error);
    CHECK_THROWS_AS(full.estimate_box_dim(1, 6), Error);
    CHECK_THROWS_AS(full.estimate_box_dim(4, 3), Error);
    CHECK_THROWS_AS(full.estimate_box_dim(3, 3), Error);
}

TEST_CASE("binary serialization round-trips and pins the header") {
    TestRng rng(99);
    GridCover g(2, 4);
    for (int i = 0; i < 25; ++i) {
        double center[2] = {rng.uniform(), rng.uniform()};
        g.add_ball(center, 0.05 + 0.1 * rng.uniform());
    }
    std::ostringstream os(std::ios::binary);
    write_grid_binary(g, os);
    std::string bytes = os.str();
    REQUIRE(bytes.size() == 16 + (g.cell_count() + 7) / 8);
    CHECK(bytes[0] == 'U');
    CHECK(bytes[1] == 'C');
    CHECK(bytes[2] == 'G');
    CHECK(bytes[3] == 'R');
    CHECK(bytes[4] == 2);
    CHECK(bytes[5] == 4);
    for (int i = 6; i < 16; ++i) REQUIRE(bytes[i] == 0);

    std::istringstream is(bytes, std::ios::binary);
    GridCover back = read_grid_binary(is);
    CHECK(grids_equal(g, back));

    std::string bad = bytes;
    bad[1] = 'X';
    std::istringstream isbad(bad, std::ios::binary);
    CHECK_THROWS_AS(read_grid_binary(isbad), Error);

    std::istringstream istrunc(bytes.substr(0, bytes.size() - 1), std::ios::binary);
    CHECK_THROWS_AS(read_grid_binary(istrunc), Error);
}

TEST_CASE("cells CSV lists each set cell with its axis indices") {
    GridCover g(2, 2);
    std::uint64_t axes[2] = {3, 1};
    g.set(g.index_of(axes));
    axes[0] = 0;
    axes[1] = 2;
    g.set(g.index_of(axes));
    std::ostringstream os;
    write_grid_cells_csv(g, os, "{\"m\":2}");
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "# config: {\"m\":2}");
    std::getline(is, line);
    CHECK(line == "index,i0,i1");
    std::set<std::string> rows;
    while (std::getline(is, line))
        if (!line.empty()) rows.insert(line);
    CHECK(rows.size() == 2);
    // Parse back and confirm the axes match index decomposition.
    for (const auto& row : rows) {
        std::uint64_t idx, i0, i1;
        REQUIRE(std::sscanf(row.c_str(), "%lu,%lu,%lu", &idx, &i0, &i1) == 3);
        std::uint64_t dec[2];
        g.axes_of(idx, dec);
        REQUIRE(dec[0] == i0);
        REQUIRE(dec[1] == i1);
        REQUIRE(g.test(idx));
    }
}

TEST_CASE("witness grid covers everything when every block radius exceeds one half") {
    // With c=5 the first block already uses radius 5/n_2 > 1/2, so each
    // block covers the whole circle no matter where the samples land.
    SampleStream stream(7, MeasureModel::uniform_torus(1));
    GridCover g = liminf_witness_grid(stream, 5.0, 2.0, 1, 2, 6);
    CHECK(g.fraction() == 1.0);
}

TEST_CASE("grid energy of two antipodal cells matches the closed form") {
    GridCover g(1, 3);
    g.set(0);
    g.set(4);
    double s = 0.37;
    double w = 1.0 / 8.0;
    double expect = 2.0 * std::pow(0.5, -s) * w * w;
    CHECK(grid_energy(g, s) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(grid_energy(GridCover(1, 3), s) == 0.0);
    CHECK_THROWS_AS(grid_energy(g, 0.0), Error);
    CHECK_THROWS_AS(grid_energy(g, 0.5, 1), Error);
}

TEST_CASE("grid energy subsampling preserves total mass") {
    // Subsampling the full fine circle at stride 16 picks 64 evenly
    // spaced cells with weight scaled by 16, which reproduces the exact
    // pairwise distances and weights of the full coarse circle.
    GridCover fine(1, 10);
    fine.fill();
    GridCover coarse(1, 6);
    coarse.fill();
    double s = 0.5;
    double e_sub = grid_energy(fine, s, 64);
    double e_coarse = grid_energy(coarse, s, 64);
    CHECK(e_sub == doctest::Approx(e_coarse).epsilon(1e-12));
}

TEST_CASE("dyadic checkpoints double from p and close at n_max") {
    auto cps = dyadic_checkpoints(3, 10);
    CHECK(cps == std::vector<std::uint64_t>{3, 6, 10});
    auto big = dyadic_checkpoints(256, 65536);
    CHECK(big.front() == 256);
    CHECK(big.back() == 65536);
    CHECK(big.size() == 9);
    for (std::size_t i = 1; i + 1 < big.size(); ++i) REQUIRE(big[i] == 2 * big[i - 1]);
    CHECK(dyadic_checkpoints(5, 5) == std::vector<std::uint64_t>{5});
    CHECK_THROWS_AS(dyadic_checkpoints(0, 10), Error);
    CHECK_THROWS_AS(dyadic_checkpoints(8, 4), Error);
}

TEST_CASE("window summary echoes the grid statistics") {
    GridCover g(1, 4);
    g.set(3);
    g.set(9);
    auto sum = summarize_window(g, 4, 32);
    CHECK(sum.p == 4);
    CHECK(sum.n_max == 32);
    CHECK(sum.checkpoints == std::vector<std::uint64_t>{4, 8, 16, 32});
    CHECK(sum.covered_cells == 2);
    CHECK(sum.covered_fraction == doctest::Approx(2.0 / 16));
    CHECK(!sum.box_dim.has_value());
}

TEST_CASE("box dimension statistic reports zero for an empty window") {
    GridCover empty(1, 5);
    CHECK(box_dim_statistic(empty, 1, 5) == 0.0);
    GridCover full(1, 5);
    full.fill();
    CHECK(box_dim_statistic(full, 1, 5) == doctest::Approx(1.0));
}

TEST_CASE("empirical covered fraction matches the window grid it is built from") {
    auto schedule = RadiusSchedule::power_law(1.0, 1.0);
    auto measure = MeasureModel::uniform_torus(1);
    SampleStream stream(42, measure);
    auto cps = dyadic_checkpoints(8, 64);
    GridCover g = build_cover_grid(stream, schedule, 8, cps, 8);
    double frac = empirical_covered_fraction(stream, schedule, 8, 64, 8);
    CHECK(frac == doctest::Approx(g.fraction()).epsilon(1e-15));
}

TEST_CASE("seed-spread probe is deterministic across thread counts") {
    ZeroOneConfig config;
    config.statistic = ZeroOneStatistic::covered_fraction;
    config.schedule = RadiusSchedule::power_law(0.8, 1.0);
    config.measure = MeasureModel::uniform_torus(1);
    config.p = 16;
    config.n_max = 512;
    config.m = 8;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6};

    set_thread_count(1);
    auto serial = zero_one_probe(seeds, config);
    set_thread_count(4);
    auto parallel = zero_one_probe(seeds, config);
    set_thread_count(0);

    REQUIRE(serial.values.size() == 6);
    REQUIRE(parallel.values.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) REQUIRE(serial.values[i] == parallel.values[i]);
    CHECK(serial.mean == parallel.mean);
    CHECK(serial.stddev == parallel.stddev);

    // Spread statistics agree with a direct computation.
    double mean = 0;
    for (double v : serial.values) mean += v;
    mean /= 6;
    double var = 0;
    for (double v : serial.values) var += (v - mean) * (v - mean);
    var /= 6;
    CHECK(serial.mean == doctest::Approx(mean).epsilon(1e-15));
    CHECK(serial.stddev == doctest::Approx(std::sqrt(var)).epsilon(1e-12));
}
