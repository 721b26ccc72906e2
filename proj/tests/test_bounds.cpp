// Tests for the dimension-bound formulas: exponent s, growth matrix
// eigenvalue, critical scale, energy constant, and the theta optimizer.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "ucov/bounds.hpp"
#include "ucov/errors.hpp"

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

// Independent eigenvalue oracle: power iteration on the 2x2 matrix
// [[1+T, T], [D, D]] built directly from the published entries.
double power_iteration_lambda(double theta_cap, double delta) {
    double a = 1.0 + theta_cap, b = theta_cap, c = delta, d = delta;
    double x = 1.0, y = 1.0;
    double lambda = 0.0;
    for (int it = 0; it < 20000; ++it) {
        double nx = a * x + b * y;
        double ny = c * x + d * y;
        double norm = std::max(std::abs(nx), std::abs(ny));
        nx /= norm;
        ny /= norm;
        double next = (a * nx + b * ny) * nx + (c * nx + d * ny) * ny;
        next /= nx * nx + ny * ny;
        if (it > 10 && std::abs(next - lambda) <= 1e-15 * std::abs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
        x = nx;
        y = ny;
    }
    return lambda;
}

}  // namespace

TEST_CASE("exponent s matches frozen reference values") {
    CHECK(s_exponent(1.0, 1, 2.0) == doctest::Approx(1.3456768717052028).epsilon(1e-12));
    CHECK(s_exponent(1.5, 1, 2.0) == doctest::Approx(0.922392073388894).epsilon(1e-12));
}

TEST_CASE("exponent s is strictly decreasing in c") {
    for (int d = 1; d <= 3; ++d) {
        for (int ti = 0; ti < 20; ++ti) {
            double theta = 1.05 + 0.5 * ti;
            double prev = s_exponent(0.05, d, theta);
            for (int ci = 1; ci < 20; ++ci) {
                double c = 0.05 + 0.1 * ci;
                double cur = s_exponent(c, d, theta);
                REQUIRE(cur < prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("growth matrix eigenvalue matches frozen reference values") {
    CHECK(lambda_matrix(0.1, 1, 4.0).lambda == doctest::Approx(1.6831614937622308).epsilon(1e-12));
    CHECK(lambda_matrix(0.5, 1, 2.0).lambda == doctest::Approx(2.3956439237389597).epsilon(1e-12));
    CHECK(lambda_matrix(0.1, 1, 2.0).lambda == doctest::Approx(1.2603277807866853).epsilon(1e-12));
}

TEST_CASE("growth matrix eigenvalue agrees with power iteration") {
    TestRng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        double c = 0.05 + 2.0 * rng.uniform();
        int d = 1 + static_cast<int>(rng.next() % 3);
        double theta = 1.1 + 5.0 * rng.uniform();
        auto parts = lambda_matrix(c, d, theta);
        double oracle = power_iteration_lambda(parts.theta_cap, parts.delta);
        REQUIRE(parts.lambda == doctest::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("eigenvalue satisfies its characteristic polynomial") {
    TestRng rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        double c = 0.02 + 3.0 * rng.uniform();
        int d = 1 + static_cast<int>(rng.next() % 3);
        double theta = 1.0 + 1e-3 + 20.0 * rng.uniform();
        auto parts = lambda_matrix(c, d, theta);
        double l = parts.lambda;
        double trace = 1.0 + parts.theta_cap + parts.delta;
        double det = (1.0 + parts.theta_cap) * parts.delta - parts.theta_cap * parts.delta;
        double residual = l * l - trace * l + det;
        REQUIRE(std::abs(residual) <= 1e-12 * std::max(1.0, l * l));
        REQUIRE(l >= 1.0 + parts.theta_cap);
        REQUIRE(parts.theta_cap >= 0.0);
        REQUIRE(parts.delta >= 0.0);
    }
}

TEST_CASE("energy constant matches closed form") {
    CHECK(energy_constant(0.5, 1) == doctest::Approx(2.8284271247461903).epsilon(1e-12));
    CHECK(energy_constant(1.0, 2) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(energy_constant(0.25, 3) == doctest::Approx(3.0 * std::pow(2.0, 0.25) / 2.75).epsilon(1e-12));
    CHECK_THROWS_AS(energy_constant(-0.1, 1), Error);
    CHECK_THROWS_AS(energy_constant(1.0, 1), Error);
    CHECK_THROWS_AS(energy_constant(2.5, 2), Error);
    CHECK_THROWS_AS(energy_constant(0.5, 0), Error);
}

TEST_CASE("critical scale matches frozen values and decays toward 1/2") {
    CHECK(critical_c(2.0, 1) == doctest::Approx(1.3862943611198906).epsilon(1e-12));
    CHECK(critical_c(10.0, 1) == doctest::Approx(0.585336198099035).epsilon(1e-12));
    CHECK(critical_c(100.0, 1) == doctest::Approx(0.5075927198738102).epsilon(1e-12));
    CHECK(critical_c(1e4, 1) == doctest::Approx(0.5000750091677084).epsilon(1e-12));
    double prev = critical_c(2.0, 1);
    for (double theta : {10.0, 100.0, 1e4}) {
        double cur = critical_c(theta, 1);
        REQUIRE(cur > 0.5);
        REQUIRE(cur < prev);
        prev = cur;
    }
    // Doubling the scale absorbs into the bracket, so the d=2 value is
    // half the root of twice the d=1 value.
    CHECK(critical_c(2.0, 2) == doctest::Approx(0.5 * std::sqrt(2.0 * critical_c(2.0, 1))).epsilon(1e-12));
    CHECK_THROWS_AS(critical_c(1.0, 1), Error);
    CHECK_THROWS_AS(critical_c(0.5, 1), Error);
    CHECK_THROWS_AS(critical_c(2.0, 0), Error);
}

TEST_CASE("theta optimizer locates a smooth interior maximum") {
    auto f = [](double theta) {
        double u = std::log(theta) - 1.0;
        return -u * u;
    };
    auto opt = maximize_over_theta(f);
    CHECK(!opt.at_edge_limit);
    CHECK(opt.theta == doctest::Approx(std::exp(1.0)).epsilon(1e-6));
    CHECK(opt.value == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("theta optimizer flags maxima escaping to the boundary") {
    auto increasing = [](double theta) { return std::log(theta); };
    auto opt = maximize_over_theta(increasing);
    CHECK(opt.at_edge_limit);
}

TEST_CASE("lower bound matches frozen optimum") {
    auto side = lower_bound_dim(1.0, 1);
    CHECK(side.value == doctest::Approx(0.2177444301921606).epsilon(1e-6));
    CHECK(side.theta_star == doctest::Approx(8.6007).epsilon(1e-2));
    CHECK(!side.at_edge_limit);
}

TEST_CASE("upper bound matches frozen optimum") {
    auto side = upper_bound_dim(0.1, 1);
    CHECK(side.value == doctest::Approx(0.3331939668312592).epsilon(1e-6));
    CHECK(side.theta_star == doctest::Approx(1.85414).epsilon(1e-2));
    CHECK(!side.at_edge_limit);
}

TEST_CASE("small scales collapse the lower bound to zero in the limit") {
    for (double c : {0.4, 0.5}) {
        auto side = lower_bound_dim(c, 1);
        CHECK(side.value == 0.0);
        CHECK(side.at_edge_limit);
    }
    auto interior = lower_bound_dim(0.6, 1);
    CHECK(interior.value > 0.0);
    CHECK(!interior.at_edge_limit);
}

TEST_CASE("large scales push the upper bound to the ambient dimension") {
    for (double c : {0.5, 0.6}) {
        auto side = upper_bound_dim(c, 1);
        CHECK(side.value == 1.0);
        CHECK(side.at_edge_limit);
    }
    auto interior = upper_bound_dim(0.4, 1);
    CHECK(interior.value < 1.0);
    CHECK(!interior.at_edge_limit);
}

TEST_CASE("both bounds are nondecreasing in c and ordered") {
    for (int d = 1; d <= 3; ++d) {
        double prev_lo = -1.0, prev_hi = -1.0;
        for (double c = 0.05; c <= 2.0; c += 0.05) {
            auto lo = lower_bound_dim(c, d);
            auto hi = upper_bound_dim(c, d);
            REQUIRE(lo.value >= 0.0);
            REQUIRE(hi.value <= double(d));
            REQUIRE(lo.value <= hi.value + 1e-9);
            REQUIRE(lo.value >= prev_lo - 1e-9);
            REQUIRE(hi.value >= prev_hi - 1e-9);
            prev_lo = lo.value;
            prev_hi = hi.value;
        }
    }
}

TEST_CASE("bounds report labels the scale regime") {
    CHECK(bounds_report(0.3, 1).regime == "subcritical");
    CHECK(bounds_report(0.5, 1).regime == "critical");
    CHECK(bounds_report(1.0, 1).regime == "supercritical");
    auto rep = bounds_report(1.0, 2);
    CHECK(rep.c == 1.0);
    CHECK(rep.d == 2);
    CHECK(rep.lower.value <= rep.upper.value);
}

TEST_CASE("bound formulas reject invalid parameters") {
    CHECK_THROWS_AS(s_exponent(0.0, 1, 2.0), Error);
    CHECK_THROWS_AS(s_exponent(1.0, 0, 2.0), Error);
    CHECK_THROWS_AS(s_exponent(1.0, 1, 1.0), Error);
    CHECK_THROWS_AS(lambda_matrix(-1.0, 1, 2.0), Error);
    CHECK_THROWS_AS(lambda_matrix(1.0, 1, 0.5), Error);
    CHECK_THROWS_AS(lower_bound_dim(0.0, 1), Error);
    CHECK_THROWS_AS(upper_bound_dim(1.0, -2), Error);
}
