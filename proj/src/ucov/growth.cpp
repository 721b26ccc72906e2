/*
  Copyright (c) 2026 ucov developers

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "ucov/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>

#include "ucov/bounds.hpp"
#include "ucov/errors.hpp"
#include "ucov/grid.hpp"
#include "ucov/parallel.hpp"
#include "ucov/rng.hpp"
#include "ucov/torus.hpp"

namespace ucov {

std::vector<std::uint64_t> ladder(double theta, int j_max) {
    if (!(theta > 1.0) || !std::isfinite(theta)) fail(errc::domain, "ladder ratio theta must be finite and > 1");
    if (j_max < 0) fail(errc::contract, "ladder depth must be >= 0");
    std::vector<std::uint64_t> ns(static_cast<std::size_t>(j_max) + 1);
    double power = 1.0;
    std::uint64_t prev = 0;
    for (int j = 0; j <= j_max; ++j) {
        if (power > 4.6e18) fail(errc::resource, "ladder index " + std::to_string(j) +
                                                     " exceeds the 64-bit sample range");
        std::uint64_t v = static_cast<std::uint64_t>(std::ceil(power));
        if (v < prev + 1) v = prev + 1;  // force strict growth while theta^j crawls
        ns[static_cast<std::size_t>(j)] = v;
        prev = v;
        power *= theta;
    }
    return ns;
}

std::uint64_t ladder_value(double theta, int j) { return ladder(theta, j).back(); }

namespace {

// Uniform bucket grid for nearest-center queries on the torus. The cell
// side never drops below the query radius, so a point within that radius
// of a center always lands in one of the 3^d neighboring buckets.
class NeighborIndex {
public:
    NeighborIndex(int d, double radius) : d_(d) {
        if (!(radius > 0.0)) fail(errc::contract, "neighbor index radius must be positive");
        std::uint64_t g = static_cast<std::uint64_t>(1.0 / radius);
        if (g < 1) g = 1;
        std::uint64_t cap = std::uint64_t(1) << (62 / d);
        if (g > cap) g = cap;
        g_ = g;
    }

    void build(const std::vector<double>& flat_points) {
        pts_ = &flat_points;
        buckets_.clear();
        std::size_t count = flat_points.size() / static_cast<std::size_t>(d_);
        buckets_.reserve(count * 2);
        for (std::size_t i = 0; i < count; ++i)
            buckets_[key_of(flat_points.data() + i * d_)].push_back(static_cast<std::uint32_t>(i));
    }

    double min_dist(const double* x) const {
        double best = std::numeric_limits<double>::infinity();
        std::uint64_t cells[k_max_dim][3];
        int counts[k_max_dim];
        for (int a = 0; a < d_; ++a) {
            std::uint64_t c = cell_of(x[a]);
            cells[a][0] = c;
            counts[a] = 1;
            if (g_ >= 2) {
                cells[a][counts[a]++] = (c + 1) % g_;
                if (g_ >= 3) cells[a][counts[a]++] = (c + g_ - 1) % g_;
            }
        }
        int cursor[k_max_dim] = {0};
        for (;;) {
            std::uint64_t key = 0;
            for (int a = 0; a < d_; ++a) key = key * g_ + cells[a][cursor[a]];
            auto it = buckets_.find(key);
            if (it != buckets_.end()) {
                for (std::uint32_t id : it->second) {
                    double t = torus_dist(x, pts_->data() + static_cast<std::size_t>(id) * d_, d_);
                    if (t < best) best = t;
                }
            }
            int a = d_ - 1;
            while (a >= 0 && ++cursor[a] == counts[a]) cursor[a--] = 0;
            if (a < 0) break;
        }
        return best;
    }

private:
    std::uint64_t cell_of(double v) const {
        auto i = static_cast<std::uint64_t>(v * static_cast<double>(g_));
        return i >= g_ ? g_ - 1 : i;
    }

    std::uint64_t key_of(const double* p) const {
        std::uint64_t key = 0;
        for (int a = 0; a < d_; ++a) key = key * g_ + cell_of(p[a]);
        return key;
    }

    int d_;
    std::uint64_t g_ = 1;
    const std::vector<double>* pts_ = nullptr;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

// Runs the level recursion and reports each level's retained centers.
// on_level(i, icenters, jcenters) fires once per level i = l..i_max,
// including the seeding level l.
template <typename LevelFn>
std::vector<std::uint64_t> greedy_levels(const SampleStream& stream, double c, double theta,
                                         int l, int i_max, LevelFn&& on_level) {
    if (!(c > 0.0) || !std::isfinite(c)) fail(errc::domain, "scale c must be positive and finite");
    if (l < 0 || i_max <= l) fail(errc::contract, "levels must satisfy 0 <= l < i_max");
    const int d = stream.dim();
    auto ns = ladder(theta, i_max + 1);
    if (ns[static_cast<std::size_t>(i_max)] > stream.capacity())
        fail(errc::range, "sample stream shorter than the level ladder");
    auto radius = [&](std::uint64_t n) {
        return c * std::pow(static_cast<double>(n), -1.0 / d);
    };

    std::vector<double> icenters, jcenters;
    double buf[k_max_dim];
    for (std::uint64_t k = 1; k <= ns[static_cast<std::size_t>(l)]; ++k) {
        stream.point(k, buf);
        icenters.insert(icenters.end(), buf, buf + d);
    }
    on_level(l, icenters, jcenters);

    std::vector<double> all, fresh_i, fresh_j;
    for (int i = l; i < i_max; ++i) {
        double r_hit = radius(ns[i]) + radius(ns[i + 1]);
        double r_prox = radius(ns[i]) + radius(ns[i + 2]);
        all = icenters;
        all.insert(all.end(), jcenters.begin(), jcenters.end());
        NeighborIndex index(d, r_hit);
        index.build(all);
        fresh_i.clear();
        fresh_j.clear();
        for (std::uint64_t k = ns[i] + 1; k <= ns[i + 1]; ++k) {
            stream.point(k, buf);
            double dmin = index.min_dist(buf);
            if (dmin < r_prox) {
                fresh_i.insert(fresh_i.end(), buf, buf + d);
            } else if (dmin < r_hit) {
                // Ball meets the current union but sits too far from every
                // center to merge; it seeds the next boundary set.
                fresh_j.insert(fresh_j.end(), buf, buf + d);
            }
        }
        icenters.insert(icenters.end(), fresh_i.begin(), fresh_i.end());
        jcenters = std::move(fresh_j);
        fresh_j = std::vector<double>();
        on_level(i + 1, icenters, jcenters);
    }
    return ns;
}

}  // namespace

CoverGrowthTrace greedy_cover_trace(const SampleStream& stream, double c, double theta,
                                    int l, int i_max) {
    const int d = stream.dim();
    CoverGrowthTrace trace;
    trace.c = c;
    trace.d = d;
    trace.theta = theta;
    trace.start_level = l;
    trace.end_level = i_max;

    std::vector<double> final_i, final_j;
    auto ladder_ns = ladder(theta, i_max + 1);
    auto ns = greedy_levels(stream, c, theta, l, i_max,
                            [&](int i, const std::vector<double>& icenters,
                                const std::vector<double>& jcenters) {
                                GrowthLevel lvl;
                                lvl.level = i;
                                lvl.n_index = ladder_ns[static_cast<std::size_t>(i)];
                                lvl.n_count = icenters.size() / static_cast<std::size_t>(d);
                                lvl.q_count = jcenters.size() / static_cast<std::size_t>(d);
                                trace.levels.push_back(lvl);
                                if (i == i_max) {
                                    final_i = icenters;
                                    final_j = jcenters;
                                }
                            });

    LambdaParts parts = lambda_matrix(c, d, theta);
    trace.lambda = parts.lambda;
    trace.log_lambda = std::log(parts.lambda);
    double base_count = trace.levels.empty()
                            ? 1.0
                            : static_cast<double>(trace.levels.front().n_count +
                                                  trace.levels.front().q_count);
    for (auto& lvl : trace.levels)
        lvl.predicted =
            base_count * std::pow(parts.lambda, static_cast<double>(lvl.level - l));

    // Least squares growth rate of log(N + Q) per level.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& lvl : trace.levels) {
        double x = static_cast<double>(lvl.level - l);
        double y = std::log(static_cast<double>(lvl.n_count + lvl.q_count));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    trace.fitted_rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    trace.final_centers = std::move(final_i);
    trace.final_centers.insert(trace.final_centers.end(), final_j.begin(), final_j.end());
    trace.final_radius = c * std::pow(static_cast<double>(ns[static_cast<std::size_t>(i_max)]),
                                      -1.0 / d);
    return trace;
}

std::vector<std::uint64_t> greedy_cover_levels(
    const SampleStream& stream, double c, double theta, int l, int i_max,
    const std::function<void(int, const std::vector<double>&, const std::vector<double>&)>& fn) {
    return greedy_levels(stream, c, theta, l, i_max, fn);
}

std::uint64_t greedy_containment_escapes(const SampleStream& stream, double c, double theta,
                                         int l, int i_max, int m) {
    const int d = stream.dim();
    auto radius = [&](std::uint64_t n) {
        return c * std::pow(static_cast<double>(n), -1.0 / d);
    };
    GridCover g_grid(d, m);
    std::uint64_t escapes = 0;
    auto ladder_ns = ladder(theta, i_max + 1);
    greedy_levels(stream, c, theta, l, i_max,
                  [&](int i, const std::vector<double>& icenters,
                      const std::vector<double>& jcenters) {
                      std::uint64_t n_i = ladder_ns[static_cast<std::size_t>(i)];
                      if (i == l) {
                          g_grid = union_of_balls(stream, 1, n_i, radius(n_i), m);
                      } else {
                          GridCover level = union_of_balls(stream, 1, n_i, radius(n_i), m);
                          g_grid.intersect_with(level);
                      }
                      std::vector<double> all = icenters;
                      all.insert(all.end(), jcenters.begin(), jcenters.end());
                      GridCover h_grid = union_of_points(all, d, radius(n_i), m);
                      escapes += g_grid.difference_popcount(h_grid);
                  });
    return escapes;
}

double k_mass(double c, int d, double theta, int l, int q) {
    if (!(c > 0.0) || !std::isfinite(c)) fail(errc::domain, "scale c must be positive and finite");
    if (d < 1) fail(errc::domain, "dimension must be >= 1");
    if (l < 1 || q < l) fail(errc::contract, "block range must satisfy 1 <= l <= q");
    auto ns = ladder(theta, q + 1);
    double prod = 1.0;
    for (int j = l; j <= q; ++j) {
        double ell = c * std::pow(static_cast<double>(ns[j + 1]), -1.0 / d);
        double mass = std::min(1.0, std::pow(2.0 * ell, static_cast<double>(d)));
        double gap = static_cast<double>(ns[j] - ns[j - 1]);
        // 1 - (1 - mass)^gap, evaluated without cancellation. mass = 1
        // gives log1p(-1) = -inf and a block hit probability of exactly 1.
        prod *= -std::expm1(gap * std::log1p(-mass));
    }
    return prod;
}

double psi_kernel(double c, int d, double theta, int l, int q, const double* t) {
    if (!(c > 0.0) || !std::isfinite(c)) fail(errc::domain, "scale c must be positive and finite");
    if (d < 1) fail(errc::domain, "dimension must be >= 1");
    if (l < 1 || q < l) fail(errc::contract, "block range must satisfy 1 <= l <= q");
    double norm = 0.0;
    for (int a = 0; a < d; ++a) {
        double w = wrap_axis_dist(wrap_unit(t[a]), 0.0);
        if (w > norm) norm = w;
    }
    auto ns = ladder(theta, q + 1);
    double prod = 1.0;
    for (int j = l; j <= q; ++j) {
        double ell = c * std::pow(static_cast<double>(ns[j + 1]), -1.0 / d);
        if (!(norm < ell)) continue;
        double mass = std::min(1.0, std::pow(2.0 * ell, static_cast<double>(d)));
        double gap = static_cast<double>(ns[j] - ns[j - 1]);
        double miss = std::exp(gap * std::log1p(-mass));  // (1 - mass)^gap
        double hit = -std::expm1(gap * std::log1p(-mass));
        if (!(hit > 0.0)) fail(errc::numeric, "degenerate block hit probability");
        prod *= 1.0 + miss / hit;
    }
    return prod;
}

double psi_majorant_coeff(double c, int d, double theta, int l) {
    double s0 = s_exponent(c, d, theta);
    double x = std::pow(2.0 * c, static_cast<double>(d)) * (theta - 1.0) / (theta * theta);
    double base = -std::expm1(-x);
    return std::pow(c, s0) * std::pow(base, static_cast<double>(l));
}

PairIndicatorStats pair_indicator_bound_mc(const double* x, const double* y, double ell,
                                           int d, std::uint64_t trials, std::uint64_t seed) {
    if (!(ell > 0.0) || !std::isfinite(ell)) fail(errc::domain, "ball radius must be positive and finite");
    if (d < 1 || d > k_max_dim) fail(errc::domain, "dimension must be in [1, 34]");
    if (trials < 1000) fail(errc::contract, "trial count must be >= 1000 for a usable sigma");

    PairIndicatorStats stats;
    stats.trials = trials;

    double side = 2.0 * ell;
    double single = std::min(1.0, std::pow(side, static_cast<double>(d)));
    double dist_xy = torus_dist(x, y, d);

    // Exact joint probability: product over axes of the arc overlap of
    // the two radius-ell arcs around x_a and y_a.
    double exact = 1.0;
    for (int a = 0; a < d; ++a) {
        if (side >= 1.0) continue;  // each arc is the whole circle
        double w = wrap_axis_dist(x[a], y[a]);
        double ov = std::max(0.0, side - w) + std::max(0.0, side - (1.0 - w));
        exact *= ov;
    }
    stats.exact_joint = exact;
    double joint_bound = (dist_xy < side) ? std::pow(side, static_cast<double>(d)) : 0.0;
    stats.bound_joint = joint_bound;
    stats.bound_complement = 1.0 - 2.0 * single + joint_bound;

    SampleStream draws(seed, MeasureModel::uniform_torus(d));
    double buf[k_max_dim];
    std::uint64_t joint = 0, comp = 0;
    for (std::uint64_t n = 1; n <= trials; ++n) {
        draws.point(n, buf);
        bool in_x = within_open_ball(x, buf, d, ell);
        bool in_y = within_open_ball(y, buf, d, ell);
        if (in_x && in_y) ++joint;
        if (!in_x && !in_y) ++comp;
    }
    stats.est_joint = static_cast<double>(joint) / static_cast<double>(trials);
    stats.est_complement = static_cast<double>(comp) / static_cast<double>(trials);
    stats.sigma_joint =
        std::sqrt(std::max(stats.est_joint * (1.0 - stats.est_joint), 1e-12) /
                  static_cast<double>(trials));
    stats.sigma_complement =
        std::sqrt(std::max(stats.est_complement * (1.0 - stats.est_complement), 1e-12) /
                  static_cast<double>(trials));
    return stats;
}

SecondMomentReport second_moment_mc(double c, int d, double theta, int l, int q, int m,
                                    std::uint64_t trials, double s, std::uint64_t seed) {
    if (d < 1) fail(errc::domain, "dimension must be >= 1");
    if (!(c > 0.0) || !std::isfinite(c)) fail(errc::domain, "scale c must be positive and finite");
    if (l < 1 || q < l) fail(errc::contract, "block range must satisfy 1 <= l <= q");
    if (trials < 1) fail(errc::contract, "trial count must be >= 1");
    double c_crit = critical_c(theta, d);
    if (!(c > c_crit))
        fail(errc::precondition, "scale c must exceed critical_c(theta, d) = " + std::to_string(c_crit));
    double s0 = s_exponent(c, d, theta);
    if (!(s > 0.0) || !(s < static_cast<double>(d) - s0))
        fail(errc::precondition, "energy exponent s must lie in (0, d - s_exponent) = (0, " +
                                     std::to_string(static_cast<double>(d) - s0) + ")");

    SecondMomentReport rep;
    rep.c = c;
    rep.d = d;
    rep.theta = theta;
    rep.l = l;
    rep.q = q;
    rep.m = m;
    rep.s = s;
    rep.trials = trials;
    rep.seed = seed;
    rep.k_mass = k_mass(c, d, theta, l, q);
    rep.s_exponent = s0;
    rep.majorant_coeff = psi_majorant_coeff(c, d, theta, l);

    std::vector<double> masses(trials), energies(trials);
    parallel_for(trials, [&](std::uint64_t t) {
        SampleStream stream(substream_seed(seed, t), MeasureModel::uniform_torus(d));
        GridCover grid = liminf_witness_grid(stream, c, theta, l, q, m);
        masses[t] = grid.fraction();
        energies[t] = grid_energy(grid, s);
    });

    double k = rep.k_mass;
    double sum = 0, sum_sq = 0, sum_m4 = 0, sum_e = 0, sum_e2 = 0;
    std::uint64_t near = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        double mass = masses[t];
        sum += mass;
        sum_sq += mass * mass;
        sum_m4 += mass * mass * mass * mass;
        sum_e += energies[t];
        sum_e2 += energies[t] * energies[t];
        if (mass > 0.5 * k && mass < 1.5 * k) ++near;
    }
    double n = static_cast<double>(trials);
    rep.mass_mean = sum / n;
    rep.mass_stddev = std::sqrt(std::max(0.0, sum_sq / n - rep.mass_mean * rep.mass_mean));
    rep.second_moment_mean = sum_sq / n;
    rep.energy_mean = sum_e / n;
    rep.fraction_near_mean = static_cast<double>(near) / n;

    // Caps from the kernel majorant with the pair-correlation radius
    // (twice the block radius), which widens the coefficient by 2^s0.
    double pair_coeff = std::pow(2.0, s0) * rep.majorant_coeff;
    rep.second_moment_cap = k * k * (1.0 + pair_coeff * energy_constant(s0, d));
    rep.energy_cap = k * k * (energy_constant(s, d) + pair_coeff * energy_constant(s + s0, d));

    double m2_sigma = std::sqrt(std::max(0.0, sum_m4 / n - rep.second_moment_mean * rep.second_moment_mean) / n);
    double e_sigma = std::sqrt(std::max(0.0, sum_e2 / n - rep.energy_mean * rep.energy_mean) / n);
    rep.respects_second_moment_cap = rep.second_moment_mean <= rep.second_moment_cap + 3.0 * m2_sigma;
    rep.respects_energy_cap = rep.energy_mean <= rep.energy_cap + 3.0 * e_sigma;
    return rep;
}

}  // namespace ucov
