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

#include "ucov/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "ucov/errors.hpp"
#include "ucov/parallel.hpp"

namespace ucov {

std::vector<std::uint64_t> dyadic_checkpoints(std::uint64_t p, std::uint64_t n_max) {
    if (p < 1) fail(errc::contract, "window start p must be >= 1");
    if (n_max < p) fail(errc::contract, "window end n_max must be >= p");
    std::vector<std::uint64_t> cps{p};
    while (cps.back() <= n_max / 2) cps.push_back(cps.back() * 2);
    if (cps.back() != n_max) cps.push_back(n_max);
    return cps;
}

double empirical_covered_fraction(const SampleStream& stream, const RadiusSchedule& schedule,
                                  std::uint64_t p, std::uint64_t n_max, int m) {
    GridCover grid = build_cover_grid(stream, schedule, p, dyadic_checkpoints(p, n_max), m);
    return grid.fraction();
}

double box_dim_statistic(const GridCover& grid, int m_lo, int m_hi) {
    return grid.estimate_box_dim(m_lo, m_hi).value_or(0.0);
}

ZeroOneResult zero_one_probe(const std::vector<std::uint64_t>& seeds, const ZeroOneConfig& config) {
    if (seeds.empty()) fail(errc::contract, "seed list must be nonempty");
    int m_lo = config.m_lo > 0 ? config.m_lo : std::max(1, config.m - 8);
    int m_hi = config.m_hi > 0 ? config.m_hi : config.m;

    ZeroOneResult result;
    result.values.resize(seeds.size());
    parallel_for(seeds.size(), [&](std::uint64_t i) {
        SampleStream stream(seeds[i], config.measure);
        GridCover grid = build_cover_grid(stream, config.schedule, config.p,
                                          dyadic_checkpoints(config.p, config.n_max), config.m);
        if (config.statistic == ZeroOneStatistic::box_dim)
            result.values[i] = box_dim_statistic(grid, m_lo, m_hi);
        else
            result.values[i] = grid.fraction();
    });

    double sum = 0, sum_sq = 0;
    for (double v : result.values) {
        sum += v;
        sum_sq += v * v;
    }
    double n = static_cast<double>(result.values.size());
    result.mean = sum / n;
    result.stddev = std::sqrt(std::max(0.0, sum_sq / n - result.mean * result.mean));
    return result;
}

WindowSummary summarize_window(const GridCover& grid, std::uint64_t p, std::uint64_t n_max) {
    WindowSummary w;
    w.p = p;
    w.n_max = n_max;
    w.checkpoints = dyadic_checkpoints(p, n_max);
    w.covered_cells = grid.popcount();
    w.covered_fraction = grid.fraction();
    return w;
}

}  // namespace ucov
