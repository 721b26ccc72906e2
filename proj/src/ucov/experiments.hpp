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

#ifndef UCOV_EXPERIMENTS_HPP
#define UCOV_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ucov/grid.hpp"
#include "ucov/measure.hpp"
#include "ucov/sampling.hpp"
#include "ucov/schedule.hpp"

namespace ucov {

// Doubling checkpoint ladder p, 2p, 4p, ... capped at n_max, with n_max
// itself appended when the doubling does not land on it.
std::vector<std::uint64_t> dyadic_checkpoints(std::uint64_t p, std::uint64_t n_max);

// Fraction of grid cells covered by the window approximation of the
// covered set (intersection over the dyadic checkpoints).
double empirical_covered_fraction(const SampleStream& stream, const RadiusSchedule& schedule,
                                  std::uint64_t p, std::uint64_t n_max, int m);

// Box dimension statistic of a window grid. An empty window grid reports
// 0 here: at the probe resolution the covered set has already vanished,
// which is the degenerate end of the dichotomy. (GridCover itself keeps
// the empty case distinct as nullopt.)
double box_dim_statistic(const GridCover& grid, int m_lo, int m_hi);

enum class ZeroOneStatistic { box_dim, covered_fraction };

struct ZeroOneConfig {
    ZeroOneStatistic statistic = ZeroOneStatistic::covered_fraction;
    RadiusSchedule schedule = RadiusSchedule::power_law(1.0, 1.0);
    MeasureModel measure = MeasureModel::uniform_torus(1);
    std::uint64_t p = 1;
    std::uint64_t n_max = 1;
    int m = 1;
    int m_lo = 0;  // 0 = default fit range max(1, m-8)..m
    int m_hi = 0;
};

// Spread of a tail statistic across independent seeds. Tail statistics
// of the covering process are a.s. constant, so the observed spread
// measures how far the finite window is from the limit.
struct ZeroOneResult {
    std::vector<double> values;  // one per seed, same order
    double mean = 0.0;
    double stddev = 0.0;  // population normalization (divide by count)
};

ZeroOneResult zero_one_probe(const std::vector<std::uint64_t>& seeds, const ZeroOneConfig& config);

// Window simulation bundle: grid plus its covered fraction and optional
// box-dimension fit, shared by the simulate and boxdim runners.
struct WindowSummary {
    std::uint64_t p = 0;
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> checkpoints;
    double covered_fraction = 0.0;
    std::uint64_t covered_cells = 0;
    std::optional<double> box_dim;  // set by run_window when a fit range is given
};

WindowSummary summarize_window(const GridCover& grid, std::uint64_t p, std::uint64_t n_max);

}  // namespace ucov

#endif
