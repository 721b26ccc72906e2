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

#ifndef UCOV_HITTING_HPP
#define UCOV_HITTING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ucov/sampling.hpp"

namespace ucov {

// First index n in [1, n_max] with omega_n inside the open ball B(y, r),
// or nullopt when the window never hits.
std::optional<std::uint64_t> hitting_time(const SampleStream& stream, const double* y,
                                          double r, std::uint64_t n_max);

// Hitting times of one probe along a geometric radius ladder
// r_j = r_hi * 2^-j, j = 0..k-1, collected in a single pass over the
// stream. The scaling estimate log(tau) / -log(r) converges to the upper
// local dimension of the sampling measure, so it doubles as a probe of
// the covering exponent.
struct HittingRecord {
    std::vector<double> probe;
    std::vector<double> radii;
    std::vector<std::optional<std::uint64_t>> tau;
    // max of log(tau_j) / -log(r_j) over the deepest third of the hit
    // radii; nullopt when nothing was hit.
    std::optional<double> scaling_estimate;
};

HittingRecord hitting_ladder(const SampleStream& stream, const double* y, double r_hi,
                             int ladder_k, std::uint64_t n_max);

// Cross-check of hitting scaling against window membership for the
// schedule l_n = n^(-alpha): probes whose scaling estimate is clearly
// below 1/alpha must be covered at every checkpoint of the window, and
// probes clearly above must not be. `margin` sets the dead zone around
// 1/alpha inside which no claim is made.
struct InclusionProbeResult {
    std::vector<double> probe;
    std::optional<double> scaling_estimate;
    int side = 0;  // -1 below the dead zone, +1 above, 0 inside or undefined
    bool member_at_all_checkpoints = false;
    bool violation = false;
};

struct InclusionOutcome {
    std::vector<InclusionProbeResult> probes;
    std::uint64_t violations = 0;
    std::uint64_t claims = 0;  // probes with side != 0
};

InclusionOutcome inclusion_check(const SampleStream& stream, double alpha,
                                 const std::vector<std::vector<double>>& probes,
                                 double margin, std::uint64_t p, std::uint64_t n_max,
                                 double r_hi, int ladder_k, std::uint64_t ladder_n_max);

}  // namespace ucov

#endif
