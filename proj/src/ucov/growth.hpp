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

#ifndef UCOV_GROWTH_HPP
#define UCOV_GROWTH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ucov/sampling.hpp"

namespace ucov {

// Geometric index ladder n_j = ceil(theta^j), forced strictly increasing.
// Throws resource once theta^j no longer fits in 64 bits.
std::vector<std::uint64_t> ladder(double theta, int j_max);
std::uint64_t ladder_value(double theta, int j);

// One level of the greedy center recursion. At level i the retained
// centers are split into the connected set I_i (size n_count) and the
// fresh boundary set J_i (size q_count); predicted is the matrix-model
// combined count, the level-l total scaled by Lambda^(i-l).
struct GrowthLevel {
    int level = 0;
    std::uint64_t n_index = 0;  // ladder value n_i
    std::uint64_t n_count = 0;  // |I_i|
    std::uint64_t q_count = 0;  // |J_i|
    double predicted = 1.0;
};

struct CoverGrowthTrace {
    double c = 0.0;
    int d = 1;
    double theta = 0.0;
    int start_level = 0;
    int end_level = 0;
    double lambda = 0.0;       // top eigenvalue of the growth matrix
    double log_lambda = 0.0;
    double fitted_rate = 0.0;  // least squares slope of log(N+Q) per level
    std::vector<GrowthLevel> levels;
    std::vector<double> final_centers;  // flat, d per center, I then J
    double final_radius = 0.0;          // l at the last ladder index
};

// Greedy multi-scale center selection for the ball union at the critical
// scale l_n = c n^(-1/d). Level l starts from the first n_l samples; at
// each step to level i+1 a new sample joins I when an existing center
// lies within l_{n_i} + l_{n_{i+2}}, and joins the fresh boundary set J
// when the nearest center distance falls in
// [l_{n_i} + l_{n_{i+2}}, l_{n_i} + l_{n_{i+1}}). Samples farther than
// l_{n_i} + l_{n_{i+1}} from every center are dropped: their ball cannot
// meet the current union.
CoverGrowthTrace greedy_cover_trace(const SampleStream& stream, double c, double theta,
                                    int l, int i_max);

// Verifies on a resolution-m grid that each level's ball union contains
// the next level's: returns the total number of escaped cells across
// levels (zero when containment holds at grid scale).
std::uint64_t greedy_containment_escapes(const SampleStream& stream, double c, double theta,
                                         int l, int i_max, int m);

// Runs the same recursion and fires fn(level, icenters, jcenters) once
// per level l..i_max; center lists are flat with dim() doubles each.
// Returns the index ladder n_0..n_{i_max+1}.
std::vector<std::uint64_t> greedy_cover_levels(
    const SampleStream& stream, double c, double theta, int l, int i_max,
    const std::function<void(int, const std::vector<double>&, const std::vector<double>&)>& fn);

// Expected mass of the finite liminf witness over blocks l..q:
//   K = prod_j (1 - (1 - min(1,(2 l_{n_{j+1}})^d))^(n_j - n_{j-1})).
// Every point of the torus is covered by block j with the same
// probability, so K is also the exact per-cell hit probability.
double k_mass(double c, int d, double theta, int l, int q);

// Correlation kernel of the witness indicator at lag t:
//   Psi(t) = prod_j (1 + A_j / (1 - A_j) * [|t| < l_{n_{j+1}}])
// with A_j the per-block miss probability. Bounded by
// 1 + C_l |t|^(-s(c,d,theta)) for c above the critical scale.
double psi_kernel(double c, int d, double theta, int l, int q, const double* t);

// Coefficient C_l = c^s (1 - e^-x)^l of the kernel majorant, where s is
// the correlation decay exponent and x its defining exponent argument.
double psi_majorant_coeff(double c, int d, double theta, int l);

// Monte Carlo check of the pair-indicator bounds for a single ball
// B(omega, ell): joint coverage of x and y is exactly the product of
// per-axis arc overlaps, bounded by (2 ell)^d [dist(x,y) < 2 ell]; the
// complement pair obeys 1 - 2 (2 ell)^d + that same bound.
struct PairIndicatorStats {
    double est_joint = 0.0;
    double exact_joint = 0.0;
    double bound_joint = 0.0;
    double sigma_joint = 0.0;
    double est_complement = 0.0;
    double bound_complement = 0.0;
    double sigma_complement = 0.0;
    std::uint64_t trials = 0;
};
PairIndicatorStats pair_indicator_bound_mc(const double* x, const double* y, double ell,
                                           int d, std::uint64_t trials, std::uint64_t seed);

// Monte Carlo second-moment study of the liminf witness mass on a
// resolution-m grid. Requires c > critical_c(theta, d) and an energy
// exponent 0 < s < d - s_exponent(c, d, theta) so that the majorant
// integrals are finite.
struct SecondMomentReport {
    double c = 0.0;
    int d = 1;
    double theta = 0.0;
    int l = 0;
    int q = 0;
    int m = 0;
    double s = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double k_mass = 0.0;            // exact expected witness mass
    double s_exponent = 0.0;
    double majorant_coeff = 0.0;    // C_l
    double mass_mean = 0.0;
    double mass_stddev = 0.0;
    double second_moment_mean = 0.0;  // mean of mass^2
    double second_moment_cap = 0.0;   // K^2 (1 + C_l * I_{s0}) from the kernel majorant
    double energy_mean = 0.0;
    double energy_cap = 0.0;          // K^2 (I_s + C_l * I_{s+s0})
    double fraction_near_mean = 0.0;  // trials with mass in (K/2, 3K/2)
    bool respects_second_moment_cap = false;
    bool respects_energy_cap = false;
};
SecondMomentReport second_moment_mc(double c, int d, double theta, int l, int q, int m,
                                    std::uint64_t trials, double s, std::uint64_t seed);

}  // namespace ucov

#endif
