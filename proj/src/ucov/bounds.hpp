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

#ifndef UCOV_BOUNDS_HPP
#define UCOV_BOUNDS_HPP

#include <functional>
#include <string>

namespace ucov {

// Closed forms behind the Hausdorff dimension bounds for the random
// covering set at the critical radius scale l_n = c * n^(-1/d), plus the
// theta-optimizers that turn them into the reported bounds.

// Correlation decay exponent
//   s(c, d, theta) = -d * log(1 - exp(-(2c)^d (theta-1)/theta^2)) / log(theta)
// evaluated in the expm1 form, which stays accurate when the exponent
// argument is small.
double s_exponent(double c, int d, double theta);

// Growth matrix [[1 + Theta, Theta], [Delta, Delta]] for the greedy
// cover recursion, and its top eigenvalue Lambda.
struct LambdaParts {
    double theta_cap;  // Theta = (theta-1) * (2c (1 + theta^(-2/d)))^d
    double delta;      // Delta = (theta-1) (2c)^d ((1+theta^(-1/d))^d - (1+theta^(-2/d))^d)
    double lambda;     // top eigenvalue, (T + sqrt(T^2 - 4 Delta)) / 2 with T = 1 + Theta + Delta
};
LambdaParts lambda_matrix(double c, int d, double theta);

// s-energy of the uniform measure on the d-torus, d * 2^s / (d - s),
// valid for 0 < s < d.
double energy_constant(double s, int d);

// Scale below which the correlation exponent reaches the ambient
// dimension: s(c, d, theta) < d iff c > critical_c(theta, d).
double critical_c(double theta, int d);

struct ThetaOptimum {
    double theta = 0.0;
    double value = 0.0;
    // True when the best value sits at the right edge of the search range
    // with the objective still improving, i.e. the supremum is approached
    // only as theta grows without bound.
    bool at_edge_limit = false;
};

struct OptimizerOptions {
    double theta_min = 1.0 + 1e-6;
    double theta_max = 1e6;
    int grid_points = 2048;
    double rel_tol = 1e-10;
};

// Maximizes f over (theta_min, theta_max]: log-spaced scan, then golden
// section refinement around the best grid point.
ThetaOptimum maximize_over_theta(const std::function<double(double)>& f,
                                 const OptimizerOptions& options = {});

struct BoundSide {
    double value = 0.0;
    double theta_star = 0.0;
    bool at_edge_limit = false;
};

// sup over theta > 1 of d - s(c, d, theta), clipped below at 0. Positive
// exactly when c > 1/2; for c <= 1/2 the supremum is 0 in the limit.
BoundSide lower_bound_dim(double c, int d, const OptimizerOptions& options = {});

// inf over theta > 1 of d * log(Lambda) / log(theta), clipped above at d.
// Below d exactly when c < 1/2; for c >= 1/2 the infimum is d in the
// limit.
BoundSide upper_bound_dim(double c, int d, const OptimizerOptions& options = {});

struct BoundReport {
    double c = 0.0;
    int d = 1;
    BoundSide lower;
    BoundSide upper;
    std::string regime;  // "subcritical", "critical" or "supercritical"
};

BoundReport bounds_report(double c, int d);

}  // namespace ucov

#endif
