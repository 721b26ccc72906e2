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

#ifndef UCOV_TORUS_HPP
#define UCOV_TORUS_HPP

#include <cmath>

// Geometry of the unit torus [0,1)^d under the max norm. All balls in
// this library are open; membership tests use strict inequality.

namespace ucov {

inline constexpr int k_max_dim = 34;

// Map an arbitrary finite coordinate to its representative in [0,1).
inline double wrap_unit(double x) {
    double f = x - std::floor(x);
    return (f >= 0.0 && f < 1.0) ? f : 0.0;
}

// Shortest wrapped distance along one axis; inputs in [0,1).
inline double wrap_axis_dist(double a, double b) {
    double t = a - b;
    if (t < 0.0) t = -t;
    return t <= 0.5 ? t : 1.0 - t;
}

// Distance to the nearest integer translate, max norm.
inline double torus_dist(const double* x, const double* y, int d) {
    double best = 0.0;
    for (int i = 0; i < d; ++i) {
        double t = wrap_axis_dist(x[i], y[i]);
        if (t > best) best = t;
    }
    return best;
}

// True iff x lies in the open ball of radius r around center.
inline bool within_open_ball(const double* x, const double* center, int d, double r) {
    for (int i = 0; i < d; ++i) {
        if (wrap_axis_dist(x[i], center[i]) >= r) return false;
    }
    return true;
}

}  // namespace ucov

#endif
