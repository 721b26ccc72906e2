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

#include "ucov/measure.hpp"

#include <cmath>

#include "ucov/errors.hpp"
#include "ucov/torus.hpp"

namespace ucov {

MeasureModel MeasureModel::uniform_torus(int d) {
    if (d < 1 || d > k_max_dim) fail(errc::domain, "dimension must be in [1, 34]");
    return MeasureModel(d, d);
}

MeasureModel MeasureModel::uniform_subtorus(int support_dim, int d) {
    if (d < 1 || d > k_max_dim) fail(errc::domain, "dimension must be in [1, 34]");
    if (support_dim < 1 || support_dim > d)
        fail(errc::domain, "support dimension must be in [1, d]");
    return MeasureModel(support_dim, d);
}

double MeasureModel::ball_mass(const double* y, double r) const {
    if (!(r > 0.0) || !std::isfinite(r)) fail(errc::domain, "ball radius must be positive and finite");
    // The ball is open, so a fixed axis at wrapped distance >= r from 0
    // already misses the support.
    for (int i = k_; i < d_; ++i) {
        if (wrap_axis_dist(wrap_unit(y[i]), 0.0) >= r) return 0.0;
    }
    return support_ball_mass(r);
}

double MeasureModel::support_ball_mass(double r) const {
    if (!(r > 0.0) || !std::isfinite(r)) fail(errc::domain, "ball radius must be positive and finite");
    double side = 2.0 * r;
    if (side >= 1.0) return 1.0;
    return std::pow(side, static_cast<double>(k_));
}

}  // namespace ucov
