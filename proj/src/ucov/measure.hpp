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

#ifndef UCOV_MEASURE_HPP
#define UCOV_MEASURE_HPP

namespace ucov {

// Sampling measure on the d-torus. Either the uniform (Lebesgue) measure
// on the whole torus, or the uniform measure on the k-dimensional
// subtorus {x : x_k = ... = x_{d-1} = 0} for k < d. The subtorus model is
// the standard example of a lower-dimensional Ahlfors regular support.
class MeasureModel {
public:
    static MeasureModel uniform_torus(int d);
    static MeasureModel uniform_subtorus(int support_dim, int d);

    int dim() const { return d_; }
    int support_dim() const { return k_; }
    bool full_support() const { return k_ == d_; }

    // Measure of the open max-norm ball B(y, r). For a point on the
    // support this is min(1, (2r)^k); off the support the slab condition
    // on each fixed axis can empty the intersection.
    double ball_mass(const double* y, double r) const;

    // Measure of a ball centered on the support, min(1, (2r)^k).
    double support_ball_mass(double r) const;

private:
    MeasureModel(int k, int d) : k_(k), d_(d) {}

    int k_ = 1;
    int d_ = 1;
};

}  // namespace ucov

#endif
