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

#ifndef UCOV_SCHEDULE_HPP
#define UCOV_SCHEDULE_HPP

#include <cstdint>
#include <vector>

namespace ucov {

// Nonincreasing sequence of positive ball radii, indexed from 1.
//
// Three families:
//   power_law(c, alpha)    l_n = c * n^(-alpha)
//   critical_scale(c, d)   l_n = c * n^(-1/d), the scaling at which the
//                          covered fraction of the d-torus transitions
//   explicit_list(values)  user-supplied radii, finite capacity
class RadiusSchedule {
public:
    enum class Family { power_law, critical_scale, explicit_list };

    static RadiusSchedule power_law(double c, double alpha);
    static RadiusSchedule critical_scale(double c, int d);
    static RadiusSchedule explicit_list(std::vector<double> values);

    // Radius for index n >= 1. Throws range when an explicit list is
    // exhausted.
    double at(std::uint64_t n) const;

    Family family() const { return family_; }
    double scale() const { return c_; }
    // Decay exponent alpha; equals 1/d for the critical family and 0 for
    // explicit lists.
    double decay() const { return alpha_; }
    int critical_dim() const { return crit_d_; }
    bool analytic() const { return family_ != Family::explicit_list; }
    // Largest valid index (UINT64_MAX for the analytic families).
    std::uint64_t capacity() const;
    const std::vector<double>& values() const { return values_; }

private:
    RadiusSchedule() = default;

    Family family_ = Family::power_law;
    double c_ = 0.0;
    double alpha_ = 0.0;
    int crit_d_ = 0;
    std::vector<double> values_;
};

}  // namespace ucov

#endif
