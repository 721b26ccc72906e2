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

#include "ucov/schedule.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ucov/errors.hpp"

namespace ucov {

RadiusSchedule RadiusSchedule::power_law(double c, double alpha) {
    if (!(c > 0.0) || !std::isfinite(c)) fail(errc::domain, "radius scale c must be positive and finite");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) fail(errc::domain, "decay exponent alpha must be positive and finite");
    RadiusSchedule s;
    s.family_ = Family::power_law;
    s.c_ = c;
    s.alpha_ = alpha;
    return s;
}

RadiusSchedule RadiusSchedule::critical_scale(double c, int d) {
    if (!(c > 0.0) || !std::isfinite(c)) fail(errc::domain, "radius scale c must be positive and finite");
    if (d < 1) fail(errc::domain, "dimension must be >= 1");
    RadiusSchedule s;
    s.family_ = Family::critical_scale;
    s.c_ = c;
    s.alpha_ = 1.0 / static_cast<double>(d);
    s.crit_d_ = d;
    return s;
}

RadiusSchedule RadiusSchedule::explicit_list(std::vector<double> values) {
    if (values.empty()) fail(errc::domain, "explicit radius list must be nonempty");
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
        double v = values[i];
        if (!(v > 0.0) || !std::isfinite(v))
            fail(errc::domain, "explicit radius at index " + std::to_string(i + 1) +
                                   " must be positive and finite");
        if (v > prev)
            fail(errc::domain, "explicit radii must be nonincreasing (violated at index " +
                                   std::to_string(i + 1) + ")");
        prev = v;
    }
    RadiusSchedule s;
    s.family_ = Family::explicit_list;
    s.values_ = std::move(values);
    return s;
}

double RadiusSchedule::at(std::uint64_t n) const {
    if (n == 0) fail(errc::contract, "radius index must be >= 1");
    if (family_ == Family::explicit_list) {
        if (n > values_.size())
            fail(errc::range, "explicit radius schedule exhausted at index " + std::to_string(n));
        return values_[n - 1];
    }
    return c_ * std::pow(static_cast<double>(n), -alpha_);
}

std::uint64_t RadiusSchedule::capacity() const {
    if (family_ == Family::explicit_list) return values_.size();
    return std::numeric_limits<std::uint64_t>::max();
}

}  // namespace ucov
