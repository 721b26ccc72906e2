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

#ifndef UCOV_SAMPLING_HPP
#define UCOV_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "ucov/measure.hpp"

namespace ucov {

// I.i.d. sample sequence (omega_n), n >= 1, drawn from a MeasureModel.
// Samples are addressed by index through a counter-based generator, so
// omega_n is a pure function of (seed, n): no state, no order dependence.
//
// An explicit stream replays a fixed finite list of points instead; it
// exists for oracle tests and for reproducing externally generated data.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, MeasureModel measure);

    static SampleStream explicit_points(std::vector<std::vector<double>> points, int d);

    int dim() const { return measure_.dim(); }
    const MeasureModel& measure() const { return measure_; }
    std::uint64_t seed() const { return seed_; }
    bool is_explicit() const { return forced_; }
    // Largest valid sample index (UINT64_MAX for generated streams).
    std::uint64_t capacity() const;

    // Writes omega_n into out (dim() doubles). n is 1-based.
    void point(std::uint64_t n, double* out) const;
    double coord(std::uint64_t n, int axis) const;

private:
    explicit SampleStream(MeasureModel measure) : measure_(measure) {}

    MeasureModel measure_;
    std::uint64_t seed_ = 0;
    bool forced_ = false;
    std::vector<double> forced_coords_;  // flat, dim() per point
};

}  // namespace ucov

#endif
