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

#include "ucov/sampling.hpp"

#include <limits>
#include <string>

#include "ucov/errors.hpp"
#include "ucov/rng.hpp"
#include "ucov/torus.hpp"

namespace ucov {

SampleStream::SampleStream(std::uint64_t seed, MeasureModel measure)
    : measure_(measure), seed_(seed) {}

SampleStream SampleStream::explicit_points(std::vector<std::vector<double>> points, int d) {
    MeasureModel measure = MeasureModel::uniform_torus(d);
    if (points.empty()) fail(errc::domain, "explicit point list must be nonempty");
    SampleStream s(measure);
    s.forced_ = true;
    s.forced_coords_.reserve(points.size() * static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != static_cast<std::size_t>(d))
            fail(errc::contract, "explicit point " + std::to_string(i + 1) +
                                     " does not have d coordinates");
        for (double v : points[i]) {
            if (!(v >= 0.0) || !(v < 1.0))
                fail(errc::domain, "explicit point coordinates must lie in [0,1)");
            s.forced_coords_.push_back(v);
        }
    }
    return s;
}

std::uint64_t SampleStream::capacity() const {
    if (forced_) return forced_coords_.size() / static_cast<std::size_t>(dim());
    return std::numeric_limits<std::uint64_t>::max();
}

void SampleStream::point(std::uint64_t n, double* out) const {
    if (n == 0) fail(errc::contract, "sample index must be >= 1");
    const int d = dim();
    if (forced_) {
        if (n > capacity())
            fail(errc::range, "explicit sample stream exhausted at index " + std::to_string(n));
        const double* src = forced_coords_.data() + (n - 1) * static_cast<std::size_t>(d);
        for (int i = 0; i < d; ++i) out[i] = src[i];
        return;
    }
    const int k = measure_.support_dim();
    for (int blk = 0; 2 * blk < k; ++blk) {
        auto b = detail::philox_block(seed_, n, static_cast<std::uint32_t>(blk),
                                      detail::k_domain_coords);
        std::uint64_t lo = (static_cast<std::uint64_t>(b.v[1]) << 32) | b.v[0];
        out[2 * blk] = unit_from_bits(lo);
        if (2 * blk + 1 < k) {
            std::uint64_t hi = (static_cast<std::uint64_t>(b.v[3]) << 32) | b.v[2];
            out[2 * blk + 1] = unit_from_bits(hi);
        }
    }
    for (int i = k; i < d; ++i) out[i] = 0.0;
}

double SampleStream::coord(std::uint64_t n, int axis) const {
    if (axis < 0 || axis >= dim()) fail(errc::contract, "coordinate axis out of range");
    double buf[k_max_dim];
    point(n, buf);
    return buf[axis];
}

}  // namespace ucov
