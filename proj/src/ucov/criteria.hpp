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

#ifndef UCOV_CRITERIA_HPP
#define UCOV_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucov/measure.hpp"
#include "ucov/schedule.hpp"

namespace ucov {

enum class SeriesVerdict { converges, diverges, unknown };

enum class CoverageVerdict {
    full_measure,   // the covered set carries full measure a.s.
    zero_measure,   // the covered set is null a.s.
    countable_as,   // the covered set reduces to the sample points a.s.
    unknown,
};

const char* series_verdict_name(SeriesVerdict v);
const char* coverage_verdict_name(CoverageVerdict v);

// Outcome of the convergence tests that drive the coverage dichotomy
// for m_n = mu(B(y, l_n)) constant over the support:
//   first_series         sum m_n
//   second_series        sum m_n exp(-n m_n)
//   countability_series  sum n * m(l_n + l_{n+1})
// The zero/full alternative needs (n m_n) nondecreasing for the
// extreme-value step; monotonicity_hypothesis_holds records whether the
// schedule satisfies it.
struct DichotomyVerdict {
    CoverageVerdict verdict = CoverageVerdict::unknown;
    SeriesVerdict first_series = SeriesVerdict::unknown;
    SeriesVerdict second_series = SeriesVerdict::unknown;
    SeriesVerdict countability_series = SeriesVerdict::unknown;
    bool monotonicity_hypothesis_holds = false;
    std::vector<std::string> notes;
};

// Closed form classification for the analytic schedule families against
// a uniform measure of support dimension k: with decay exponent alpha
// the mass scale is m_n ~ (2c)^k n^(-alpha k), so everything is read off
// e = alpha * k. Explicit schedules classify as unknown.
DichotomyVerdict classify_dichotomy(const RadiusSchedule& schedule, const MeasureModel& measure);

// Partial sums and terms of the three series up to n_max, plus fitted
// log-log tail exponents where enough positive terms exist.
struct SeriesDiagnostics {
    std::vector<std::uint64_t> n;
    std::vector<double> term1, term2, term3;
    std::vector<double> partial1, partial2, partial3;
    std::optional<double> tail_exponent1, tail_exponent2, tail_exponent3;
};

SeriesDiagnostics series_partial_diagnostics(const RadiusSchedule& schedule,
                                             const MeasureModel& measure,
                                             std::uint64_t n_max);

}  // namespace ucov

#endif
