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

#include "ucov/criteria.hpp"

#include <cmath>

#include "ucov/errors.hpp"

namespace ucov {

const char* series_verdict_name(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::converges: return "Converges";
        case SeriesVerdict::diverges: return "Diverges";
        case SeriesVerdict::unknown: return "Unknown";
    }
    return "Unknown";
}

const char* coverage_verdict_name(CoverageVerdict v) {
    switch (v) {
        case CoverageVerdict::full_measure: return "FullMeasure";
        case CoverageVerdict::zero_measure: return "ZeroMeasure";
        case CoverageVerdict::countable_as: return "CountableAS";
        case CoverageVerdict::unknown: return "Unknown";
    }
    return "Unknown";
}

DichotomyVerdict classify_dichotomy(const RadiusSchedule& schedule, const MeasureModel& measure) {
    DichotomyVerdict out;
    if (!schedule.analytic()) {
        out.notes.push_back(
            "explicit radius lists have no closed-form tail; run the series diagnostics instead");
        return out;
    }

    const double k = static_cast<double>(measure.support_dim());
    const double e = schedule.decay() * k;
    // Boundary cases compare a floating product against 1 and 2; the
    // tolerance absorbs rounding like (1/d) * d.
    const double tol = 1e-12;
    out.monotonicity_hypothesis_holds = e <= 1.0 + tol;

    if (e < 1.0 - tol) {
        out.first_series = SeriesVerdict::diverges;
        out.second_series = SeriesVerdict::converges;
        out.countability_series = SeriesVerdict::diverges;
        out.verdict = CoverageVerdict::full_measure;
        out.notes.push_back(
            "mass exponent alpha*k < 1: the mass series diverges and the damped series has a "
            "superpolynomially small tail, so the covered set has full measure a.s.");
    } else if (e <= 1.0 + tol) {
        out.first_series = SeriesVerdict::diverges;
        out.second_series = SeriesVerdict::diverges;
        out.countability_series = SeriesVerdict::diverges;
        out.verdict = CoverageVerdict::zero_measure;
        out.notes.push_back(
            "critical exponent alpha*k = 1: the damped series has a harmonic tail and diverges, "
            "so the covered set is null a.s.");
    } else if (e <= 2.0 + tol) {
        out.first_series = SeriesVerdict::converges;
        out.second_series = SeriesVerdict::converges;
        out.countability_series = SeriesVerdict::diverges;
        out.verdict = CoverageVerdict::zero_measure;
        out.notes.push_back(
            "mass exponent alpha*k > 1: the mass series converges, so the covered set is null "
            "a.s. by a tail union bound");
        out.notes.push_back(
            "countability series still diverges (alpha*k <= 2), so no countability conclusion");
    } else {
        out.first_series = SeriesVerdict::converges;
        out.second_series = SeriesVerdict::converges;
        out.countability_series = SeriesVerdict::converges;
        out.verdict = CoverageVerdict::countable_as;
        out.notes.push_back(
            "countability series converges (alpha*k > 2): beyond the sample points themselves "
            "the covered set is a.s. empty");
    }
    if (!out.monotonicity_hypothesis_holds) {
        out.notes.push_back(
            "n * m_n is eventually decreasing here, so the extreme-value hypothesis fails; the "
            "null verdict rests on the convergent mass series instead");
    }
    return out;
}

SeriesDiagnostics series_partial_diagnostics(const RadiusSchedule& schedule,
                                             const MeasureModel& measure,
                                             std::uint64_t n_max) {
    if (n_max < 1) fail(errc::contract, "series horizon n_max must be >= 1");
    // term3 needs l_{n+1}, so an explicit list of length L covers n <= L-1.
    std::uint64_t horizon = n_max;
    if (schedule.capacity() != std::uint64_t(-1)) {
        if (schedule.capacity() < 2)
            fail(errc::range, "series diagnostics need at least two schedule entries");
        horizon = std::min(horizon, schedule.capacity() - 1);
    }

    SeriesDiagnostics diag;
    diag.n.reserve(horizon);
    double p1 = 0, p2 = 0, p3 = 0;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        double ln = schedule.at(n);
        double ln1 = schedule.at(n + 1);
        double mass = measure.support_ball_mass(ln);
        double nd = static_cast<double>(n);
        double t1 = mass;
        double t2 = mass * std::exp(-nd * mass);
        double t3 = nd * measure.support_ball_mass(ln + ln1);
        p1 += t1;
        p2 += t2;
        p3 += t3;
        diag.n.push_back(n);
        diag.term1.push_back(t1);
        diag.term2.push_back(t2);
        diag.term3.push_back(t3);
        diag.partial1.push_back(p1);
        diag.partial2.push_back(p2);
        diag.partial3.push_back(p3);
    }

    auto fit_tail = [&](const std::vector<double>& terms) -> std::optional<double> {
        std::uint64_t from = std::max<std::uint64_t>(2, horizon / 10);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int count = 0;
        for (std::uint64_t n = from; n <= horizon; ++n) {
            double t = terms[n - 1];
            if (!(t > 0.0)) continue;
            double x = std::log(static_cast<double>(n));
            double y = std::log(t);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++count;
        }
        if (count < 2) return std::nullopt;
        double denom = count * sxx - sx * sx;
        if (!(denom > 0.0)) return std::nullopt;
        return (count * sxy - sx * sy) / denom;
    };
    diag.tail_exponent1 = fit_tail(diag.term1);
    diag.tail_exponent2 = fit_tail(diag.term2);
    diag.tail_exponent3 = fit_tail(diag.term3);
    return diag;
}

}  // namespace ucov
