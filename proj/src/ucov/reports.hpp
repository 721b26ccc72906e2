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

#ifndef UCOV_REPORTS_HPP
#define UCOV_REPORTS_HPP

#include <string>

#include <json.hpp>

#include "ucov/bounds.hpp"
#include "ucov/criteria.hpp"
#include "ucov/experiments.hpp"
#include "ucov/growth.hpp"
#include "ucov/hitting.hpp"
#include "ucov/schedule.hpp"

namespace ucov {

// All documents use insertion-ordered JSON so reruns with the same
// configuration are byte identical.
using ojson = nlohmann::ordered_json;

// Top-level document shape {config, version, results}; CSV documents
// echo the same config as a leading "# config: ..." comment line.
ojson envelope(ojson config, ojson results);
std::string dump_envelope(const ojson& config, const ojson& results);
std::string csv_header(const ojson& config);

// Floating point CSV field with round-trip precision.
std::string csv_double(double v);

ojson schedule_json(const RadiusSchedule& schedule);
ojson measure_json(const MeasureModel& measure);

// Field names and order are part of the output contract:
// c, d, lower_bound, theta_star_lower, upper_bound, theta_star_upper,
// regime. A theta_star is the string "limit_at_infinity" when the
// optimum is approached only as theta grows without bound.
ojson bound_report_json(const BoundReport& report);

ojson dichotomy_json(const DichotomyVerdict& verdict);
std::string series_diagnostics_csv(const SeriesDiagnostics& diag, const ojson& config);

ojson window_summary_json(const WindowSummary& summary);
ojson zero_one_json(const ZeroOneResult& result);

std::string growth_trace_csv(const CoverGrowthTrace& trace, const ojson& config);
ojson growth_trace_json(const CoverGrowthTrace& trace);

std::string hitting_records_csv(const std::vector<HittingRecord>& records, const ojson& config);

ojson second_moment_json(const SecondMomentReport& report);

}  // namespace ucov

#endif
