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

#include "ucov/reports.hpp"

#include <cstdio>

#include "ucov/version.hpp"

namespace ucov {

ojson envelope(ojson config, ojson results) {
    ojson doc;
    doc["config"] = std::move(config);
    doc["version"] = k_version;
    doc["results"] = std::move(results);
    return doc;
}

std::string dump_envelope(const ojson& config, const ojson& results) {
    return envelope(config, results).dump(2) + "\n";
}

std::string csv_header(const ojson& config) { return "# config: " + config.dump() + "\n"; }

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ojson schedule_json(const RadiusSchedule& schedule) {
    ojson j;
    switch (schedule.family()) {
        case RadiusSchedule::Family::power_law:
            j["family"] = "power_law";
            j["c"] = schedule.scale();
            j["alpha"] = schedule.decay();
            break;
        case RadiusSchedule::Family::critical_scale:
            j["family"] = "critical_scale";
            j["c"] = schedule.scale();
            j["d"] = schedule.critical_dim();
            break;
        case RadiusSchedule::Family::explicit_list:
            j["family"] = "explicit";
            j["values"] = schedule.values();
            break;
    }
    return j;
}

ojson measure_json(const MeasureModel& measure) {
    ojson j;
    j["d"] = measure.dim();
    j["support_dim"] = measure.support_dim();
    return j;
}

namespace {
ojson theta_star_field(const BoundSide& side) {
    if (side.at_edge_limit) return ojson("limit_at_infinity");
    return ojson(side.theta_star);
}
}  // namespace

ojson bound_report_json(const BoundReport& report) {
    ojson j;
    j["c"] = report.c;
    j["d"] = report.d;
    j["lower_bound"] = report.lower.value;
    j["theta_star_lower"] = theta_star_field(report.lower);
    j["upper_bound"] = report.upper.value;
    j["theta_star_upper"] = theta_star_field(report.upper);
    j["regime"] = report.regime;
    return j;
}

ojson dichotomy_json(const DichotomyVerdict& verdict) {
    ojson j;
    j["verdict"] = coverage_verdict_name(verdict.verdict);
    j["first_series"] = series_verdict_name(verdict.first_series);
    j["second_series"] = series_verdict_name(verdict.second_series);
    j["countability_series"] = series_verdict_name(verdict.countability_series);
    j["monotonicity_hypothesis_holds"] = verdict.monotonicity_hypothesis_holds;
    j["notes"] = verdict.notes;
    return j;
}

std::string series_diagnostics_csv(const SeriesDiagnostics& diag, const ojson& config) {
    std::string out = csv_header(config);
    out += "n,term1,term2,term3,partial1,partial2,partial3\n";
    for (std::size_t i = 0; i < diag.n.size(); ++i) {
        out += std::to_string(diag.n[i]);
        out += ',';
        out += csv_double(diag.term1[i]);
        out += ',';
        out += csv_double(diag.term2[i]);
        out += ',';
        out += csv_double(diag.term3[i]);
        out += ',';
        out += csv_double(diag.partial1[i]);
        out += ',';
        out += csv_double(diag.partial2[i]);
        out += ',';
        out += csv_double(diag.partial3[i]);
        out += '\n';
    }
    return out;
}

ojson window_summary_json(const WindowSummary& summary) {
    ojson j;
    j["p"] = summary.p;
    j["n_max"] = summary.n_max;
    j["checkpoints"] = summary.checkpoints;
    j["covered_cells"] = summary.covered_cells;
    j["covered_fraction"] = summary.covered_fraction;
    if (summary.box_dim.has_value())
        j["box_dim"] = *summary.box_dim;
    return j;
}

ojson zero_one_json(const ZeroOneResult& result) {
    ojson j;
    j["values"] = result.values;
    j["mean"] = result.mean;
    j["stddev"] = result.stddev;
    return j;
}

ojson growth_trace_json(const CoverGrowthTrace& trace) {
    ojson j;
    j["lambda"] = trace.lambda;
    j["log_lambda"] = trace.log_lambda;
    j["fitted_rate"] = trace.fitted_rate;
    j["final_radius"] = trace.final_radius;
    ojson levels = ojson::array();
    for (const auto& lvl : trace.levels) {
        ojson row;
        row["level"] = lvl.level;
        row["n"] = lvl.n_index;
        row["n_count"] = lvl.n_count;
        row["q_count"] = lvl.q_count;
        row["predicted"] = lvl.predicted;
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    return j;
}

std::string growth_trace_csv(const CoverGrowthTrace& trace, const ojson& config) {
    std::string out = csv_header(config);
    out += "i,n_i,N_i,Q_i,predicted,cumulative\n";
    for (const auto& lvl : trace.levels) {
        out += std::to_string(lvl.level);
        out += ',';
        out += std::to_string(lvl.n_index);
        out += ',';
        out += std::to_string(lvl.n_count);
        out += ',';
        out += std::to_string(lvl.q_count);
        out += ',';
        out += csv_double(lvl.predicted);
        out += ',';
        out += std::to_string(lvl.n_count + lvl.q_count);
        out += '\n';
    }
    return out;
}

std::string hitting_records_csv(const std::vector<HittingRecord>& records, const ojson& config) {
    std::string out = csv_header(config);
    std::size_t d = records.empty() ? 0 : records.front().probe.size();
    out += "probe_index";
    for (std::size_t a = 0; a < d; ++a) {
        out += ",y";
        out += std::to_string(a);
    }
    out += ",radius,tau,estimate\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        for (std::size_t j = 0; j < rec.radii.size(); ++j) {
            out += std::to_string(i);
            for (std::size_t a = 0; a < rec.probe.size(); ++a) {
                out += ',';
                out += csv_double(rec.probe[a]);
            }
            out += ',';
            out += csv_double(rec.radii[j]);
            out += ',';
            out += rec.tau[j].has_value() ? std::to_string(*rec.tau[j]) : std::string("miss");
            out += ',';
            out += rec.scaling_estimate.has_value() ? csv_double(*rec.scaling_estimate)
                                                    : std::string("undefined");
            out += '\n';
        }
    }
    return out;
}

ojson second_moment_json(const SecondMomentReport& report) {
    ojson j;
    j["k_mass"] = report.k_mass;
    j["s_exponent"] = report.s_exponent;
    j["majorant_coeff"] = report.majorant_coeff;
    j["mass_mean"] = report.mass_mean;
    j["mass_stddev"] = report.mass_stddev;
    j["second_moment_mean"] = report.second_moment_mean;
    j["second_moment_cap"] = report.second_moment_cap;
    j["energy_mean"] = report.energy_mean;
    j["energy_cap"] = report.energy_cap;
    j["fraction_near_mean"] = report.fraction_near_mean;
    j["respects_second_moment_cap"] = report.respects_second_moment_cap;
    j["respects_energy_cap"] = report.respects_energy_cap;
    return j;
}

}  // namespace ucov
