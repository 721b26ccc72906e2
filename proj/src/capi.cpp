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

#include "ucov.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "ucov/bounds.hpp"
#include "ucov/criteria.hpp"
#include "ucov/errors.hpp"
#include "ucov/experiments.hpp"
#include "ucov/grid.hpp"
#include "ucov/growth.hpp"
#include "ucov/hitting.hpp"
#include "ucov/measure.hpp"
#include "ucov/parallel.hpp"
#include "ucov/reports.hpp"
#include "ucov/rng.hpp"
#include "ucov/sampling.hpp"
#include "ucov/schedule.hpp"
#include "ucov/torus.hpp"
#include "ucov/version.hpp"

struct ucov_stream {
    ucov::SampleStream impl;
};

struct ucov_grid {
    ucov::GridCover impl;
};

namespace {

thread_local std::string g_last_error;

int to_status(ucov::errc code) {
    switch (code) {
        case ucov::errc::contract: return UCOV_ERR_CONTRACT;
        case ucov::errc::domain: return UCOV_ERR_DOMAIN;
        case ucov::errc::range: return UCOV_ERR_RANGE;
        case ucov::errc::precondition: return UCOV_ERR_PRECONDITION;
        case ucov::errc::resource: return UCOV_ERR_RESOURCE;
        case ucov::errc::unsupported: return UCOV_ERR_UNSUPPORTED;
        case ucov::errc::numeric: return UCOV_ERR_NUMERIC;
    }
    return UCOV_ERR_INTERNAL;
}

template <typename Fn>
int wrap(Fn&& fn) {
    try {
        fn();
        return UCOV_OK;
    } catch (const ucov::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return UCOV_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return UCOV_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) ucov::fail(ucov::errc::contract, what);
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) ucov::fail(ucov::errc::resource, "out of memory for result document");
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

ucov::RadiusSchedule schedule_from_c(const ucov_schedule* s, int d) {
    require(s != nullptr, "schedule pointer is null");
    switch (s->family) {
        case UCOV_FAMILY_POWER_LAW:
            return ucov::RadiusSchedule::power_law(s->c, s->alpha);
        case UCOV_FAMILY_CRITICAL_SCALE:
            return ucov::RadiusSchedule::critical_scale(s->c, d);
        case UCOV_FAMILY_EXPLICIT: {
            require(s->values != nullptr || s->n_values == 0, "explicit values pointer is null");
            std::vector<double> values(s->values, s->values + s->n_values);
            return ucov::RadiusSchedule::explicit_list(std::move(values));
        }
        default:
            ucov::fail(ucov::errc::domain, "unknown schedule family tag");
    }
}

ucov::MeasureModel measure_from_c(int d, int support_dim) {
    if (support_dim == 0 || support_dim == d) return ucov::MeasureModel::uniform_torus(d);
    return ucov::MeasureModel::uniform_subtorus(support_dim, d);
}

void write_text_file(const char* path, const std::string& body) {
    std::ofstream os(path, std::ios::binary);
    if (!os) ucov::fail(ucov::errc::resource, std::string("cannot open for writing: ") + path);
    os << body;
    if (!os) ucov::fail(ucov::errc::resource, std::string("write failed: ") + path);
}

}  // namespace

extern "C" {

const char* ucov_version(void) { return ucov::k_version; }

const char* ucov_last_error(void) { return g_last_error.c_str(); }

const char* ucov_status_name(int status) {
    switch (status) {
        case UCOV_OK: return "ok";
        case UCOV_ERR_CONTRACT: return "contract";
        case UCOV_ERR_DOMAIN: return "domain";
        case UCOV_ERR_RANGE: return "range";
        case UCOV_ERR_PRECONDITION: return "precondition";
        case UCOV_ERR_RESOURCE: return "resource";
        case UCOV_ERR_UNSUPPORTED: return "unsupported";
        case UCOV_ERR_NUMERIC: return "numeric";
        case UCOV_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void ucov_string_free(char* s) { std::free(s); }

void ucov_set_threads(int n) { ucov::set_thread_count(n); }

ucov_status ucov_stream_create(uint64_t seed, int d, int support_dim, ucov_stream** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = new ucov_stream{ucov::SampleStream(seed, measure_from_c(d, support_dim))};
    }));
}

ucov_status ucov_stream_create_explicit(const double* coords, uint64_t n_points, int d,
                                        ucov_stream** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        require(coords != nullptr, "coords pointer is null");
        std::vector<std::vector<double>> pts(n_points);
        for (uint64_t i = 0; i < n_points; ++i)
            pts[i].assign(coords + i * d, coords + (i + 1) * d);
        *out = new ucov_stream{ucov::SampleStream::explicit_points(std::move(pts), d)};
    }));
}

void ucov_stream_destroy(ucov_stream* s) { delete s; }

int ucov_stream_dim(const ucov_stream* s) { return s ? s->impl.dim() : 0; }

ucov_status ucov_stream_sample(const ucov_stream* s, uint64_t n, double* out_coords) {
    return static_cast<ucov_status>(wrap([&] {
        require(s != nullptr, "stream pointer is null");
        require(out_coords != nullptr, "output pointer is null");
        s->impl.point(n, out_coords);
    }));
}

uint64_t ucov_substream_seed(uint64_t base, uint64_t index) {
    return ucov::substream_seed(base, index);
}

ucov_status ucov_torus_dist(const double* x, const double* y, int d, double* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(x != nullptr && y != nullptr && out != nullptr, "pointer argument is null");
        if (d < 1) ucov::fail(ucov::errc::domain, "dimension must be >= 1");
        *out = ucov::torus_dist(x, y, d);
    }));
}

ucov_status ucov_ball_mass(int d, int support_dim, const double* y, double r, double* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(y != nullptr && out != nullptr, "pointer argument is null");
        *out = measure_from_c(d, support_dim).ball_mass(y, r);
    }));
}

ucov_status ucov_radius_at(const ucov_schedule* schedule, int d, uint64_t n, double* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = schedule_from_c(schedule, d).at(n);
    }));
}

ucov_status ucov_s_exponent(double c, int d, double theta, double* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = ucov::s_exponent(c, d, theta);
    }));
}

ucov_status ucov_lambda_matrix(double c, int d, double theta, double* out_theta_cap,
                               double* out_delta, double* out_lambda) {
    return static_cast<ucov_status>(wrap([&] {
        auto parts = ucov::lambda_matrix(c, d, theta);
        if (out_theta_cap) *out_theta_cap = parts.theta_cap;
        if (out_delta) *out_delta = parts.delta;
        if (out_lambda) *out_lambda = parts.lambda;
    }));
}

ucov_status ucov_energy_constant(double s, int d, double* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = ucov::energy_constant(s, d);
    }));
}

ucov_status ucov_critical_c(double theta, int d, double* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = ucov::critical_c(theta, d);
    }));
}

ucov_status ucov_lower_bound_dim(double c, int d, double* out_value, double* out_theta_star,
                                 int* out_at_limit) {
    return static_cast<ucov_status>(wrap([&] {
        auto side = ucov::lower_bound_dim(c, d);
        if (out_value) *out_value = side.value;
        if (out_theta_star) *out_theta_star = side.theta_star;
        if (out_at_limit) *out_at_limit = side.at_edge_limit ? 1 : 0;
    }));
}

ucov_status ucov_upper_bound_dim(double c, int d, double* out_value, double* out_theta_star,
                                 int* out_at_limit) {
    return static_cast<ucov_status>(wrap([&] {
        auto side = ucov::upper_bound_dim(c, d);
        if (out_value) *out_value = side.value;
        if (out_theta_star) *out_theta_star = side.theta_star;
        if (out_at_limit) *out_at_limit = side.at_edge_limit ? 1 : 0;
    }));
}

ucov_status ucov_ladder(double theta, int j, uint64_t* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = ucov::ladder_value(theta, j);
    }));
}

ucov_status ucov_k_mass(double c, int d, double theta, int l, int q, double* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = ucov::k_mass(c, d, theta, l, q);
    }));
}

ucov_status ucov_psi_kernel(double c, int d, double theta, int l, int q, const double* t,
                            double* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(t != nullptr && out != nullptr, "pointer argument is null");
        *out = ucov::psi_kernel(c, d, theta, l, q, t);
    }));
}

ucov_status ucov_hitting_time(const ucov_stream* s, const double* y, double r, uint64_t n_max,
                              uint64_t* out_n, int* out_hit) {
    return static_cast<ucov_status>(wrap([&] {
        require(s != nullptr && y != nullptr && out_hit != nullptr, "pointer argument is null");
        auto tau = ucov::hitting_time(s->impl, y, r, n_max);
        *out_hit = tau.has_value() ? 1 : 0;
        if (tau.has_value() && out_n) *out_n = *tau;
    }));
}

ucov_status ucov_build_cover_grid(const ucov_stream* s, const ucov_schedule* schedule,
                                  uint64_t p, const uint64_t* checkpoints,
                                  size_t n_checkpoints, int m, ucov_grid** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(s != nullptr && out != nullptr, "pointer argument is null");
        std::vector<std::uint64_t> cps;
        if (checkpoints != nullptr && n_checkpoints > 0) {
            cps.assign(checkpoints, checkpoints + n_checkpoints);
        } else {
            ucov::fail(ucov::errc::contract, "checkpoint list must be nonempty");
        }
        auto sched = schedule_from_c(schedule, s->impl.dim());
        *out = new ucov_grid{ucov::build_cover_grid(s->impl, sched, p, cps, m)};
    }));
}

ucov_status ucov_liminf_witness_grid(const ucov_stream* s, double c, double theta, int l,
                                     int q, int m, ucov_grid** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(s != nullptr && out != nullptr, "pointer argument is null");
        *out = new ucov_grid{ucov::liminf_witness_grid(s->impl, c, theta, l, q, m)};
    }));
}

void ucov_grid_destroy(ucov_grid* g) { delete g; }

int ucov_grid_dim(const ucov_grid* g) { return g ? g->impl.dim() : 0; }

int ucov_grid_bits(const ucov_grid* g) { return g ? g->impl.bits() : 0; }

uint64_t ucov_grid_popcount(const ucov_grid* g) { return g ? g->impl.popcount() : 0; }

double ucov_grid_fraction(const ucov_grid* g) { return g ? g->impl.fraction() : 0.0; }

int ucov_grid_test(const ucov_grid* g, uint64_t index) {
    return (g && index < g->impl.cell_count() && g->impl.test(index)) ? 1 : 0;
}

ucov_status ucov_grid_box_count(const ucov_grid* g, int m_coarse, uint64_t* out) {
    return static_cast<ucov_status>(wrap([&] {
        require(g != nullptr && out != nullptr, "pointer argument is null");
        *out = g->impl.box_count(m_coarse);
    }));
}

ucov_status ucov_grid_estimate_box_dim(const ucov_grid* g, int m_lo, int m_hi, double* out,
                                       int* out_defined) {
    return static_cast<ucov_status>(wrap([&] {
        require(g != nullptr && out_defined != nullptr, "pointer argument is null");
        auto est = g->impl.estimate_box_dim(m_lo, m_hi);
        *out_defined = est.has_value() ? 1 : 0;
        if (est.has_value() && out) *out = *est;
    }));
}

ucov_status ucov_grid_write_binary(const ucov_grid* g, const char* path) {
    return static_cast<ucov_status>(wrap([&] {
        require(g != nullptr && path != nullptr, "pointer argument is null");
        std::ofstream os(path, std::ios::binary);
        if (!os) ucov::fail(ucov::errc::resource, std::string("cannot open for writing: ") + path);
        ucov::write_grid_binary(g->impl, os);
    }));
}

ucov_status ucov_grid_read_binary(const char* path, ucov_grid** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(path != nullptr && out != nullptr, "pointer argument is null");
        std::ifstream is(path, std::ios::binary);
        if (!is) ucov::fail(ucov::errc::resource, std::string("cannot open for reading: ") + path);
        *out = new ucov_grid{ucov::read_grid_binary(is)};
    }));
}

ucov_status ucov_grid_write_csv(const ucov_grid* g, const char* path) {
    return static_cast<ucov_status>(wrap([&] {
        require(g != nullptr && path != nullptr, "pointer argument is null");
        std::ofstream os(path, std::ios::binary);
        if (!os) ucov::fail(ucov::errc::resource, std::string("cannot open for writing: ") + path);
        ucov::ojson config;
        config["d"] = g->impl.dim();
        config["m"] = g->impl.bits();
        ucov::write_grid_cells_csv(g->impl, os, config.dump());
    }));
}

/* ---- runners -------------------------------------------------------- */

ucov_status ucov_run_bounds_json(double c, int d, char** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        auto report = ucov::bounds_report(c, d);
        ucov::ojson config;
        config["command"] = "bounds";
        config["c"] = c;
        config["d"] = d;
        *out = dup_string(ucov::dump_envelope(config, ucov::bound_report_json(report)));
    }));
}

ucov_status ucov_run_classify_json(const ucov_schedule* schedule, int d, int support_dim,
                                   char** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        auto sched = schedule_from_c(schedule, d);
        auto measure = measure_from_c(d, support_dim);
        auto verdict = ucov::classify_dichotomy(sched, measure);
        ucov::ojson config;
        config["command"] = "classify";
        config["schedule"] = ucov::schedule_json(sched);
        config["measure"] = ucov::measure_json(measure);
        *out = dup_string(ucov::dump_envelope(config, ucov::dichotomy_json(verdict)));
    }));
}

ucov_status ucov_run_series_csv(const ucov_schedule* schedule, int d, int support_dim,
                                uint64_t n_max, char** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        auto sched = schedule_from_c(schedule, d);
        auto measure = measure_from_c(d, support_dim);
        auto diag = ucov::series_partial_diagnostics(sched, measure, n_max);
        ucov::ojson config;
        config["command"] = "series";
        config["schedule"] = ucov::schedule_json(sched);
        config["measure"] = ucov::measure_json(measure);
        config["n_max"] = n_max;
        *out = dup_string(ucov::series_diagnostics_csv(diag, config));
    }));
}

ucov_status ucov_run_simulate_json(const ucov_schedule* schedule, int d, int support_dim,
                                   uint64_t seed, int m, uint64_t p, uint64_t n_max,
                                   const char* grid_binary_path, const char* grid_csv_path,
                                   char** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        auto sched = schedule_from_c(schedule, d);
        auto measure = measure_from_c(d, support_dim);
        ucov::SampleStream stream(seed, measure);
        auto cps = ucov::dyadic_checkpoints(p, n_max);
        auto grid = ucov::build_cover_grid(stream, sched, p, cps, m);
        auto summary = ucov::summarize_window(grid, p, n_max);

        ucov::ojson config;
        config["command"] = "simulate";
        config["schedule"] = ucov::schedule_json(sched);
        config["measure"] = ucov::measure_json(measure);
        config["seed"] = seed;
        config["grid_bits"] = m;
        config["p"] = p;
        config["n_max"] = n_max;

        ucov::ojson results = ucov::window_summary_json(summary);
        if (grid_binary_path != nullptr) {
            std::ofstream os(grid_binary_path, std::ios::binary);
            if (!os)
                ucov::fail(ucov::errc::resource,
                           std::string("cannot open for writing: ") + grid_binary_path);
            ucov::write_grid_binary(grid, os);
            results["grid_binary"] = grid_binary_path;
        }
        if (grid_csv_path != nullptr) {
            std::ofstream os(grid_csv_path, std::ios::binary);
            if (!os)
                ucov::fail(ucov::errc::resource,
                           std::string("cannot open for writing: ") + grid_csv_path);
            ucov::write_grid_cells_csv(grid, os, config.dump());
            results["grid_csv"] = grid_csv_path;
        }
        *out = dup_string(ucov::dump_envelope(config, results));
    }));
}

ucov_status ucov_run_boxdim_json(const ucov_schedule* schedule, int d, int support_dim,
                                 uint64_t seed, int m, uint64_t p, uint64_t n_max, int m_lo,
                                 int m_hi, char** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        auto sched = schedule_from_c(schedule, d);
        auto measure = measure_from_c(d, support_dim);
        ucov::SampleStream stream(seed, measure);
        auto cps = ucov::dyadic_checkpoints(p, n_max);
        auto grid = ucov::build_cover_grid(stream, sched, p, cps, m);
        auto summary = ucov::summarize_window(grid, p, n_max);
        int lo = m_lo > 0 ? m_lo : std::max(1, m - 8);
        int hi = m_hi > 0 ? m_hi : m;
        bool empty = grid.popcount() == 0;
        summary.box_dim = ucov::box_dim_statistic(grid, lo, hi);

        ucov::ojson config;
        config["command"] = "boxdim";
        config["schedule"] = ucov::schedule_json(sched);
        config["measure"] = ucov::measure_json(measure);
        config["seed"] = seed;
        config["grid_bits"] = m;
        config["p"] = p;
        config["n_max"] = n_max;
        config["m_lo"] = lo;
        config["m_hi"] = hi;

        ucov::ojson results = ucov::window_summary_json(summary);
        results["empty_window"] = empty;
        *out = dup_string(ucov::dump_envelope(config, results));
    }));
}

ucov_status ucov_run_hitting_csv(int d, int support_dim, uint64_t seed, uint64_t n_probes,
                                 double r_hi, int ladder_k, uint64_t n_max, char** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        if (n_probes < 1) ucov::fail(ucov::errc::contract, "probe count must be >= 1");
        auto measure = measure_from_c(d, support_dim);
        ucov::SampleStream stream(seed, measure);
        std::vector<ucov::HittingRecord> records(n_probes);
        double probe[ucov::k_max_dim];
        for (uint64_t t = 1; t <= n_probes; ++t) {
            ucov::SampleStream probe_stream(ucov::substream_seed(seed, t),
                                            ucov::MeasureModel::uniform_torus(d));
            probe_stream.point(1, probe);
            records[t - 1] = ucov::hitting_ladder(stream, probe, r_hi, ladder_k, n_max);
        }
        ucov::ojson config;
        config["command"] = "hitting";
        config["measure"] = ucov::measure_json(measure);
        config["seed"] = seed;
        config["probes"] = n_probes;
        config["r_hi"] = r_hi;
        config["ladder_k"] = ladder_k;
        config["n_max"] = n_max;
        *out = dup_string(ucov::hitting_records_csv(records, config));
    }));
}

ucov_status ucov_run_greedy_csv(double c, int d, double theta, int l, int i_max,
                                const uint64_t* seeds, size_t n_seeds, int containment_bits,
                                char** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        require(seeds != nullptr && n_seeds > 0, "seed list must be nonempty");
        auto measure = measure_from_c(d, 0);

        ucov::ojson config;
        config["command"] = "greedy_cover";
        config["c"] = c;
        config["d"] = d;
        config["theta"] = theta;
        config["l"] = l;
        config["i_max"] = i_max;
        config["seeds"] = std::vector<uint64_t>(seeds, seeds + n_seeds);
        config["containment_bits"] = containment_bits;

        std::string body = ucov::csv_header(config);
        body += "seed,i,n_i,N_i,Q_i,predicted,cumulative,fitted_rate,lambda,escapes\n";
        for (size_t i = 0; i < n_seeds; ++i) {
            ucov::SampleStream stream(seeds[i], measure);
            auto trace = ucov::greedy_cover_trace(stream, c, theta, l, i_max);
            std::string escapes;
            if (containment_bits > 0) {
                escapes = std::to_string(ucov::greedy_containment_escapes(
                    stream, c, theta, l, i_max, containment_bits));
            }
            for (const auto& lvl : trace.levels) {
                body += std::to_string(seeds[i]);
                body += ',';
                body += std::to_string(lvl.level);
                body += ',';
                body += std::to_string(lvl.n_index);
                body += ',';
                body += std::to_string(lvl.n_count);
                body += ',';
                body += std::to_string(lvl.q_count);
                body += ',';
                body += ucov::csv_double(lvl.predicted);
                body += ',';
                body += std::to_string(lvl.n_count + lvl.q_count);
                body += ',';
                body += ucov::csv_double(trace.fitted_rate);
                body += ',';
                body += ucov::csv_double(trace.lambda);
                body += ',';
                body += escapes;
                body += '\n';
            }
        }
        *out = dup_string(body);
    }));
}

ucov_status ucov_run_second_moment_json(double c, int d, double theta, int l, int q, int m,
                                        uint64_t trials, double s, uint64_t seed, char** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        auto report = ucov::second_moment_mc(c, d, theta, l, q, m, trials, s, seed);
        ucov::ojson config;
        config["command"] = "second_moment";
        config["c"] = c;
        config["d"] = d;
        config["theta"] = theta;
        config["l"] = l;
        config["q"] = q;
        config["grid_bits"] = m;
        config["trials"] = trials;
        config["s"] = s;
        config["seed"] = seed;
        *out = dup_string(ucov::dump_envelope(config, ucov::second_moment_json(report)));
    }));
}

ucov_status ucov_run_zero_one_json(int statistic, const ucov_schedule* schedule, int d,
                                   int support_dim, int m, uint64_t p, uint64_t n_max,
                                   int m_lo, int m_hi, const uint64_t* seeds, size_t n_seeds,
                                   char** out) {
    return static_cast<ucov_status>(wrap([&] {
        require(out != nullptr, "output pointer is null");
        require(seeds != nullptr && n_seeds > 0, "seed list must be nonempty");
        ucov::ZeroOneConfig cfg;
        cfg.statistic = statistic == UCOV_STAT_BOX_DIM ? ucov::ZeroOneStatistic::box_dim
                                                       : ucov::ZeroOneStatistic::covered_fraction;
        cfg.schedule = schedule_from_c(schedule, d);
        cfg.measure = measure_from_c(d, support_dim);
        cfg.p = p;
        cfg.n_max = n_max;
        cfg.m = m;
        cfg.m_lo = m_lo;
        cfg.m_hi = m_hi;
        std::vector<uint64_t> seed_list(seeds, seeds + n_seeds);
        auto result = ucov::zero_one_probe(seed_list, cfg);

        ucov::ojson config;
        config["command"] = "zero_one";
        config["statistic"] = statistic == UCOV_STAT_BOX_DIM ? "box_dim" : "covered_fraction";
        config["schedule"] = ucov::schedule_json(cfg.schedule);
        config["measure"] = ucov::measure_json(cfg.measure);
        config["grid_bits"] = m;
        config["p"] = p;
        config["n_max"] = n_max;
        config["m_lo"] = m_lo > 0 ? m_lo : std::max(1, m - 8);
        config["m_hi"] = m_hi > 0 ? m_hi : m;
        config["seeds"] = seed_list;
        *out = dup_string(ucov::dump_envelope(config, ucov::zero_one_json(result)));
    }));
}

}  // extern "C"
