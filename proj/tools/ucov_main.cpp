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

// Command-line front end. Every subcommand delegates to the shared
// library's C API and writes one machine-readable document (JSON
// envelope or CSV with a leading "# config:" line) to --output or
// stdout. Exit codes: 0 success, 1 invalid configuration, 2 resource
// limit, 64 command-line parse failure.

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ucov.h"

namespace {

struct ScheduleArgs {
    std::string family = "power";
    double c = 1.0;
    double alpha = 1.0;
    std::vector<double> values;
};

void add_schedule_options(CLI::App* sub, ScheduleArgs* args) {
    sub->add_option("--family", args->family, "Radius schedule family")
        ->check(CLI::IsMember({"power", "power-law", "critical", "critical-scale", "explicit"}))
        ->capture_default_str();
    sub->add_option("--c", args->c, "Radius scale factor")->capture_default_str();
    sub->add_option("--alpha", args->alpha, "Power-law decay exponent")->capture_default_str();
    sub->add_option("--values", args->values, "Explicit radius list (explicit family)")
        ->delimiter(',');
}

ucov_schedule to_schedule(const ScheduleArgs& args) {
    ucov_schedule s{};
    if (args.family == "power" || args.family == "power-law") {
        s.family = UCOV_FAMILY_POWER_LAW;
        s.c = args.c;
        s.alpha = args.alpha;
    } else if (args.family == "critical" || args.family == "critical-scale") {
        s.family = UCOV_FAMILY_CRITICAL_SCALE;
        s.c = args.c;
    } else {
        s.family = UCOV_FAMILY_EXPLICIT;
        s.values = args.values.data();
        s.n_values = args.values.size();
    }
    return s;
}

struct SeedArgs {
    std::vector<uint64_t> seeds;
    uint64_t base_seed = 1;
    uint64_t num_seeds = 0;
};

void add_seed_options(CLI::App* sub, SeedArgs* args) {
    sub->add_option("--seeds", args->seeds, "Explicit trial seeds")->delimiter(',');
    sub->add_option("--base-seed", args->base_seed,
                    "Base seed for derived trial seeds (with --num-seeds)")
        ->capture_default_str();
    sub->add_option("--num-seeds", args->num_seeds,
                    "Derive this many trial seeds as substreams of --base-seed");
}

// Seeds listed explicitly win; otherwise trial t gets substream t of the
// base seed, so growing --num-seeds never perturbs earlier trials.
std::vector<uint64_t> resolve_seeds(const SeedArgs& args) {
    if (!args.seeds.empty()) return args.seeds;
    std::vector<uint64_t> out;
    for (uint64_t t = 1; t <= args.num_seeds; ++t)
        out.push_back(ucov_substream_seed(args.base_seed, t));
    return out;
}

int write_document(const char* doc, const std::string& path) {
    if (path.empty()) {
        std::fputs(doc, stdout);
        return 0;
    }
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "error (resource): cannot open for writing: %s\n", path.c_str());
        return 2;
    }
    std::fputs(doc, f);
    std::fclose(f);
    return 0;
}

int finish(int status, char* doc, const std::string& out_path) {
    if (status != UCOV_OK) {
        std::fprintf(stderr, "error (%s): %s\n", ucov_status_name(status), ucov_last_error());
        return status == UCOV_ERR_RESOURCE ? 2 : 1;
    }
    int rc = write_document(doc, out_path);
    ucov_string_free(doc);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation and verification toolkit for uniform random covering sets"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    app.fallthrough();
    app.set_version_flag("--version", std::string(UCOV_VERSION_STRING));

    std::string out_path;
    int threads = 0;
    app.add_option("--output", out_path, "Write the report here instead of stdout");
    app.add_option("--threads", threads,
                   "Worker thread cap (0 = UCOV_THREADS env or hardware)");

    int rc = 0;

    // bounds --c --d
    {
        auto* sub = app.add_subcommand("bounds", "Dimension bounds at the critical scale");
        auto c = std::make_shared<double>(1.0);
        auto d = std::make_shared<int>(1);
        sub->add_option("--c", *c, "Critical scale factor")->capture_default_str();
        sub->add_option("--d", *d, "Torus dimension")->capture_default_str();
        sub->callback([&, c, d] {
            if (threads > 0) ucov_set_threads(threads);
            char* doc = nullptr;
            int status = ucov_run_bounds_json(*c, *d, &doc);
            rc = finish(status, doc, out_path);
        });
    }

    // classify --family --c --alpha --d [--support-dim] [--format json|csv --n-max N]
    {
        auto* sub = app.add_subcommand("classify", "Measure dichotomy verdict for a schedule");
        auto sched = std::make_shared<ScheduleArgs>();
        auto d = std::make_shared<int>(1);
        auto support = std::make_shared<int>(0);
        auto format = std::make_shared<std::string>("json");
        auto n_max = std::make_shared<uint64_t>(10000);
        add_schedule_options(sub, sched.get());
        sub->add_option("--d", *d, "Torus dimension")->capture_default_str();
        sub->add_option("--support-dim", *support, "Sampling sub-torus dimension (0 = full)")
            ->capture_default_str();
        sub->add_option("--format", *format, "json verdict or csv series diagnostics")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--n-max", *n_max, "Series horizon for csv diagnostics")
            ->capture_default_str();
        sub->callback([&, sched, d, support, format, n_max] {
            if (threads > 0) ucov_set_threads(threads);
            ucov_schedule s = to_schedule(*sched);
            char* doc = nullptr;
            int status = *format == "csv"
                             ? ucov_run_series_csv(&s, *d, *support, *n_max, &doc)
                             : ucov_run_classify_json(&s, *d, *support, &doc);
            rc = finish(status, doc, out_path);
        });
    }

    // simulate --family --c --alpha --d --seed --grid-bits --p --n-max
    {
        auto* sub = app.add_subcommand("simulate", "Covered fraction of a finite window");
        auto sched = std::make_shared<ScheduleArgs>();
        auto d = std::make_shared<int>(1);
        auto support = std::make_shared<int>(0);
        auto seed = std::make_shared<uint64_t>(1);
        auto m = std::make_shared<int>(16);
        auto p = std::make_shared<uint64_t>(256);
        auto n_max = std::make_shared<uint64_t>(65536);
        auto grid_out = std::make_shared<std::string>();
        auto grid_csv = std::make_shared<std::string>();
        add_schedule_options(sub, sched.get());
        sub->add_option("--d", *d, "Torus dimension")->capture_default_str();
        sub->add_option("--support-dim", *support, "Sampling sub-torus dimension (0 = full)")
            ->capture_default_str();
        sub->add_option("--seed", *seed, "Stream seed")->capture_default_str();
        sub->add_option("--grid-bits", *m, "Grid resolution bits per axis")
            ->capture_default_str();
        sub->add_option("--p", *p, "Window start index")->capture_default_str();
        sub->add_option("--n-max", *n_max, "Window end index")->capture_default_str();
        sub->add_option("--grid-out", *grid_out, "Dump the occupancy grid here (binary)");
        sub->add_option("--grid-csv", *grid_csv, "Dump occupied cell indices here (CSV)");
        sub->callback([&, sched, d, support, seed, m, p, n_max, grid_out, grid_csv] {
            if (threads > 0) ucov_set_threads(threads);
            ucov_schedule s = to_schedule(*sched);
            char* doc = nullptr;
            int status = ucov_run_simulate_json(
                &s, *d, *support, *seed, *m, *p, *n_max,
                grid_out->empty() ? nullptr : grid_out->c_str(),
                grid_csv->empty() ? nullptr : grid_csv->c_str(), &doc);
            rc = finish(status, doc, out_path);
        });
    }

    // boxdim = simulate + fit range
    {
        auto* sub = app.add_subcommand("boxdim", "Box-counting dimension of a window grid");
        auto sched = std::make_shared<ScheduleArgs>();
        auto d = std::make_shared<int>(1);
        auto support = std::make_shared<int>(0);
        auto seed = std::make_shared<uint64_t>(1);
        auto m = std::make_shared<int>(16);
        auto p = std::make_shared<uint64_t>(256);
        auto n_max = std::make_shared<uint64_t>(65536);
        auto m_lo = std::make_shared<int>(0);
        auto m_hi = std::make_shared<int>(0);
        add_schedule_options(sub, sched.get());
        sub->add_option("--d", *d, "Torus dimension")->capture_default_str();
        sub->add_option("--support-dim", *support, "Sampling sub-torus dimension (0 = full)")
            ->capture_default_str();
        sub->add_option("--seed", *seed, "Stream seed")->capture_default_str();
        sub->add_option("--grid-bits", *m, "Grid resolution bits per axis")
            ->capture_default_str();
        sub->add_option("--p", *p, "Window start index")->capture_default_str();
        sub->add_option("--n-max", *n_max, "Window end index")->capture_default_str();
        sub->add_option("--m-lo", *m_lo, "Coarsest fit level (0 = auto)")->capture_default_str();
        sub->add_option("--m-hi", *m_hi, "Finest fit level (0 = auto)")->capture_default_str();
        sub->callback([&, sched, d, support, seed, m, p, n_max, m_lo, m_hi] {
            if (threads > 0) ucov_set_threads(threads);
            ucov_schedule s = to_schedule(*sched);
            char* doc = nullptr;
            int status = ucov_run_boxdim_json(&s, *d, *support, *seed, *m, *p, *n_max, *m_lo,
                                              *m_hi, &doc);
            rc = finish(status, doc, out_path);
        });
    }

    // hitting --probes --r-hi --ladder-k --n-max --seed
    {
        auto* sub = app.add_subcommand("hitting", "Hitting-time radius ladders");
        auto d = std::make_shared<int>(1);
        auto support = std::make_shared<int>(0);
        auto seed = std::make_shared<uint64_t>(1);
        auto probes = std::make_shared<uint64_t>(64);
        auto r_hi = std::make_shared<double>(0.25);
        auto ladder_k = std::make_shared<int>(10);
        auto n_max = std::make_shared<uint64_t>(1000000);
        sub->add_option("--d", *d, "Torus dimension")->capture_default_str();
        sub->add_option("--support-dim", *support, "Sampling sub-torus dimension (0 = full)")
            ->capture_default_str();
        sub->add_option("--seed", *seed, "Stream seed")->capture_default_str();
        sub->add_option("--probes", *probes, "Number of random probe points")
            ->capture_default_str();
        sub->add_option("--r-hi", *r_hi, "Largest ladder radius")->capture_default_str();
        sub->add_option("--ladder-k", *ladder_k, "Ladder depth (radii r_hi * 2^-j)")
            ->capture_default_str();
        sub->add_option("--n-max", *n_max, "Sample window length")->capture_default_str();
        sub->callback([&, d, support, seed, probes, r_hi, ladder_k, n_max] {
            if (threads > 0) ucov_set_threads(threads);
            char* doc = nullptr;
            int status = ucov_run_hitting_csv(*d, *support, *seed, *probes, *r_hi, *ladder_k,
                                              *n_max, &doc);
            rc = finish(status, doc, out_path);
        });
    }

    // greedy-cover --theta --l --i-max --seeds
    {
        auto* sub = app.add_subcommand("greedy-cover", "Greedy center growth traces");
        auto c = std::make_shared<double>(0.1);
        auto d = std::make_shared<int>(1);
        auto theta = std::make_shared<double>(2.0);
        auto l = std::make_shared<int>(3);
        auto i_max = std::make_shared<int>(14);
        auto bits = std::make_shared<int>(0);
        auto seed_args = std::make_shared<SeedArgs>();
        sub->add_option("--c", *c, "Critical scale factor")->capture_default_str();
        sub->add_option("--d", *d, "Torus dimension")->capture_default_str();
        sub->add_option("--theta", *theta, "Ladder ratio")->capture_default_str();
        sub->add_option("--l", *l, "Start level")->capture_default_str();
        sub->add_option("--i-max", *i_max, "Last level")->capture_default_str();
        sub->add_option("--containment-bits", *bits,
                        "Also verify per-level grid containment at this resolution (0 = off)")
            ->capture_default_str();
        add_seed_options(sub, seed_args.get());
        sub->callback([&, c, d, theta, l, i_max, bits, seed_args] {
            if (threads > 0) ucov_set_threads(threads);
            auto seeds = resolve_seeds(*seed_args);
            if (seeds.empty()) {
                std::fprintf(stderr, "error (contract): provide --seeds or --num-seeds\n");
                rc = 1;
                return;
            }
            char* doc = nullptr;
            int status = ucov_run_greedy_csv(*c, *d, *theta, *l, *i_max, seeds.data(),
                                             seeds.size(), *bits, &doc);
            rc = finish(status, doc, out_path);
        });
    }

    // second-moment --theta --l --q --trials --s
    {
        auto* sub = app.add_subcommand("second-moment",
                                       "Monte Carlo second moment of the witness mass");
        auto c = std::make_shared<double>(1.5);
        auto d = std::make_shared<int>(1);
        auto theta = std::make_shared<double>(2.0);
        auto l = std::make_shared<int>(3);
        auto q = std::make_shared<int>(6);
        auto m = std::make_shared<int>(10);
        auto trials = std::make_shared<uint64_t>(64);
        auto s_exp = std::make_shared<double>(0.05);
        auto seed = std::make_shared<uint64_t>(1);
        sub->add_option("--c", *c, "Critical scale factor")->capture_default_str();
        sub->add_option("--d", *d, "Torus dimension")->capture_default_str();
        sub->add_option("--theta", *theta, "Ladder ratio")->capture_default_str();
        sub->add_option("--l", *l, "First block index")->capture_default_str();
        sub->add_option("--q", *q, "Last block index")->capture_default_str();
        sub->add_option("--grid-bits", *m, "Grid resolution bits per axis")
            ->capture_default_str();
        sub->add_option("--trials", *trials, "Trial count")->capture_default_str();
        sub->add_option("--s", *s_exp, "Energy exponent")->capture_default_str();
        sub->add_option("--seed", *seed, "Base seed (trials use substreams)")
            ->capture_default_str();
        sub->callback([&, c, d, theta, l, q, m, trials, s_exp, seed] {
            if (threads > 0) ucov_set_threads(threads);
            char* doc = nullptr;
            int status = ucov_run_second_moment_json(*c, *d, *theta, *l, *q, *m, *trials,
                                                     *s_exp, *seed, &doc);
            rc = finish(status, doc, out_path);
        });
    }

    // zero-one --seeds
    {
        auto* sub = app.add_subcommand("zero-one",
                                       "Cross-seed spread of a window statistic");
        auto stat = std::make_shared<std::string>("boxdim");
        auto sched = std::make_shared<ScheduleArgs>();
        auto d = std::make_shared<int>(1);
        auto support = std::make_shared<int>(0);
        auto m = std::make_shared<int>(16);
        auto p = std::make_shared<uint64_t>(256);
        auto n_max = std::make_shared<uint64_t>(65536);
        auto m_lo = std::make_shared<int>(0);
        auto m_hi = std::make_shared<int>(0);
        auto seed_args = std::make_shared<SeedArgs>();
        sub->add_option("--statistic", *stat, "Statistic: boxdim or fraction")
            ->check(CLI::IsMember({"boxdim", "fraction"}))
            ->capture_default_str();
        add_schedule_options(sub, sched.get());
        sub->add_option("--d", *d, "Torus dimension")->capture_default_str();
        sub->add_option("--support-dim", *support, "Sampling sub-torus dimension (0 = full)")
            ->capture_default_str();
        sub->add_option("--grid-bits", *m, "Grid resolution bits per axis")
            ->capture_default_str();
        sub->add_option("--p", *p, "Window start index")->capture_default_str();
        sub->add_option("--n-max", *n_max, "Window end index")->capture_default_str();
        sub->add_option("--m-lo", *m_lo, "Coarsest fit level (0 = auto)")->capture_default_str();
        sub->add_option("--m-hi", *m_hi, "Finest fit level (0 = auto)")->capture_default_str();
        add_seed_options(sub, seed_args.get());
        sub->callback([&, stat, sched, d, support, m, p, n_max, m_lo, m_hi, seed_args] {
            if (threads > 0) ucov_set_threads(threads);
            auto seeds = resolve_seeds(*seed_args);
            if (seeds.empty()) {
                std::fprintf(stderr, "error (contract): provide --seeds or --num-seeds\n");
                rc = 1;
                return;
            }
            ucov_schedule s = to_schedule(*sched);
            int statistic =
                *stat == "boxdim" ? UCOV_STAT_BOX_DIM : UCOV_STAT_COVERED_FRACTION;
            char* doc = nullptr;
            int status = ucov_run_zero_one_json(statistic, &s, *d, *support, *m, *p, *n_max,
                                                *m_lo, *m_hi, seeds.data(), seeds.size(),
                                                &doc);
            rc = finish(status, doc, out_path);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }
    return rc;
}
