// Tests for the C API surface: lifecycle, error reporting, numeric
// parity with the core library, and the document runners.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucov.h"

namespace {

std::string take(char* doc) {
    REQUIRE(doc != nullptr);
    std::string s(doc);
    ucov_string_free(doc);
    return s;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(ucov_version()) == UCOV_VERSION_STRING);
    CHECK(std::string(ucov_status_name(UCOV_OK)) == "ok");
    CHECK(std::string(ucov_status_name(UCOV_ERR_CONTRACT)) == "contract");
    CHECK(std::string(ucov_status_name(UCOV_ERR_DOMAIN)) == "domain");
    CHECK(std::string(ucov_status_name(UCOV_ERR_RANGE)) == "range");
    CHECK(std::string(ucov_status_name(UCOV_ERR_PRECONDITION)) == "precondition");
    CHECK(std::string(ucov_status_name(UCOV_ERR_RESOURCE)) == "resource");
    CHECK(std::string(ucov_status_name(999)) == "unknown");
}

TEST_CASE("stream lifecycle and sampling") {
    ucov_stream* s = nullptr;
    REQUIRE(ucov_stream_create(5, 2, 0, &s) == UCOV_OK);
    REQUIRE(s != nullptr);
    CHECK(ucov_stream_dim(s) == 2);
    double pt[2];
    REQUIRE(ucov_stream_sample(s, 1, pt) == UCOV_OK);
    CHECK(pt[0] >= 0.0);
    CHECK(pt[0] < 1.0);
    CHECK(pt[1] >= 0.0);
    CHECK(pt[1] < 1.0);
    double again[2];
    REQUIRE(ucov_stream_sample(s, 1, again) == UCOV_OK);
    CHECK(again[0] == pt[0]);
    CHECK(again[1] == pt[1]);
    CHECK(ucov_stream_sample(s, 0, pt) == UCOV_ERR_CONTRACT);
    CHECK(std::strlen(ucov_last_error()) > 0);
    ucov_stream_destroy(s);

    CHECK(ucov_stream_create(1, 35, 0, &s) == UCOV_ERR_DOMAIN);
    CHECK(ucov_stream_create(1, 2, 3, &s) == UCOV_ERR_DOMAIN);
    CHECK(ucov_stream_create(1, 2, 0, nullptr) == UCOV_ERR_CONTRACT);

    // Sub-torus stream pins the trailing axis.
    REQUIRE(ucov_stream_create(9, 3, 1, &s) == UCOV_OK);
    double q[3];
    REQUIRE(ucov_stream_sample(s, 7, q) == UCOV_OK);
    CHECK(q[1] == 0.0);
    CHECK(q[2] == 0.0);
    ucov_stream_destroy(s);

    CHECK(ucov_substream_seed(42, 7) == ucov_substream_seed(42, 7));
    CHECK(ucov_substream_seed(42, 7) != ucov_substream_seed(42, 8));
}

TEST_CASE("explicit streams and hitting times") {
    double coords[3] = {0.3, 0.31, 0.5};
    ucov_stream* s = nullptr;
    REQUIRE(ucov_stream_create_explicit(coords, 3, 1, &s) == UCOV_OK);
    double y = 0.5;
    uint64_t n = 0;
    int hit = -1;
    REQUIRE(ucov_hitting_time(s, &y, 0.1, 3, &n, &hit) == UCOV_OK);
    CHECK(hit == 1);
    CHECK(n == 3);
    REQUIRE(ucov_hitting_time(s, &y, 0.1, 2, &n, &hit) == UCOV_OK);
    CHECK(hit == 0);
    CHECK(ucov_hitting_time(s, &y, 0.1, 9, &n, &hit) == UCOV_ERR_RANGE);
    ucov_stream_destroy(s);
    CHECK(ucov_stream_create_explicit(coords, 0, 1, &s) == UCOV_ERR_DOMAIN);
}

TEST_CASE("closed forms agree with frozen reference values") {
    double v = 0;
    REQUIRE(ucov_s_exponent(1.0, 1, 2.0, &v) == UCOV_OK);
    CHECK(v == doctest::Approx(1.3456768717052028).epsilon(1e-12));

    double theta_cap = 0, delta = 0, lambda = 0;
    REQUIRE(ucov_lambda_matrix(0.1, 1, 4.0, &theta_cap, &delta, &lambda) == UCOV_OK);
    CHECK(lambda == doctest::Approx(1.6831614937622308).epsilon(1e-12));
    CHECK(theta_cap > 0.0);
    CHECK(delta > 0.0);

    REQUIRE(ucov_critical_c(2.0, 1, &v) == UCOV_OK);
    CHECK(v == doctest::Approx(1.3862943611198906).epsilon(1e-14));

    REQUIRE(ucov_energy_constant(0.5, 1, &v) == UCOV_OK);
    CHECK(v == doctest::Approx(2.8284271247461903).epsilon(1e-14));

    REQUIRE(ucov_k_mass(1.0, 1, 2.0, 3, 8, &v) == UCOV_OK);
    CHECK(v == doctest::Approx(0.0040920791282252995).epsilon(1e-12));

    double x = 0.95, y = 0.05;
    REQUIRE(ucov_torus_dist(&x, &y, 1, &v) == UCOV_OK);
    CHECK(v == doctest::Approx(0.1).epsilon(1e-14));

    double probe = 0.3;
    REQUIRE(ucov_ball_mass(1, 0, &probe, 0.2, &v) == UCOV_OK);
    CHECK(v == doctest::Approx(0.4).epsilon(1e-15));

    uint64_t nv = 0;
    REQUIRE(ucov_ladder(2.0, 10, &nv) == UCOV_OK);
    CHECK(nv == 1024);

    double t = 0.0;
    double psi = 0, km = 0;
    REQUIRE(ucov_psi_kernel(1.0, 1, 2.0, 3, 8, &t, &psi) == UCOV_OK);
    REQUIRE(ucov_k_mass(1.0, 1, 2.0, 3, 8, &km) == UCOV_OK);
    CHECK(psi * km == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(ucov_s_exponent(-1.0, 1, 2.0, &v) == UCOV_ERR_DOMAIN);
    CHECK(ucov_energy_constant(1.5, 1, &v) == UCOV_ERR_DOMAIN);
    CHECK(ucov_s_exponent(1.0, 1, 2.0, nullptr) == UCOV_ERR_CONTRACT);
}

TEST_CASE("schedules evaluate through the C descriptor") {
    ucov_schedule power{UCOV_FAMILY_POWER_LAW, 2.0, 0.5, nullptr, 0};
    double v = 0;
    REQUIRE(ucov_radius_at(&power, 1, 4, &v) == UCOV_OK);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

    // The critical family derives its decay from the ambient dimension.
    ucov_schedule crit{UCOV_FAMILY_CRITICAL_SCALE, 1.5, 0.0, nullptr, 0};
    REQUIRE(ucov_radius_at(&crit, 2, 16, &v) == UCOV_OK);
    CHECK(v == doctest::Approx(0.375).epsilon(1e-15));

    double values[3] = {0.5, 0.25, 0.1};
    ucov_schedule fixed{UCOV_FAMILY_EXPLICIT, 0.0, 0.0, values, 3};
    REQUIRE(ucov_radius_at(&fixed, 1, 3, &v) == UCOV_OK);
    CHECK(v == 0.1);
    CHECK(ucov_radius_at(&fixed, 1, 4, &v) == UCOV_ERR_RANGE);

    ucov_schedule bad{99, 1.0, 1.0, nullptr, 0};
    CHECK(ucov_radius_at(&bad, 1, 1, &v) == UCOV_ERR_DOMAIN);
    CHECK(ucov_radius_at(nullptr, 1, 1, &v) == UCOV_ERR_CONTRACT);
}

TEST_CASE("dimension bounds carry the at-limit marker") {
    double value = -1, theta_star = -1;
    int at_limit = -1;
    REQUIRE(ucov_lower_bound_dim(0.5, 1, &value, &theta_star, &at_limit) == UCOV_OK);
    CHECK(value == 0.0);
    CHECK(at_limit == 1);
    REQUIRE(ucov_lower_bound_dim(1.0, 1, &value, &theta_star, &at_limit) == UCOV_OK);
    CHECK(value == doctest::Approx(0.2177444301921606).epsilon(1e-6));
    CHECK(theta_star == doctest::Approx(8.6007).epsilon(1e-2));
    CHECK(at_limit == 0);
    REQUIRE(ucov_upper_bound_dim(0.5, 1, &value, &theta_star, &at_limit) == UCOV_OK);
    CHECK(value == 1.0);
    CHECK(at_limit == 1);
    REQUIRE(ucov_upper_bound_dim(0.1, 1, &value, &theta_star, &at_limit) == UCOV_OK);
    CHECK(value == doctest::Approx(0.3331939668312592).epsilon(1e-6));
    CHECK(at_limit == 0);
    CHECK(ucov_lower_bound_dim(0.0, 1, &value, &theta_star, &at_limit) == UCOV_ERR_DOMAIN);
}

TEST_CASE("grids build, serialize, and estimate through the C API") {
    ucov_stream* s = nullptr;
    REQUIRE(ucov_stream_create(7, 1, 0, &s) == UCOV_OK);

    // Oversized radii cover the full circle deterministically.
    ucov_grid* g = nullptr;
    REQUIRE(ucov_liminf_witness_grid(s, 5.0, 2.0, 1, 2, 6, &g) == UCOV_OK);
    REQUIRE(g != nullptr);
    CHECK(ucov_grid_dim(g) == 1);
    CHECK(ucov_grid_bits(g) == 6);
    CHECK(ucov_grid_popcount(g) == 64);
    CHECK(ucov_grid_fraction(g) == 1.0);
    CHECK(ucov_grid_test(g, 0) == 1);
    uint64_t boxes = 0;
    REQUIRE(ucov_grid_box_count(g, 3, &boxes) == UCOV_OK);
    CHECK(boxes == 8);
    double dim_est = 0;
    int defined = 0;
    REQUIRE(ucov_grid_estimate_box_dim(g, 1, 6, &dim_est, &defined) == UCOV_OK);
    CHECK(defined == 1);
    CHECK(dim_est == doctest::Approx(1.0).epsilon(1e-12));

    const char* bin_path = "capi_grid_roundtrip.bin";
    const char* csv_path = "capi_grid_cells.csv";
    REQUIRE(ucov_grid_write_binary(g, bin_path) == UCOV_OK);
    {
        std::ifstream f(bin_path, std::ios::binary | std::ios::ate);
        REQUIRE(f.good());
        CHECK(static_cast<std::uint64_t>(f.tellg()) == 16 + 8);
        f.seekg(0);
        char magic[4];
        f.read(magic, 4);
        CHECK(std::string(magic, 4) == "UCGR");
    }
    ucov_grid* back = nullptr;
    REQUIRE(ucov_grid_read_binary(bin_path, &back) == UCOV_OK);
    CHECK(ucov_grid_popcount(back) == 64);
    CHECK(ucov_grid_bits(back) == 6);
    ucov_grid_destroy(back);

    REQUIRE(ucov_grid_write_csv(g, csv_path) == UCOV_OK);
    {
        std::ifstream f(csv_path);
        std::string line;
        std::getline(f, line);
        CHECK(line.rfind("# config: ", 0) == 0);
        std::getline(f, line);
        CHECK(line == "index,i0");
    }
    std::remove(bin_path);
    std::remove(csv_path);

    CHECK(ucov_grid_read_binary("no_such_file.bin", &back) == UCOV_ERR_RESOURCE);
    ucov_grid_destroy(g);

    // Window build through the descriptor interface.
    ucov_schedule sched{UCOV_FAMILY_POWER_LAW, 0.8, 1.0, nullptr, 0};
    uint64_t cps[3] = {8, 16, 32};
    REQUIRE(ucov_build_cover_grid(s, &sched, 8, cps, 3, 8, &g) == UCOV_OK);
    CHECK(ucov_grid_bits(g) == 8);
    CHECK(ucov_grid_fraction(g) >= 0.0);
    ucov_grid_destroy(g);
    uint64_t bad_cps[2] = {16, 8};
    CHECK(ucov_build_cover_grid(s, &sched, 8, bad_cps, 2, 8, &g) == UCOV_ERR_CONTRACT);

    ucov_stream_destroy(s);
}

TEST_CASE("bounds runner emits the documented envelope") {
    char* doc = nullptr;
    REQUIRE(ucov_run_bounds_json(0.5, 1, &doc) == UCOV_OK);
    std::string body = take(doc);
    auto j = nlohmann::ordered_json::parse(body);
    std::vector<std::string> top;
    for (auto it = j.begin(); it != j.end(); ++it) top.push_back(it.key());
    CHECK(top == std::vector<std::string>{"config", "version", "results"});
    CHECK(j["version"] == UCOV_VERSION_STRING);
    CHECK(j["config"]["command"] == "bounds");
    CHECK(j["config"]["c"] == 0.5);
    auto& res = j["results"];
    std::vector<std::string> keys;
    for (auto it = res.begin(); it != res.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"c", "d", "lower_bound", "theta_star_lower",
                                           "upper_bound", "theta_star_upper", "regime"});
    CHECK(res["lower_bound"] == 0.0);
    CHECK(res["upper_bound"] == 1.0);
    CHECK(res["theta_star_lower"] == "limit_at_infinity");
    CHECK(res["theta_star_upper"] == "limit_at_infinity");
    CHECK(res["regime"] == "critical");

    REQUIRE(ucov_run_bounds_json(1.0, 1, &doc) == UCOV_OK);
    auto j2 = nlohmann::ordered_json::parse(take(doc));
    CHECK(j2["results"]["regime"] == "supercritical");
    CHECK(j2["results"]["theta_star_lower"].is_number());
    CHECK(ucov_run_bounds_json(-1.0, 1, &doc) == UCOV_ERR_DOMAIN);
}

TEST_CASE("classify runner reports the dichotomy verdict") {
    ucov_schedule sched{UCOV_FAMILY_POWER_LAW, 1.0, 3.0, nullptr, 0};
    char* doc = nullptr;
    REQUIRE(ucov_run_classify_json(&sched, 1, 0, &doc) == UCOV_OK);
    auto j = nlohmann::ordered_json::parse(take(doc));
    CHECK(j["results"]["verdict"] == "CountableAS");
    CHECK(j["results"]["first_series"] == "Converges");
    CHECK(j["results"]["monotonicity_hypothesis_holds"] == false);
    CHECK(j["config"]["command"] == "classify");
}

TEST_CASE("series runner emits the documented CSV columns") {
    ucov_schedule sched{UCOV_FAMILY_POWER_LAW, 1.0, 1.0, nullptr, 0};
    char* doc = nullptr;
    REQUIRE(ucov_run_series_csv(&sched, 1, 0, 20, &doc) == UCOV_OK);
    std::string body = take(doc);
    REQUIRE(body.rfind("# config: ", 0) == 0);
    auto nl = body.find('\n');
    auto second = body.find('\n', nl + 1);
    CHECK(body.substr(nl + 1, second - nl - 1) ==
          "n,term1,term2,term3,partial1,partial2,partial3");
    // 20 data rows after the comment and header.
    int rows = 0;
    for (auto pos = second; pos != std::string::npos; pos = body.find('\n', pos + 1)) ++rows;
    CHECK(rows - 1 == 20);
}

TEST_CASE("greedy runner emits the documented CSV columns") {
    uint64_t seeds[2] = {1, 2};
    char* doc = nullptr;
    REQUIRE(ucov_run_greedy_csv(0.1, 1, 2.0, 3, 8, seeds, 2, 0, &doc) == UCOV_OK);
    std::string body = take(doc);
    REQUIRE(body.rfind("# config: ", 0) == 0);
    auto nl = body.find('\n');
    auto second = body.find('\n', nl + 1);
    CHECK(body.substr(nl + 1, second - nl - 1) ==
          "seed,i,n_i,N_i,Q_i,predicted,cumulative,fitted_rate,lambda,escapes");
}

TEST_CASE("hitting runner lists probe coordinates per row") {
    char* doc = nullptr;
    REQUIRE(ucov_run_hitting_csv(2, 0, 1, 4, 0.25, 3, 10000, &doc) == UCOV_OK);
    std::string body = take(doc);
    auto nl = body.find('\n');
    auto second = body.find('\n', nl + 1);
    CHECK(body.substr(nl + 1, second - nl - 1) == "probe_index,y0,y1,radius,tau,estimate");
}

TEST_CASE("simulate and boxdim runners round-trip their config") {
    ucov_schedule sched{UCOV_FAMILY_POWER_LAW, 1.0, 0.5, nullptr, 0};
    char* doc = nullptr;
    REQUIRE(ucov_run_simulate_json(&sched, 1, 0, 3, 8, 16, 512, nullptr, nullptr, &doc) ==
            UCOV_OK);
    auto j = nlohmann::ordered_json::parse(take(doc));
    CHECK(j["config"]["command"] == "simulate");
    CHECK(j["config"]["seed"] == 3);
    CHECK(j["results"]["covered_fraction"].is_number());
    CHECK(j["results"]["covered_cells"].is_number());

    REQUIRE(ucov_run_boxdim_json(&sched, 1, 0, 3, 10, 16, 1024, 0, 0, &doc) == UCOV_OK);
    auto jb = nlohmann::ordered_json::parse(take(doc));
    CHECK(jb["config"]["command"] == "boxdim");
    CHECK(jb["results"].contains("box_dim"));
    CHECK(jb["results"].contains("empty_window"));
}

TEST_CASE("second moment runner embeds the analytic fields") {
    char* doc = nullptr;
    REQUIRE(ucov_run_second_moment_json(1.5, 1, 2.0, 3, 6, 10, 16, 0.05, 1, &doc) == UCOV_OK);
    auto j = nlohmann::ordered_json::parse(take(doc));
    CHECK(j["results"]["k_mass"].get<double>() ==
          doctest::Approx(0.08767808940151955).epsilon(1e-12));
    CHECK(j["results"]["respects_second_moment_cap"] == true);
    CHECK(ucov_run_second_moment_json(1.0, 1, 2.0, 3, 6, 10, 16, 0.05, 1, &doc) ==
          UCOV_ERR_PRECONDITION);
    CHECK(std::strlen(ucov_last_error()) > 0);
}

TEST_CASE("zero-one runner is byte-identical across thread counts") {
    ucov_schedule sched{UCOV_FAMILY_POWER_LAW, 0.8, 1.0, nullptr, 0};
    uint64_t seeds[5] = {1, 2, 3, 4, 5};
    char* doc = nullptr;

    ucov_set_threads(1);
    REQUIRE(ucov_run_zero_one_json(UCOV_STAT_COVERED_FRACTION, &sched, 1, 0, 8, 16, 512, 0, 0,
                                   seeds, 5, &doc) == UCOV_OK);
    std::string serial = take(doc);

    ucov_set_threads(4);
    REQUIRE(ucov_run_zero_one_json(UCOV_STAT_COVERED_FRACTION, &sched, 1, 0, 8, 16, 512, 0, 0,
                                   seeds, 5, &doc) == UCOV_OK);
    std::string parallel = take(doc);
    ucov_set_threads(0);

    CHECK(serial == parallel);
    auto j = nlohmann::ordered_json::parse(serial);
    CHECK(j["results"]["values"].size() == 5);
    CHECK(j["results"]["mean"].is_number());
    CHECK(j["results"]["stddev"].is_number());
    CHECK(j["config"]["statistic"] == "covered_fraction");
}
