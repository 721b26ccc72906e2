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

#include "ucov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ucov/errors.hpp"

namespace ucov {

namespace {

void check_scale(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) fail(errc::domain, "scale c must be positive and finite");
}

void check_dim(int d) {
    if (d < 1) fail(errc::domain, "dimension must be >= 1");
}

void check_theta(double theta) {
    if (!(theta > 1.0) || !std::isfinite(theta)) fail(errc::domain, "theta must be finite and > 1");
}

// 1 - exp(-(2c)^d (theta-1)/theta^2), the base of the correlation decay.
double decay_base(double c, int d, double theta) {
    double x = std::pow(2.0 * c, static_cast<double>(d)) * (theta - 1.0) / (theta * theta);
    return -std::expm1(-x);
}

}  // namespace

double s_exponent(double c, int d, double theta) {
    check_scale(c);
    check_dim(d);
    check_theta(theta);
    double base = decay_base(c, d, theta);
    if (!(base > 0.0)) fail(errc::numeric, "correlation decay base underflowed to zero");
    return -static_cast<double>(d) * std::log(base) / std::log(theta);
}

LambdaParts lambda_matrix(double c, int d, double theta) {
    check_scale(c);
    check_dim(d);
    check_theta(theta);
    double dd = static_cast<double>(d);
    double t1 = std::pow(theta, -1.0 / dd);
    double t2 = std::pow(theta, -2.0 / dd);
    double side = 2.0 * c;
    LambdaParts parts;
    parts.theta_cap = (theta - 1.0) * std::pow(side * (1.0 + t2), dd);
    parts.delta = (theta - 1.0) * std::pow(side, dd) *
                  (std::pow(1.0 + t1, dd) - std::pow(1.0 + t2, dd));
    if (parts.delta < 0.0) parts.delta = 0.0;  // guards rounding when t1 == t2
    if (!std::isfinite(parts.theta_cap) || !std::isfinite(parts.delta))
        fail(errc::numeric, "growth matrix entries overflowed");
    // Characteristic roots of [[1+Theta, Theta], [Delta, Delta]]: trace
    // T = 1 + Theta + Delta, determinant Delta. The discriminant
    // T^2 - 4 Delta is nonnegative because T >= 1 + Delta >= 2 sqrt(Delta).
    double s = 0.5 * (1.0 + parts.theta_cap + parts.delta);
    double disc = s * s - parts.delta;
    if (disc < 0.0) disc = 0.0;
    parts.lambda = s + std::sqrt(disc);
    return parts;
}

double energy_constant(double s, int d) {
    check_dim(d);
    if (!(s > 0.0) || !std::isfinite(s)) fail(errc::domain, "energy exponent s must be positive and finite");
    double dd = static_cast<double>(d);
    if (!(s < dd)) fail(errc::domain, "energy exponent s must be < d");
    return dd * std::pow(2.0, s) / (dd - s);
}

double critical_c(double theta, int d) {
    check_theta(theta);
    check_dim(d);
    // Solve s(c, d, theta) = d for c: the decay base must equal 1/theta,
    // i.e. (2c)^d (theta-1)/theta^2 = -log(1 - 1/theta).
    double rhs = -(theta * theta) / (theta - 1.0) * std::log1p(-1.0 / theta);
    return 0.5 * std::pow(rhs, 1.0 / static_cast<double>(d));
}

ThetaOptimum maximize_over_theta(const std::function<double(double)>& f,
                                 const OptimizerOptions& options) {
    if (!(options.theta_min > 1.0) || !(options.theta_max > options.theta_min))
        fail(errc::contract, "optimizer range must satisfy 1 < theta_min < theta_max");
    if (options.grid_points < 16) fail(errc::contract, "optimizer grid must have at least 16 points");

    const int n = options.grid_points;
    const double la = std::log(options.theta_min);
    const double lb = std::log(options.theta_max);
    std::vector<double> ts(n), vs(n);
    for (int i = 0; i < n; ++i) {
        double t = std::exp(la + (lb - la) * i / (n - 1));
        double v = f(t);
        if (!std::isfinite(v)) fail(errc::numeric, "objective not finite at theta = " + std::to_string(t));
        ts[i] = t;
        vs[i] = v;
    }
    int best = 0;
    for (int i = 1; i < n; ++i) {
        if (vs[i] > vs[best]) best = i;
    }

    ThetaOptimum opt;
    if (best == n - 1) {
        // Improving all the way to the edge: report the edge value and
        // flag that the true supremum lives in the theta -> infinity limit.
        bool increasing = true;
        for (int i = n - 8; i < n; ++i) {
            if (vs[i] < vs[i - 1]) {
                increasing = false;
                break;
            }
        }
        opt.theta = ts[best];
        opt.value = vs[best];
        opt.at_edge_limit = increasing;
        return opt;
    }
    if (best == 0) {
        opt.theta = ts[0];
        opt.value = vs[0];
        return opt;
    }

    // Golden section on the log axis inside the bracketing grid cells.
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = std::log(ts[best - 1]);
    double b = std::log(ts[best + 1]);
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(std::exp(x1));
    double f2 = f(std::exp(x2));
    double best_t = ts[best], best_v = vs[best];
    for (int iter = 0; iter < 200 && (b - a) > options.rel_tol; ++iter) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(std::exp(x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(std::exp(x1));
        }
        double cand_x = (f1 > f2) ? x1 : x2;
        double cand_v = std::max(f1, f2);
        if (cand_v > best_v) {
            best_v = cand_v;
            best_t = std::exp(cand_x);
        }
    }
    opt.theta = best_t;
    opt.value = best_v;
    return opt;
}

BoundSide lower_bound_dim(double c, int d, const OptimizerOptions& options) {
    check_scale(c);
    check_dim(d);
    double dd = static_cast<double>(d);
    auto objective = [&](double theta) { return dd - s_exponent(c, d, theta); };
    ThetaOptimum opt = maximize_over_theta(objective, options);
    BoundSide side;
    side.theta_star = opt.theta;
    side.at_edge_limit = opt.at_edge_limit;
    side.value = std::max(0.0, opt.value);
    return side;
}

BoundSide upper_bound_dim(double c, int d, const OptimizerOptions& options) {
    check_scale(c);
    check_dim(d);
    double dd = static_cast<double>(d);
    auto objective = [&](double theta) {
        return -dd * std::log(lambda_matrix(c, d, theta).lambda) / std::log(theta);
    };
    ThetaOptimum opt = maximize_over_theta(objective, options);
    BoundSide side;
    side.theta_star = opt.theta;
    side.at_edge_limit = opt.at_edge_limit;
    side.value = std::min(dd, -opt.value);
    return side;
}

BoundReport bounds_report(double c, int d) {
    BoundReport report;
    report.c = c;
    report.d = d;
    report.lower = lower_bound_dim(c, d);
    report.upper = upper_bound_dim(c, d);
    if (c < 0.5)
        report.regime = "subcritical";
    else if (c > 0.5)
        report.regime = "supercritical";
    else
        report.regime = "critical";
    return report;
}

}  // namespace ucov
