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

#include "ucov/hitting.hpp"

#include <cmath>

#include "ucov/errors.hpp"
#include "ucov/experiments.hpp"
#include "ucov/torus.hpp"

namespace ucov {

std::optional<std::uint64_t> hitting_time(const SampleStream& stream, const double* y,
                                          double r, std::uint64_t n_max) {
    if (!(r > 0.0) || !std::isfinite(r)) fail(errc::domain, "ball radius must be positive and finite");
    if (n_max < 1) fail(errc::contract, "hitting window n_max must be >= 1");
    if (n_max > stream.capacity()) fail(errc::range, "hitting window exceeds the sample stream");
    const int d = stream.dim();
    double buf[k_max_dim];
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        stream.point(n, buf);
        if (within_open_ball(buf, y, d, r)) return n;
    }
    return std::nullopt;
}

HittingRecord hitting_ladder(const SampleStream& stream, const double* y, double r_hi,
                             int ladder_k, std::uint64_t n_max) {
    if (!(r_hi > 0.0) || !(r_hi <= 0.5)) fail(errc::domain, "top radius must lie in (0, 0.5]");
    if (ladder_k < 1) fail(errc::contract, "radius ladder needs at least one level");
    if (n_max < 1) fail(errc::contract, "hitting window n_max must be >= 1");
    if (n_max > stream.capacity()) fail(errc::range, "hitting window exceeds the sample stream");

    const int d = stream.dim();
    HittingRecord rec;
    rec.probe.assign(y, y + d);
    rec.radii.resize(ladder_k);
    rec.tau.assign(ladder_k, std::nullopt);
    for (int j = 0; j < ladder_k; ++j) rec.radii[j] = std::ldexp(r_hi, -j);

    // Single pass: the distance of sample n resolves every ladder level
    // at once, and levels fill in from the widest radius down.
    int unresolved = 0;  // levels [0, unresolved) are already hit
    double buf[k_max_dim];
    for (std::uint64_t n = 1; n <= n_max && unresolved < ladder_k; ++n) {
        stream.point(n, buf);
        double dist = torus_dist(buf, y, d);
        while (unresolved < ladder_k && dist < rec.radii[unresolved]) {
            rec.tau[unresolved] = n;
            ++unresolved;
        }
    }

    // Scaling estimate from the deepest third of the resolved levels:
    // shallow levels are dominated by the top radius, not the tail.
    int hits = unresolved;
    if (hits > 0) {
        int take = (hits + 2) / 3;
        double best = 0.0;
        for (int j = hits - take; j < hits; ++j) {
            double est = std::log(static_cast<double>(*rec.tau[j])) / -std::log(rec.radii[j]);
            if (est > best) best = est;
        }
        rec.scaling_estimate = best;
    }
    return rec;
}

InclusionOutcome inclusion_check(const SampleStream& stream, double alpha,
                                 const std::vector<std::vector<double>>& probes,
                                 double margin, std::uint64_t p, std::uint64_t n_max,
                                 double r_hi, int ladder_k, std::uint64_t ladder_n_max) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) fail(errc::domain, "decay exponent alpha must be positive and finite");
    if (!(margin >= 0.0)) fail(errc::domain, "margin must be nonnegative");
    if (probes.empty()) fail(errc::contract, "probe list must be nonempty");
    const int d = stream.dim();
    for (const auto& probe : probes)
        if (probe.size() != static_cast<std::size_t>(d))
            fail(errc::contract, "probe dimension does not match the stream");

    auto checkpoints = dyadic_checkpoints(p, n_max);
    const double threshold = 1.0 / alpha;

    InclusionOutcome out;
    out.probes.resize(probes.size());
    std::uint64_t scan_max = std::max(n_max, ladder_n_max);
    if (scan_max > stream.capacity()) fail(errc::range, "window exceeds the sample stream");

    const std::size_t np = probes.size();
    std::vector<double> min_dist(np, 2.0);
    std::vector<bool> member_all(np, true);
    std::vector<int> ladder_fill(np, 0);
    std::vector<std::vector<double>> radii(np);
    for (std::size_t i = 0; i < np; ++i) {
        out.probes[i].probe = probes[i];
        radii[i].resize(ladder_k);
        for (int j = 0; j < ladder_k; ++j) radii[i][j] = std::ldexp(r_hi, -j);
    }
    std::vector<std::vector<std::optional<std::uint64_t>>> taus(
        np, std::vector<std::optional<std::uint64_t>>(ladder_k));

    double buf[k_max_dim];
    std::size_t cp_cursor = 0;
    for (std::uint64_t n = 1; n <= scan_max; ++n) {
        stream.point(n, buf);
        for (std::size_t i = 0; i < np; ++i) {
            double dist = torus_dist(buf, probes[i].data(), d);
            if (n <= ladder_n_max) {
                while (ladder_fill[i] < ladder_k && dist < radii[i][ladder_fill[i]]) {
                    taus[i][ladder_fill[i]] = n;
                    ++ladder_fill[i];
                }
            }
            if (dist < min_dist[i]) min_dist[i] = dist;
        }
        if (cp_cursor < checkpoints.size() && n == checkpoints[cp_cursor]) {
            double r_n = std::pow(static_cast<double>(n), -alpha);
            for (std::size_t i = 0; i < np; ++i) {
                if (!(min_dist[i] < r_n)) member_all[i] = false;
            }
            ++cp_cursor;
        }
    }

    for (std::size_t i = 0; i < np; ++i) {
        auto& pr = out.probes[i];
        pr.member_at_all_checkpoints = member_all[i];
        int hits = ladder_fill[i];
        if (hits > 0) {
            int take = (hits + 2) / 3;
            double best = 0.0;
            for (int j = hits - take; j < hits; ++j) {
                double est =
                    std::log(static_cast<double>(*taus[i][j])) / -std::log(radii[i][j]);
                if (est > best) best = est;
            }
            pr.scaling_estimate = best;
        }
        if (pr.scaling_estimate.has_value()) {
            if (*pr.scaling_estimate < threshold - margin)
                pr.side = -1;
            else if (*pr.scaling_estimate > threshold + margin)
                pr.side = +1;
        }
        if (pr.side != 0) ++out.claims;
        // Scaling clearly below 1/alpha forces membership down the whole
        // window; clearly above forbids it.
        pr.violation = (pr.side == -1 && !pr.member_at_all_checkpoints) ||
                       (pr.side == +1 && pr.member_at_all_checkpoints);
        if (pr.violation) ++out.violations;
    }
    return out;
}

}  // namespace ucov
