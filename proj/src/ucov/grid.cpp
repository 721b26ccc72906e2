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

#include "ucov/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "ucov/errors.hpp"
#include "ucov/growth.hpp"
#include "ucov/torus.hpp"

namespace ucov {

GridCover::GridCover(int d, int m) : d_(d), m_(m) {
    if (d < 1) fail(errc::domain, "grid dimension must be >= 1");
    if (m < 0) fail(errc::domain, "grid resolution must be >= 0");
    if (m * d > 34) fail(errc::resource, "grid would need 2^" + std::to_string(m * d) +
                                             " cells; m*d is capped at 34");
    words_.assign((cell_count() + 63) / 64, 0);
}

bool GridCover::test(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
}

void GridCover::set(std::uint64_t index) { words_[index >> 6] |= std::uint64_t(1) << (index & 63); }

void GridCover::clear() { std::fill(words_.begin(), words_.end(), 0); }

void GridCover::fill() {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t(0));
    // Mask the tail beyond cell_count in the last word.
    std::uint64_t tail = cell_count() & 63;
    if (tail != 0) words_.back() &= (std::uint64_t(1) << tail) - 1;
}

std::uint64_t GridCover::popcount() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

double GridCover::fraction() const {
    return static_cast<double>(popcount()) / static_cast<double>(cell_count());
}

void GridCover::intersect_with(const GridCover& other) {
    if (other.d_ != d_ || other.m_ != m_) fail(errc::contract, "grid shapes differ");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

void GridCover::union_with(const GridCover& other) {
    if (other.d_ != d_ || other.m_ != m_) fail(errc::contract, "grid shapes differ");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

std::uint64_t GridCover::difference_popcount(const GridCover& other) const {
    if (other.d_ != d_ || other.m_ != m_) fail(errc::contract, "grid shapes differ");
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        total += static_cast<std::uint64_t>(std::popcount(words_[i] & ~other.words_[i]));
    return total;
}

void GridCover::cell_center(std::uint64_t index, double* out) const {
    const std::uint64_t mask = (std::uint64_t(1) << m_) - 1;
    for (int a = 0; a < d_; ++a) {
        std::uint64_t field = (index >> shift(a)) & mask;
        out[a] = std::ldexp(static_cast<double>(field) + 0.5, -m_);
    }
}

std::uint64_t GridCover::index_of(const std::uint64_t* axes) const {
    std::uint64_t idx = 0;
    for (int a = 0; a < d_; ++a) idx |= axes[a] << shift(a);
    return idx;
}

void GridCover::axes_of(std::uint64_t index, std::uint64_t* axes) const {
    const std::uint64_t mask = (std::uint64_t(1) << m_) - 1;
    for (int a = 0; a < d_; ++a) axes[a] = (index >> shift(a)) & mask;
}

void GridCover::set_range(std::uint64_t lo, std::uint64_t hi) {
    std::size_t w0 = lo >> 6, w1 = hi >> 6;
    std::uint64_t m0 = ~std::uint64_t(0) << (lo & 63);
    std::uint64_t m1 = ~std::uint64_t(0) >> (63 - (hi & 63));
    if (w0 == w1) {
        words_[w0] |= m0 & m1;
        return;
    }
    words_[w0] |= m0;
    for (std::size_t w = w0 + 1; w < w1; ++w) words_[w] = ~std::uint64_t(0);
    words_[w1] |= m1;
}

void GridCover::set_box_rec(int axis, std::uint64_t base, const std::int64_t* lo,
                            const std::int64_t* cnt) {
    const std::int64_t axis_cells = std::int64_t(1) << m_;
    const std::uint64_t mask = static_cast<std::uint64_t>(axis_cells - 1);
    if (axis == d_ - 1) {
        std::int64_t start = lo[axis];
        std::int64_t n = cnt[axis];
        if (n == axis_cells) {
            set_range(base, base + static_cast<std::uint64_t>(axis_cells) - 1);
            return;
        }
        std::int64_t first = std::min<std::int64_t>(n, axis_cells - start);
        set_range(base + static_cast<std::uint64_t>(start),
                  base + static_cast<std::uint64_t>(start + first - 1));
        if (first < n) set_range(base, base + static_cast<std::uint64_t>(n - first) - 1);
        return;
    }
    for (std::int64_t t = 0; t < cnt[axis]; ++t) {
        std::uint64_t i = (static_cast<std::uint64_t>(lo[axis] + t)) & mask;
        set_box_rec(axis + 1, base | (i << shift(axis)), lo, cnt);
    }
}

void GridCover::set_box(const std::int64_t* lo, const std::int64_t* cnt) {
    set_box_rec(0, 0, lo, cnt);
}

void GridCover::add_ball(const double* center, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) fail(errc::domain, "ball radius must be positive and finite");
    const std::int64_t axis_cells = std::int64_t(1) << m_;
    std::int64_t lo[k_max_dim];
    std::int64_t cnt[k_max_dim];
    for (int a = 0; a < d_; ++a) {
        // Cell centers sit at (i + 0.5) 2^-m; the ball holds centers with
        // index strictly between 2^m (x - r) - 1/2 and 2^m (x + r) - 1/2.
        double x = center[a];
        double lo_edge = std::ldexp(x - r, m_) - 0.5;
        double hi_edge = std::ldexp(x + r, m_) - 0.5;
        // floor+1 / ceil-1 are the extreme indices strictly inside the
        // interval, which also lands centers exactly on the boundary
        // outside the open ball.
        std::int64_t first = static_cast<std::int64_t>(std::floor(lo_edge)) + 1;
        std::int64_t last = static_cast<std::int64_t>(std::ceil(hi_edge)) - 1;
        std::int64_t n = last - first + 1;
        if (n <= 0) return;
        if (n > axis_cells) n = axis_cells;
        lo[a] = first & (axis_cells - 1);
        cnt[a] = n;
    }
    set_box(lo, cnt);
}

std::uint64_t GridCover::box_count(int m_coarse) const {
    if (m_coarse < 0 || m_coarse > m_) fail(errc::contract, "coarse resolution must be in [0, m]");
    if (m_coarse == m_) return popcount();
    GridCover coarse(d_, m_coarse);
    const std::uint64_t mask = (std::uint64_t(1) << m_) - 1;
    const int drop = m_ - m_coarse;
    for_each_set([&](std::uint64_t idx) {
        std::uint64_t cidx = 0;
        for (int a = 0; a < d_; ++a) {
            std::uint64_t field = (idx >> shift(a)) & mask;
            cidx |= (field >> drop) << (m_coarse * (d_ - 1 - a));
        }
        coarse.set(cidx);
    });
    return coarse.popcount();
}

std::optional<double> GridCover::estimate_box_dim(int m_lo, int m_hi) const {
    if (m_lo < 0 || m_hi > m_ || m_lo >= m_hi)
        fail(errc::contract, "fit range must satisfy 0 <= m_lo < m_hi <= m");
    if (popcount() == 0) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int level = m_lo; level <= m_hi; ++level) {
        double x = static_cast<double>(level);
        double y = std::log2(static_cast<double>(box_count(level)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    double denom = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / denom;
    return std::clamp(slope, 0.0, static_cast<double>(d_));
}

void GridCover::for_each_set(const std::function<void(std::uint64_t)>& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            int b = std::countr_zero(bits);
            fn((static_cast<std::uint64_t>(w) << 6) + static_cast<std::uint64_t>(b));
            bits &= bits - 1;
        }
    }
}

GridCover build_cover_grid(const SampleStream& stream, const RadiusSchedule& schedule,
                           std::uint64_t p, const std::vector<std::uint64_t>& checkpoints,
                           int m) {
    if (p < 1) fail(errc::contract, "window start p must be >= 1");
    if (checkpoints.empty()) fail(errc::contract, "checkpoint list must be nonempty");
    std::uint64_t prev = 0;
    for (std::uint64_t cp : checkpoints) {
        if (cp < p) fail(errc::contract, "checkpoints must not precede the window start");
        if (cp <= prev) fail(errc::contract, "checkpoints must be strictly increasing");
        prev = cp;
    }
    std::uint64_t n_last = checkpoints.back();
    if (n_last > stream.capacity()) fail(errc::range, "sample stream shorter than final checkpoint");
    if (n_last > schedule.capacity()) fail(errc::range, "radius schedule shorter than final checkpoint");

    const int d = stream.dim();
    GridCover acc(d, m);
    GridCover stage(d, m);
    double buf[k_max_dim];
    bool first = true;
    for (std::uint64_t cp : checkpoints) {
        stage.clear();
        double r = schedule.at(cp);
        for (std::uint64_t n = 1; n <= cp; ++n) {
            stream.point(n, buf);
            stage.add_ball(buf, r);
        }
        if (first) {
            acc = stage;
            first = false;
        } else {
            acc.intersect_with(stage);
        }
        if (acc.popcount() == 0) break;  // later intersections stay empty
    }
    return acc;
}

GridCover union_of_balls(const SampleStream& stream, std::uint64_t n_lo, std::uint64_t n_hi,
                         double r, int m) {
    if (n_lo < 1 || n_hi < n_lo) fail(errc::contract, "ball index range must satisfy 1 <= n_lo <= n_hi");
    if (n_hi > stream.capacity()) fail(errc::range, "sample stream shorter than requested range");
    GridCover g(stream.dim(), m);
    double buf[k_max_dim];
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        stream.point(n, buf);
        g.add_ball(buf, r);
    }
    return g;
}

GridCover union_of_points(const std::vector<double>& centers, int d, double r, int m) {
    if (d < 1) fail(errc::domain, "dimension must be >= 1");
    if (centers.size() % static_cast<std::size_t>(d) != 0)
        fail(errc::contract, "flat center array length must be a multiple of d");
    GridCover g(d, m);
    for (std::size_t i = 0; i + d <= centers.size(); i += d) g.add_ball(centers.data() + i, r);
    return g;
}

GridCover liminf_witness_grid(const SampleStream& stream, double c, double theta, int l,
                              int q, int m) {
    if (!(c > 0.0) || !std::isfinite(c)) fail(errc::domain, "scale c must be positive and finite");
    if (l < 1 || q < l) fail(errc::contract, "block range must satisfy 1 <= l <= q");
    const int d = stream.dim();
    auto ns = ladder(theta, q + 1);
    if (ns[q] > stream.capacity()) fail(errc::range, "sample stream shorter than block ladder");

    GridCover acc(d, m);
    acc.fill();
    for (int j = l; j <= q; ++j) {
        double r = c * std::pow(static_cast<double>(ns[j + 1]), -1.0 / d);
        GridCover block = union_of_balls(stream, ns[j - 1] + 1, ns[j], r, m);
        acc.intersect_with(block);
        if (acc.popcount() == 0) break;
    }
    return acc;
}

double grid_energy(const GridCover& grid, double s, std::uint64_t max_cells) {
    if (!(s > 0.0) || !std::isfinite(s)) fail(errc::domain, "energy exponent s must be positive and finite");
    if (max_cells < 2) fail(errc::contract, "max_cells must be >= 2");
    std::uint64_t count = grid.popcount();
    if (count < 2) return 0.0;

    std::uint64_t stride = (count + max_cells - 1) / max_cells;
    std::vector<double> centers;
    const int d = grid.dim();
    centers.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, max_cells) + 1) * d);
    std::uint64_t seen = 0;
    double buf[k_max_dim];
    grid.for_each_set([&](std::uint64_t idx) {
        if (seen % stride == 0) {
            grid.cell_center(idx, buf);
            centers.insert(centers.end(), buf, buf + d);
        }
        ++seen;
    });
    std::size_t picked = centers.size() / static_cast<std::size_t>(d);
    if (picked < 2) return 0.0;

    // Restriction of Lebesgue measure to the occupied region: each cell
    // carries mass 2^-(m d). A sampled cell stands for count/picked cells
    // so the total mass is preserved under subsampling.
    double w = std::ldexp(1.0, -grid.bits() * d) * (static_cast<double>(count) / static_cast<double>(picked));
    double floor_dist = std::ldexp(1.0, -grid.bits() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i < picked; ++i) {
        for (std::size_t j = i + 1; j < picked; ++j) {
            double t = torus_dist(centers.data() + i * d, centers.data() + j * d, d);
            if (t < floor_dist) t = floor_dist;
            total += 2.0 * std::pow(t, -s) * w * w;
        }
    }
    return total;
}

void write_grid_binary(const GridCover& grid, std::ostream& os) {
    unsigned char header[16] = {'U', 'C', 'G', 'R'};
    header[4] = static_cast<unsigned char>(grid.dim());
    header[5] = static_cast<unsigned char>(grid.bits());
    os.write(reinterpret_cast<const char*>(header), 16);
    std::uint64_t nbytes = (grid.cell_count() + 7) / 8;
    const auto& words = grid.words();
    for (std::uint64_t i = 0; i < nbytes; ++i) {
        unsigned char byte =
            static_cast<unsigned char>((words[i >> 3] >> ((i & 7) * 8)) & 0xFF);
        os.put(static_cast<char>(byte));
    }
    if (!os) fail(errc::resource, "grid binary write failed");
}

GridCover read_grid_binary(std::istream& is) {
    unsigned char header[16];
    is.read(reinterpret_cast<char*>(header), 16);
    if (!is || header[0] != 'U' || header[1] != 'C' || header[2] != 'G' || header[3] != 'R')
        fail(errc::contract, "not a grid binary stream (bad magic)");
    int d = header[4];
    int m = header[5];
    GridCover g(d, m);
    std::uint64_t nbytes = (g.cell_count() + 7) / 8;
    std::vector<char> bytes(nbytes);
    is.read(bytes.data(), static_cast<std::streamsize>(nbytes));
    if (!is) fail(errc::contract, "grid binary stream truncated");
    for (std::uint64_t i = 0; i < nbytes; ++i) {
        g.words_[i >> 3] |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i]))
                            << ((i & 7) * 8);
    }
    return g;
}

void write_grid_cells_csv(const GridCover& grid, std::ostream& os,
                          const std::string& config_json) {
    os << "# config: " << config_json << "\n";
    os << "index";
    for (int a = 0; a < grid.dim(); ++a) os << ",i" << a;
    os << "\n";
    std::uint64_t axes[k_max_dim];
    grid.for_each_set([&](std::uint64_t idx) {
        grid.axes_of(idx, axes);
        os << idx;
        for (int a = 0; a < grid.dim(); ++a) os << ',' << axes[a];
        os << "\n";
    });
    if (!os) fail(errc::resource, "grid csv write failed");
}

}  // namespace ucov
