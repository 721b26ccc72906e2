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

#ifndef UCOV_GRID_HPP
#define UCOV_GRID_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ucov/sampling.hpp"
#include "ucov/schedule.hpp"

namespace ucov {

// Dyadic occupancy grid on the d-torus at resolution 2^-m per axis. A
// cell is marked covered when its center lies in the set under study;
// with 2^(m d) cells this center rule is exact for unions of open
// max-norm balls (each ball marks a product of index intervals).
//
// Cell indices are row major with axis 0 slowest. Cell (i_0,...,i_{d-1})
// has center ((i_0+0.5) 2^-m, ..., (i_{d-1}+0.5) 2^-m).
class GridCover {
public:
    // Throws resource when m*d > 34 (the bitset would exceed 2 GiB).
    GridCover(int d, int m);

    int dim() const { return d_; }
    int bits() const { return m_; }
    std::uint64_t cell_count() const { return std::uint64_t(1) << (m_ * d_); }

    bool test(std::uint64_t index) const;
    void set(std::uint64_t index);
    void clear();
    void fill();

    std::uint64_t popcount() const;
    double fraction() const;

    void intersect_with(const GridCover& other);
    void union_with(const GridCover& other);
    // Number of cells set here but not in other.
    std::uint64_t difference_popcount(const GridCover& other) const;

    void cell_center(std::uint64_t index, double* out) const;
    std::uint64_t index_of(const std::uint64_t* axes) const;
    void axes_of(std::uint64_t index, std::uint64_t* axes) const;

    // Marks every cell whose center lies in the open ball B(center, r).
    void add_ball(const double* center, double r);

    // Occupied cells after coarsening to resolution m_coarse <= m.
    std::uint64_t box_count(int m_coarse) const;

    // Least squares slope of log2(box_count) against resolution level
    // over [m_lo, m_hi], clipped to [0, d]. Empty grids have no defined
    // scaling exponent and yield nullopt.
    std::optional<double> estimate_box_dim(int m_lo, int m_hi) const;

    void for_each_set(const std::function<void(std::uint64_t)>& fn) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend GridCover read_grid_binary(std::istream& is);

private:
    void set_range(std::uint64_t lo, std::uint64_t hi);
    void set_box(const std::int64_t* lo, const std::int64_t* cnt);
    void set_box_rec(int axis, std::uint64_t base, const std::int64_t* lo,
                     const std::int64_t* cnt);
    int shift(int axis) const { return m_ * (d_ - 1 - axis); }

    int d_ = 1;
    int m_ = 1;
    std::vector<std::uint64_t> words_;
};

// Intersection over the checkpoint ladder of the ball unions
//   G_N = union of B(omega_n, l_N) for n = 1..N,
// marked at cell centers: the grid-scale stand-in for the infinite
// intersection defining the covered set. p is the first window index.
GridCover build_cover_grid(const SampleStream& stream, const RadiusSchedule& schedule,
                           std::uint64_t p, const std::vector<std::uint64_t>& checkpoints,
                           int m);

// Union of B(omega_n, r) for n in [n_lo, n_hi].
GridCover union_of_balls(const SampleStream& stream, std::uint64_t n_lo, std::uint64_t n_hi,
                         double r, int m);

// Union of balls around explicit centers (flat array, d per center).
GridCover union_of_points(const std::vector<double>& centers, int d, double r, int m);

// Finite liminf witness: intersection over j = l..q of the block unions
//   F_j = union of B(omega_k, l_{n_{j+1}}) for k in (n_{j-1}, n_j],
// with n_j the geometric ladder of ratio theta and l_n = c n^(-1/d).
GridCover liminf_witness_grid(const SampleStream& stream, double c, double theta, int l,
                              int q, int m);

// s-energy of the uniform probability measure on the marked cells,
// sum over ordered pairs of distinct cells of w^2 dist^-s with w the
// per-cell weight. Distances are floored at half a cell side. Large
// grids are subsampled with a deterministic stride.
double grid_energy(const GridCover& grid, double s, std::uint64_t max_cells = 4096);

// Raw binary grid dump: 16-byte header (magic "UCGR", u8 d, u8 m, ten
// zero bytes) followed by the cells as a little-endian LSB-first bitmap.
void write_grid_binary(const GridCover& grid, std::ostream& os);
GridCover read_grid_binary(std::istream& is);

// Occupied cell indices as CSV, one row per cell with per-axis indices.
// config_json is echoed in a leading comment line.
void write_grid_cells_csv(const GridCover& grid, std::ostream& os,
                          const std::string& config_json);

}  // namespace ucov

#endif
