#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gig/errors.hpp"
#include "gig/rational.hpp"

// Geometry of the m x n integer lattice: coordinates, 4-neighborhoods,
// lattice paths and their closed-neighborhood growth sequences.

namespace gig {

// 1-based (row, col) position. Validity is relative to a GridDims.
struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord&) const = default;
};

inline std::string to_string(Coord c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// An m-row by n-column grid, m,n >= 1.
struct GridDims {
  int m = 1;
  int n = 1;

  GridDims(int rows, int cols) : m(rows), n(cols) {
    if (rows < 1 || cols < 1)
      throw input_error("grid dimensions must be >= 1, got " +
                        std::to_string(rows) + "x" + std::to_string(cols));
  }

  int cells() const { return m * n; }
  int max_side() const { return m > n ? m : n; }
  bool contains(Coord c) const {
    return c.row >= 1 && c.row <= m && c.col >= 1 && c.col <= n;
  }
  // Row-major cell index in [0, cells()).
  int index(Coord c) const { return (c.row - 1) * n + (c.col - 1); }
  Coord coord(int idx) const { return {idx / n + 1, idx % n + 1}; }
  auto operator<=>(const GridDims&) const = default;
};

inline void require_in_bounds(Coord c, GridDims dims, const char* what) {
  if (!dims.contains(c))
    throw input_error(std::string(what) + " " + to_string(c) +
                      " is outside the " + std::to_string(dims.m) + "x" +
                      std::to_string(dims.n) + " grid");
}

// Orthogonally adjacent in-bounds cells, in row-major order; 2..4 entries.
inline std::set<Coord> neighbors(Coord c, GridDims dims) {
  require_in_bounds(c, dims, "vertex");
  std::set<Coord> out;
  for (Coord d : {Coord{c.row - 1, c.col}, Coord{c.row, c.col - 1},
                  Coord{c.row, c.col + 1}, Coord{c.row + 1, c.col}})
    if (dims.contains(d)) out.insert(d);
  return out;
}

// N(W): the members of W together with every neighbor of a member.
inline std::set<Coord> closed_neighborhood(const std::set<Coord>& w,
                                           GridDims dims) {
  if (w.empty()) throw input_error("closed_neighborhood of an empty set");
  std::set<Coord> out;
  for (Coord c : w) {
    require_in_bounds(c, dims, "vertex");
    out.insert(c);
    for (Coord d : neighbors(c, dims)) out.insert(d);
  }
  return out;
}

inline int squared_distance(Coord a, Coord b) {
  int dr = a.row - b.row, dc = a.col - b.col;
  return dr * dr + dc * dc;
}

// A sequence of distinct, consecutively adjacent lattice cells.
struct LatticePath {
  std::vector<Coord> vertices;
  std::size_t length() const { return vertices.size(); }
};

inline void validate_path(const LatticePath& path, GridDims dims) {
  const auto& v = path.vertices;
  if (v.empty()) throw input_error("path has no vertices");
  std::set<Coord> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    require_in_bounds(v[i], dims, "path vertex");
    if (!seen.insert(v[i]).second)
      throw input_error("path repeats vertex " + to_string(v[i]));
    if (i > 0 && squared_distance(v[i - 1], v[i]) != 1)
      throw input_error("path step " + to_string(v[i - 1]) + " -> " +
                        to_string(v[i]) + " is not between lattice neighbors");
  }
}

// K_j = |N({V_1..V_j})| for j = 1..length. Growth per step is 0..3 new
// cells; a 0-growth step before the final entry means the path folds back
// onto its own closed neighborhood.
struct KSequence {
  std::vector<int> values;
  std::size_t size() const { return values.size(); }
};

inline KSequence k_sequence(const LatticePath& path, GridDims dims) {
  validate_path(path, dims);
  KSequence ks;
  ks.values.reserve(path.vertices.size());
  std::vector<char> in(static_cast<std::size_t>(dims.cells()), 0);
  int count = 0;
  auto add = [&](Coord c) {
    char& cell = in[static_cast<std::size_t>(dims.index(c))];
    if (!cell) {
      cell = 1;
      ++count;
    }
  };
  for (Coord c : path.vertices) {
    add(c);
    for (Coord d : neighbors(c, dims)) add(d);
    ks.values.push_back(count);
  }
  return ks;
}

// 1-based positions p where edge (p-1,p) is perpendicular to edge (p,p+1).
// Paths with fewer than 3 vertices have no turns.
inline std::vector<int> turns(const LatticePath& path, GridDims dims) {
  validate_path(path, dims);
  std::vector<int> out;
  const auto& v = path.vertices;
  for (std::size_t p = 1; p + 1 < v.size(); ++p) {
    bool prev_row_step = v[p].row != v[p - 1].row;
    bool next_row_step = v[p + 1].row != v[p].row;
    if (prev_row_step != next_row_step) out.push_back(static_cast<int>(p) + 1);
  }
  return out;
}

inline constexpr std::uint64_t kDefaultMonotonePathCap = 1'000'000;

// All shortest (staircase) paths from a to b: every step moves one cell
// closer in row or col. There are C(|dr|+|dc|, |dr|) of them; if that
// exceeds `cap` a resource_error is thrown before any path is built.
inline std::vector<LatticePath> monotone_paths(
    Coord a, Coord b, GridDims dims,
    std::uint64_t cap = kDefaultMonotonePathCap) {
  require_in_bounds(a, dims, "endpoint");
  require_in_bounds(b, dims, "endpoint");
  if (a == b) throw input_error("monotone_paths endpoints coincide at " +
                                to_string(a));
  unsigned dr = static_cast<unsigned>(a.row > b.row ? a.row - b.row
                                                    : b.row - a.row);
  unsigned dc = static_cast<unsigned>(a.col > b.col ? a.col - b.col
                                                    : b.col - a.col);
  Int total = binomial(dr + dc, dr);
  if (total > cap)
    throw resource_error("monotone path count " + total.str() +
                         " exceeds cap " + std::to_string(cap));

  int rstep = b.row > a.row ? 1 : -1;
  int cstep = b.col > a.col ? 1 : -1;
  std::vector<LatticePath> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<Coord> cur{a};
  auto rec = [&](auto&& self, Coord at) -> void {
    if (at == b) {
      out.push_back(LatticePath{cur});
      return;
    }
    if (at.row != b.row) {
      cur.push_back({at.row + rstep, at.col});
      self(self, cur.back());
      cur.pop_back();
    }
    if (at.col != b.col) {
      cur.push_back({at.row, at.col + cstep});
      self(self, cur.back());
      cur.pop_back();
    }
  };
  rec(rec, a);
  return out;
}

}  // namespace gig
