#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gig/lattice.hpp"

// The greatest-increase digraph of a labeled grid: every cell points at its
// largest-labeled neighbor when that neighbor's label exceeds its own, and
// at nothing otherwise (making it a sink / local maximum).

namespace gig {

// A bijection from grid cells to 1..mn, stored row-major.
class Labeling {
 public:
  Labeling(GridDims dims, std::vector<int> labels_row_major)
      : dims_(dims), labels_(std::move(labels_row_major)) {
    validate();
  }

  static Labeling from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty())
      throw input_error("labeling needs at least one row and column");
    GridDims dims(static_cast<int>(rows.size()),
                  static_cast<int>(rows.front().size()));
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(dims.cells()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(rows[r].size()) != dims.n)
        throw input_error("labeling row " + std::to_string(r + 1) + " has " +
                          std::to_string(rows[r].size()) +
                          " values, expected " + std::to_string(dims.n));
      flat.insert(flat.end(), rows[r].begin(), rows[r].end());
    }
    return Labeling(dims, std::move(flat));
  }

  GridDims dims() const { return dims_; }
  int label(Coord c) const {
    require_in_bounds(c, dims_, "vertex");
    return labels_[static_cast<std::size_t>(dims_.index(c))];
  }
  int label_at(int idx) const { return labels_[static_cast<std::size_t>(idx)]; }
  const std::vector<int>& values() const { return labels_; }

 private:
  void validate() const {
    int mn = dims_.cells();
    if (static_cast<int>(labels_.size()) != mn)
      throw input_error("labeling has " + std::to_string(labels_.size()) +
                        " values, expected " + std::to_string(mn));
    std::vector<int> where(static_cast<std::size_t>(mn), -1);
    std::string bad;
    for (int i = 0; i < mn; ++i) {
      int v = labels_[static_cast<std::size_t>(i)];
      if (v < 1 || v > mn) {
        bad += "; label " + std::to_string(v) + " at " +
               to_string(dims_.coord(i)) + " outside 1.." + std::to_string(mn);
        continue;
      }
      int& seen = where[static_cast<std::size_t>(v - 1)];
      if (seen >= 0)
        bad += "; duplicate label " + std::to_string(v) + " at " +
               to_string(dims_.coord(seen)) + " and " +
               to_string(dims_.coord(i));
      else
        seen = i;
    }
    if (!bad.empty())
      throw input_error("labeling is not a permutation of 1.." +
                        std::to_string(mn) + bad);
  }

  GridDims dims_;
  std::vector<int> labels_;
};

class GigDigraph {
 public:
  explicit GigDigraph(Labeling labeling) : labeling_(std::move(labeling)) {
    build_neighbor_table();
    out_.resize(static_cast<std::size_t>(dims().cells()));
    rebuild();
  }

  GridDims dims() const { return labeling_.dims(); }
  const Labeling& labeling() const { return labeling_; }

  // Successor cell index, or -1 when `idx` is a sink. Index-based twin of
  // out_edge() for enumeration-heavy callers.
  int out_index(int idx) const { return out_[static_cast<std::size_t>(idx)]; }

  std::optional<Coord> out_edge(Coord c) const {
    require_in_bounds(c, dims(), "vertex");
    int t = out_[static_cast<std::size_t>(dims().index(c))];
    if (t < 0) return std::nullopt;
    return dims().coord(t);
  }

  bool is_sink(Coord c) const { return !out_edge(c).has_value(); }

  // Replace the labeling (same dims) and rebuild all edges in place.
  void relabel(const std::vector<int>& labels_row_major) {
    labeling_ = Labeling(dims(), labels_row_major);
    rebuild();
  }

 private:
  void build_neighbor_table() {
    GridDims d = dims();
    int mn = d.cells();
    nbr_.resize(static_cast<std::size_t>(mn));
    for (int i = 0; i < mn; ++i) {
      auto& row = nbr_[static_cast<std::size_t>(i)];
      row.clear();
      for (Coord c : neighbors(d.coord(i), d))
        row.push_back(d.index(c));
    }
  }

  void rebuild() {
    int mn = dims().cells();
    for (int i = 0; i < mn; ++i) {
      int best = -1, best_label = labeling_.label_at(i);
      for (int j : nbr_[static_cast<std::size_t>(i)])
        if (labeling_.label_at(j) > best_label) {
          best = j;
          best_label = labeling_.label_at(j);
        }
      out_[static_cast<std::size_t>(i)] = best;
    }
  }

  Labeling labeling_;
  std::vector<std::vector<int>> nbr_;
  std::vector<int> out_;  // successor index per cell, -1 at sinks
};

inline GigDigraph build_gig(Labeling labeling) {
  return GigDigraph(std::move(labeling));
}

inline std::set<Coord> sinks(const GigDigraph& g) {
  std::set<Coord> out;
  GridDims d = g.dims();
  for (int i = 0; i < d.cells(); ++i)
    if (g.out_index(i) < 0) out.insert(d.coord(i));
  return out;
}

// The unique walk from `start` along out-edges; ends at a sink. Labels
// strictly increase along it, so it visits at most mn cells.
inline LatticePath out_path(const GigDigraph& g, Coord start) {
  require_in_bounds(start, g.dims(), "vertex");
  LatticePath p;
  int at = g.dims().index(start);
  while (true) {
    p.vertices.push_back(g.dims().coord(at));
    int next = g.out_index(at);
    if (next < 0) break;
    at = next;
  }
  return p;
}

// A basin of attraction: the cells whose out-paths end at `sink`.
struct Component {
  Coord sink;
  std::set<Coord> members;
  std::size_t size() const { return members.size(); }
};

// One component per sink, ordered by sink position (row-major). Components
// partition the grid.
inline std::vector<Component> components(const GigDigraph& g) {
  GridDims d = g.dims();
  int mn = d.cells();
  std::vector<int> sink_of(static_cast<std::size_t>(mn), -1);
  std::vector<int> trail;
  for (int i = 0; i < mn; ++i) {
    if (sink_of[static_cast<std::size_t>(i)] >= 0) continue;
    trail.clear();
    int at = i;
    while (sink_of[static_cast<std::size_t>(at)] < 0 && g.out_index(at) >= 0) {
      trail.push_back(at);
      at = g.out_index(at);
    }
    int s = g.out_index(at) < 0 ? at : sink_of[static_cast<std::size_t>(at)];
    sink_of[static_cast<std::size_t>(at)] = s;
    for (int v : trail) sink_of[static_cast<std::size_t>(v)] = s;
  }
  std::map<int, Component> by_sink;
  for (int i = 0; i < mn; ++i) {
    int s = sink_of[static_cast<std::size_t>(i)];
    auto [it, fresh] = by_sink.try_emplace(s);
    if (fresh) it->second.sink = d.coord(s);
    it->second.members.insert(d.coord(i));
  }
  std::vector<Component> out;
  out.reserve(by_sink.size());
  for (auto& [s, comp] : by_sink) out.push_back(std::move(comp));
  return out;
}

namespace detail {

// Allocation-free core of components(): fills sizes[i] with the component
// size when cell i is a sink (0 otherwise) and returns the sink count.
// sink_of is caller scratch so enumeration loops can reuse it.
inline int component_sizes(const GigDigraph& g, std::vector<int>& sink_of,
                           std::vector<int>& sizes) {
  std::size_t mn = static_cast<std::size_t>(g.dims().cells());
  sink_of.assign(mn, -1);
  sizes.assign(mn, 0);
  int nsinks = 0;
  for (std::size_t i = 0; i < mn; ++i) {
    int at = static_cast<int>(i);
    while (sink_of[static_cast<std::size_t>(at)] < 0 && g.out_index(at) >= 0)
      at = g.out_index(at);
    int s = g.out_index(at) < 0 ? at : sink_of[static_cast<std::size_t>(at)];
    at = static_cast<int>(i);
    while (sink_of[static_cast<std::size_t>(at)] < 0) {
      sink_of[static_cast<std::size_t>(at)] = s;
      if (g.out_index(at) < 0) break;
      at = g.out_index(at);
    }
    ++sizes[static_cast<std::size_t>(sink_of[i])];
  }
  for (std::size_t i = 0; i < mn; ++i)
    if (g.out_index(static_cast<int>(i)) < 0) ++nsinks;
  return nsinks;
}

}  // namespace detail

// True iff every consecutive pair of `path` is an edge of g.
inline bool contains_path(const GigDigraph& g, const LatticePath& path) {
  validate_path(path, g.dims());
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    auto next = g.out_edge(path.vertices[i]);
    if (!next || *next != path.vertices[i + 1]) return false;
  }
  return true;
}

}  // namespace gig
