#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gig/digraph.hpp"
#include "gig/lattice.hpp"
#include "gig/rational.hpp"

// Brute-force ground truth by exhaustive enumeration: event probabilities
// and sink/component statistics computed over every labeling of the grid
// (or every relative order of a region's neighborhood). Intended for small
// grids; everything here is exact.

namespace gig {

inline constexpr int kDefaultEnumerationCap = 9;   // cells, full enumeration
inline constexpr int kDefaultRegionCap = 12;       // cells incl. neighborhood

struct OracleResult {
  Int favorable;
  Int total;
  Rational probability;
};

// Calls visit(const GigDigraph&) once per labeling of the grid, in
// lexicographic label order. (mn)! iterations: refuses grids over cell_cap
// cells since anything bigger belongs to Monte Carlo simulation.
template <class Visitor>
void for_each_labeling(GridDims dims, Visitor&& visit,
                       int cell_cap = kDefaultEnumerationCap) {
  int mn = dims.cells();
  if (mn > cell_cap)
    throw resource_error(
        "enumerating all " + std::to_string(mn) +
        "! labelings of a " + std::to_string(dims.m) + "x" +
        std::to_string(dims.n) + " grid exceeds the cap of " +
        std::to_string(cell_cap) +
        " cells; use Monte Carlo simulation for grids this size");
  std::vector<int> perm(static_cast<std::size_t>(mn));
  std::iota(perm.begin(), perm.end(), 1);
  GigDigraph g{Labeling(dims, perm)};
  do {
    g.relabel(perm);
    visit(static_cast<const GigDigraph&>(g));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Exact P(event) over all labelings. With shards > 1 the permutation space
// is partitioned by the label of cell (1,1) and shards run on threads;
// `event` must then be pure (it is invoked concurrently). Counts merge by
// addition, so the result is identical for every shard count.
inline OracleResult enumerate_event(
    GridDims dims, const std::function<bool(const GigDigraph&)>& event,
    int cell_cap = kDefaultEnumerationCap, int shards = 1) {
  if (!event) throw input_error("enumerate_event needs a predicate");
  if (shards < 1) throw input_error("shard count must be >= 1");
  int mn = dims.cells();
  if (mn > cell_cap)
    throw resource_error(
        "enumerating all " + std::to_string(mn) +
        "! labelings of a " + std::to_string(dims.m) + "x" +
        std::to_string(dims.n) + " grid exceeds the cap of " +
        std::to_string(cell_cap) +
        " cells; use Monte Carlo simulation for grids this size");

  auto run_shard = [&](int shard, unsigned long long& favorable) {
    std::vector<int> perm(static_cast<std::size_t>(mn));
    std::iota(perm.begin(), perm.end(), 1);
    GigDigraph g{Labeling(dims, perm)};
    for (int first = shard + 1; first <= mn; first += shards) {
      perm[0] = first;
      int fill = 0;
      for (std::size_t i = 1; i < perm.size(); ++i) {
        ++fill;
        if (fill == first) ++fill;
        perm[i] = fill;
      }
      do {
        g.relabel(perm);
        if (event(g)) ++favorable;
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
  };

  std::vector<unsigned long long> counts(static_cast<std::size_t>(shards), 0);
  if (shards == 1) {
    run_shard(0, counts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(shards));
    for (int s = 0; s < shards; ++s)
      pool.emplace_back(run_shard, s, std::ref(counts[s]));
    for (auto& th : pool) th.join();
  }
  OracleResult res;
  res.favorable = 0;
  for (auto c : counts) res.favorable += c;
  res.total = factorial(static_cast<unsigned>(mn));
  res.probability = Rational(res.favorable, res.total);
  return res;
}

// Out-edges of a region's vertices as induced by one relative order of the
// labels on N(region). Passed to relative_order_event predicates.
class RegionEdges {
 public:
  const std::vector<Coord>& region() const { return region_; }

  std::optional<Coord> out_edge(Coord c) const {
    auto it = std::lower_bound(region_.begin(), region_.end(), c);
    if (it == region_.end() || *it != c)
      throw input_error("vertex " + to_string(c) +
                        " is not in the queried region");
    return out_[static_cast<std::size_t>(it - region_.begin())];
  }

  bool is_sink(Coord c) const { return !out_edge(c).has_value(); }

 private:
  template <class>
  friend struct RegionEnumerator;
  std::vector<Coord> region_;                // sorted
  std::vector<std::optional<Coord>> out_;    // parallel to region_
};

template <class Event>
struct RegionEnumerator {
  OracleResult run(const std::set<Coord>& region, GridDims dims,
                   const Event& event, int cell_cap) {
    if (region.empty())
      throw input_error("relative_order_event needs a nonempty region");
    auto hood = closed_neighborhood(region, dims);  // validates bounds
    std::vector<Coord> cells(hood.begin(), hood.end());
    int t = static_cast<int>(cells.size());
    if (t > cell_cap)
      throw resource_error(
          "relative-order enumeration over " + std::to_string(t) +
          " neighborhood cells exceeds the cap of " +
          std::to_string(cell_cap) + "; use Monte Carlo simulation instead");

    auto cell_index = [&](Coord c) {
      return static_cast<int>(
          std::lower_bound(cells.begin(), cells.end(), c) - cells.begin());
    };
    RegionEdges re;
    re.region_.assign(region.begin(), region.end());
    re.out_.assign(re.region_.size(), std::nullopt);
    std::vector<int> self_idx;
    std::vector<std::vector<int>> nbr_idx;
    for (Coord u : re.region_) {
      self_idx.push_back(cell_index(u));
      auto& row = nbr_idx.emplace_back();
      for (Coord d : neighbors(u, dims)) row.push_back(cell_index(d));
    }

    std::vector<int> rank(static_cast<std::size_t>(t));
    std::iota(rank.begin(), rank.end(), 1);
    unsigned long long favorable = 0, count = 0;
    do {
      for (std::size_t u = 0; u < re.region_.size(); ++u) {
        int best = -1, best_rank = rank[static_cast<std::size_t>(self_idx[u])];
        for (int j : nbr_idx[u])
          if (rank[static_cast<std::size_t>(j)] > best_rank) {
            best = j;
            best_rank = rank[static_cast<std::size_t>(j)];
          }
        re.out_[u] = best < 0 ? std::nullopt
                              : std::optional<Coord>(
                                    cells[static_cast<std::size_t>(best)]);
      }
      if (event(static_cast<const RegionEdges&>(re))) ++favorable;
      ++count;
    } while (std::next_permutation(rank.begin(), rank.end()));

    OracleResult res;
    res.favorable = favorable;
    res.total = count;
    res.probability = Rational(res.favorable, res.total);
    return res;
  }
};

// Exact P(event) for events that depend only on the out-edges of `region`
// vertices. Those edges are a function of the relative label order on
// N(region), so enumerating the |N(region)|! orders (rather than (mn)!
// labelings) gives the same probability as enumerate_event would.
inline OracleResult relative_order_event(
    const std::set<Coord>& region, GridDims dims,
    const std::function<bool(const RegionEdges&)>& event,
    int cell_cap = kDefaultRegionCap) {
  if (!event) throw input_error("relative_order_event needs a predicate");
  return RegionEnumerator<std::function<bool(const RegionEdges&)>>{}.run(
      region, dims, event, cell_cap);
}

// Exact small-grid census: sink-count moments and pmf plus component-size
// expectations, all from one pass over every labeling.
struct ExactStatistics {
  Rational expected_sinks;
  Rational variance_sinks;
  std::map<int, Rational> sink_count_pmf;
  Rational expected_max_component;
  // E[mn / #sinks]: mean over labelings of that labeling's average
  // component (basin) size.
  Rational expected_component_size_per_sink;
};

inline ExactStatistics exact_statistics(GridDims dims,
                                        int cell_cap = kDefaultEnumerationCap) {
  int mn = dims.cells();
  std::vector<unsigned long long> hist(static_cast<std::size_t>(mn) + 1, 0);
  unsigned long long sum_max = 0;
  std::vector<int> sink_of, sizes;
  for_each_labeling(
      dims,
      [&](const GigDigraph& g) {
        int nsinks = detail::component_sizes(g, sink_of, sizes);
        ++hist[static_cast<std::size_t>(nsinks)];
        sum_max += static_cast<unsigned long long>(
            *std::max_element(sizes.begin(), sizes.end()));
      },
      cell_cap);

  Int total = factorial(static_cast<unsigned>(mn));
  ExactStatistics st;
  st.expected_sinks = 0;
  st.variance_sinks = 0;
  st.expected_component_size_per_sink = 0;
  for (int k = 1; k <= mn; ++k) {
    if (!hist[static_cast<std::size_t>(k)]) continue;
    Rational p(Int(hist[static_cast<std::size_t>(k)]), total);
    st.sink_count_pmf[k] = p;
    st.expected_sinks += k * p;
    st.variance_sinks += k * k * p;
    st.expected_component_size_per_sink += Rational(mn, k) * p;
  }
  st.variance_sinks -= st.expected_sinks * st.expected_sinks;
  st.expected_max_component = Rational(Int(sum_max), total);
  return st;
}

}  // namespace gig
