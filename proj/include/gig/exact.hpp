#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "gig/digraph.hpp"
#include "gig/lattice.hpp"
#include "gig/rational.hpp"

// Exact distribution results for greatest-increase digraphs on uniformly
// random labelings: path and sink probabilities, sink-count moments, and
// component-size / connectivity bounds. Everything returns exact rationals.

namespace gig {

// P(g contains the whole path) = prod_{j=1}^{len-1} 1/K_j where K_j is the
// closed-neighborhood growth sequence. Containing the path is equivalent
// to "V_{j+1} holds the largest label in N(V_1..V_j) for every j", which
// is satisfiable only when each vertex is fresh: V_{j+1} must lie outside
// N(V_1..V_{j-1}), else step j-1 already forced a label above V_{j+1}'s.
// Paths that fold back like that have probability 0 and the product does
// not apply, so they are rejected with input_error. (Freshness also makes
// the used K-values strictly increasing, keeping every factor meaningful.)
inline Rational path_probability(const LatticePath& path, GridDims dims) {
  validate_path(path, dims);
  const auto& v = path.vertices;
  std::size_t len = v.size();
  std::vector<char> hood(static_cast<std::size_t>(dims.cells()), 0);
  int count = 0;
  auto add = [&](Coord c) {
    char& cell = hood[static_cast<std::size_t>(dims.index(c))];
    if (!cell) {
      cell = 1;
      ++count;
    }
  };
  Rational p = 1;
  for (std::size_t s = 0; s < len; ++s) {
    add(v[s]);
    for (Coord d : neighbors(v[s], dims)) add(d);
    if (s + 1 < len) p /= count;  // 1/K_{s+1}, used for the first len-1 K's
    if (s + 2 < len &&
        hood[static_cast<std::size_t>(dims.index(v[s + 2]))])
      throw input_error(
          "path vertex " + std::to_string(s + 3) + " at " +
          to_string(v[s + 2]) + " folds back into the closed neighborhood "
          "of the first " + std::to_string(s + 1) +
          " vertices; labels cannot increase along such a path and no "
          "greatest-increase digraph contains it");
  }
  return p;
}

inline constexpr std::size_t kDefaultMultiSinkCap = 8;

// P(every vertex of `vs` is a sink). Adjacent vertices can never both be
// sinks, giving probability 0. Otherwise sums over all |vs|! orders in
// which the labels of vs could increase; for each order the j-th smallest
// sink contributes 1/|N(first j sinks)|.
inline Rational multi_sink_probability(const std::set<Coord>& vs, GridDims dims,
                                       std::size_t cap = kDefaultMultiSinkCap) {
  if (vs.empty()) throw input_error("multi_sink_probability of an empty set");
  for (Coord c : vs) require_in_bounds(c, dims, "vertex");
  if (vs.size() > cap)
    throw resource_error("multi_sink_probability over " +
                         std::to_string(vs.size()) +
                         " vertices exceeds cap " + std::to_string(cap) +
                         " (the sum has |vs|! terms)");
  std::vector<Coord> order(vs.begin(), vs.end());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (squared_distance(order[i], order[j]) == 1) return 0;

  std::vector<char> in(static_cast<std::size_t>(dims.cells()));
  Rational sum = 0;
  do {
    std::fill(in.begin(), in.end(), 0);
    int count = 0;
    auto add = [&](Coord c) {
      char& cell = in[static_cast<std::size_t>(dims.index(c))];
      if (!cell) {
        cell = 1;
        ++count;
      }
    };
    Rational prod = 1;
    for (Coord u : order) {
      add(u);
      for (Coord d : neighbors(u, dims)) add(d);
      prod /= count;
    }
    sum += prod;
  } while (std::next_permutation(order.begin(), order.end()));
  return sum;
}

namespace detail {
inline int shared_neighbor_count(Coord a, Coord b, GridDims dims) {
  std::set<Coord> na = neighbors(a, dims), nb = neighbors(b, dims);
  int s = 0;
  for (Coord c : na) s += nb.count(c);
  return s;
}
}  // namespace detail

// Sink indicators of two cells are independent exactly when the cells are
// non-adjacent and share no neighbor (squared distance > 4).
inline bool sinks_independent(Coord a, Coord b, GridDims dims) {
  require_in_bounds(a, dims, "vertex");
  require_in_bounds(b, dims, "vertex");
  if (a == b) throw input_error("sinks_independent needs distinct vertices");
  return squared_distance(a, b) != 1 &&
         detail::shared_neighbor_count(a, b, dims) == 0;
}

// Cov(1{a sink}, 1{b sink}) with k = closed-neighborhood sizes:
//   adjacent            -> -1/(ka*kb)              (joint probability 0)
//   share s>0 neighbors ->  s/((ka+kb-s)*ka*kb)
//   otherwise           ->  0
// The shared-neighbor form follows from the two-sink order sum:
// P(both) = (ka+kb)/(ka*kb*(ka+kb-s)).
inline Rational sink_covariance(Coord a, Coord b, GridDims dims) {
  require_in_bounds(a, dims, "vertex");
  require_in_bounds(b, dims, "vertex");
  if (a == b) throw input_error("sink_covariance needs distinct vertices");
  long ka = static_cast<long>(neighbors(a, dims).size()) + 1;
  long kb = static_cast<long>(neighbors(b, dims).size()) + 1;
  if (squared_distance(a, b) == 1) return Rational(-1, ka * kb);
  long s = detail::shared_neighbor_count(a, b, dims);
  if (s == 0) return 0;
  return Rational(s, (ka + kb - s) * ka * kb);
}

// E[#sinks] = mn/5 + (m+n)/10 + 2/15, closed form for m,n >= 3.
inline Rational expected_sinks(GridDims dims) {
  if (dims.m < 3 || dims.n < 3)
    throw domain_error(
        "closed-form expected sink count applies to cases where m >= 3 and "
        "n >= 3; got " + std::to_string(dims.m) + "x" + std::to_string(dims.n));
  return Rational(static_cast<long>(dims.m) * dims.n, 5) +
         Rational(dims.m + dims.n, 10) + Rational(2, 15);
}

// Var[#sinks] = 13mn/225 + (m+n)/150 + 52/1575, closed form for m,n >= 6
// (smaller grids lack the full census of vertex-pair border classes).
inline Rational variance_sinks_closed(GridDims dims) {
  if (dims.m < 6 || dims.n < 6)
    throw domain_error(
        "closed-form sink-count variance applies to cases where m >= 6 and "
        "n >= 6; got " + std::to_string(dims.m) + "x" + std::to_string(dims.n));
  return Rational(13L * dims.m * dims.n, 225) +
         Rational(dims.m + dims.n, 150) + Rational(52, 1575);
}

// Var[#sinks] assembled from per-vertex variances plus pairwise covariances.
// Only pairs within squared distance 4 contribute, so the sum is O(mn).
inline Rational variance_sinks_by_pairs(GridDims dims) {
  if (dims.m < 3 || dims.n < 3)
    throw domain_error(
        "pairwise sink-count variance applies to cases where m >= 3 and "
        "n >= 3; got " + std::to_string(dims.m) + "x" + std::to_string(dims.n));
  static constexpr int kOffsets[][2] = {
      {0, 1},  {0, -1}, {1, 0},  {-1, 0},   // adjacent
      {1, 1},  {1, -1}, {-1, 1}, {-1, -1},  // diagonal
      {0, 2},  {0, -2}, {2, 0},  {-2, 0},   // two apart in line
  };
  Rational var = 0;
  for (int r = 1; r <= dims.m; ++r)
    for (int c = 1; c <= dims.n; ++c) {
      Coord v{r, c};
      long k = static_cast<long>(neighbors(v, dims).size()) + 1;
      var += Rational(1, k) - Rational(1, k * k);
      for (auto [dr, dc] : kOffsets) {
        Coord w{r + dr, c + dc};
        if (dims.contains(w)) var += sink_covariance(v, w, dims);
      }
    }
  return var;
}

// Quantities bounding P(a and b end in the same component) from below via
// the monotone (staircase) paths between them. `shortest_length` counts
// edges; `count_times_min` <= `sum_over_paths` are both valid lower bounds
// on P(some monotone a-b path is fully contained), the sum being tighter.
struct ConnectivityBound {
  int shortest_length = 0;
  Int path_count;
  Rational min_path_prob;
  Rational count_times_min;
  Rational sum_over_paths;
};

inline ConnectivityBound connectivity_lower_bound(
    Coord a, Coord b, GridDims dims,
    std::uint64_t path_cap = kDefaultMonotonePathCap) {
  auto paths = monotone_paths(a, b, dims, path_cap);  // validates a, b
  ConnectivityBound out;
  out.shortest_length =
      std::abs(a.row - b.row) + std::abs(a.col - b.col);
  out.path_count = static_cast<long>(paths.size());
  bool first = true;
  for (const auto& p : paths) {
    Rational q = path_probability(p, dims);
    out.sum_over_paths += q;
    if (first || q < out.min_path_prob) out.min_path_prob = q;
    first = false;
  }
  out.count_times_min = Rational(out.path_count) * out.min_path_prob;
  return out;
}

namespace detail {
// Per-size term of the component bound: a component of l+1 cells requires
// a contained l-edge out-path whose probability is at most
// C(l, ceil(l/2)) * 2/((l+2)!) summed over shapes.
inline Rational component_term(unsigned l) {
  Int num = 2 * binomial(l, (l + 1) / 2);
  Int den = factorial(l + 2);
  return Rational(num, den);
}
}  // namespace detail

// Upper bound on the expected size of the component containing a typical
// (per-sink averaged) cell's sink, as a function of M = max(m, n):
//   B(M) = sum_{n=1}^{M} 4n * sum_{l=n}^{M^2} C(l, ceil(l/2)) * 2/((l+2)!).
// Increasing in M and bounded by the infinite series (see series_bound).
inline Rational component_size_bound(GridDims dims) {
  unsigned M = static_cast<unsigned>(dims.max_side());
  unsigned L = M * M;
  std::vector<Rational> suffix(L + 2, Rational(0));
  for (unsigned l = L; l >= 1; --l)
    suffix[l] = suffix[l + 1] + detail::component_term(l);
  Rational b = 0;
  for (unsigned n = 1; n <= M; ++n) b += Rational(4 * n) * suffix[n];
  return b;
}

// Certified enclosure of the M -> infinity limit of component_size_bound.
struct SeriesBoundResult {
  Rational truncated_value;   // finite partial double sum (a lower bound)
  Rational tail_bound;        // rigorous bound on everything dropped
  Rational certified_upper;   // truncated_value + tail_bound >= the limit
  int terms_used = 0;         // outer terms summed
};

// Evaluates B(inf) = sum_{n>=1} 4n*b_n, b_n = sum_{l>=n} t_l with
// t_l = C(l, ceil(l/2)) * 2/((l+2)!), to within eps:
//  * inner tails: t_{l+1}/t_l <= 2/(l+3), so cutting at L drops at most
//    T_L = t_L * r/(1-r) with r = 2/(L+3) from each b_n (n <= N);
//  * outer tail: b_{n+1} <= t_n * 2/(n+1) and b_n >= t_n give
//    b_{n+1}/b_n <= 2/(n+1) <= 2/3 for n >= 2, hence
//    sum_{k>=1} 4(N+k) b_{N+k} <= 4*bN * sum (N+k)(2/3)^k = (8N+24)*bN
//    with bN taken at its certified upper value.
// N and L grow until inner + outer tails fit inside eps; the factorial
// decay of t_l makes both loops terminate after a handful of steps.
inline SeriesBoundResult series_bound(const Rational& eps) {
  if (eps <= 0) throw input_error("series_bound needs eps > 0");
  std::vector<Rational> t{Rational(0)};  // t[l], filled on demand
  auto ensure = [&](unsigned L) {
    for (unsigned l = static_cast<unsigned>(t.size()); l <= L; ++l)
      t.push_back(detail::component_term(l));
  };
  unsigned N = 2, L = 16;
  Rational inner_drop, outer_drop, tail;
  while (true) {
    ensure(L);
    Rational r(2, L + 3);
    Rational TL = t[L] * r / (1 - r);
    Rational bN_upper = TL;
    for (unsigned l = N; l <= L; ++l) bN_upper += t[l];
    inner_drop = Rational(2L * N * (N + 1)) * TL;
    outer_drop = Rational(8L * N + 24) * bN_upper;
    tail = inner_drop + outer_drop;
    if (tail <= eps) break;
    if (outer_drop >= inner_drop)
      ++N;
    else
      L += 4;
    if (L < N + 4) L = N + 4;
  }
  std::vector<Rational> suffix(L + 2, Rational(0));
  for (unsigned l = L; l >= 1; --l) suffix[l] = suffix[l + 1] + t[l];
  SeriesBoundResult res;
  res.truncated_value = 0;
  for (unsigned n = 1; n <= N; ++n)
    res.truncated_value += Rational(4 * n) * suffix[n];
  res.tail_bound = tail;
  res.certified_upper = res.truncated_value + res.tail_bound;
  res.terms_used = static_cast<int>(N);
  return res;
}

}  // namespace gig
