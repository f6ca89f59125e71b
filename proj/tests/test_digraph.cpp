#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gig/digraph.hpp"
#include "gig/montecarlo.hpp"

using namespace gig;

namespace {

const std::vector<std::vector<int>> kSample3x3{{2, 9, 5}, {4, 7, 3}, {6, 1, 8}};

// Checks every structural invariant a greatest-increase digraph must satisfy
// against first principles (direct neighbor-label comparisons). Returns an
// empty string on success so exhaustive sweeps stay cheap, and a description
// of the first violation otherwise.
std::string invariant_violation(const GigDigraph& g) {
  GridDims d = g.dims();
  const Labeling& lab = g.labeling();

  std::set<Coord> sink_set = sinks(g);
  for (int i = 0; i < d.cells(); ++i) {
    Coord c = d.coord(i);
    int best = 0;
    Coord best_at = c;
    for (Coord nb : neighbors(c, d))
      if (lab.label(nb) > best) {
        best = lab.label(nb);
        best_at = nb;
      }
    auto next = g.out_edge(c);
    if (best > lab.label(c)) {
      if (!next || *next != best_at)
        return "wrong out-edge at " + to_string(c);
      if (sink_set.count(c)) return to_string(c) + " wrongly listed as sink";
    } else {
      if (next) return to_string(c) + " should be a sink";
      if (!sink_set.count(c)) return to_string(c) + " missing from sinks";
    }

    LatticePath walk = out_path(g, c);
    if (walk.vertices.front() != c ||
        walk.length() > static_cast<std::size_t>(d.cells()))
      return "bad out-path from " + to_string(c);
    for (std::size_t t = 0; t + 1 < walk.vertices.size(); ++t)
      if (lab.label(walk.vertices[t]) >= lab.label(walk.vertices[t + 1]))
        return "labels fail to increase along out-path from " + to_string(c);
    if (!g.is_sink(walk.vertices.back()) || !contains_path(g, walk))
      return "out-path from " + to_string(c) + " does not end in a sink";
  }

  // the grid's maximum label has no greater neighbor
  for (int i = 0; i < d.cells(); ++i)
    if (lab.label_at(i) == d.cells() && g.out_index(i) >= 0)
      return "maximum label is not a sink";

  auto comps = components(g);
  if (comps.size() != sink_set.size())
    return "component count differs from sink count";
  std::size_t covered = 0;
  std::set<Coord> seen;
  for (const auto& comp : comps) {
    if (!sink_set.count(comp.sink)) return "component sink is not a sink";
    if (!comp.members.count(comp.sink)) return "component omits its own sink";
    covered += comp.size();
    for (Coord mem : comp.members) {
      if (!seen.insert(mem).second)
        return to_string(mem) + " appears in two components";
      if (out_path(g, mem).vertices.back() != comp.sink)
        return to_string(mem) + " drains to a different sink";
    }
  }
  if (covered != static_cast<std::size_t>(d.cells()))
    return "components do not cover the grid";

  // the allocation-free size kernel agrees with the rich interface
  std::vector<int> scratch, sizes;
  int nsinks = detail::component_sizes(g, scratch, sizes);
  if (nsinks != static_cast<int>(sink_set.size()))
    return "component_sizes sink count mismatch";
  std::multiset<int> a, b;
  for (const auto& comp : comps) a.insert(static_cast<int>(comp.size()));
  for (int s : sizes)
    if (s > 0) b.insert(s);
  if (a != b) return "component_sizes size multiset mismatch";

  return {};
}

void check_invariants(const GigDigraph& g) {
  std::string why = invariant_violation(g);
  if (!why.empty()) {
    std::string labels;
    for (int v : g.labeling().values()) labels += std::to_string(v) + " ";
    INFO("labels (row-major): " << labels);
    FAIL(why);
  }
}

}  // namespace

TEST_CASE("labeling validation names the offending cells", "[digraph]") {
  REQUIRE_NOTHROW(Labeling(GridDims(2, 2), {3, 1, 4, 2}));
  REQUIRE_THROWS_AS(Labeling(GridDims(2, 2), {1, 2, 3}), input_error);
  try {
    Labeling(GridDims(2, 2), {2, 2, 3, 4});
    FAIL("expected input_error");
  } catch (const input_error& e) {
    std::string msg = e.what();
    REQUIRE(msg.find("duplicate label 2") != std::string::npos);
    REQUIRE(msg.find("(1,1)") != std::string::npos);
    REQUIRE(msg.find("(1,2)") != std::string::npos);
  }
  try {
    Labeling(GridDims(2, 2), {1, 2, 3, 7});
    FAIL("expected input_error");
  } catch (const input_error& e) {
    REQUIRE(std::string(e.what()).find("label 7") != std::string::npos);
  }
  REQUIRE_THROWS_AS(Labeling::from_rows({{1, 2}, {3}}), input_error);
  REQUIRE_THROWS_AS(Labeling::from_rows({}), input_error);
}

TEST_CASE("edges of a concrete 3x3 labeling", "[digraph]") {
  GigDigraph g(Labeling::from_rows(kSample3x3));

  std::map<Coord, Coord> expected{
      {{1, 1}, {1, 2}}, {{1, 3}, {1, 2}}, {{2, 1}, {2, 2}},
      {{2, 2}, {1, 2}}, {{2, 3}, {3, 3}}, {{3, 2}, {3, 3}},
  };
  int edge_count = 0;
  for (int i = 0; i < 9; ++i) {
    Coord c = g.dims().coord(i);
    auto next = g.out_edge(c);
    if (next) {
      ++edge_count;
      REQUIRE(expected.count(c) == 1);
      REQUIRE(expected.at(c) == *next);
    }
  }
  REQUIRE(edge_count == 6);
  REQUIRE(sinks(g) == std::set<Coord>{{1, 2}, {3, 1}, {3, 3}});

  REQUIRE(out_path(g, {2, 1}).vertices ==
          std::vector<Coord>{{2, 1}, {2, 2}, {1, 2}});
  REQUIRE(out_path(g, {1, 2}).vertices == std::vector<Coord>{{1, 2}});
  REQUIRE(out_path(g, {3, 2}).vertices == std::vector<Coord>{{3, 2}, {3, 3}});

  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  REQUIRE(comps[0].sink == Coord{1, 2});
  REQUIRE(comps[0].members ==
          std::set<Coord>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}});
  REQUIRE(comps[1].sink == Coord{3, 1});
  REQUIRE(comps[1].members == std::set<Coord>{{3, 1}});
  REQUIRE(comps[2].sink == Coord{3, 3});
  REQUIRE(comps[2].members == std::set<Coord>{{2, 3}, {3, 2}, {3, 3}});

  REQUIRE(contains_path(g, LatticePath{{{2, 1}, {2, 2}, {1, 2}}}));
  REQUIRE(contains_path(g, LatticePath{{{1, 1}, {1, 2}}}));
  REQUIRE_FALSE(contains_path(g, LatticePath{{{1, 2}, {1, 1}}}));
  REQUIRE_FALSE(contains_path(g, LatticePath{{{2, 2}, {2, 3}}}));
  REQUIRE(contains_path(g, LatticePath{{{3, 2}}}));
  REQUIRE_THROWS_AS(contains_path(g, LatticePath{{{1, 1}, {2, 2}}}),
                    input_error);
  check_invariants(g);
}

TEST_CASE("a component can be a lone sink", "[digraph]") {
  GigDigraph g(Labeling::from_rows({{2, 6, 1}, {3, 4, 5}}));
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  std::multiset<std::size_t> sizes{comps[0].size(), comps[1].size()};
  REQUIRE(sizes == std::multiset<std::size_t>{1, 5});
  REQUIRE(comps[1].sink == Coord{2, 3});
  REQUIRE(comps[1].members == std::set<Coord>{{2, 3}});
}

TEST_CASE("degenerate grids build", "[digraph]") {
  GigDigraph g1(Labeling(GridDims(1, 1), {1}));
  REQUIRE(g1.is_sink({1, 1}));
  REQUIRE(components(g1).size() == 1);

  GigDigraph g2(Labeling(GridDims(1, 2), {2, 1}));
  REQUIRE(g2.is_sink({1, 1}));
  REQUIRE(*g2.out_edge({1, 2}) == Coord{1, 1});
  check_invariants(g2);
}

TEST_CASE("relabel rebuilds edges in place", "[digraph]") {
  GigDigraph g(Labeling::from_rows(kSample3x3));
  std::vector<int> other{9, 1, 2, 8, 3, 4, 7, 6, 5};
  g.relabel(other);
  GigDigraph fresh(Labeling(GridDims(3, 3), other));
  for (int i = 0; i < 9; ++i) REQUIRE(g.out_index(i) == fresh.out_index(i));
  check_invariants(g);
  REQUIRE_THROWS_AS(g.relabel({1, 2, 3}), input_error);
}

TEST_CASE("structural invariants hold for every small labeling", "[digraph]") {
  for (GridDims d : {GridDims(2, 3), GridDims(2, 4), GridDims(1, 5)}) {
    std::vector<int> perm(static_cast<std::size_t>(d.cells()));
    std::iota(perm.begin(), perm.end(), 1);
    GigDigraph g(Labeling(d, perm));
    long checked = 0;
    do {
      g.relabel(perm);
      check_invariants(g);
      ++checked;
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(checked == factorial(static_cast<unsigned>(d.cells())));
  }
}

TEST_CASE("structural invariants hold for sampled larger labelings",
          "[digraph]") {
  Rng rng(20240811);
  for (GridDims d : {GridDims(3, 3), GridDims(3, 4), GridDims(4, 4)}) {
    GigDigraph g(sample_labeling(d, rng));
    check_invariants(g);
    for (int rep = 0; rep < 60; ++rep) {
      g.relabel(sample_labeling(d, rng).values());
      check_invariants(g);
    }
  }
}
