#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gig/exact.hpp"
#include "gig/montecarlo.hpp"
#include "gig/oracle.hpp"

using namespace gig;

namespace {

std::vector<SimEvent> standard_events() {
  std::vector<SimEvent> events;
  events.push_back({"step-path", [](const GigDigraph& g) {
                      return contains_path(
                          g, LatticePath{{{2, 1}, {2, 2}, {1, 2}}});
                    }});
  events.push_back({"corner-sinks", [](const GigDigraph& g) {
                      return g.is_sink({1, 1}) && g.is_sink({3, 3});
                    }});
  return events;
}

std::uint64_t total_components(const SimulationStats& st) {
  std::uint64_t n = 0;
  for (const auto& [size, count] : st.component_size_histogram) n += count;
  return n;
}

std::uint64_t total_cells_covered(const SimulationStats& st) {
  std::uint64_t n = 0;
  for (const auto& [size, count] : st.component_size_histogram)
    n += static_cast<std::uint64_t>(size) * count;
  return n;
}

}  // namespace

TEST_CASE("bounded draws are unbiased rejections", "[montecarlo]") {
  Rng rng(99);
  for (int i = 0; i < 50; ++i) REQUIRE(rng.below(1) == 0);
  for (std::uint64_t bound : {2ull, 3ull, 10ull, 1000ull})
    for (int i = 0; i < 200; ++i) REQUIRE(rng.below(bound) < bound);
  REQUIRE_THROWS_AS(rng.below(0), input_error);

  Rng a(12345), b(12345);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next() == b.next());
}

TEST_CASE("labeling samples are reproducible permutations", "[montecarlo]") {
  GridDims d(3, 3);
  Rng r1(42), r2(42);
  Labeling l1 = sample_labeling(d, r1);
  Labeling l2 = sample_labeling(d, r2);
  REQUIRE(l1.values() == l2.values());

  std::vector<int> sorted = l1.values();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(9);
  std::iota(expect.begin(), expect.end(), 1);
  REQUIRE(sorted == expect);

  Rng r3(7);
  REQUIRE(sample_labeling(GridDims(1, 1), r3).values() ==
          std::vector<int>{1});
}

TEST_CASE("sampled label positions pass a uniformity test", "[montecarlo]") {
  // position of the largest label over many draws; chi-square with 8
  // degrees of freedom, 0.1% critical value 26.124
  GridDims d(3, 3);
  Rng rng(424242);
  const int draws = 100000;
  std::vector<int> obs(9, 0);
  for (int t = 0; t < draws; ++t) {
    Labeling lab = sample_labeling(d, rng);
    for (int i = 0; i < 9; ++i)
      if (lab.label_at(i) == 9) {
        ++obs[static_cast<std::size_t>(i)];
        break;
      }
  }
  double expected = draws / 9.0;
  double chi2 = 0;
  for (int c : obs) chi2 += (c - expected) * (c - expected) / expected;
  INFO("chi-square = " << chi2);
  REQUIRE(chi2 < 26.124);
}

TEST_CASE("simulate validates its configuration", "[montecarlo]") {
  SimulationConfig cfg{GridDims(2, 2), 0, 1, 1};
  REQUIRE_THROWS_AS(simulate(cfg), input_error);
  cfg.trials = 10;
  cfg.shards = 0;
  REQUIRE_THROWS_AS(simulate(cfg), input_error);
  cfg.shards = 1;
  try {
    simulate(cfg, {{"broken", nullptr}});
    FAIL("expected input_error");
  } catch (const input_error& e) {
    REQUIRE(std::string(e.what()).find("broken") != std::string::npos);
  }
}

TEST_CASE("identical configurations give identical statistics",
          "[montecarlo]") {
  SimulationConfig cfg{GridDims(3, 3), 20000, 123, 3};
  SimulationStats a = simulate(cfg, standard_events());
  SimulationStats b = simulate(cfg, standard_events());
  REQUIRE(a.trials == b.trials);
  REQUIRE(a.mean_sinks == b.mean_sinks);
  REQUIRE(a.var_sinks == b.var_sinks);
  REQUIRE(a.stderr_mean == b.stderr_mean);
  REQUIRE(a.mean_max_component == b.mean_max_component);
  REQUIRE(a.component_size_histogram == b.component_size_histogram);
  REQUIRE(a.event_frequencies.size() == b.event_frequencies.size());
  for (const auto& [name, es] : a.event_frequencies) {
    const EventStats& other = b.event_frequencies.at(name);
    REQUIRE(es.hits == other.hits);
    REQUIRE(es.estimate == other.estimate);
    REQUIRE(es.std_error == other.std_error);
  }

  SimulationConfig other = cfg;
  other.seed = 124;
  SimulationStats c = simulate(other, standard_events());
  REQUIRE(a.component_size_histogram != c.component_size_histogram);
}

TEST_CASE("component histogram accounts for every cell and sink",
          "[montecarlo]") {
  SimulationConfig cfg{GridDims(3, 3), 50000, 7, 2};
  SimulationStats st = simulate(cfg);
  REQUIRE(total_cells_covered(st) == cfg.trials * 9);
  std::uint64_t comps = total_components(st);
  REQUIRE(st.mean_sinks == static_cast<double>(comps) /
                               static_cast<double>(cfg.trials));
  REQUIRE(st.stderr_mean > 0);
  REQUIRE(st.var_sinks > 0);

  SimulationConfig uneven{GridDims(2, 3), 11, 5, 4};  // trials % shards != 0
  SimulationStats tiny = simulate(uneven);
  REQUIRE(tiny.trials == 11);
  REQUIRE(total_cells_covered(tiny) == 66);

  SimulationStats unit = simulate(SimulationConfig{GridDims(1, 1), 100, 3, 1});
  REQUIRE(unit.mean_sinks == 1.0);
  REQUIRE(unit.var_sinks == 0.0);
  REQUIRE(unit.mean_max_component == 1.0);
  REQUIRE(unit.component_size_histogram ==
          std::map<int, std::uint64_t>{{1, 100}});
}

TEST_CASE("estimates converge to the exact small-grid answers",
          "[montecarlo]") {
  SimulationConfig cfg{GridDims(3, 3), 1000000, 2025, 4};
  SimulationStats st = simulate(cfg, standard_events());

  double mean_exact = to_double(Rational(38, 15));
  REQUIRE(std::abs(st.mean_sinks - mean_exact) <= 5 * st.stderr_mean);

  double var_exact = to_double(Rational(982, 1575));
  REQUIRE(std::abs(st.var_sinks - var_exact) <= 0.02 * var_exact);

  double max_exact = to_double(Rational(1181, 210));
  REQUIRE(std::abs(st.mean_max_component - max_exact) <= 0.01 * max_exact);

  const EventStats& path = st.event_frequencies.at("step-path");
  double path_exact = to_double(Rational(1, 28));
  REQUIRE(path.std_error > 0);
  REQUIRE(std::abs(path.estimate - path_exact) <= 5 * path.std_error);
  REQUIRE(path.estimate ==
          static_cast<double>(path.hits) / static_cast<double>(cfg.trials));

  const EventStats& corners = st.event_frequencies.at("corner-sinks");
  double corners_exact = to_double(
      multi_sink_probability({{1, 1}, {3, 3}}, GridDims(3, 3)));
  REQUIRE(corners_exact == to_double(Rational(1, 9)));
  REQUIRE(std::abs(corners.estimate - corners_exact) <= 5 * corners.std_error);
}

TEST_CASE("simulated moments track the closed forms on a mid-size grid",
          "[montecarlo]") {
  SimulationConfig cfg{GridDims(6, 6), 100000, 99, 4};
  SimulationStats st = simulate(cfg);
  double mean_exact = to_double(expected_sinks(GridDims(6, 6)));
  double var_exact = to_double(variance_sinks_closed(GridDims(6, 6)));
  REQUIRE(std::abs(st.mean_sinks - mean_exact) <= 5 * st.stderr_mean);
  REQUIRE(std::abs(st.var_sinks - var_exact) <= 0.05 * var_exact);
}

TEST_CASE("pooled average component size respects the analytic bound",
          "[montecarlo]") {
  for (int M = 2; M <= 8; ++M) {
    GridDims d(M, M);
    SimulationConfig cfg{d, 20000, 1234 + static_cast<std::uint64_t>(M), 2};
    SimulationStats st = simulate(cfg);
    double pooled = static_cast<double>(total_cells_covered(st)) /
                    static_cast<double>(total_components(st));
    double bound = to_double(component_size_bound(d));
    INFO("M = " << M << ": pooled " << pooled << " vs bound " << bound);
    REQUIRE(pooled <= bound);
    if (M == 2) REQUIRE(st.mean_max_component <= bound);
  }
}
