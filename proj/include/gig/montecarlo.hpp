#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gig/digraph.hpp"
#include "gig/lattice.hpp"

// Monte Carlo estimation over uniformly random labelings.
//
// Reproducibility contract: a (dims, trials, seed, shards) configuration
// produces bit-identical SimulationStats on every platform. This rests on
//  * std::mt19937_64, whose output sequence for a given seed is fixed by
//    the C++ standard (not implementation-defined);
//  * bounded draws and shuffles implemented here (rejection sampling +
//    Fisher-Yates) instead of std::uniform_int_distribution/std::shuffle,
//    whose algorithms vary across standard libraries;
//  * per-shard seeds derived from the master seed with splitmix64, and
//    integer accumulators merged in shard order, so thread scheduling
//    cannot perturb results. Changing the shard count changes which
//    random stream each trial sees, so estimates differ across shard
//    counts while remaining deterministic for each.

namespace gig {

// splitmix64 step (public-domain seed expander): decorrelates consecutive
// shard seeds even when the master seed is small.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform on [0, bound) without modulo bias: draw until the value lands
  // in the largest bound-divisible prefix of the 64-bit range.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw input_error("Rng::below needs bound > 0");
    std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t r = next();
    while (r < min) r = next();
    return r % bound;
  }

  // Fisher-Yates, iterating from the back; the visit order is part of the
  // reproducibility contract.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

inline Labeling sample_labeling(GridDims dims, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(dims.cells()));
  std::iota(perm.begin(), perm.end(), 1);
  rng.shuffle(perm);
  return Labeling(dims, std::move(perm));
}

struct SimulationConfig {
  GridDims dims{1, 1};
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int shards = 1;
};

// A named event to estimate alongside the standard statistics. With
// shards > 1 the predicate is called concurrently and must be pure.
struct SimEvent {
  std::string name;
  std::function<bool(const GigDigraph&)> predicate;
};

struct EventStats {
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double std_error = 0.0;
};

struct SimulationStats {
  std::uint64_t trials = 0;
  double mean_sinks = 0.0;
  double var_sinks = 0.0;     // unbiased sample variance
  double stderr_mean = 0.0;
  // size -> number of components of that size, summed over all trials.
  std::map<int, std::uint64_t> component_size_histogram;
  double mean_max_component = 0.0;
  std::map<std::string, EventStats> event_frequencies;
};

inline SimulationStats simulate(const SimulationConfig& config,
                                const std::vector<SimEvent>& events = {}) {
  if (config.trials == 0) throw input_error("simulate needs trials >= 1");
  if (config.shards < 1) throw input_error("shard count must be >= 1");
  for (const auto& e : events)
    if (!e.predicate)
      throw input_error("event '" + e.name + "' has no predicate");

  GridDims dims = config.dims;
  int mn = dims.cells();
  std::size_t nshards = static_cast<std::size_t>(config.shards);
  std::size_t nevents = events.size();

  struct ShardSums {
    std::uint64_t sinks = 0, sinks_sq = 0, max_comp = 0;
    std::vector<std::uint64_t> hist, hits;
  };
  std::vector<ShardSums> sums(nshards);
  std::vector<std::uint64_t> seeds(nshards);
  std::uint64_t state = config.seed;
  for (auto& s : seeds) s = splitmix64_next(state);

  auto run_shard = [&](std::size_t shard, std::uint64_t shard_trials) {
    ShardSums& acc = sums[shard];
    acc.hist.assign(static_cast<std::size_t>(mn) + 1, 0);
    acc.hits.assign(nevents, 0);
    Rng rng(seeds[shard]);
    std::vector<int> perm(static_cast<std::size_t>(mn));
    std::iota(perm.begin(), perm.end(), 1);
    GigDigraph g{Labeling(dims, perm)};
    std::vector<int> sink_of, sizes;
    for (std::uint64_t t = 0; t < shard_trials; ++t) {
      rng.shuffle(perm);
      g.relabel(perm);
      int nsinks = detail::component_sizes(g, sink_of, sizes);
      std::uint64_t k = static_cast<std::uint64_t>(nsinks);
      acc.sinks += k;
      acc.sinks_sq += k * k;
      int mx = 0;
      for (int i = 0; i < mn; ++i)
        if (int sz = sizes[static_cast<std::size_t>(i)]; sz > 0) {
          ++acc.hist[static_cast<std::size_t>(sz)];
          mx = std::max(mx, sz);
        }
      acc.max_comp += static_cast<std::uint64_t>(mx);
      for (std::size_t e = 0; e < nevents; ++e)
        if (events[e].predicate(g)) ++acc.hits[e];
    }
  };

  std::uint64_t base = config.trials / nshards;
  std::uint64_t extra = config.trials % nshards;
  auto shard_trials = [&](std::size_t s) {
    return base + (s < extra ? 1 : 0);
  };
  if (nshards == 1) {
    run_shard(0, config.trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nshards);
    for (std::size_t s = 0; s < nshards; ++s)
      pool.emplace_back(run_shard, s, shard_trials(s));
    for (auto& th : pool) th.join();
  }

  std::uint64_t s1 = 0, s2 = 0, smax = 0;
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(mn) + 1, 0);
  std::vector<std::uint64_t> hits(nevents, 0);
  for (const auto& acc : sums) {
    s1 += acc.sinks;
    s2 += acc.sinks_sq;
    smax += acc.max_comp;
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += acc.hist[i];
    for (std::size_t e = 0; e < nevents; ++e) hits[e] += acc.hits[e];
  }

  SimulationStats st;
  st.trials = config.trials;
  double n = static_cast<double>(config.trials);
  st.mean_sinks = static_cast<double>(s1) / n;
  st.var_sinks =
      config.trials > 1
          ? (static_cast<double>(s2) - static_cast<double>(s1) * st.mean_sinks) /
                (n - 1)
          : 0.0;
  if (st.var_sinks < 0) st.var_sinks = 0;  // guard tiny negative rounding
  st.stderr_mean = std::sqrt(st.var_sinks / n);
  st.mean_max_component = static_cast<double>(smax) / n;
  for (int sz = 1; sz <= mn; ++sz)
    if (hist[static_cast<std::size_t>(sz)])
      st.component_size_histogram[sz] = hist[static_cast<std::size_t>(sz)];
  for (std::size_t e = 0; e < nevents; ++e) {
    EventStats es;
    es.hits = hits[e];
    es.estimate = static_cast<double>(hits[e]) / n;
    es.std_error = config.trials > 1
                       ? std::sqrt(es.estimate * (1.0 - es.estimate) / (n - 1))
                       : 0.0;
    st.event_frequencies[events[e].name] = es;
  }
  return st;
}

}  // namespace gig
