// gig — command-line front end: builds greatest-increase digraphs from
// labeling files, evaluates exact probabilities and bounds, runs the
// enumeration verifier and the Monte Carlo simulator. JSON on stdout,
// diagnostics on stderr.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error,
// 3 formula outside its stated domain, 4 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gig/gig.hpp"

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- parsing

gig::GridDims parse_dims(const std::string& text) {
  auto x = text.find_first_of("xX");
  if (x == std::string::npos)
    throw gig::input_error("dims must look like MxN, got '" + text + "'");
  try {
    int m = std::stoi(text.substr(0, x));
    int n = std::stoi(text.substr(x + 1));
    return gig::GridDims(m, n);
  } catch (const std::logic_error&) {
    throw gig::input_error("dims must look like MxN, got '" + text + "'");
  }
}

gig::Coord parse_coord(const std::string& token) {
  auto comma = token.find(',');
  if (comma == std::string::npos)
    throw gig::input_error("coordinate must look like row,col, got '" +
                           token + "'");
  try {
    return {std::stoi(token.substr(0, comma)),
            std::stoi(token.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw gig::input_error("coordinate must look like row,col, got '" +
                           token + "'");
  }
}

std::vector<gig::Coord> parse_coords(const std::string& text) {
  std::istringstream in(text);
  std::vector<gig::Coord> out;
  std::string token;
  while (in >> token) out.push_back(parse_coord(token));
  if (out.empty())
    throw gig::input_error("expected row,col coordinates, got '" + text + "'");
  return out;
}

int oracle_cap_from_env() {
  const char* env = std::getenv("GIG_ORACLE_CAP");
  if (!env) return gig::kDefaultEnumerationCap;
  std::string s(env);
  try {
    std::size_t used = 0;
    int cap = std::stoi(s, &used);
    if (used != s.size() || cap < 1) throw std::invalid_argument(s);
    return cap;
  } catch (const std::logic_error&) {
    throw gig::input_error(
        "GIG_ORACLE_CAP must be a positive integer, got '" + s + "'");
  }
}

// ------------------------------------------------------------- rendering

json jrat(const gig::Rational& q) {
  return {{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

json jcoord(gig::Coord c) { return json::array({c.row, c.col}); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// --------------------------------------------------------- labeling files

gig::Labeling labeling_from_json(const json& j, const std::string& path) {
  if (!j.contains("labels") || !j["labels"].is_array())
    throw gig::input_error(path + ": JSON labeling needs a \"labels\" array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j["labels"]) {
    if (!row.is_array())
      throw gig::input_error(path + ": \"labels\" must be an array of rows");
    rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw gig::input_error(path + ": labels must be integers");
      rows.back().push_back(v.get<int>());
    }
  }
  return gig::Labeling::from_rows(rows);
}

// CSV: one row per line, comma-separated integers. A leading '{' instead
// selects the JSON form that `build --format json` emits, so exported
// labelings re-ingest unchanged.
gig::Labeling read_labeling(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gig::input_error("cannot open labels file '" + path + "'");
  std::string all((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  auto first = all.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw gig::input_error(path + ": labels file is empty");
  if (all[first] == '{') {
    json j = json::parse(all, nullptr, false);
    if (j.is_discarded())
      throw gig::input_error(path + ": malformed JSON labeling");
    return labeling_from_json(j, path);
  }

  std::vector<std::vector<int>> rows;
  std::istringstream lines(all);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    rows.emplace_back();
    std::istringstream fields(line);
    std::string field;
    int fieldno = 0;
    while (std::getline(fields, field, ',')) {
      ++fieldno;
      auto b = field.find_first_not_of(" \t");
      auto e = field.find_last_not_of(" \t");
      std::string trimmed =
          b == std::string::npos ? "" : field.substr(b, e - b + 1);
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(trimmed, &used);
      } catch (const std::logic_error&) {
        used = std::string::npos;
      }
      if (trimmed.empty() || used != trimmed.size())
        throw gig::input_error(path + ":" + std::to_string(lineno) + ":" +
                               std::to_string(fieldno) +
                               ": expected integer, got '" + trimmed + "'");
      rows.back().push_back(value);
    }
  }
  return gig::Labeling::from_rows(rows);
}

// ------------------------------------------------------------ subcommands

void run_build(const std::string& labels_path, const std::string& format) {
  gig::GigDigraph g = gig::build_gig(read_labeling(labels_path));
  gig::GridDims d = g.dims();
  auto sink_set = gig::sinks(g);
  if (format == "json") {
    json out;
    out["dims"] = {{"rows", d.m}, {"cols", d.n}};
    json labels = json::array();
    for (int r = 1; r <= d.m; ++r) {
      json row = json::array();
      for (int c = 1; c <= d.n; ++c) row.push_back(g.labeling().label({r, c}));
      labels.push_back(row);
    }
    out["labels"] = labels;
    json edges = json::array();
    for (int r = 1; r <= d.m; ++r)
      for (int c = 1; c <= d.n; ++c)
        if (auto t = g.out_edge({r, c}))
          edges.push_back({{"from", jcoord({r, c})}, {"to", jcoord(*t)}});
    out["edges"] = edges;
    json sk = json::array();
    for (gig::Coord s : sink_set) sk.push_back(jcoord(s));
    out["sinks"] = sk;
    emit(out);
    return;
  }
  // DOT: node ids are "r,c"; labels shown; sinks drawn as double circles.
  std::cout << "digraph gig {\n";
  for (int r = 1; r <= d.m; ++r)
    for (int c = 1; c <= d.n; ++c) {
      gig::Coord v{r, c};
      std::cout << "  \"" << r << "," << c << "\" [label=\""
                << g.labeling().label(v) << "\"";
      if (sink_set.count(v)) std::cout << ", shape=doublecircle";
      std::cout << "];\n";
    }
  for (int r = 1; r <= d.m; ++r)
    for (int c = 1; c <= d.n; ++c)
      if (auto t = g.out_edge({r, c}))
        std::cout << "  \"" << r << "," << c << "\" -> \"" << t->row << ","
                  << t->col << "\";\n";
  std::cout << "}\n";
}

void run_path_prob(const std::string& dims_text, const std::string& path_text) {
  gig::GridDims dims = parse_dims(dims_text);
  gig::LatticePath path{parse_coords(path_text)};
  emit(jrat(gig::path_probability(path, dims)));
}

void run_sinks(const std::string& dims_text, const std::string& vertices_text,
               bool moments) {
  gig::GridDims dims = parse_dims(dims_text);
  if (moments) {
    json out;
    out["expected"] = jrat(gig::expected_sinks(dims));  // may throw domain
    try {
      out["variance_by_pairs"] = jrat(gig::variance_sinks_by_pairs(dims));
    } catch (const gig::domain_error& e) {
      out["variance_by_pairs"] = {{"domain", e.what()}};
    }
    try {
      out["variance_closed"] = jrat(gig::variance_sinks_closed(dims));
    } catch (const gig::domain_error& e) {
      out["variance_closed"] = {{"domain", e.what()}};
    }
    emit(out);
    return;
  }
  auto coords = parse_coords(vertices_text);
  std::set<gig::Coord> vs(coords.begin(), coords.end());
  json out;
  json jv = json::array();
  for (gig::Coord c : vs) jv.push_back(jcoord(c));
  out["vertices"] = jv;
  std::optional<std::string> warning;
  for (auto a = vs.begin(); a != vs.end(); ++a)
    for (auto b = std::next(a); b != vs.end(); ++b)
      if (gig::squared_distance(*a, *b) == 1 && !warning)
        warning = "vertices " + gig::to_string(*a) + " and " +
                  gig::to_string(*b) +
                  " are adjacent; adjacent cells can never both be sinks";
  out["probability"] = jrat(gig::multi_sink_probability(vs, dims));
  if (warning) out["warning"] = *warning;
  emit(out);
}

void run_bounds(const std::string& dims_text, const std::string& connect_text,
                const std::string& eps_text) {
  gig::GridDims dims = parse_dims(dims_text);
  json out;
  out["dims"] = {{"rows", dims.m}, {"cols", dims.n}};
  out["component_size_bound"] = jrat(gig::component_size_bound(dims));
  if (!connect_text.empty()) {
    auto cs = parse_coords(connect_text);
    if (cs.size() != 2)
      throw gig::input_error("--connect needs exactly two coordinates");
    auto cb = gig::connectivity_lower_bound(cs[0], cs[1], dims);
    out["connectivity"] = {{"from", jcoord(cs[0])},
                           {"to", jcoord(cs[1])},
                           {"shortest_length", cb.shortest_length},
                           {"path_count", cb.path_count.str()},
                           {"min_path_prob", jrat(cb.min_path_prob)},
                           {"count_times_min", jrat(cb.count_times_min)},
                           {"sum_over_paths", jrat(cb.sum_over_paths)}};
  }
  if (!eps_text.empty()) {
    gig::Rational eps = gig::parse_rational(eps_text);
    auto sb = gig::series_bound(eps);
    out["series"] = {{"eps", jrat(eps)},
                     {"truncated_value", jrat(sb.truncated_value)},
                     {"tail_bound", jrat(sb.tail_bound)},
                     {"certified_upper", jrat(sb.certified_upper)},
                     {"terms_used", sb.terms_used}};
  }
  emit(out);
}

void run_enumerate(const std::string& dims_text) {
  gig::GridDims dims = parse_dims(dims_text);
  auto st = gig::exact_statistics(dims, oracle_cap_from_env());
  json out;
  out["dims"] = {{"rows", dims.m}, {"cols", dims.n}};
  out["total_labelings"] =
      gig::factorial(static_cast<unsigned>(dims.cells())).str();
  out["expected_sinks"] = jrat(st.expected_sinks);
  out["variance_sinks"] = jrat(st.variance_sinks);
  json pmf;
  for (const auto& [k, p] : st.sink_count_pmf) pmf[std::to_string(k)] = jrat(p);
  out["sink_count_pmf"] = pmf;
  out["expected_max_component"] = jrat(st.expected_max_component);
  out["expected_component_size_per_sink"] =
      jrat(st.expected_component_size_per_sink);
  emit(out);
}

// ---------------------------------------------------------------- verify

// One exhaustive pass over every labeling of `dims`, then each closed-form
// result is compared with its enumerated counterpart. Exact comparisons
// only; any difference is a mismatch.
int run_verify(const std::string& dims_text) {
  gig::GridDims dims = parse_dims(dims_text);
  int cap = oracle_cap_from_env();
  int mn = dims.cells();
  if (mn > cap)
    throw gig::resource_error(
        "verify enumerates all " + std::to_string(mn) + "! labelings; " +
        std::to_string(mn) + " cells exceeds the cap of " +
        std::to_string(cap) +
        " (set GIG_ORACLE_CAP to raise it, or use `gig simulate`)");

  // Directed simple paths with 1 or 2 edges, as cell-index edge lists.
  struct PathEvent {
    gig::LatticePath path;
    std::vector<std::pair<int, int>> edges;
    unsigned long long hits = 0;
  };
  std::vector<PathEvent> paths;
  for (int i = 0; i < mn; ++i) {
    gig::Coord a = dims.coord(i);
    for (gig::Coord b : gig::neighbors(a, dims)) {
      paths.push_back({gig::LatticePath{{a, b}},
                       {{dims.index(a), dims.index(b)}},
                       0});
      for (gig::Coord c : gig::neighbors(b, dims)) {
        if (c == a) continue;
        paths.push_back({gig::LatticePath{{a, b, c}},
                         {{dims.index(a), dims.index(b)},
                          {dims.index(b), dims.index(c)}},
                         0});
      }
    }
  }

  std::vector<unsigned long long> mask_hist(
      static_cast<std::size_t>(1) << mn, 0);
  std::vector<unsigned long long> sink_hist(static_cast<std::size_t>(mn) + 1,
                                            0);
  unsigned long long sum_max = 0;
  std::vector<int> sink_of, sizes;
  gig::for_each_labeling(
      dims,
      [&](const gig::GigDigraph& g) {
        unsigned mask = 0;
        for (int i = 0; i < mn; ++i)
          if (g.out_index(i) < 0) mask |= 1u << i;
        ++mask_hist[mask];
        int nsinks = gig::detail::component_sizes(g, sink_of, sizes);
        ++sink_hist[static_cast<std::size_t>(nsinks)];
        sum_max += static_cast<unsigned long long>(
            *std::max_element(sizes.begin(), sizes.end()));
        for (auto& pe : paths) {
          bool ok = true;
          for (auto [u, v] : pe.edges)
            if (g.out_index(u) != v) {
              ok = false;
              break;
            }
          if (ok) ++pe.hits;
        }
      },
      cap);

  gig::Int total = gig::factorial(static_cast<unsigned>(mn));
  auto count_where = [&](unsigned need) {
    unsigned long long n = 0;
    for (std::size_t mask = 0; mask < mask_hist.size(); ++mask)
      if ((static_cast<unsigned>(mask) & need) == need) n += mask_hist[mask];
    return gig::Rational(gig::Int(n), total);
  };

  int mismatches = 0;
  auto report = [&](const std::string& name, const gig::Rational& lhs,
                    const gig::Rational& rhs) {
    bool ok = lhs == rhs;
    std::cout << name << ": " << lhs << " == " << rhs
              << (ok ? "" : "  MISMATCH") << "\n";
    if (!ok) ++mismatches;
  };

  std::cout << "verify " << dims.m << "x" << dims.n << " (" << total.str()
            << " labelings)\n";

  gig::Rational oracle_mean = 0, oracle_sq = 0;
  for (int k = 1; k <= mn; ++k) {
    gig::Rational p(gig::Int(sink_hist[static_cast<std::size_t>(k)]), total);
    oracle_mean += k * p;
    oracle_sq += k * k * p;
  }
  gig::Rational oracle_var = oracle_sq - oracle_mean * oracle_mean;

  gig::Rational vertex_sum = 0;
  for (int i = 0; i < mn; ++i)
    vertex_sum += gig::multi_sink_probability({dims.coord(i)}, dims);
  report("per-vertex sink sum vs enumerated mean", vertex_sum, oracle_mean);

  if (dims.m >= 3 && dims.n >= 3) {
    report("closed-form expected sinks vs enumeration",
           gig::expected_sinks(dims), oracle_mean);
    report("pairwise-covariance variance vs enumeration",
           gig::variance_sinks_by_pairs(dims), oracle_var);
  } else {
    std::cout << "closed-form moments: skipped (stated for m >= 3 and n >= 3)"
              << "\n";
  }
  if (dims.m >= 6 && dims.n >= 6)
    report("closed-form variance vs pairwise form",
           gig::variance_sinks_closed(dims),
           gig::variance_sinks_by_pairs(dims));

  // Path product rule over every 1- and 2-edge path; fold-back rejects
  // must have zero enumerated occurrences.
  unsigned long long path_checked = 0, reject_checked = 0;
  for (const auto& pe : paths) {
    gig::Rational oracle_p(gig::Int(pe.hits), total);
    gig::Rational formula;
    bool rejected = false;
    try {
      formula = gig::path_probability(pe.path, dims);
    } catch (const gig::input_error&) {
      rejected = true;
    }
    bool ok = rejected ? (oracle_p == 0) : (formula == oracle_p);
    if (!ok) {
      std::ostringstream name;
      name << "path product rule at";
      for (gig::Coord c : pe.path.vertices) name << " " << gig::to_string(c);
      report(name.str(), rejected ? gig::Rational(-1) : formula, oracle_p);
    }
    ++(rejected ? reject_checked : path_checked);
  }
  std::cout << "path product rule: " << path_checked
            << " paths exact, " << reject_checked
            << " fold-back paths with zero count\n";

  // Joint-sink order sum and the independence boundary, over all pairs.
  unsigned long long pair_checked = 0;
  bool independence_ok = true;
  for (int i = 0; i < mn; ++i)
    for (int j = i + 1; j < mn; ++j) {
      gig::Coord a = dims.coord(i), b = dims.coord(j);
      gig::Rational joint = count_where((1u << i) | (1u << j));
      gig::Rational formula = gig::multi_sink_probability({a, b}, dims);
      if (formula != joint) {
        report("joint-sink order sum at " + gig::to_string(a) + " " +
                   gig::to_string(b),
               formula, joint);
      }
      gig::Rational product = count_where(1u << i) * count_where(1u << j);
      bool factorizes = joint == product;
      if (factorizes != gig::sinks_independent(a, b, dims)) {
        independence_ok = false;
        ++mismatches;
        std::cout << "independence boundary at " << gig::to_string(a) << " "
                  << gig::to_string(b) << ": factorizes=" << factorizes
                  << " but squared distance " << gig::squared_distance(a, b)
                  << "  MISMATCH\n";
      }
      ++pair_checked;
    }
  std::cout << "joint-sink order sum: " << pair_checked << " pairs exact\n";
  if (independence_ok)
    std::cout << "independence boundary: factorization iff squared distance"
                 " > 4 on all pairs\n";

  gig::Rational avg_size = 0;
  for (int k = 1; k <= mn; ++k)
    if (sink_hist[static_cast<std::size_t>(k)])
      avg_size += gig::Rational(mn, k) *
                  gig::Rational(gig::Int(sink_hist[static_cast<std::size_t>(k)]),
                                total);
  gig::Rational bound = gig::component_size_bound(dims);
  bool bound_ok = avg_size <= bound;
  std::cout << "average component size within bound: " << avg_size
            << " <= " << bound << (bound_ok ? "" : "  MISMATCH") << "\n";
  if (!bound_ok) ++mismatches;

  if (mismatches) {
    std::cout << mismatches << " mismatch(es)\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}

// -------------------------------------------------------------- simulate

std::vector<gig::SimEvent> parse_events(const std::vector<std::string>& specs,
                                        gig::GridDims dims) {
  std::vector<gig::SimEvent> events;
  for (const auto& spec : specs) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw gig::input_error("event must be path:... or sinks:..., got '" +
                             spec + "'");
    std::string kind = spec.substr(0, colon);
    auto coords = parse_coords(spec.substr(colon + 1));
    if (kind == "path") {
      gig::LatticePath path{coords};
      gig::validate_path(path, dims);
      events.push_back({spec, [path](const gig::GigDigraph& g) {
                          return gig::contains_path(g, path);
                        }});
    } else if (kind == "sinks") {
      for (gig::Coord c : coords) gig::require_in_bounds(c, dims, "vertex");
      events.push_back({spec, [coords](const gig::GigDigraph& g) {
                          for (gig::Coord c : coords)
                            if (!g.is_sink(c)) return false;
                          return true;
                        }});
    } else {
      throw gig::input_error("unknown event kind '" + kind +
                             "' (expected path or sinks)");
    }
  }
  return events;
}

void run_simulate(const std::string& dims_text, std::uint64_t trials,
                  std::uint64_t seed, int shards,
                  const std::vector<std::string>& event_specs) {
  gig::SimulationConfig cfg;
  cfg.dims = parse_dims(dims_text);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.shards = shards;
  auto stats = gig::simulate(cfg, parse_events(event_specs, cfg.dims));
  json out;
  out["dims"] = {{"rows", cfg.dims.m}, {"cols", cfg.dims.n}};
  out["trials"] = stats.trials;
  out["seed"] = seed;
  out["shards"] = shards;
  out["mean_sinks"] = stats.mean_sinks;
  out["var_sinks"] = stats.var_sinks;
  out["stderr_mean"] = stats.stderr_mean;
  out["mean_max_component"] = stats.mean_max_component;
  json hist;
  for (const auto& [size, n] : stats.component_size_histogram)
    hist[std::to_string(size)] = n;
  out["component_size_histogram"] = hist;
  json ev;
  for (const auto& [name, es] : stats.event_frequencies)
    ev[name] = {{"hits", es.hits},
                {"estimate", es.estimate},
                {"stderr", es.std_error}};
  out["event_frequencies"] = ev;
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greatest-increase grid digraph toolkit"};
  app.require_subcommand(1);

  std::string labels_path, format = "dot";
  auto* build = app.add_subcommand("build", "render the digraph of a labeling");
  build->add_option("--labels", labels_path, "labeling file (CSV or JSON)")
      ->required();
  build->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  std::string pp_dims, pp_path;
  auto* path_prob =
      app.add_subcommand("path-prob", "exact containment probability of a path");
  path_prob->add_option("--dims", pp_dims, "grid size MxN")->required();
  path_prob->add_option("--path", pp_path, "\"r1,c1 r2,c2 ...\"")->required();

  std::string sk_dims, sk_vertices;
  bool sk_moments = false;
  auto* sinks_cmd =
      app.add_subcommand("sinks", "joint sink probability or moments");
  sinks_cmd->add_option("--dims", sk_dims, "grid size MxN")->required();
  auto* sk_v = sinks_cmd->add_option("--vertices", sk_vertices,
                                     "\"r1,c1 r2,c2 ...\"");
  auto* sk_m = sinks_cmd->add_flag("--moments", sk_moments,
                                   "expected sink count and variances");
  sk_v->excludes(sk_m);
  sk_m->excludes(sk_v);

  std::string bd_dims, bd_connect, bd_eps;
  auto* bounds_cmd = app.add_subcommand("bounds", "component and connectivity bounds");
  bounds_cmd->add_option("--dims", bd_dims, "grid size MxN")->required();
  bounds_cmd->add_option("--connect", bd_connect,
                         "\"r1,c1 r2,c2\": monotone-path connectivity bound");
  bounds_cmd->add_option("--series-eps", bd_eps,
                         "evaluate the limiting series to this tolerance");

  std::string vf_dims;
  auto* verify_cmd =
      app.add_subcommand("verify", "check formulas against full enumeration");
  verify_cmd->add_option("--dims", vf_dims, "grid size MxN")->required();

  std::string en_dims;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "exact statistics by full enumeration");
  enum_cmd->add_option("--dims", en_dims, "grid size MxN")->required();

  std::string sm_dims;
  std::uint64_t sm_trials = 0, sm_seed = 0;
  int sm_shards = 1;
  std::vector<std::string> sm_events;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimation");
  sim_cmd->add_option("--dims", sm_dims, "grid size MxN")->required();
  sim_cmd->add_option("--trials", sm_trials, "number of trials")->required();
  sim_cmd->add_option("--seed", sm_seed, "RNG seed");
  sim_cmd->add_option("--shards", sm_shards, "parallel shards");
  sim_cmd->add_option("--events", sm_events,
                      "path:\"r,c ...\" or sinks:\"r,c ...\" (repeatable)");

  int rc = 0;
  build->callback([&] { run_build(labels_path, format); });
  path_prob->callback([&] { run_path_prob(pp_dims, pp_path); });
  sinks_cmd->callback([&] {
    if (!sk_moments && sk_vertices.empty())
      throw gig::input_error("sinks needs --vertices or --moments");
    run_sinks(sk_dims, sk_vertices, sk_moments);
  });
  bounds_cmd->callback([&] { run_bounds(bd_dims, bd_connect, bd_eps); });
  verify_cmd->callback([&] { rc = run_verify(vf_dims); });
  enum_cmd->callback([&] { run_enumerate(en_dims); });
  sim_cmd->callback(
      [&] { run_simulate(sm_dims, sm_trials, sm_seed, sm_shards, sm_events); });

  try {
    app.parse(argc, argv);
    return rc;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gig::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gig::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const gig::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
