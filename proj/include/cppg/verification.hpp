#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "cppg/corpus.hpp"
#include "cppg/errors.hpp"
#include "cppg/finite_group.hpp"
#include "cppg/fixtures.hpp"
#include "cppg/genus_search.hpp"
#include "cppg/graph_analysis.hpp"
#include "cppg/isomorphism.hpp"
#include "cppg/number_theory.hpp"
#include "cppg/oracle.hpp"
#include "cppg/planarity.hpp"
#include "cppg/power_graph.hpp"
#include "cppg/spec_parser.hpp"

namespace cppg {

enum class Suite { Formulas, Structure, Classification, Topology, Fixtures, All };

inline std::string to_string(Suite s) {
  switch (s) {
    case Suite::Formulas: return "formulas";
    case Suite::Structure: return "structure";
    case Suite::Classification: return "classification";
    case Suite::Topology: return "topology";
    case Suite::Fixtures: return "fixtures";
    case Suite::All: return "all";
  }
  return "?";
}

inline Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::Formulas, Suite::Structure, Suite::Classification, Suite::Topology, Suite::Fixtures,
                  Suite::All})
    if (to_string(s) == name) return s;
  throw InvalidSpec("unknown suite '" + name + "'");
}

enum class CheckStatus { Pass, Fail, Silent, Inconclusive };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Silent: return "silent";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// One computed-vs-predicted comparison. Values are JSON scalars: booleans, counts, "inf",
/// class names. A null computed value means the engine ran out of budget; a null
/// prediction means no classification result applies.
struct Check {
  std::string name;
  nlohmann::ordered_json computed;
  nlohmann::ordered_json predicted;
  CheckStatus status = CheckStatus::Silent;
  std::string detail;

  /// Inconclusive only fails when a prediction was made.
  bool failing() const {
    return status == CheckStatus::Fail || (status == CheckStatus::Inconclusive && !predicted.is_null());
  }
};

struct ReportEntry {
  std::string suite;
  std::string spec;
  std::optional<std::size_t> order;
  std::vector<Check> checks;
  std::optional<std::string> error;
  double elapsed_seconds = 0.0;

  bool passed() const {
    if (error) return false;
    for (const auto& c : checks)
      if (c.failing()) return false;
    return true;
  }
};

struct VerifyOptions {
  SearchBudget budget = SearchBudget::from_environment();
  std::size_t order_cap = kDefaultOrderCap;
  /// Entries of larger order are skipped; 0 means no limit.
  std::size_t max_order = 0;
  std::size_t jobs = 1;
  std::size_t iso_max_vertices = 128;
};

struct VerificationReport {
  std::string suite;
  SearchBudget budget;
  std::vector<ReportEntry> entries;

  bool passed() const {
    for (const auto& e : entries)
      if (!e.passed()) return false;
    return true;
  }

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& e : entries)
      for (const auto& c : e.checks) n += c.status == s ? 1 : 0;
    return n;
  }

  /// Without timing the output is a pure function of corpus, suite and budgets.
  nlohmann::ordered_json to_json(bool include_timing = true) const {
    nlohmann::ordered_json out;
    out["suite"] = suite;
    out["budget"] = {{"node_limit", budget.node_limit}, {"seconds", budget.seconds}};
    std::size_t failed = 0;
    double total = 0;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
      failed += e.passed() ? 0 : 1;
      total += e.elapsed_seconds;
      nlohmann::ordered_json j;
      j["suite"] = e.suite;
      j["spec"] = e.spec;
      j["order"] = e.order ? nlohmann::ordered_json(*e.order) : nlohmann::ordered_json(nullptr);
      j["passed"] = e.passed();
      j["error"] = e.error ? nlohmann::ordered_json(*e.error) : nlohmann::ordered_json(nullptr);
      if (include_timing) j["elapsed_seconds"] = e.elapsed_seconds;
      nlohmann::ordered_json checks = nlohmann::ordered_json::array();
      for (const auto& c : e.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["computed"] = c.computed;
        cj["predicted"] = c.predicted;
        cj["status"] = to_string(c.status);
        cj["match"] = c.status == CheckStatus::Pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
      }
      j["checks"] = checks;
      list.push_back(j);
    }
    nlohmann::ordered_json summary;
    summary["entries"] = entries.size();
    summary["failed_entries"] = failed;
    summary["checks"] = {{"pass", count(CheckStatus::Pass)},
                         {"fail", count(CheckStatus::Fail)},
                         {"silent", count(CheckStatus::Silent)},
                         {"inconclusive", count(CheckStatus::Inconclusive)}};
    summary["passed"] = passed();
    if (include_timing) summary["elapsed_seconds"] = total;
    out["summary"] = summary;
    out["entries"] = list;
    return out;
  }
};

namespace detail {

inline nlohmann::ordered_json encode(bool b) { return b; }
inline nlohmann::ordered_json encode(std::size_t n) { return n; }
inline nlohmann::ordered_json encode(const Distance& d) {
  return d.is_infinite() ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(d.value());
}
inline nlohmann::ordered_json encode(OrientableClass c) { return to_string(c); }
inline nlohmann::ordered_json encode(NonorientableClass c) { return to_string(c); }
inline nlohmann::ordered_json encode(const std::string& s) { return s; }
inline nlohmann::ordered_json encode(const nlohmann::ordered_json& j) { return j; }

template <class T>
Check compare(std::string name, const std::optional<T>& computed, const std::optional<T>& predicted,
              std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.detail = std::move(detail);
  if (computed) c.computed = encode(*computed);
  if (predicted) c.predicted = encode(*predicted);
  if (!computed)
    c.status = CheckStatus::Inconclusive;
  else if (!predicted)
    c.status = CheckStatus::Silent;
  else
    c.status = *computed == *predicted ? CheckStatus::Pass : CheckStatus::Fail;
  return c;
}

template <class T>
Check compare(std::string name, const T& computed, const std::optional<T>& predicted) {
  return compare(std::move(name), std::optional<T>(computed), predicted);
}

template <class T>
Check expect(std::string name, const std::optional<T>& computed, const T& predicted, std::string detail = {}) {
  return compare(std::move(name), computed, std::optional<T>(predicted), std::move(detail));
}

inline std::string describe(const GenusResult& r) {
  return r.method + ", " + std::to_string(r.nodes) + " nodes";
}

inline SearchOptions search_options(const VerifyOptions& o, bool known_bounds = true) {
  SearchOptions s;
  s.budget = o.budget;
  s.use_known_bounds = known_bounds;
  return s;
}

struct GroupRun {
  GroupSpec spec;
  FiniteGroup group;
  PredictedProperties predicted;
  SimpleGraph complement;
};

inline void consistency_check(const GroupRun& r, std::vector<Check>& out) {
  auto bad = consistency_violations(r.predicted, r.complement.vertex_count());
  std::string joined;
  for (const auto& b : bad) joined += (joined.empty() ? "" : "; ") + b;
  out.push_back(compare<std::string>("oracle_consistency", std::string(bad.empty() ? "consistent" : joined),
                                     std::string("consistent")));
}

inline void formulas_checks(const GroupRun& r, std::vector<Check>& out) {
  consistency_check(r, out);
  out.push_back(compare("components", component_count(r.complement), r.predicted.components));
  out.push_back(compare("isolated_vertices", isolated_vertex_count(r.complement), r.predicted.isolated));
}

inline void structure_checks(const GroupRun& r, const VerifyOptions& o, std::vector<Check>& out) {
  consistency_check(r, out);
  const auto& s = r.predicted.structure;
  if (!s) {
    out.push_back(compare<std::string>("structure", std::string("not predicted"), std::nullopt));
    return;
  }
  std::optional<std::string> computed;
  std::string detail;
  try {
    bool iso = is_isomorphic(r.complement, s->graph, IsomorphismOptions{o.iso_max_vertices});
    computed = iso ? s->description
                   : "not isomorphic (" + std::to_string(r.complement.vertex_count()) + " vertices, " +
                         std::to_string(r.complement.edge_count()) + " edges)";
  } catch (const BoundExceeded& e) {
    detail = e.what();
  }
  out.push_back(compare("structure", computed, std::optional<std::string>(s->description), detail));
}

inline void classification_checks(const GroupRun& r, std::vector<Check>& out) {
  consistency_check(r, out);
  const SimpleGraph& g = r.complement;
  PropertyRecord rec = property_record(g);
  const auto& p = r.predicted;
  out.push_back(compare("complete", rec.is_complete, p.complete));
  out.push_back(compare("claw_free", rec.is_claw_free, p.claw_free));
  out.push_back(compare("bipartite", rec.is_bipartite, p.bipartite));
  out.push_back(compare("triangle_free", rec.is_triangle_free, p.triangle_free));
  out.push_back(compare("bipartite_iff_triangle_free", rec.is_bipartite == rec.is_triangle_free,
                        std::optional<bool>(true)));
  out.push_back(compare("components", rec.component_count, p.components));
  out.push_back(compare("isolated_vertices", rec.isolated_vertex_count, p.isolated));
  out.push_back(compare("diameter", rec.diameter, p.diameter));
  out.push_back(compare("girth", rec.girth, p.girth));
  out.push_back(compare("path", rec.is_path, p.path));
  out.push_back(compare("star", rec.is_star, p.star));
  out.push_back(compare("cycle", rec.is_cycle, p.cycle));
  if (distinct_prime_count(r.group.order()) >= 3) {
    bool higher = p.orientable == OrientableClass::Higher && p.nonorientable == NonorientableClass::Higher;
    out.push_back(compare("three_primes_predicted_higher", higher, std::optional<bool>(true)));
  }
}

inline std::optional<OrientableClass> orientable_class(const SimpleGraph& g, bool planar, const VerifyOptions& o,
                                                       std::string& detail) {
  if (planar) return OrientableClass::Planar;
  GenusResult r = orientable_genus_at_most(g, 1, search_options(o));
  detail = describe(r);
  if (r.decision == Decision::Embeddable) return OrientableClass::Toroidal;
  if (r.decision == Decision::NotEmbeddable) return OrientableClass::Higher;
  return std::nullopt;
}

inline std::optional<NonorientableClass> nonorientable_class(const SimpleGraph& g, bool planar,
                                                             const VerifyOptions& o, std::string& detail) {
  if (planar) return NonorientableClass::Planar;
  GenusResult r = euler_genus_at_most(g, 1, search_options(o));
  detail = describe(r);
  if (r.decision == Decision::Embeddable) return NonorientableClass::Projective;
  if (r.decision == Decision::NotEmbeddable) return NonorientableClass::Higher;
  return std::nullopt;
}

inline void topology_checks(const GroupRun& r, const VerifyOptions& o, std::vector<Check>& out) {
  consistency_check(r, out);
  const SimpleGraph& g = r.complement;
  const auto& p = r.predicted;
  bool planar = is_planar(g);
  std::optional<bool> predicted_planar;
  if (p.orientable) predicted_planar = *p.orientable == OrientableClass::Planar;
  out.push_back(compare("planar", planar, predicted_planar));

  std::string od, nd;
  auto oc = orientable_class(g, planar, o, od);
  auto nc = nonorientable_class(g, planar, o, nd);
  out.push_back(compare("orientable_class", oc, p.orientable, od));
  out.push_back(compare("nonorientable_class", nc, p.nonorientable, nd));
  out.push_back(compare("outerplanar", is_outerplanar(g), p.outerplanar));
  out.push_back(compare("k14_free", !contains_complete_bipartite_subgraph(g, 1, 4), p.k14_free));
  out.push_back(compare("k23_free", !contains_complete_bipartite_subgraph(g, 2, 3), p.k23_free));
  if (distinct_prime_count(r.group.order()) >= 3) {
    std::optional<bool> higher;
    if (oc && nc) higher = *oc == OrientableClass::Higher && *nc == NonorientableClass::Higher;
    out.push_back(expect("three_primes_not_toroidal_or_projective", higher, true));
  }
}

inline std::optional<ReportEntry> run_group_entry(const std::string& text, Suite suite, const VerifyOptions& o) {
  auto start = std::chrono::steady_clock::now();
  ReportEntry e;
  e.suite = to_string(suite);
  e.spec = text;
  try {
    GroupSpec spec = parse_group_spec(text);
    std::uint64_t nominal = nominal_order(spec);
    if (o.max_order > 0 && nominal > o.max_order) return std::nullopt;
    FiniteGroup group = build_group(spec, o.order_cap);
    if (o.max_order > 0 && group.order() > o.max_order) return std::nullopt;
    e.order = group.order();
    PredictedProperties predicted = classification_oracle(spec, group);
    SimpleGraph complement = complement_proper_power_graph(group);
    GroupRun run{spec, std::move(group), std::move(predicted), std::move(complement)};
    switch (suite) {
      case Suite::Formulas: formulas_checks(run, e.checks); break;
      case Suite::Structure: structure_checks(run, o, e.checks); break;
      case Suite::Classification: classification_checks(run, e.checks); break;
      case Suite::Topology: topology_checks(run, o, e.checks); break;
      default: throw InvalidSpec("not a group suite: " + to_string(suite));
    }
  } catch (const std::exception& ex) {
    e.error = ex.what();
  }
  e.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return e;
}

/// Orientable genus of a small graph found by search alone: 0, 1, 2, or ">2".
inline std::optional<nlohmann::ordered_json> searched_orientable_genus(const SimpleGraph& g, const VerifyOptions& o,
                                                                      std::string& detail) {
  for (unsigned k = 0; k <= 2; ++k) {
    GenusResult r = orientable_genus_at_most(g, k, search_options(o, false));
    detail += (detail.empty() ? "" : "; ") + ("g<=" + std::to_string(k) + ": " + describe(r));
    if (r.decision == Decision::BudgetExhausted) return std::nullopt;
    if (r.decision == Decision::Embeddable) return nlohmann::ordered_json(k);
  }
  return nlohmann::ordered_json(">2");
}

inline std::optional<nlohmann::ordered_json> searched_nonorientable_genus(const SimpleGraph& g,
                                                                         const VerifyOptions& o, std::string& detail) {
  if (is_planar(g)) {
    detail = "planarity";
    return nlohmann::ordered_json(0);
  }
  for (unsigned k = 1; k <= 2; ++k) {
    GenusResult r = euler_genus_at_most(g, k, search_options(o, false));
    detail += (detail.empty() ? "" : "; ") + ("k<=" + std::to_string(k) + ": " + describe(r));
    if (r.decision == Decision::BudgetExhausted) return std::nullopt;
    if (r.decision == Decision::Embeddable) return nlohmann::ordered_json(k);
  }
  return nlohmann::ordered_json(">2");
}

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

inline std::vector<ReportEntry> fixture_entries(const VerifyOptions& o) {
  using J = nlohmann::ordered_json;
  std::vector<ReportEntry> out;
  auto timed = [&](std::string name, auto body) {
    auto start = std::chrono::steady_clock::now();
    ReportEntry e;
    e.suite = "fixtures";
    e.spec = std::move(name);
    try {
      body(e.checks);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    e.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(e));
  };
  auto size_checks = [](const SimpleGraph& g, std::size_t n, std::size_t m, std::vector<Check>& c) {
    c.push_back(compare("vertices", g.vertex_count(), std::optional<std::size_t>(n)));
    c.push_back(compare("edges", g.edge_count(), std::optional<std::size_t>(m)));
  };

  timed("K3,3,3", [&](std::vector<Check>& c) {
    SimpleGraph g = fixtures::k333();
    size_checks(g, 9, 27, c);
    GenusResult r = orientable_genus_at_most(g, 1, search_options(o, false));
    std::optional<bool> toroidal;
    std::optional<std::size_t> faces;
    std::optional<bool> triangles;
    if (r.decision != Decision::BudgetExhausted) toroidal = r.decision == Decision::Embeddable;
    if (r.witness) {
      FaceTrace t = face_trace(g, *r.witness);
      faces = t.face_count();
      triangles = std::all_of(t.faces.begin(), t.faces.end(), [](const Face& f) { return f.length() == 3; });
      c.push_back(expect("witness_euler_genus", std::optional<std::size_t>(t.euler_genus), std::size_t{2}));
      c.push_back(expect("witness_orientable", std::optional<bool>(t.orientable), true));
    }
    c.push_back(expect("toroidal", toroidal, true, describe(r)));
    c.push_back(expect("torus_faces", faces, std::size_t{18}));
    c.push_back(expect("torus_faces_all_triangles", triangles, true));
  });

  timed("K3,3,3uu", [&](std::vector<Check>& c) {
    SimpleGraph g = fixtures::k333_uu();
    size_checks(g, 11, 33, c);
    std::vector<std::size_t> degrees;
    for (Vertex v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    J computed = degrees;
    c.push_back(expect("degree_sequence", std::optional<J>(computed), J({3, 3, 6, 6, 6, 6, 6, 6, 8, 8, 8})));
    GenusResult r = orientable_genus_at_most(g, 1, search_options(o, false));
    std::optional<bool> toroidal;
    if (r.decision != Decision::BudgetExhausted) toroidal = r.decision == Decision::Embeddable;
    c.push_back(expect("toroidal", toroidal, false, describe(r)));
  });

  timed("K(4,2)", [&](std::vector<Check>& c) { size_checks(fixtures::equipartite(4, 2), 8, 24, c); });

  auto genus_entry = [&](const std::string& name, const SimpleGraph& g, std::size_t orientable,
                         std::optional<std::size_t> nonorientable) {
    timed(name, [&](std::vector<Check>& c) {
      std::string od;
      auto og = searched_orientable_genus(g, o, od);
      c.push_back(expect("orientable_genus", og, J(orientable), od));
      if (nonorientable) {
        std::string nd;
        auto ng = searched_nonorientable_genus(g, o, nd);
        c.push_back(expect("nonorientable_genus", ng, J(*nonorientable), nd));
      }
    });
  };
  for (std::size_t n = 3; n <= 7; ++n) {
    std::size_t t = (n - 3) * (n - 4);
    std::optional<std::size_t> crosscaps;
    if (n <= 6) crosscaps = ceil_div(t, 6);
    genus_entry("K" + std::to_string(n), fixtures::complete(n), ceil_div(t, 12), crosscaps);
  }
  for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {3, 4}, {4, 4}, {3, 5}}) {
    std::size_t t = (a - 2) * (b - 2);
    std::optional<std::size_t> crosscaps;
    if (a == 3 && b <= 4) crosscaps = ceil_div(t, 2);
    genus_entry("K" + std::to_string(a) + "," + std::to_string(b), fixtures::complete_bipartite(a, b),
                ceil_div(t, 4), crosscaps);
  }

  timed("K7 crosscaps", [&](std::vector<Check>& c) {
    SimpleGraph g = fixtures::complete(7);
    GenusResult one = euler_genus_at_most(g, 1, search_options(o, false));
    std::optional<bool> above_one;
    if (one.decision != Decision::BudgetExhausted) above_one = one.decision == Decision::NotEmbeddable;
    c.push_back(expect("crosscap_number_above_1", above_one, true, describe(one)));
    // Reported without a prediction: a budget-permitting extra.
    GenusResult two = euler_genus_at_most(g, 2, search_options(o, false));
    std::optional<bool> above_two;
    if (two.decision != Decision::BudgetExhausted) above_two = two.decision == Decision::NotEmbeddable;
    c.push_back(compare("crosscap_number_above_2", above_two, std::optional<bool>(), describe(two)));
  });
  return out;
}

/// Evaluates f(0..count-1) on `jobs` threads; results keep index order.
template <class T, class F>
std::vector<T> ordered_parallel_map(std::size_t count, std::size_t jobs, F f) {
  std::vector<T> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = f(i);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace detail

/// Runs one suite over a corpus of spec strings. Group suites build every entry and compare
/// computed properties with the oracle; failures to parse or build are recorded per entry.
/// The fixtures suite ignores the corpus. "all" runs every group suite, then the fixtures.
inline VerificationReport run_suite(const std::vector<std::string>& corpus, Suite suite,
                                    const VerifyOptions& options = {}) {
  VerificationReport report;
  report.suite = to_string(suite);
  report.budget = options.budget;
  auto run_group_suite = [&](Suite s) {
    auto results = detail::ordered_parallel_map<std::optional<ReportEntry>>(
        corpus.size(), options.jobs, [&](std::size_t i) { return detail::run_group_entry(corpus[i], s, options); });
    for (auto& r : results)
      if (r) report.entries.push_back(std::move(*r));
  };
  if (suite == Suite::All) {
    for (Suite s : {Suite::Formulas, Suite::Structure, Suite::Classification, Suite::Topology}) run_group_suite(s);
    for (auto& e : detail::fixture_entries(options)) report.entries.push_back(std::move(e));
  } else if (suite == Suite::Fixtures) {
    report.entries = detail::fixture_entries(options);
  } else {
    run_group_suite(suite);
  }
  return report;
}

/// The shipped corpus for a suite: the formulas list, the structure list, or the named list.
inline std::vector<std::string> default_corpus(Suite suite) {
  switch (suite) {
    case Suite::Formulas: return corpus::formulas();
    case Suite::Structure: return corpus::structure();
    case Suite::Classification:
    case Suite::Topology: return corpus::named();
    default: return {};
  }
}

/// Each suite over its own default corpus; "all" concatenates them.
inline VerificationReport run_default_suite(Suite suite, const VerifyOptions& options = {}) {
  if (suite != Suite::All) return run_suite(default_corpus(suite), suite, options);
  VerificationReport report;
  report.suite = "all";
  report.budget = options.budget;
  for (Suite s : {Suite::Formulas, Suite::Structure, Suite::Classification, Suite::Topology, Suite::Fixtures}) {
    auto part = run_suite(default_corpus(s), s, options);
    for (auto& e : part.entries) report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace cppg
