// cppg: build groups, export their power graphs, analyse complements, query surface
// embeddings and run the verification suites.
//
// Exit codes: 0 success (for verify: every check passed), 1 verification failed or a genus
// query ran out of budget, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cppg/cppg.hpp"

namespace {

using nlohmann::ordered_json;

struct BudgetFlags {
  std::optional<double> timeout;
  std::optional<std::uint64_t> node_limit;

  void attach(CLI::App* app) {
    app->add_option("--timeout", timeout, "Seconds per genus decision (default 600 or CPPG_GENUS_BUDGET)")
        ->check(CLI::PositiveNumber);
    app->add_option("--node-limit", node_limit, "Search nodes per genus decision (default 1e8)")
        ->check(CLI::PositiveNumber);
  }
  cppg::SearchBudget resolve() const {
    cppg::SearchBudget b = cppg::SearchBudget::from_environment();
    if (timeout) b.seconds = *timeout;
    if (node_limit) b.node_limit = *node_limit;
    return b;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cppg::Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw cppg::Error("cannot write " + path);
  out << text;
}

cppg::FiniteGroup build(const std::string& text, std::size_t cap, cppg::GroupSpec& spec) {
  spec = cppg::parse_group_spec(text);
  return cppg::build_group(spec, cap);
}

ordered_json histogram_json(const std::map<std::size_t, std::size_t>& h) {
  ordered_json j = ordered_json::object();
  for (const auto& [d, c] : h) j[std::to_string(d)] = c;
  return j;
}

int cmd_group(const std::string& text, std::size_t cap) {
  cppg::GroupSpec spec;
  cppg::FiniteGroup g = build(text, cap, spec);
  cppg::GroupFacts f = cppg::group_facts(spec, g);
  ordered_json j;
  j["spec"] = cppg::to_string(spec);
  j["name"] = f.name ? ordered_json(*f.name) : ordered_json(nullptr);
  j["order"] = f.order;
  j["cyclic"] = f.cyclic;
  j["abelian"] = f.abelian;
  j["exponent"] = f.exponent;
  j["element_orders"] = histogram_json(f.histogram);
  std::cout << j.dump(2) << "\n";
  return 0;
}

std::string directed_dot(const cppg::DirectedPowerGraph& d) {
  std::ostringstream os;
  os << "digraph P {\n";
  for (cppg::Vertex v = 0; v < d.out.size(); ++v)
    os << "  " << v << " [label=\"" << v << " (o=" << d.labels[v].order << ")\"];\n";
  for (cppg::Vertex u = 0; u < d.out.size(); ++u)
    for (cppg::Vertex v : d.out[u]) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

ordered_json directed_json(const cppg::DirectedPowerGraph& d) {
  ordered_json vertices = ordered_json::array(), arcs = ordered_json::array();
  for (cppg::Vertex v = 0; v < d.out.size(); ++v) vertices.push_back({{"id", v}, {"element_order", d.labels[v].order}});
  for (cppg::Vertex u = 0; u < d.out.size(); ++u)
    for (cppg::Vertex v : d.out[u]) arcs.push_back({u, v});
  return {{"vertices", vertices}, {"arcs", arcs}};
}

int cmd_graph(const std::string& text, const std::string& kind, const std::string& format, std::size_t cap,
              const std::string& output) {
  cppg::GroupSpec spec;
  cppg::FiniteGroup g = build(text, cap, spec);
  if (kind == "directed") {
    auto d = cppg::directed_power_graph(g);
    if (format == "graph6") throw cppg::InvalidSpec("graph6 cannot hold a directed graph");
    write_output(format == "dot" ? directed_dot(d) : directed_json(d).dump(2) + "\n", output);
    return 0;
  }
  cppg::SimpleGraph graph = kind == "power"    ? cppg::power_graph(g)
                            : kind == "proper" ? cppg::proper_power_graph(g)
                                               : cppg::complement_proper_power_graph(g);
  if (format == "graph6")
    write_output(cppg::to_graph6(graph) + "\n", output);
  else if (format == "dot")
    write_output(cppg::to_dot(graph), output);
  else
    write_output(cppg::to_json(graph).dump(2) + "\n", output);
  return 0;
}

template <class T>
ordered_json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, cppg::Distance>)
    return v->is_infinite() ? ordered_json("inf") : ordered_json(v->value());
  else if constexpr (std::is_enum_v<T>)
    return cppg::to_string(*v);
  else
    return *v;
}

int cmd_analyze(const std::string& text, std::size_t cap) {
  cppg::GroupSpec spec;
  cppg::FiniteGroup g = build(text, cap, spec);
  cppg::PredictedProperties p = cppg::classification_oracle(spec, g);
  cppg::SimpleGraph c = cppg::complement_proper_power_graph(g);
  cppg::PropertyRecord r = cppg::property_record(c);
  auto row = [](auto computed, auto predicted) { return ordered_json{{"computed", computed}, {"predicted", predicted}}; };
  auto dist = [](const cppg::Distance& d) { return d.is_infinite() ? ordered_json("inf") : ordered_json(d.value()); };
  ordered_json j;
  j["spec"] = cppg::to_string(spec);
  j["order"] = g.order();
  j["vertices"] = c.vertex_count();
  j["edges"] = c.edge_count();
  ordered_json props;
  props["complete"] = row(r.is_complete, opt_json(p.complete));
  props["claw_free"] = row(r.is_claw_free, opt_json(p.claw_free));
  props["bipartite"] = row(r.is_bipartite, opt_json(p.bipartite));
  props["triangle_free"] = row(r.is_triangle_free, opt_json(p.triangle_free));
  props["components"] = row(r.component_count, opt_json(p.components));
  props["isolated_vertices"] = row(r.isolated_vertex_count, opt_json(p.isolated));
  props["diameter"] = row(dist(r.diameter), opt_json(p.diameter));
  props["girth"] = row(dist(r.girth), opt_json(p.girth));
  props["path"] = row(r.is_path, opt_json(p.path));
  props["star"] = row(r.is_star, opt_json(p.star));
  props["cycle"] = row(r.is_cycle, opt_json(p.cycle));
  props["planar"] = row(cppg::is_planar(c), p.orientable ? ordered_json(*p.orientable == cppg::OrientableClass::Planar)
                                                        : ordered_json(nullptr));
  props["outerplanar"] = row(cppg::is_outerplanar(c), opt_json(p.outerplanar));
  props["orientable_class"] = row(nullptr, opt_json(p.orientable));
  props["nonorientable_class"] = row(nullptr, opt_json(p.nonorientable));
  j["properties"] = props;
  j["structure"] = p.structure ? ordered_json(p.structure->description) : ordered_json(nullptr);
  std::cout << j.dump(2) << "\n";
  return 0;
}

cppg::SimpleGraph load_graph(const std::string& input, std::size_t cap) {
  if (input.rfind("fixture:", 0) == 0) return cppg::fixtures::fixture(input.substr(8));
  std::ifstream probe(input);
  if (probe) {
    std::string text = slurp(input);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return cppg::from_json_text(text);
    return cppg::from_graph6(text.substr(0, text.find('\n')));
  }
  cppg::GroupSpec spec;
  return cppg::complement_proper_power_graph(build(input, cap, spec));
}

ordered_json scheme_json(const cppg::EmbeddingScheme& s) {
  ordered_json rotation = ordered_json::array(), negative = ordered_json::array();
  for (const auto& r : s.rotation) rotation.push_back(r);
  for (auto [u, v] : s.negative) negative.push_back({u, v});
  return {{"rotation", rotation}, {"negative_edges", negative}};
}

int cmd_genus(const std::string& input, std::optional<unsigned> gmax, std::optional<unsigned> kmax,
              const BudgetFlags& budget, bool witness, bool no_bounds, std::size_t cap) {
  if (!gmax && !kmax) gmax = 1;
  cppg::SimpleGraph g = load_graph(input, cap);
  cppg::SearchOptions options;
  options.budget = budget.resolve();
  options.use_known_bounds = !no_bounds;
  ordered_json out;
  out["input"] = input;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  bool exhausted = false;
  auto report = [&](const char* key, unsigned bound, const cppg::GenusResult& r) {
    ordered_json j;
    j["bound"] = bound;
    j["decision"] = cppg::to_string(r.decision);
    j["method"] = r.method;
    j["nodes"] = r.nodes;
    j["elapsed_seconds"] = r.elapsed_seconds;
    if (r.witness) {
      cppg::FaceTrace t = cppg::face_trace(g, *r.witness);
      j["faces"] = t.face_count();
      j["euler_genus"] = t.euler_genus;
      j["orientable_scheme"] = t.orientable;
      if (witness) j["witness"] = scheme_json(*r.witness);
    }
    exhausted = exhausted || r.decision == cppg::Decision::BudgetExhausted;
    out[key] = j;
  };
  if (gmax) report("orientable", *gmax, cppg::orientable_genus_at_most(g, *gmax, options));
  if (kmax) report("nonorientable", *kmax, cppg::euler_genus_at_most(g, *kmax, options));
  std::cout << out.dump(2) << "\n";
  return exhausted ? 1 : 0;
}

int cmd_verify(const std::string& suite_name, std::size_t max_order, const std::string& report_path,
               const std::string& manifest, std::size_t jobs, const BudgetFlags& budget, std::size_t iso_max,
               std::size_t cap, bool timing) {
  cppg::VerifyOptions o;
  o.budget = budget.resolve();
  o.max_order = max_order;
  o.jobs = jobs;
  o.iso_max_vertices = iso_max;
  o.order_cap = cap;
  cppg::Suite suite = cppg::parse_suite(suite_name);
  cppg::VerificationReport r = manifest.empty()
                                   ? cppg::run_default_suite(suite, o)
                                   : cppg::run_suite(cppg::corpus::read_manifest(manifest), suite, o);
  if (!report_path.empty()) write_output(r.to_json(timing).dump(2) + "\n", report_path);
  std::size_t failed = 0;
  for (const auto& e : r.entries) {
    if (e.passed()) continue;
    ++failed;
    std::cerr << "FAIL [" << e.suite << "] " << e.spec;
    if (e.error) std::cerr << ": " << *e.error;
    std::cerr << "\n";
    for (const auto& c : e.checks)
      if (c.failing())
        std::cerr << "  " << c.name << ": computed " << c.computed.dump() << ", predicted " << c.predicted.dump()
                  << (c.status == cppg::CheckStatus::Inconclusive ? " (inconclusive)" : "") << "\n";
  }
  std::cout << "suite " << r.suite << ": " << r.entries.size() << " entries, " << failed << " failed; checks "
            << r.count(cppg::CheckStatus::Pass) << " pass, " << r.count(cppg::CheckStatus::Fail) << " fail, "
            << r.count(cppg::CheckStatus::Silent) << " silent, " << r.count(cppg::CheckStatus::Inconclusive)
            << " inconclusive\n";
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graphs of finite groups: construction, analysis and embedding checks"};
  app.require_subcommand(1);
  std::size_t cap = cppg::kDefaultOrderCap;
  app.add_option("--order-cap", cap, "Refuse groups larger than this")->check(CLI::PositiveNumber);

  std::string spec;
  auto* group = app.add_subcommand("group", "Build a group and print its invariants");
  group->add_option("spec", spec, "Group spec, e.g. Z4xZ2, Q8, SD(7,3,2), perm:(1 2 3);(1 2)")->required();

  std::string kind = "complement", format = "json", output;
  auto* graph = app.add_subcommand("graph", "Export a power graph");
  graph->add_option("spec", spec)->required();
  graph->add_option("--kind", kind)->check(CLI::IsMember({"power", "proper", "complement", "directed"}));
  graph->add_option("--format", format)->check(CLI::IsMember({"graph6", "dot", "json"}));
  graph->add_option("-o,--output", output, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Compare complement-graph properties with the predictions");
  analyze->add_option("spec", spec)->required();

  std::string input;
  std::optional<unsigned> gmax, kmax;
  bool witness = false, no_bounds = false;
  BudgetFlags genus_budget;
  auto* genus = app.add_subcommand("genus", "Decide small-genus embeddability");
  genus->add_option("input", input, "Group spec, graph file (graph6 or JSON), or fixture:NAME")->required();
  genus->add_option("--orientable-max", gmax, "Orientable genus bound g (0..2)")->check(CLI::Range(0U, 2U));
  genus->add_option("--euler-max", kmax, "Crosscap bound k (1..2)")->check(CLI::Range(1U, 2U));
  genus->add_flag("--witness", witness, "Print the embedding scheme when one is found");
  genus->add_flag("--no-known-bounds", no_bounds, "Skip the K_n / K_{m,n} shortcuts");
  genus_budget.attach(genus);

  std::string suite = "all", report, manifest;
  std::size_t max_order = 0, jobs = 1, iso_max = 128;
  bool no_timing = false;
  BudgetFlags verify_budget;
  auto* verify = app.add_subcommand("verify", "Run computed-vs-predicted suites");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"formulas", "structure", "classification", "topology", "fixtures", "all"}));
  verify->add_option("--max-order", max_order, "Skip groups above this order (0: no limit)");
  verify->add_option("--report", report, "Write the JSON report here ('-' for stdout)");
  verify->add_option("--manifest", manifest, "Corpus file, one spec per line (default: shipped corpus)");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--iso-max", iso_max, "Vertex limit for structure isomorphism tests");
  verify->add_flag("--no-timing", no_timing, "Omit elapsed times so reports compare byte for byte");
  verify_budget.attach(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*group) return cmd_group(spec, cap);
    if (*graph) return cmd_graph(spec, kind, format, cap, output);
    if (*analyze) return cmd_analyze(spec, cap);
    if (*genus) return cmd_genus(input, gmax, kmax, genus_budget, witness, no_bounds, cap);
    if (*verify)
      return cmd_verify(suite, max_order, report, manifest, jobs, verify_budget, iso_max, cap, !no_timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
