#include <atomic>
#include <chrono>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rstem/exchange.hpp"
#include "rstem/invariants.hpp"
#include "rstem/io.hpp"
#include "rstem/oracle.hpp"

using namespace rstem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_pair(const std::string& s, const char* flag) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    const int a = std::stoi(s.substr(0, comma));
    const int b = std::stoi(s.substr(comma + 1));
    return {a, b};
  } catch (const std::exception&) {
    throw ParseError(std::string(flag) + " expects 'a,b', got '" + s + "'");
  }
}

std::string edges_str(std::span<const Edge> edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? " " : "") << edges[i].u << '-' << edges[i].v;
  return os.str();
}

std::string set_str(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string in;
  std::vector<int> alpha_m;
  std::vector<std::string> sigma;
};

int run_analyze(const AnalyzeArgs& a, RunReport& rep) {
  const Graph g = read_graph_file(a.in);
  rep.input = a.in;
  rep.params = {{"alpha_m", a.alpha_m}, {"sigma", a.sigma}};
  const auto claw = find_claw(g);
  std::cout << "n = " << g.order() << ", edges = " << g.edge_count() << "\n";
  std::cout << "connected: " << (is_connected(g) ? "yes" : "no") << "\n";
  std::cout << "claw-free: " << (claw ? "no" : "yes");
  if (claw) std::cout << " (claw at " << claw->center << ")";
  std::cout << "\n";
  Json alphas = Json::object(), sigmas = Json::object();
  const auto ms = a.alpha_m.empty() ? std::vector<int>{2} : a.alpha_m;
  for (int m : ms) {
    const auto r = alpha_m(g, m);
    std::cout << "alpha^" << m << " = " << r.size << "  witness " << set_str(r.witness.members) << "\n";
    alphas[std::to_string(m)] = {{"value", r.size}, {"witness", r.witness.members.ids()}};
  }
  for (const auto& spec : a.sigma) {
    const auto [p, m] = parse_pair(spec, "--sigma");
    const auto r = sigma_p_m(g, p, m);
    std::cout << "sigma^" << m << "_" << p << " = " << r.value.str();
    if (r.witness) std::cout << "  witness " << set_str(*r.witness);
    std::cout << "\n";
    Json entry = {{"p", p}, {"m", m}, {"value", to_json(r.value)}};
    entry["witness"] = r.witness ? Json(r.witness->ids()) : Json(nullptr);
    sigmas[spec] = entry;
  }
  rep.result = {{"n", g.order()},
                {"edges", g.edge_count()},
                {"connected", is_connected(g)},
                {"claw_free", !claw.has_value()},
                {"alpha", alphas},
                {"sigma", sigmas}};
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct TreeArgs {
  std::string in;
  std::string tree;
  int k = 2;
};

int run_tree_metrics(const TreeArgs& a, RunReport& rep) {
  const Graph g = read_graph_file(a.in);
  const Graph tg = parse_edge_list(read_file(a.tree));
  if (tg.order() > g.order()) throw ParseError("tree names vertices outside the graph");
  const auto tedges = tg.edges();
  const auto t = SpanningTree::from_edges(g, tedges);
  rep.input = a.in + " " + a.tree;
  rep.params = {{"k", a.k}};
  const auto r = stem_report(t);
  const bool identity = g.order() >= 2 && leaf_identity_check(t);
  std::cout << "leaves " << set_str(r.leaves) << " (" << r.leaves.size() << ")\n";
  std::cout << "branch vertices " << set_str(r.branches) << "\n";
  std::cout << "stem " << set_str(r.stem) << "\n";
  std::cout << "reducible stem " << set_str(r.rstem) << ", leaves " << set_str(r.rstem_leaves) << " ("
            << r.rstem_leaves.size() << ")\n";
  if (r.branches.empty()) std::cout << "tree is a path: reducible stem taken as empty\n";
  Json paths = Json::array();
  for (const auto& p : r.paths) {
    std::cout << "  B_" << p.leaf << " -> " << p.branch << ":";
    for (Vertex v : p.vertices) std::cout << ' ' << v;
    std::cout << "\n";
    paths.push_back({{"leaf", p.leaf}, {"branch", p.branch}, {"vertices", p.vertices}});
  }
  const auto obj = conditions_vector_B(g, t, a.k);
  std::cout << "leaf identity: " << (identity ? "holds" : "FAILS") << "\n";
  std::cout << "objective vector " << obj.str() << "\n";
  rep.result = {{"leaves", r.leaves.ids()},
                {"branches", r.branches.ids()},
                {"stem", r.stem.ids()},
                {"rstem", r.rstem.ids()},
                {"rstem_leaves", r.rstem_leaves.ids()},
                {"path_tree", r.branches.empty()},
                {"leaf_branch_paths", paths},
                {"leaf_identity", identity},
                {"objective", to_json(obj)}};
  if (g.order() >= 2 && !identity) throw InvariantFailure("leaf identity failed");
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct OptimizeArgs {
  std::string in;
  std::string mode = "leaves";
  std::optional<int> l;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;
  std::optional<long> max_iters;
  std::string out;
};

int run_optimize(const OptimizeArgs& a, RunReport& rep) {
  const Graph g = read_graph_file(a.in);
  rep.input = a.in;
  rep.seed = a.seed;
  OptimizeOptions opts;
  opts.seed = a.seed;
  opts.max_iters = a.max_iters;
  OptimizeResult res;
  if (a.mode == "leaves") {
    if (!a.l) throw ParseError("--mode leaves needs --l");
    rep.params = {{"mode", a.mode}, {"l", *a.l}};
    res = optimize_leaves(g, *a.l, opts);
  } else if (a.mode == "rstem") {
    if (!a.k) throw ParseError("--mode rstem needs --k");
    rep.params = {{"mode", a.mode}, {"k", *a.k}};
    res = optimize_rstem_leaves(g, *a.k, opts);
  } else {
    throw ParseError("--mode must be 'leaves' or 'rstem'");
  }
  if (a.max_iters) rep.params["max_iters"] = *a.max_iters;
  rep.result = to_json(res);
  std::cout << "outcome " << to_string(res.outcome) << ", objective " << res.objective.str() << ", " << res.commits
            << " commits\n";
  std::cout << "tree " << edges_str(res.tree.edges()) << "\n";
  for (const auto& [rule, count] : res.rule_counts) std::cout << "  " << rule << " x" << count << "\n";
  for (const auto& o : res.obstructions) std::cout << "  obstruction: " << o << "\n";
  if (!a.out.empty()) write_file(a.out, emit_tree(res.tree));
  if (res.certificate) {
    const auto& c = *res.certificate;
    rep.certificate = to_json(c);
    const std::string what = c.mode == Mode::Leaves ? "sigma_" + std::to_string(c.parameter + 1)
                                                    : "sigma_" + std::to_string(3 * c.parameter + 3);
    std::cout << "certificate: " << what << " = " << c.sigma_actual.str() << " " << c.inequality_direction << " "
              << c.bound << " is " << (c.inequality_holds ? "true" : "false") << "\n";
    for (const auto& cl : c.claims)
      std::cout << "  [" << (cl.passed ? "ok" : "FAIL") << "] " << cl.name << (cl.detail.empty() ? "" : ": ")
                << cl.detail << "\n";
    if (!c.applicable)
      std::cout << "  graph is not claw-free (claw at " << c.claw->center << "): inequality not applicable\n";
    else if (!c.inequality_holds)
      throw InvariantFailure("certificate inequality fails on a claw-free graph");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string in;
  std::string objective = "leaves";
  std::uint64_t cap = kDefaultTreeCap;
  std::string out;
};

TreeObjective objective_from(const std::string& s) {
  for (auto o : {TreeObjective::Leaves, TreeObjective::StemLeaves, TreeObjective::StemBranches,
                 TreeObjective::RStemLeaves, TreeObjective::RStemBranches})
    if (to_string(o) == s) return o;
  throw ParseError("unknown objective '" + s + "'");
}

int run_oracle(const OracleArgs& a, RunReport& rep) {
  const Graph g = read_graph_file(a.in);
  rep.input = a.in;
  rep.params = {{"objective", a.objective}, {"cap", a.cap}};
  const auto r = min_tree(g, objective_from(a.objective), a.cap);
  rep.result = to_json(r);
  std::cout << "minimum " << a.objective << " = " << r.minimum << (r.capped ? " (capped: upper bound only)" : "")
            << ", " << r.trees_examined << " trees examined\n";
  std::cout << "witness " << edges_str(r.witness->edges()) << "\n";
  if (!a.out.empty()) write_file(a.out, emit_tree(*r.witness));
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ConformanceArgs {
  std::string theorem;
  std::optional<int> l, k, m;
  std::string corpus;
  std::string random;
  int workers = 1;
  std::uint64_t cap = kDefaultTreeCap;
};

int run_conformance(const ConformanceArgs& a, RunReport& rep) {
  TheoremParams params{a.l, a.k, a.m};
  std::vector<Graph> graphs;
  rep.params = {{"theorem", a.theorem}, {"workers", a.workers}, {"cap", a.cap}};
  if (a.l) rep.params["l"] = *a.l;
  if (a.k) rep.params["k"] = *a.k;
  if (a.m) rep.params["m"] = *a.m;
  if (!a.corpus.empty() == !a.random.empty()) throw ParseError("give exactly one of --corpus or --random");
  if (!a.corpus.empty()) {
    graphs = parse_graph6_corpus(read_file(a.corpus));
    rep.input = a.corpus;
  } else {
    std::istringstream is(a.random);
    std::string part;
    std::vector<std::uint64_t> v;
    while (std::getline(is, part, ','))
      try {
        v.push_back(std::stoull(part));
      } catch (const std::exception&) {
        throw ParseError("--random expects n,count,seed");
      }
    if (v.size() != 3) throw ParseError("--random expects n,count,seed");
    const bool claw = a.theorem == "1.3" || a.theorem == "1.9" || a.theorem == "1.10";
    graphs = random_corpus({static_cast<int>(v[1]), static_cast<int>(v[0]), static_cast<int>(v[0]), v[2], 0.3, 0.9,
                            claw});
    rep.input = "random:" + a.random;
    rep.seed = v[2];
  }
  if (a.workers < 1) throw ParseError("--workers must be at least 1");
  check_theorem(Graph(1), a.theorem, params);  // parameter validation before fanning out

  std::vector<ConformanceReport> reports(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < graphs.size();) reports[i] = check_theorem(graphs[i], a.theorem, params, a.cap);
  };
  std::vector<std::future<void>> pool;
  for (int w = 0; w < a.workers; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  int conforms = 0, vacuous = 0, violations = 0;
  Json all = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    switch (r.verdict) {
      case Verdict::Conforms: ++conforms; break;
      case Verdict::Vacuous: ++vacuous; break;
      case Verdict::Violation:
        ++violations;
        std::cout << "VIOLATION on graph " << i << " (" << emit_graph6(graphs[i]) << "): minimum "
                  << *r.oracle_minimum << " > " << r.conclusion_bound << "\n";
        break;
    }
    Json j = to_json(r);
    j["graph"] = emit_graph6(graphs[i]);
    all.push_back(j);
  }
  std::cout << "theorem " << a.theorem << ": " << graphs.size() << " graphs, " << conforms << " conform, " << vacuous
            << " vacuous, " << violations << " violations\n";
  rep.conformance = all;
  rep.result = {{"graphs", graphs.size()}, {"conforms", conforms}, {"vacuous", vacuous}, {"violations", violations}};
  return violations ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

struct SharpArgs {
  int k = 2;
  int m = 1;
  std::string out;
  std::string tree_out;
};

int run_gen_sharpness(const SharpArgs& a, RunReport& rep) {
  const auto s = gen_sharpness(a.k, a.m);
  rep.params = {{"k", a.k}, {"m", a.m}};
  rep.input = "generated";
  const auto sigma = sigma_p_m(s.graph, 3 * a.k + 3, 2).value;
  std::cout << "n = " << s.graph.order() << " (expected " << s.expected.n << "), edges = " << s.graph.edge_count()
            << "\n";
  std::cout << "sigma_" << 3 * a.k + 3 << " = " << sigma.str() << " (expected " << s.expected.sigma << " = n-k-1)\n";
  if (!a.out.empty()) write_file(a.out, emit_edge_list(s.graph));
  if (!a.tree_out.empty()) write_file(a.tree_out, emit_tree(sharpness_natural_tree(s)));
  rep.result = {{"n", s.graph.order()},
                {"edges", s.graph.edge_count()},
                {"sigma", to_json(sigma)},
                {"expected", {{"n", s.expected.n}, {"sigma", s.expected.sigma},
                              {"min_rstem_leaves_lower_claim", s.expected.min_rstem_leaves_lower_claim}}},
                {"graph6", emit_graph6(s.graph)}};
  if (s.graph.order() != s.expected.n || sigma != s.expected.sigma)
    throw InvariantFailure("sharpness graph does not match its expected values");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees with few leaves or few reducible-stem leaves"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  app.add_option("--json", json_path, "Write a JSON run report to this path");
  app.set_version_flag("--version", kToolVersion);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Invariants of a graph");
  analyze->add_option("--in", an.in, "Graph file (edge list, or graph6 with .g6)")->required();
  analyze->add_option("--alpha-m", an.alpha_m, "Distance m for alpha^m (repeatable, default 2)");
  analyze->add_option("--sigma", an.sigma, "p,m for sigma^m_p (repeatable)");

  TreeArgs tr;
  auto* tree_metrics = app.add_subcommand("tree-metrics", "Leaves, branches and reducible stem of a tree");
  tree_metrics->add_option("--in", tr.in, "Host graph file")->required();
  tree_metrics->add_option("--tree", tr.tree, "Tree edge-list file")->required();
  tree_metrics->add_option("--k", tr.k, "k for the objective vector")->check(CLI::Range(2, 1000));

  OptimizeArgs op;
  auto* optimize = app.add_subcommand("optimize", "Local search with certificates");
  optimize->add_option("--in", op.in, "Graph file")->required();
  optimize->add_option("--mode", op.mode, "leaves | rstem")->check(CLI::IsMember({"leaves", "rstem"}));
  optimize->add_option("--l", op.l, "Leaf bound (mode leaves)");
  optimize->add_option("--k", op.k, "Reducible-stem leaf bound (mode rstem)");
  optimize->add_option("--seed", op.seed, "Randomized initial tree");
  optimize->add_option("--max-iters", op.max_iters, "Commit cap");
  optimize->add_option("--out", op.out, "Write the final tree here");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Exact minimum over all spanning trees");
  oracle->add_option("--in", orc.in, "Graph file")->required();
  oracle->add_option("--objective", orc.objective, "leaves | rstem-leaves | stem-leaves | stem-branches | rstem-branches");
  oracle->add_option("--cap", orc.cap, "Maximum number of trees to examine")->check(CLI::PositiveNumber);
  oracle->add_option("--out", orc.out, "Write the witness tree here");

  ConformanceArgs cf;
  auto* conformance = app.add_subcommand("conformance", "Check a theorem statement against the oracle");
  conformance->add_option("--theorem", cf.theorem, "1.1 .. 1.10")->required();
  conformance->add_option("--l", cf.l, "l parameter");
  conformance->add_option("--k", cf.k, "k parameter");
  conformance->add_option("--m", cf.m, "connectivity parameter (1.1)");
  conformance->add_option("--corpus", cf.corpus, "graph6 corpus file");
  conformance->add_option("--random", cf.random, "n,count,seed");
  conformance->add_option("--workers", cf.workers, "Worker threads");
  conformance->add_option("--cap", cf.cap, "Tree cap per graph")->check(CLI::PositiveNumber);

  SharpArgs sh;
  auto* sharp = app.add_subcommand("gen-sharpness", "Generate the sharpness family graph");
  sharp->add_option("--k", sh.k, "k >= 2")->required();
  sharp->add_option("--m", sh.m, "clique size m >= 1")->required();
  sharp->add_option("--out", sh.out, "Edge-list output file");
  sharp->add_option("--tree-out", sh.tree_out, "Also write the natural spanning tree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  RunReport rep;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (*analyze) {
      rep.command = "analyze";
      code = run_analyze(an, rep);
    } else if (*tree_metrics) {
      rep.command = "tree-metrics";
      code = run_tree_metrics(tr, rep);
    } else if (*optimize) {
      rep.command = "optimize";
      code = run_optimize(op, rep);
    } else if (*oracle) {
      rep.command = "oracle";
      code = run_oracle(orc, rep);
    } else if (*conformance) {
      rep.command = "conformance";
      code = run_conformance(cf, rep);
    } else if (*sharp) {
      rep.command = "gen-sharpness";
      code = run_gen_sharpness(sh, rep);
    }
  } catch (const InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    code = kExitViolation;
  } catch (const SearchError& e) {
    std::cerr << "search failure: " << e.what() << "\n";
    code = kExitViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!json_path.empty()) {
    try {
      write_file(json_path, to_json(rep).dump(2) + "\n");
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }
  return code;
}
