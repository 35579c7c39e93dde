#include "rstem/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rstem {

ParseError::ParseError(const std::string& what, int line)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_id(std::string_view tok, int line) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw ParseError("malformed token '" + std::string(tok) + "'", line);
  if (value > 1'000'000) throw ParseError("id " + std::string(tok) + " is too large", line);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<long> declared;
  std::vector<Edge> edges;
  long max_id = -1;
  bool seen_content = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i + 1);
    const auto toks = tokens(lines[i]);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] == "n") {
      if (seen_content) throw ParseError("'n' header must come before any edge", line_no);
      if (toks.size() != 2) throw ParseError("header must be 'n <count>'", line_no);
      declared = parse_id(toks[1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (toks.size() != 2) throw ParseError("expected 'u v', got " + std::to_string(toks.size()) + " tokens", line_no);
    const long u = parse_id(toks[0], line_no), v = parse_id(toks[1], line_no);
    if (u == v) throw ParseError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")", line_no);
    if (declared && (u >= *declared || v >= *declared))
      throw ParseError("id " + std::to_string(std::max(u, v)) + " is not below declared n=" + std::to_string(*declared),
                       line_no);
    max_id = std::max({max_id, u, v});
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  const long n = declared ? *declared : max_id + 1;
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string emit_tree(const SpanningTree& t) { return "# tree\n" + emit_edge_list(as_graph(t)); }

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 string");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte " + std::to_string(c) + " at offset " + std::to_string(i) + " is outside [63,126]");
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n > 62) throw ParseError("only the short graph6 form (n <= 62) is supported");
  const std::size_t bits = n > 0 ? static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 : 0;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - 1 < bytes)
    throw ParseError("truncated graph6 payload: need " + std::to_string(bytes) + " bytes, got " +
                     std::to_string(line.size() - 1));
  if (line.size() - 1 > bytes) throw ParseError("trailing bytes after graph6 payload");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
      if (byte >> (5 - k % 6) & 1) edges.push_back({u, v});
    }
  if (k % 6 != 0) {
    const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero padding bits in graph6 payload");
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw GraphError("graph6 short form needs n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, used = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_corpus(std::string_view text) {
  std::vector<Graph> out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (line.empty() || line.front() == '#' || line.front() == '>') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), static_cast<int>(i + 1));
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

Graph read_graph_file(const std::string& path) {
  const auto text = read_file(path);
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
    auto graphs = parse_graph6_corpus(text);
    if (graphs.size() != 1) throw ParseError("'" + path + "' holds " + std::to_string(graphs.size()) + " graphs, expected 1");
    return graphs.front();
  }
  return parse_edge_list(text);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

Json to_json(const Sigma& s) { return s.is_infinite() ? Json("inf") : Json(s.value()); }

Sigma sigma_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Sigma::infinity();
  return Sigma(j.get<long>());
}

Json to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
  return out;
}

Json to_json(const ObjectiveVector& o) { return {{"mode", to_string(o.mode)}, {"entries", o.entries}}; }

Json to_json(const Certificate& c) {
  Json claims = Json::array();
  for (const auto& cl : c.claims) claims.push_back({{"name", cl.name}, {"passed", cl.passed}, {"detail", cl.detail}});
  Json j = {{"mode", to_string(c.mode)},
            {"n", c.n},
            {"parameter", c.parameter},
            {"tree_edges", to_json(c.tree_edges)},
            {"leaf_count", c.leaf_count},
            {"rstem_leaf_count", c.rstem_leaf_count},
            {"claims", claims},
            {"claims_hold", c.claims_hold()},
            {"sigma_needed", c.sigma_needed},
            {"sigma_actual", to_json(c.sigma_actual)},
            {"bound", c.bound},
            {"inequality_direction", c.inequality_direction},
            {"inequality_holds", c.inequality_holds},
            {"applicable", c.applicable}};
  if (c.claw)
    j["claw"] = {{"center", c.claw->center}, {"leaves", c.claw->leaves}};
  else
    j["claw"] = nullptr;
  return j;
}

Json to_json(const OptimizeResult& r) {
  Json rules = Json::object();
  for (const auto& [name, count] : r.rule_counts) rules[name] = count;
  std::vector<Edge> edges(r.tree.edges().begin(), r.tree.edges().end());
  return {{"outcome", to_string(r.outcome)}, {"objective", to_json(r.objective)},
          {"tree_edges", to_json(edges)},    {"commits", r.commits},
          {"rule_counts", rules},            {"obstructions", r.obstructions}};
}

Json to_json(const OracleResult& r) {
  Json j = {{"objective", to_string(r.objective)},
            {"minimum", r.minimum},
            {"trees_examined", r.trees_examined},
            {"capped", r.capped}};
  if (r.witness) {
    std::vector<Edge> edges(r.witness->edges().begin(), r.witness->edges().end());
    j["witness"] = to_json(edges);
  }
  return j;
}

Json to_json(const ConformanceReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"name", t.name},
                     {"value", to_json(t.value)},
                     {"relation", t.relation},
                     {"threshold", t.threshold},
                     {"holds", t.holds}});
  Json params = Json::object();
  if (r.params.l) params["l"] = *r.params.l;
  if (r.params.k) params["k"] = *r.params.k;
  if (r.params.m) params["m"] = *r.params.m;
  Json j = {{"theorem", r.theorem},
            {"params", params},
            {"n", r.n},
            {"connected", r.connected},
            {"terms", terms},
            {"hypothesis_holds", r.hypothesis_holds},
            {"conclusion_objective", to_string(r.conclusion_objective)},
            {"conclusion_bound", r.conclusion_bound},
            {"capped", r.capped},
            {"verdict", to_string(r.verdict)}};
  j["claw_free"] = r.claw_free ? Json(*r.claw_free) : Json(nullptr);
  j["vertex_connectivity"] = r.vertex_connectivity ? Json(*r.vertex_connectivity) : Json(nullptr);
  j["oracle_minimum"] = r.oracle_minimum ? Json(*r.oracle_minimum) : Json(nullptr);
  j["conclusion_holds"] = r.conclusion_holds ? Json(*r.conclusion_holds) : Json(nullptr);
  return j;
}

Json to_json(const RunReport& r) {
  Json j = {{"schema_version", r.schema_version},
            {"command", r.command},
            {"input", r.input},
            {"params", r.params},
            {"result", r.result},
            {"version", r.version},
            {"wall_time", r.wall_time}};
  j["certificate"] = r.certificate ? *r.certificate : Json(nullptr);
  j["conformance"] = r.conformance ? *r.conformance : Json(nullptr);
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  return j;
}

RunReport report_from_json(const Json& j) {
  if (auto problems = validate_report(j); !problems.empty()) throw ParseError("invalid report: " + problems.front());
  RunReport r;
  r.schema_version = j.at("schema_version").get<int>();
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input").get<std::string>();
  r.params = j.at("params");
  r.result = j.at("result");
  r.version = j.at("version").get<std::string>();
  r.wall_time = j.at("wall_time").get<double>();
  if (!j.at("certificate").is_null()) r.certificate = j.at("certificate");
  if (!j.at("conformance").is_null()) r.conformance = j.at("conformance");
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

std::vector<std::string> validate_report(const Json& j) {
  std::vector<std::string> problems;
  if (!j.is_object()) return {"report is not a JSON object"};
  auto expect = [&](const char* key, auto check, const char* type, bool nullable) {
    if (!j.contains(key)) {
      problems.push_back(std::string("missing field '") + key + "'");
      return;
    }
    const Json& v = j.at(key);
    if (nullable && v.is_null()) return;
    if (!check(v)) problems.push_back(std::string("field '") + key + "' must be " + type);
  };
  expect("schema_version", [](const Json& v) { return v.is_number_integer(); }, "an integer", false);
  expect("command", [](const Json& v) { return v.is_string(); }, "a string", false);
  expect("input", [](const Json& v) { return v.is_string(); }, "a string", false);
  expect("params", [](const Json& v) { return v.is_object(); }, "an object", false);
  expect("result", [](const Json& v) { return v.is_object(); }, "an object", false);
  expect("version", [](const Json& v) { return v.is_string(); }, "a string", false);
  expect("wall_time", [](const Json& v) { return v.is_number(); }, "a number", false);
  expect("certificate", [](const Json& v) { return v.is_object(); }, "an object or null", true);
  expect("conformance", [](const Json& v) { return v.is_object() || v.is_array(); }, "an object, array or null", true);
  expect("seed", [](const Json& v) { return v.is_number_unsigned() || v.is_number_integer(); }, "an integer or null",
         true);
  if (problems.empty() && j.at("schema_version").get<int>() != kReportSchemaVersion)
    problems.push_back("unsupported schema_version " + std::to_string(j.at("schema_version").get<int>()));
  return problems;
}

}  // namespace rstem
