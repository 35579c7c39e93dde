#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rstem/exchange.hpp"
#include "rstem/graph.hpp"
#include "rstem/oracle.hpp"
#include "rstem/spanning_tree.hpp"

namespace rstem {

/// Input that could not be parsed; `line` is 1-based, 0 when not applicable.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

// ---------------------------------------------------------------------------
// Edge lists
// ---------------------------------------------------------------------------

/// Lines "u v" with 0-based ids, an optional first "n <count>" line, and '#'
/// comment lines. Without a header, n = 1 + max id (0 for no edges).
Graph parse_edge_list(std::string_view text);

/// "n <count>" then one "u v" line per edge, ascending.
std::string emit_edge_list(const Graph& g);
/// As emit_edge_list with a leading "# tree" line.
std::string emit_tree(const SpanningTree& t);

// ---------------------------------------------------------------------------
// graph6 (short form, n <= 62)
// ---------------------------------------------------------------------------

Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// One graph6 line per graph; blank lines and lines starting with '#' or '>'
/// are skipped. Errors carry the line number.
std::vector<Graph> parse_graph6_corpus(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// Reads a graph from a file, choosing graph6 for a ".g6" suffix and the
/// edge-list format otherwise.
Graph read_graph_file(const std::string& path);

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const Sigma& s);
Sigma sigma_from_json(const Json& j);
Json to_json(const std::vector<Edge>& edges);
std::vector<Edge> edges_from_json(const Json& j);
Json to_json(const ObjectiveVector& o);
Json to_json(const Certificate& c);
Json to_json(const OptimizeResult& r);
Json to_json(const OracleResult& r);
Json to_json(const ConformanceReport& r);

struct RunReport {
  std::string command;
  std::string input;
  Json params = Json::object();
  Json result = Json::object();
  std::optional<Json> certificate;
  std::optional<Json> conformance;
  std::optional<std::uint64_t> seed;
  std::string version = kToolVersion;
  double wall_time = 0.0;
  int schema_version = kReportSchemaVersion;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

Json to_json(const RunReport& r);
RunReport report_from_json(const Json& j);

/// Field-presence and type problems of a serialized report; empty if valid.
std::vector<std::string> validate_report(const Json& j);

}  // namespace rstem
