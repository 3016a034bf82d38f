#include "bergepath/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace bergepath {

ParseError::ParseError(int line, const std::string& what)
    : ParameterError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, "id overflow '" + tok + "'");
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "malformed integer '" + tok + "'");
  return value;
}

bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Hypergraph parse_hypergraph_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  int r = -1;
  std::vector<std::vector<int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_ws(line);
    if (n < 0) {
      if (tokens.size() != 2) throw ParseError(lineno, "expected header 'n r'");
      n = parse_int(tokens[0], lineno);
      r = parse_int(tokens[1], lineno);
      if (n < 0 || n > kMaxVertices)
        throw ParseError(lineno, "n must be in 0.." + std::to_string(kMaxVertices));
      if (r < 2) throw ParseError(lineno, "r must be >= 2");
      continue;
    }
    if (static_cast<int>(tokens.size()) != r)
      throw ParseError(lineno, "wrong edge size: expected " + std::to_string(r) + " ids, got " +
                                   std::to_string(tokens.size()));
    std::vector<int> edge;
    VertexSet seen;
    for (const auto& tok : tokens) {
      const int v = parse_int(tok, lineno);
      if (v < 0 || v >= n)
        throw ParseError(lineno, "vertex id " + tok + " out of range 0.." + std::to_string(n - 1));
      if (seen.contains(v)) throw ParseError(lineno, "repeated vertex " + tok);
      seen.insert(v);
      edge.push_back(v);
    }
    edges.push_back(std::move(edge));
  }
  if (n < 0) throw ParseError(lineno, "missing header 'n r'");
  return Hypergraph::build(n, r, edges);
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.order() << ' ' << h.uniformity() << '\n';
  for (const auto& edge : h.edge_lists()) {
    for (std::size_t i = 0; i < edge.size(); ++i) out << (i ? " " : "") << edge[i];
    out << '\n';
  }
  return out.str();
}

Hypergraph parse_hypergraph_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int r = j.at("r").get<int>();
    const auto edges = j.at("edges").get<std::vector<std::vector<int>>>();
    return Hypergraph::build(n, r, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid hypergraph JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Hypergraph& h) {
  return {{"n", h.order()}, {"r", h.uniformity()}, {"edges", h.edge_lists()}};
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto pos = content.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && content[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return parse_hypergraph_json(j);
  }
  std::istringstream ss(content);
  return parse_hypergraph_text(ss);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  return parse_hypergraph(in);
}

nlohmann::json to_json(const BergeWitness& w) {
  return {{"kind", w.kind == WitnessKind::path ? "path" : "cycle"},
          {"vertices", w.vertices},
          {"edge_instances", w.edge_instances}};
}

nlohmann::json to_json(const FormulaResult& f) {
  nlohmann::json j;
  j["value"] = f.value ? f.value->to_string() : "undefined";
  j["regime"] = to_string(f.regime);
  j["source"] = f.source;
  if (!f.note.empty()) j["note"] = f.note;
  if (!f.bounds.empty()) {
    nlohmann::json b = nlohmann::json::object();
    for (const auto& bound : f.bounds) b[bound.selector] = bound.value.to_string();
    j["bounds"] = b;
  }
  return j;
}

nlohmann::json to_json(const SearchOutcome& s, bool include_timing) {
  nlohmann::json j;
  j["status"] = s.status == SearchStatus::value ? "value" : "infeasible";
  j["value"] = s.status == SearchStatus::value ? nlohmann::json(s.value) : nlohmann::json(nullptr);
  j["witnesses"] = s.witnesses;
  j["nodes_explored"] = s.nodes_explored;
  if (include_timing) j["elapsed_ms"] = s.elapsed_ms;
  return j;
}

nlohmann::json to_json(const SparseSetReport& report) {
  nlohmann::json j;
  j["verdict"] = to_string(report.verdict);
  j["t"] = report.longest_path;
  if (report.verdict == SparseVerdict::precondition_violated) {
    j["violated"] = report.violated;
    return j;
  }
  j["S"] = report.set.to_vector();
  j["case"] = report.which ? nlohmann::json(to_string(*report.which)) : nlohmann::json(nullptr);
  j["neighborhood_size"] = report.neighborhood_size;
  if (!report.branch.empty()) j["branch"] = report.branch;
  if (report.path) j["path"] = to_json(*report.path);
  return j;
}

nlohmann::json to_json(const ConjectureReport& report, bool include_timing) {
  return {{"n", report.n},
          {"r", report.r},
          {"k", report.k},
          {"conjectured", report.conjectured.to_string()},
          {"exact", to_json(report.exact, include_timing)},
          {"construction_edges", report.construction_edges},
          {"construction_verified", report.construction_verified},
          {"status", to_string(report.status)}};
}

}  // namespace bergepath
