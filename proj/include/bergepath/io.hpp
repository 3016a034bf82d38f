#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bergepath/berge.hpp"
#include "bergepath/formulas.hpp"
#include "bergepath/hypergraph.hpp"
#include "bergepath/sparse_set.hpp"
#include "bergepath/search.hpp"

namespace bergepath {

/// Malformed hypergraph input; line() is 1-based, 0 when not line-oriented.
class ParseError : public ParameterError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Text format: header "n r", then one edge instance per line as r
// whitespace-separated vertex ids. Repeated lines are multiplicity, '#'
// starts a comment line, blank lines are ignored.
Hypergraph parse_hypergraph_text(std::istream& in);
std::string to_text(const Hypergraph& h);

// JSON mirror {"n": .., "r": .., "edges": [[..], ..]}.
Hypergraph parse_hypergraph_json(const nlohmann::json& j);
nlohmann::json to_json(const Hypergraph& h);

/// Dispatches on the first non-blank character: '{' is JSON, else text.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph load_hypergraph(const std::string& path);

nlohmann::json to_json(const BergeWitness& w);
nlohmann::json to_json(const FormulaResult& f);
/// elapsed_ms is left out unless include_timing, so reports stay byte-stable.
nlohmann::json to_json(const SearchOutcome& s, bool include_timing = false);
nlohmann::json to_json(const SparseSetReport& report);
nlohmann::json to_json(const ConjectureReport& report, bool include_timing = false);

}  // namespace bergepath
