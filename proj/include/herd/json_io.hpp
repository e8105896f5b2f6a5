#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "herd/linear_system.hpp"
#include "herd/signed_digraph.hpp"

namespace herd {

using Json = nlohmann::ordered_json;

struct ParseOptions {
  /// When set, non-integral JSON numbers are accepted; magnitudes below
  /// float_epsilon are snapped to exact zero before any sign decision.
  bool float_mode = false;
  double float_epsilon = 1e-9;
};

/// Parse failure with line/column diagnostics when known (1-based; 0 = unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(message), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Either a system file {"A": ..., "B": ...} or a graph file
/// {"n": ..., "m": ..., "edges": [...]}.
struct ParsedInput {
  std::optional<LinearSystem> system;
  std::optional<SignedDigraph> graph;
};

LinearSystem parse_system_json(const Json& j, const ParseOptions& opts = {});
SignedDigraph parse_graph_json(const Json& j, const ParseOptions& opts = {});

/// Detects the schema from the top-level keys. Throws ParseError with
/// line/column info on malformed JSON and on any schema violation.
ParsedInput parse_input_text(const std::string& text,
                             const ParseOptions& opts = {});

Json system_to_json(const LinearSystem& sys);
Json graph_to_json(const SignedDigraph& g);

}  // namespace herd
