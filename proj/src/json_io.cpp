#include "herd/json_io.hpp"

#include <cmath>

namespace herd {

namespace {

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

Rational entry_from_json(const Json& value, const ParseOptions& opts) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer())
    return Rational(static_cast<long>(value.get<int64_t>()));
  if (value.is_number_unsigned()) {
    const uint64_t v = value.get<uint64_t>();
    return Rational(Integer(std::to_string(v)));
  }
  if (value.is_number_float()) {
    const double v = value.get<double>();
    if (opts.float_mode) {
      if (std::abs(v) < opts.float_epsilon) return Rational(0);
      Rational r(v);
      r.canonicalize();
      return r;
    }
    if (std::nearbyint(v) == v && std::abs(v) <= 9007199254740992.0) {
      Rational r(v);
      r.canonicalize();
      return r;
    }
    fail("non-integral numeric entry " + value.dump() +
         " rejected in exact mode (pass --float-mode to accept)");
  }
  fail("matrix entry must be a string or number, got " + value.dump());
}

RationalMatrix matrix_from_json(const Json& rows, const ParseOptions& opts,
                                const std::string& name) {
  if (!rows.is_array() || rows.empty())
    fail("\"" + name + "\" must be a non-empty array of rows");
  const size_t cols = rows[0].is_array() ? rows[0].size() : 0;
  if (cols == 0) fail("\"" + name + "\" rows must be non-empty arrays");
  RationalMatrix M(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != cols)
      fail("\"" + name + "\" rows must all have " + std::to_string(cols) +
           " entries");
    for (size_t j = 0; j < cols; ++j)
      M(i, j) = entry_from_json(rows[i][j], opts);
  }
  return M;
}

std::pair<int, int> line_column(const std::string& text, size_t byte_offset) {
  int line = 1, column = 1;
  for (size_t i = 0; i < byte_offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

LinearSystem parse_system_json(const Json& j, const ParseOptions& opts) {
  if (!j.contains("A") || !j.contains("B"))
    fail("system file needs \"A\" and \"B\"");
  LinearSystem sys{matrix_from_json(j.at("A"), opts, "A"),
                   matrix_from_json(j.at("B"), opts, "B")};
  try {
    validate_system(sys);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return sys;
}

SignedDigraph parse_graph_json(const Json& j, const ParseOptions& opts) {
  SignedDigraph g;
  if (!j.contains("n") || !j.at("n").is_number_integer())
    fail("graph file needs an integer \"n\"");
  if (!j.contains("m") || !j.at("m").is_number_integer())
    fail("graph file needs an integer \"m\"");
  g.n_states = j.at("n").get<int>();
  g.n_inputs = j.at("m").get<int>();
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) fail("\"edges\" must be an array");
    for (const Json& ej : j.at("edges")) {
      Edge e;
      try {
        e.from = parse_node_id(ej.at("from").get<std::string>());
        e.to = parse_node_id(ej.at("to").get<std::string>());
      } catch (const std::invalid_argument& err) {
        fail(err.what());
      } catch (const Json::exception&) {
        fail("edge needs string \"from\" and \"to\": " + ej.dump());
      }
      if (!ej.contains("sign") || !ej.at("sign").is_number_integer())
        fail("edge needs an integer \"sign\": " + ej.dump());
      e.sign = ej.at("sign").get<int>();
      if (ej.contains("weight")) {
        const Rational w = entry_from_json(ej.at("weight"), opts);
        if (w == 0) {
          // Only the float-mode epsilon snap may erase an edge silently.
          if (opts.float_mode) continue;
          fail("zero weight on edge " + to_string(e.from) + " -> " +
               to_string(e.to));
        }
        e.weight = w;
      }
      g.edges.push_back(std::move(e));
    }
  }
  try {
    validate_graph(g);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return g;
}

ParsedInput parse_input_text(const std::string& text,
                             const ParseOptions& opts) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ParseError("malformed JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
  ParsedInput input;
  if (j.contains("A") && j.contains("B"))
    input.system = parse_system_json(j, opts);
  else if (j.contains("n") && j.contains("m"))
    input.graph = parse_graph_json(j, opts);
  else
    throw ParseError(
        "unrecognized input: expected a system file with \"A\"/\"B\" or a "
        "graph file with \"n\"/\"m\"/\"edges\"");
  return input;
}

Json system_to_json(const LinearSystem& sys) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < sys.A.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < sys.A.cols(); ++j)
      row.push_back(to_string(sys.A(i, j)));
    a.push_back(std::move(row));
  }
  Json b = Json::array();
  for (Eigen::Index i = 0; i < sys.B.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < sys.B.cols(); ++j)
      row.push_back(to_string(sys.B(i, j)));
    b.push_back(std::move(row));
  }
  return Json{{"A", std::move(a)}, {"B", std::move(b)}};
}

Json graph_to_json(const SignedDigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges) {
    Json ej{{"from", to_string(e.from)},
            {"to", to_string(e.to)},
            {"sign", e.sign}};
    if (e.weight) ej["weight"] = to_string(*e.weight);
    edges.push_back(std::move(ej));
  }
  return Json{{"n", g.n_states}, {"m", g.n_inputs}, {"edges", std::move(edges)}};
}

}  // namespace herd
