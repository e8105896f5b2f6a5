#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "herd/report.hpp"
#include "herd/synthesis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw herd::ParseError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw herd::ParseError("cannot write \"" + out_path + "\"");
  out << text;
}

std::string dump(const herd::Json& j) { return j.dump(2) + "\n"; }

herd::LinearSystem to_system(const herd::ParsedInput& input) {
  if (input.system) return *input.system;
  return herd::graph_to_sign_pattern(*input.graph);
}

herd::SignedDigraph to_graph(const herd::ParsedInput& input) {
  if (input.graph) return *input.graph;
  return herd::system_to_graph(*input.system);
}

std::set<int> parse_state_set(const std::string& text, int n) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw herd::ParseError("bad state index \"" + token + "\"");
    }
    if (used != token.size() || value < 1 || value > n)
      throw herd::ParseError("state index " + token + " outside 1.." +
                             std::to_string(n));
    out.insert(value - 1);
  }
  if (out.empty()) throw herd::ParseError("--set must name at least one state");
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string trajectory_csv(const herd::SynthesisResult& result, double t_f) {
  const Eigen::Index n = result.trajectory.cols();
  const Eigen::Index m = result.input_samples.cols();
  const Eigen::Index rows = result.trajectory.rows();
  std::string csv = "t";
  for (Eigen::Index i = 0; i < n; ++i) csv += ",x" + std::to_string(i + 1);
  for (Eigen::Index j = 0; j < m; ++j) csv += ",u" + std::to_string(j + 1);
  csv += "\n";
  for (Eigen::Index k = 0; k < rows; ++k) {
    csv += format_double(t_f * static_cast<double>(k) /
                         static_cast<double>(rows - 1));
    for (Eigen::Index i = 0; i < n; ++i)
      csv += "," + format_double(result.trajectory(k, i));
    for (Eigen::Index j = 0; j < m; ++j)
      csv += "," + format_double(result.input_samples(k, j));
    csv += "\n";
  }
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"herd -- herdability analysis of linear systems over signed "
               "interaction graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  bool float_mode = false;
  app.add_option("--format", format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");
  app.add_flag("--float-mode", float_mode,
               "Accept non-integral numeric entries; magnitudes below 1e-9 "
               "are treated as exact zeros");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  analyze->add_option("file", file, "System or graph JSON file")->required();

  std::string set_arg;
  auto* check = app.add_subcommand("check", "Herdability of a state set");
  check->add_option("file", file, "System or graph JSON file")->required();
  check->add_option("--set", set_arg, "Comma-separated 1-based state indices")
      ->required();

  int input_arg = 0, max_depth = 0;
  auto* walksets =
      app.add_subcommand("walksets", "Signed walk sets per input and depth");
  walksets->add_option("file", file, "System or graph JSON file")->required();
  walksets->add_option("--input", input_arg, "Restrict to one 1-based input");
  walksets->add_option("--max-depth", max_depth,
                       "Depth bound (default: number of states)");

  auto* branching =
      app.add_subcommand("branching", "Out-branching structure analysis");
  branching->add_option("file", file, "System or graph JSON file")->required();

  std::string system_path;
  double threshold = 0.0, horizon = 1.0, margin = 2.0;
  int steps = 1000;
  std::string x0_arg;
  auto* simulate = app.add_subcommand(
      "simulate", "Synthesize a steering input and integrate the trajectory");
  simulate->add_option("file", file, "System or graph JSON file");
  simulate->add_option("--system", system_path,
                       "System JSON file (alternative to the positional)");
  simulate->add_option("--set", set_arg, "States to drive above the threshold")
      ->required();
  simulate->add_option("--threshold", threshold, "Threshold h >= 0");
  simulate->add_option("--horizon", horizon, "Final time t_f");
  simulate->add_option("--steps", steps, "Integration grid intervals");
  simulate->add_option("--margin", margin, "Safety multiplier on gamma");
  simulate->add_option("--x0", x0_arg, "Comma-separated initial state");

  try {
    app.parse(argc, argv);

    const herd::ParseOptions opts{float_mode, 1e-9};

    if (analyze->parsed()) {
      const auto input = herd::parse_input_text(read_file(file), opts);
      emit(dump(herd::build_analysis_report(input)), out_path);
      return kExitOk;
    }

    if (check->parsed()) {
      const auto input = herd::parse_input_text(read_file(file), opts);
      const herd::LinearSystem sys = to_system(input);
      const auto cm = herd::controllability_matrix(sys);
      const auto X = parse_state_set(set_arg, static_cast<int>(sys.n()));
      emit(dump(herd::verdict_to_json(herd::check_set(cm, X))), out_path);
      return kExitOk;
    }

    if (walksets->parsed()) {
      const auto input = herd::parse_input_text(read_file(file), opts);
      const herd::SignedDigraph g = to_graph(input);
      const int depth = max_depth > 0 ? max_depth : g.n_states;
      if (input_arg < 0 || input_arg > g.n_inputs)
        throw herd::ParseError("--input outside 1.." +
                               std::to_string(g.n_inputs));
      const auto ws = herd::compute_walk_sets(g, depth);
      emit(dump(herd::walk_sets_to_json(ws, input_arg - 1)), out_path);
      return kExitOk;
    }

    if (branching->parsed()) {
      const auto input = herd::parse_input_text(read_file(file), opts);
      emit(dump(herd::branching_to_json(
               herd::analyze_branching(to_graph(input)))),
           out_path);
      return kExitOk;
    }

    if (simulate->parsed()) {
      if (file.empty()) file = system_path;
      if (file.empty())
        throw herd::ParseError("simulate needs an input file (--system PATH)");
      if (threshold < 0)
        throw herd::ParseError("negative thresholds are not supported");
      const auto input = herd::parse_input_text(read_file(file), opts);
      const herd::LinearSystem sys = to_system(input);
      herd::SynthesisConfig cfg;
      cfg.threshold = threshold;
      cfg.horizon = horizon;
      cfg.steps = steps;
      cfg.margin = margin;
      if (!x0_arg.empty()) {
        std::vector<double> values;
        std::stringstream ss(x0_arg);
        std::string token;
        while (std::getline(ss, token, ','))
          values.push_back(std::stod(token));
        cfg.x0 = Eigen::Map<Eigen::VectorXd>(values.data(), values.size());
      }
      const auto X = parse_state_set(set_arg, static_cast<int>(sys.n()));
      const auto result = herd::synthesize(sys, X, cfg);

      if (format == "json") {
        herd::Json summary{{"success", result.success},
                           {"gamma", result.gamma}};
        herd::Json achieved = herd::Json::object();
        for (const auto& [state, value] : result.achieved)
          achieved[std::to_string(state + 1)] = value;
        summary["achieved"] = std::move(achieved);
        summary["warnings"] = result.warnings;
        if (!out_path.empty()) {
          emit(trajectory_csv(result, horizon), out_path);
          std::cout << dump(summary);
        } else {
          emit(dump(summary), "");
        }
      } else {
        emit(trajectory_csv(result, horizon), out_path);
      }
      return result.success ? kExitOk : 1;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const herd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
