#include "herd/report.hpp"

#include <algorithm>

namespace herd {

namespace {

Json rational_vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json state_set_to_json(const std::set<int>& s) {
  Json out = Json::array();
  for (int i : s) out.push_back(i + 1);  // 1-based externally
  return out;
}

Json node_set_to_json(const std::set<int>& s) {
  Json out = Json::array();
  for (int i : s) out.push_back(to_string(NodeId::state(i)));
  return out;
}

}  // namespace

Json verdict_to_json(const HerdabilityVerdict& v) {
  Json out{{"herdable", v.herdable}};
  if (v.witness) out["witness"] = rational_vector_to_json(*v.witness);
  if (v.certificate)
    out["certificate"] = rational_vector_to_json(*v.certificate);
  return out;
}

Json walk_sets_to_json(const WalkSets& ws, int only_input) {
  Json layers = Json::array();
  for (int j = 0; j < ws.n_inputs; ++j) {
    if (only_input >= 0 && j != only_input) continue;
    for (int d = 1; d <= ws.depth_bound; ++d)
      layers.push_back(Json{{"input", to_string(NodeId::input(j))},
                            {"depth", d},
                            {"P", node_set_to_json(ws.P(j, d))},
                            {"N", node_set_to_json(ws.N(j, d))}});
  }
  return layers;
}

Json branching_to_json(const BranchingAnalysis& ba) {
  Json out{{"is_out_branching", ba.is_out_branching},
           {"root_input", to_string(NodeId::input(ba.root_input))}};
  if (!ba.is_out_branching) return out;
  out["d_max"] = ba.d_max;
  Json layers = Json::array();
  for (int d = 1; d <= ba.d_max; ++d)
    layers.push_back(Json{{"depth", d},
                          {"P", state_set_to_json(ba.layers[d - 1].positive)},
                          {"N", state_set_to_json(ba.layers[d - 1].negative)}});
  out["layers"] = std::move(layers);
  Json families = Json::array();
  for (const auto& f : ba.families) families.push_back(state_set_to_json(f));
  out["families"] = std::move(families);
  out["families_truncated"] = ba.families_truncated;
  out["max_herdable_size"] = ba.max_herdable_size;
  out["k_walk_size"] = ba.k_walk_size;
  return out;
}

Json sign_herdability_to_json(const SignHerdabilityReport& r) {
  Json out{{"completely_sign_herdable", r.completely_sign_herdable}};
  if (r.completely_sign_herdable) {
    Json witness = Json::object();
    for (const auto& [state, w] : r.witness)
      witness[to_string(NodeId::state(state))] =
          Json{{"input", to_string(NodeId::input(w.input))},
               {"depth", w.depth}};
    out["witness"] = std::move(witness);
  }
  return out;
}

Json build_analysis_report(const ParsedInput& input) {
  LinearSystem sys;
  SignedDigraph graph;
  if (input.system) {
    sys = *input.system;
    graph = system_to_graph(sys);
  } else if (input.graph) {
    graph = *input.graph;
    sys = graph_to_sign_pattern(graph);
  } else {
    throw std::invalid_argument("no input parsed");
  }

  const ControllabilityMatrix cm = controllability_matrix(sys);
  const ReachabilityReport reach = reachability(graph);
  const std::set<int> herdable = herdable_states(cm);
  const HerdabilityVerdict complete = completely_herdable(cm);
  const auto unisigned_map = unisigned_sufficient(cm);
  const SignHerdabilityReport sign_report = sign_herdable(graph);
  const bool positive = is_positive_system(sys);
  const WalkSets ws = compute_walk_sets(graph, graph.n_states);

  Json report;
  report["system"] = Json{{"n", graph.n_states},
                          {"m", graph.n_inputs},
                          {"positive", positive}};
  Json c_rows = Json::array();
  for (Eigen::Index i = 0; i < cm.C.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < cm.C.cols(); ++j)
      row.push_back(to_string(cm.C(i, j)));
    c_rows.push_back(std::move(row));
  }
  report["controllability"] =
      Json{{"C", std::move(c_rows)},
           {"rank", static_cast<int>(range_basis(cm).rank)}};
  report["input_connectable"] = reach.input_connectable;
  report["herdable_states"] = state_set_to_json(herdable);
  report["complete_herdability"] = verdict_to_json(complete);

  Json uni{{"present", unisigned_map.has_value()}};
  if (unisigned_map) {
    Json assignment = Json::object();
    for (const auto& [state, col] : *unisigned_map)
      assignment[to_string(NodeId::state(state))] =
          static_cast<int>(col) + 1;
    uni["assignment"] = std::move(assignment);
  }
  report["unisigned_sufficient"] = std::move(uni);
  report["sign_herdability"] = sign_herdability_to_json(sign_report);
  if (positive)
    report["positive_system_verdict"] =
        verdict_to_json(positive_system_verdict(sys));

  std::optional<BranchingAnalysis> branching;
  if (graph.n_inputs == 1) {
    branching = analyze_branching(graph);
    report["branching"] = branching_to_json(*branching);
  }
  report["walk_sets"] = walk_sets_to_json(ws);

  // Internal consistency gates; a violation here is a library defect.
  if (complete.herdable && !reach.input_connectable)
    throw std::logic_error(
        "inconsistent report: completely herdable but not input connectable");
  if (branching && branching->is_out_branching)
    for (const auto& family : branching->families)
      if (!std::includes(herdable.begin(), herdable.end(), family.begin(),
                         family.end()))
        throw std::logic_error(
            "inconsistent report: branching family outside herdable states");
  return report;
}

}  // namespace herd
