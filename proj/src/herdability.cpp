#include "herd/herdability.hpp"

#include <algorithm>
#include <stdexcept>

#include "herd/simplex.hpp"

namespace herd {

std::set<int> herdable_states(const ControllabilityMatrix& cm) {
  std::set<int> states;
  for (Eigen::Index i = 0; i < cm.C.rows(); ++i)
    for (Eigen::Index j = 0; j < cm.C.cols(); ++j)
      if (cm.C(i, j) != 0) {
        states.insert(static_cast<int>(i));
        break;
      }
  return states;
}

HerdabilityVerdict check_set(const ControllabilityMatrix& cm,
                             const std::set<int>& X) {
  if (X.empty()) throw std::invalid_argument("query set is empty");
  for (int i : X)
    if (i < 0 || i >= cm.n)
      throw std::invalid_argument("state index out of range: " +
                                  std::to_string(i + 1));

  RationalMatrix rows(X.size(), cm.C.cols());
  Eigen::Index r = 0;
  for (int i : X) rows.row(r++) = cm.C.row(i);

  const FeasibilityResult fr = solve_ge_ones(rows);
  HerdabilityVerdict verdict;
  verdict.query_set = X;
  verdict.herdable = fr.feasible;
  if (fr.feasible)
    verdict.witness = fr.solution;
  else
    verdict.certificate = fr.farkas;
  validate_verdict(verdict, cm);
  return verdict;
}

HerdabilityVerdict completely_herdable(const ControllabilityMatrix& cm) {
  std::set<int> all;
  for (int i = 0; i < cm.n; ++i) all.insert(i);
  return check_set(cm, all);
}

std::optional<std::map<int, Eigen::Index>> unisigned_sufficient(
    const ControllabilityMatrix& cm) {
  std::vector<bool> unisigned_col(cm.C.cols());
  for (Eigen::Index j = 0; j < cm.C.cols(); ++j)
    unisigned_col[j] = is_unisigned(cm.C.col(j));

  std::map<int, Eigen::Index> assignment;
  for (Eigen::Index i = 0; i < cm.C.rows(); ++i) {
    Eigen::Index found = -1;
    for (Eigen::Index j = 0; j < cm.C.cols(); ++j)
      if (unisigned_col[j] && cm.C(i, j) != 0) {
        found = j;
        break;
      }
    if (found < 0) return std::nullopt;
    assignment[static_cast<int>(i)] = found;
  }
  return assignment;
}

SignHerdabilityReport sign_herdable(const SignedDigraph& g, int depth_bound) {
  const WalkSets ws = compute_walk_sets(g, depth_bound);
  SignHerdabilityReport report;
  report.completely_sign_herdable = true;
  for (int i = 0; i < g.n_states; ++i) {
    bool covered = false;
    for (int d = 1; d <= depth_bound && !covered; ++d)
      for (int j = 0; j < g.n_inputs && !covered; ++j) {
        const auto& P = ws.P(j, d);
        const auto& N = ws.N(j, d);
        const bool member = P.count(i) || N.count(i);
        if (member && (P.empty() != N.empty())) {
          report.witness[i] = SignWitness{j, d};
          covered = true;
        }
      }
    if (!covered) {
      report.completely_sign_herdable = false;
      report.witness.clear();
      return report;
    }
  }
  return report;
}

SignHerdabilityReport sign_herdable(const SignedDigraph& g) {
  return sign_herdable(g, g.n_states);
}

HerdabilityVerdict positive_system_verdict(const LinearSystem& sys) {
  if (!is_positive_system(sys))
    throw std::invalid_argument(
        "positive_system_verdict requires a positive system");
  const ReachabilityReport reach = reachability(system_to_graph(sys));
  HerdabilityVerdict verdict;
  for (int i = 0; i < sys.n(); ++i) verdict.query_set.insert(i);
  verdict.herdable = reach.input_connectable;
  return verdict;
}

namespace {

// Distinct per-depth choices among {P_d, N_d, empty}; collapsing equal sets
// keeps the family count at the product of per-depth option counts.
std::vector<std::vector<std::set<int>>> family_options(
    const std::vector<DepthLayer>& layers) {
  std::vector<std::vector<std::set<int>>> options;
  for (const DepthLayer& layer : layers) {
    std::vector<std::set<int>> opts{layer.positive, layer.negative,
                                    std::set<int>{}};
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
    options.push_back(std::move(opts));
  }
  return options;
}

}  // namespace

BranchingAnalysis analyze_branching(const SignedDigraph& g) {
  validate_graph(g);
  if (g.n_inputs != 1)
    throw std::invalid_argument(
        "branching analysis is defined for single-input graphs");

  BranchingAnalysis ba;
  ba.root_input = 0;

  std::vector<int> in_degree(g.n_states, 0);
  for (const Edge& e : g.edges) ++in_degree[e.to.index];
  if (std::any_of(in_degree.begin(), in_degree.end(),
                  [](int d) { return d != 1; }))
    return ba;  // a state with 0 or >1 in-edges breaks walk uniqueness

  // With every in-degree exactly 1, reachability from the input implies the
  // edges form an out-branching (a cycle would cut its nodes off the input).
  std::vector<int> depth(g.n_states, -1);
  std::vector<int> sign(g.n_states, 0);
  std::vector<std::pair<int, int>> frontier;  // (state, walk sign)
  for (const Edge& e : g.edges)
    if (!e.from.is_state()) {
      depth[e.to.index] = 1;
      sign[e.to.index] = e.sign;
      frontier.emplace_back(e.to.index, e.sign);
    }
  while (!frontier.empty()) {
    const auto [v, s] = frontier.back();
    frontier.pop_back();
    for (const Edge& e : g.edges)
      if (e.from == NodeId::state(v)) {
        depth[e.to.index] = depth[v] + 1;
        sign[e.to.index] = s * e.sign;
        frontier.emplace_back(e.to.index, sign[e.to.index]);
      }
  }
  if (std::any_of(depth.begin(), depth.end(), [](int d) { return d < 0; }))
    return ba;

  ba.is_out_branching = true;
  ba.d_max = *std::max_element(depth.begin(), depth.end());
  ba.layers.resize(ba.d_max);
  for (int v = 0; v < g.n_states; ++v)
    (sign[v] > 0 ? ba.layers[depth[v] - 1].positive
                 : ba.layers[depth[v] - 1].negative)
        .insert(v);

  for (const DepthLayer& layer : ba.layers)
    ba.max_herdable_size += static_cast<int>(
        std::max(layer.positive.size(), layer.negative.size()));
  ba.k_walk_size = ba.d_max;

  const auto options = family_options(ba.layers);
  std::vector<std::set<int>> families{std::set<int>{}};
  for (const auto& opts : options) {
    std::vector<std::set<int>> extended;
    for (const auto& base : families) {
      for (const auto& choice : opts) {
        if (static_cast<int>(extended.size()) >= kMaxFamilyCount) {
          ba.families_truncated = true;
          break;
        }
        std::set<int> merged = base;
        merged.insert(choice.begin(), choice.end());
        extended.push_back(std::move(merged));
      }
      if (ba.families_truncated) break;
    }
    families = std::move(extended);
    if (ba.families_truncated) break;
  }
  std::sort(families.begin(), families.end(),
            [](const std::set<int>& a, const std::set<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  ba.families = std::move(families);
  return ba;
}

std::vector<std::set<int>> maximal_families(const BranchingAnalysis& ba) {
  std::vector<std::set<int>> result;
  for (const auto& f : ba.families) {
    const bool dominated = std::any_of(
        ba.families.begin(), ba.families.end(), [&](const std::set<int>& g) {
          return g.size() > f.size() &&
                 std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
    if (!dominated) result.push_back(f);
  }
  return result;
}

void validate_verdict(const HerdabilityVerdict& v,
                      const ControllabilityMatrix& cm) {
  if (v.query_set.empty()) throw std::logic_error("verdict without query set");
  if (v.herdable) {
    if (!v.witness || v.witness->size() != cm.C.cols())
      throw std::logic_error("herdable verdict lacks a witness");
    const RationalVector image = cm.C * *v.witness;
    for (int i : v.query_set)
      if (image(i) < 1)
        throw std::logic_error("witness violates (C alpha)_i >= 1 on X");
  } else {
    if (!v.certificate ||
        v.certificate->size() != static_cast<Eigen::Index>(v.query_set.size()))
      throw std::logic_error("infeasible verdict lacks a certificate");
    bool nonzero = false;
    for (Eigen::Index k = 0; k < v.certificate->size(); ++k) {
      if ((*v.certificate)(k) < 0)
        throw std::logic_error("Farkas certificate must be nonnegative");
      nonzero = nonzero || (*v.certificate)(k) != 0;
    }
    if (!nonzero) throw std::logic_error("Farkas certificate is zero");
    for (Eigen::Index col = 0; col < cm.C.cols(); ++col) {
      Rational dot(0);
      Eigen::Index k = 0;
      for (int i : v.query_set) dot += (*v.certificate)(k++) * cm.C(i, col);
      if (dot != 0)
        throw std::logic_error("Farkas certificate does not annihilate C_X");
    }
  }
}

}  // namespace herd
