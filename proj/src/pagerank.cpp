#include "citerank/pagerank.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "citerank/error.hpp"

namespace citerank {

void PageRankConfig::validate() const {
  if (!(damping >= 0.0 && damping < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "damping must lie in [0, 1), got " + std::to_string(damping));
  }
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (max_iterations < 1) throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");
}

double TransitionStructure::probability(NodeIndex source, NodeIndex target) const {
  auto first = incoming.begin() + static_cast<std::ptrdiff_t>(offsets.at(target));
  auto last = incoming.begin() + static_cast<std::ptrdiff_t>(offsets.at(target + 1));
  auto it = std::lower_bound(first, last, source,
                             [](const Entry& e, NodeIndex s) { return e.source < s; });
  return (it != last && it->source == source) ? it->probability : 0.0;
}

TransitionStructure normalize_weights(const CitationNetwork& net) {
  const std::size_t n = net.size();
  std::vector<Weight> out_weight(n, 0);
  std::vector<std::size_t> in_count(n, 0);
  for (const Edge& e : net.edges()) {
    out_weight[e.source] += e.weight;
    ++in_count[e.target];
  }

  TransitionStructure t;
  t.dangling.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.dangling[i] = out_weight[i] == 0;

  t.offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) t.offsets[i + 1] = t.offsets[i] + in_count[i];
  t.incoming.resize(t.offsets[n]);

  // Edges arrive sorted by source, so each target's bucket fills in source order.
  std::vector<std::size_t> cursor(t.offsets.begin(), t.offsets.end() - 1);
  for (const Edge& e : net.edges()) {
    t.incoming[cursor[e.target]++] = {
        e.source, static_cast<double>(e.weight) / static_cast<double>(out_weight[e.source])};
  }
  return t;
}

PageRankResult pagerank(const CitationNetwork& net, const PageRankConfig& cfg) {
  cfg.validate();
  if (net.empty()) throw Error(ErrorCode::InvalidArgument, "pagerank of an empty network");

  const std::size_t n = net.size();
  const double nd = static_cast<double>(n);
  const double d = cfg.damping;
  const TransitionStructure t = normalize_weights(net);

  std::vector<NodeIndex> dangling_nodes;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.dangling[i]) dangling_nodes.push_back(static_cast<NodeIndex>(i));
  }

  PageRankResult result;
  std::vector<double> current(n, 1.0 / nd);
  std::vector<double> next(n, 0.0);

  for (std::size_t iter = 1; iter <= cfg.max_iterations; ++iter) {
    double dangling_mass = 0.0;
    if (cfg.dangling == DanglingPolicy::UniformRedistribution) {
      for (NodeIndex i : dangling_nodes) dangling_mass += current[i];
    }
    const double base = (1.0 - d) / nd + d * dangling_mass / nd;

    double delta = 0.0;
    for (std::size_t target = 0; target < n; ++target) {
      double inflow = 0.0;
      for (std::size_t k = t.offsets[target]; k < t.offsets[target + 1]; ++k) {
        inflow += t.incoming[k].probability * current[t.incoming[k].source];
      }
      next[target] = base + d * inflow;
      delta += std::abs(next[target] - current[target]);
    }
    if (!std::isfinite(delta)) {
      throw Error(ErrorCode::Numeric, "non-finite value at iteration " + std::to_string(iter));
    }

    current.swap(next);
    result.iterations_used = iter;
    result.final_delta = delta;
    if (delta <= cfg.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(current);
  return result;
}

std::vector<double> pagerank_dense(const CitationNetwork& net, const PageRankConfig& cfg) {
  cfg.validate();
  if (net.empty()) throw Error(ErrorCode::InvalidArgument, "pagerank of an empty network");
  const std::size_t n = net.size();
  if (n > kDenseOracleMaxNodes) {
    throw Error(ErrorCode::TooLarge, "dense solve refused for " + std::to_string(n) + " nodes (max " +
                                         std::to_string(kDenseOracleMaxNodes) + ")");
  }
  const auto ni = static_cast<Eigen::Index>(n);
  const double d = cfg.damping;

  // Column-stochastic transition matrix: M(target, source).
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(ni, ni);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(ni);
  for (const Edge& e : net.edges()) out(e.source) += static_cast<double>(e.weight);
  for (const Edge& e : net.edges()) {
    m(e.target, e.source) += static_cast<double>(e.weight) / out(e.source);
  }
  if (cfg.dangling == DanglingPolicy::UniformRedistribution) {
    for (Eigen::Index j = 0; j < ni; ++j) {
      if (out(j) == 0.0) m.col(j).setConstant(1.0 / static_cast<double>(n));
    }
  }

  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(ni, ni) - d * m;
  Eigen::VectorXd b = Eigen::VectorXd::Constant(ni, (1.0 - d) / static_cast<double>(n));
  Eigen::VectorXd x = a.fullPivLu().solve(b);
  if (!x.allFinite()) throw Error(ErrorCode::Numeric, "dense PageRank solve produced non-finite values");
  return {x.data(), x.data() + n};
}

}  // namespace citerank
