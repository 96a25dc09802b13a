#include "citerank/synthnet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "citerank/error.hpp"

namespace citerank {

namespace {

struct BaseGraph {
  std::vector<Edge> edges;
  std::vector<Weight> received;
};

BaseGraph generate_base(const SynthConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::poisson_distribution<long> out_count(cfg.mean_out_citations);
  const std::size_t n = cfg.nodes;

  BaseGraph g;
  g.received.assign(n, 0);
  std::vector<double> attractiveness(n);
  for (std::size_t source = 0; source < n; ++source) {
    const long citations = n > 1 ? out_count(rng) : 0;
    for (long c = 0; c < citations; ++c) {
      for (std::size_t t = 0; t < n; ++t) {
        attractiveness[t] =
            t == source ? 0.0 : std::pow(static_cast<double>(g.received[t]) + 1.0, cfg.attachment_exponent);
      }
      std::discrete_distribution<std::size_t> pick(attractiveness.begin(), attractiveness.end());
      const std::size_t target = pick(rng);
      g.edges.push_back({static_cast<NodeIndex>(source), static_cast<NodeIndex>(target), 1});
      ++g.received[target];
    }
  }
  return g;
}

std::vector<NodeIndex> least_cited(const std::vector<Weight>& received, std::size_t count) {
  std::vector<NodeIndex> order(received.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeIndex a, NodeIndex b) { return received[a] < received[b]; });
  order.resize(count);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::string> node_names(std::size_t n) {
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    ids.push_back("inst" + std::string(width - digits.size(), '0') + digits);
  }
  return ids;
}

}  // namespace

void SynthConfig::validate() const {
  if (nodes < 1) throw Error(ErrorCode::InvalidArgument, "synth: nodes must be positive");
  if (!(attachment_exponent >= 0.0)) throw Error(ErrorCode::InvalidArgument, "synth: attachment_exponent must be >= 0");
  if (!(mean_out_citations > 0.0)) throw Error(ErrorCode::InvalidArgument, "synth: mean_out_citations must be positive");
  if (cartel) {
    if (cartel->members >= nodes) throw Error(ErrorCode::InvalidArgument, "synth: cartel must be smaller than the network");
    if (!(cartel->internal_weight_boost >= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "synth: internal_weight_boost must be >= 1");
    }
  }
}

std::vector<NodeIndex> cartel_members(const SynthConfig& cfg) {
  cfg.validate();
  if (!cfg.cartel) return {};
  return least_cited(generate_base(cfg).received, cfg.cartel->members);
}

CitationNetwork generate(const SynthConfig& cfg) {
  cfg.validate();
  BaseGraph g = generate_base(cfg);
  if (cfg.cartel) {
    const auto members = least_cited(g.received, cfg.cartel->members);
    const auto boost = static_cast<Weight>(std::llround(cfg.cartel->internal_weight_boost));
    for (NodeIndex a : members) {
      for (NodeIndex b : members) {
        if (a != b) g.edges.push_back({a, b, boost});
      }
    }
  }
  return CitationNetwork::build(node_names(cfg.nodes), std::move(g.edges), "synthetic");
}

}  // namespace citerank
