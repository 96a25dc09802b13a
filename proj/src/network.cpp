#include "citerank/network.hpp"

#include <algorithm>
#include <map>

#include "citerank/error.hpp"

namespace citerank {

CitationNetwork CitationNetwork::build(std::vector<std::string> node_ids, std::vector<Edge> edges,
                                       std::string subject, bool keep_self_loops) {
  CitationNetwork net;
  net.index_.reserve(node_ids.size());
  for (std::size_t i = 0; i < node_ids.size(); ++i) {
    auto [it, inserted] = net.index_.emplace(node_ids[i], static_cast<NodeIndex>(i));
    if (!inserted) throw Error(ErrorCode::DuplicateId, "duplicate node id '" + node_ids[i] + "'");
  }
  net.node_ids_ = std::move(node_ids);
  net.subject_ = std::move(subject);
  net.self_loops_ = keep_self_loops;

  const auto n = net.node_ids_.size();
  std::erase_if(edges, [&](const Edge& e) {
    if (e.source >= n || e.target >= n) {
      throw Error(ErrorCode::InvalidArgument, "edge (" + std::to_string(e.source) + ", " +
                                                  std::to_string(e.target) + ") outside [0, " +
                                                  std::to_string(n) + ")");
    }
    return e.weight == 0 || (!keep_self_loops && e.source == e.target);
  });
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });

  // merge repeated pairs
  std::vector<Edge> merged;
  merged.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!merged.empty() && merged.back().source == e.source && merged.back().target == e.target) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  net.edges_ = std::move(merged);
  return net;
}

CitationNetwork CitationNetwork::build_named(
    std::vector<std::string> node_ids,
    const std::vector<std::tuple<std::string, std::string, Weight>>& named_edges,
    std::string subject, bool keep_self_loops) {
  std::unordered_map<std::string, NodeIndex> index;
  for (std::size_t i = 0; i < node_ids.size(); ++i) {
    if (!index.emplace(node_ids[i], static_cast<NodeIndex>(i)).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate node id '" + node_ids[i] + "'");
    }
  }
  auto lookup = [&](const std::string& id) {
    auto [it, inserted] = index.emplace(id, static_cast<NodeIndex>(node_ids.size()));
    if (inserted) node_ids.push_back(id);
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(named_edges.size());
  for (const auto& [source, target, weight] : named_edges) {
    NodeIndex s = lookup(source);
    NodeIndex t = lookup(target);
    edges.push_back({s, t, weight});
  }
  return build(std::move(node_ids), std::move(edges), std::move(subject), keep_self_loops);
}

std::optional<NodeIndex> CitationNetwork::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Weight CitationNetwork::weight(NodeIndex source, NodeIndex target) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{source, target},
                             [](const Edge& e, const std::pair<NodeIndex, NodeIndex>& key) {
                               return std::tie(e.source, e.target) < std::tie(key.first, key.second);
                             });
  if (it != edges_.end() && it->source == source && it->target == target) return it->weight;
  return 0;
}

CitationNetwork CitationNetwork::permuted(std::span<const NodeIndex> perm) const {
  if (perm.size() != size()) {
    throw Error(ErrorCode::InvalidArgument, "permutation length does not match node count");
  }
  std::vector<std::string> ids(size());
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= size() || seen[perm[i]]) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation");
    }
    seen[perm[i]] = true;
    ids[perm[i]] = node_ids_[i];
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back({perm[e.source], perm[e.target], e.weight});
  return build(std::move(ids), std::move(edges), subject_, self_loops_);
}

std::vector<std::uint32_t> in_degree(const CitationNetwork& net) {
  std::vector<std::uint32_t> k(net.size(), 0);
  // Edges are unique per (source, target), so each stored edge is one
  // distinct citing institution.
  for (const Edge& e : net.edges()) {
    if (e.source != e.target) ++k[e.target];
  }
  return k;
}

std::vector<double> degree_centrality(const CitationNetwork& net) {
  if (net.size() < 2) {
    throw Error(ErrorCode::Degenerate, "degree centrality needs at least 2 nodes");
  }
  const double denom = static_cast<double>(net.size() - 1);
  auto k = in_degree(net);
  std::vector<double> c(k.size());
  std::transform(k.begin(), k.end(), c.begin(), [&](std::uint32_t v) { return v / denom; });
  return c;
}

std::vector<CentralityPoint> centrality_distribution(const CitationNetwork& net) {
  if (net.size() < 2) {
    throw Error(ErrorCode::Degenerate, "centrality distribution needs at least 2 nodes");
  }
  // Tally integer degrees so equal centralities group exactly.
  std::map<std::uint32_t, std::size_t> counts;
  for (auto k : in_degree(net)) ++counts[k];
  const double n = static_cast<double>(net.size());
  const double denom = n - 1.0;
  std::vector<CentralityPoint> dist;
  dist.reserve(counts.size());
  for (auto [k, count] : counts) dist.push_back({k / denom, static_cast<double>(count) / n});
  return dist;
}

DegreeReport degree_report(const CitationNetwork& net) {
  return {in_degree(net), degree_centrality(net), centrality_distribution(net)};
}

NetworkSummary network_summary(const CitationNetwork& net) {
  NetworkSummary s;
  s.nodes = net.size();
  s.edges = net.edges().size();
  s.self_loops_included = net.self_loops_included();
  for (const Edge& e : net.edges()) s.citations += e.weight;
  return s;
}

}  // namespace citerank
