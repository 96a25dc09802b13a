#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace citerank {

using NodeIndex = std::uint32_t;
using Weight = std::uint64_t;

// A directed citation count: `weight` citations from `source` to `target`.
struct Edge {
  NodeIndex source = 0;
  NodeIndex target = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted directed institution graph.
///
/// Edges are stored sparsely, sorted by (source, target), with strictly
/// positive weights. The network is immutable once built; `build` merges
/// duplicate pairs by summing, discards zero weights and drops self-loops
/// unless `keep_self_loops` is set.
class CitationNetwork {
 public:
  CitationNetwork() = default;

  static CitationNetwork build(std::vector<std::string> node_ids, std::vector<Edge> edges,
                               std::string subject = {}, bool keep_self_loops = false);

  // Builds from identifier triples. Unknown ids referenced by an edge are
  // appended as new nodes in first-seen order after `node_ids`.
  static CitationNetwork build_named(
      std::vector<std::string> node_ids,
      const std::vector<std::tuple<std::string, std::string, Weight>>& named_edges,
      std::string subject = {}, bool keep_self_loops = false);

  std::size_t size() const noexcept { return node_ids_.size(); }
  bool empty() const noexcept { return node_ids_.empty(); }

  const std::vector<std::string>& node_ids() const noexcept { return node_ids_; }
  const std::string& node_id(NodeIndex i) const { return node_ids_.at(i); }
  std::optional<NodeIndex> find(const std::string& id) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const std::string& subject() const noexcept { return subject_; }
  bool self_loops_included() const noexcept { return self_loops_; }

  // ω_ij, zero when absent.
  Weight weight(NodeIndex source, NodeIndex target) const;
  // A_ij = 1 iff ω_ij > 0.
  int adjacency(NodeIndex source, NodeIndex target) const { return weight(source, target) > 0 ? 1 : 0; }

  // Same graph with node i renamed/moved to position perm[i].
  CitationNetwork permuted(std::span<const NodeIndex> perm) const;

 private:
  std::vector<std::string> node_ids_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<Edge> edges_;
  std::string subject_;
  bool self_loops_ = false;
};

struct CentralityPoint {
  double value = 0.0;
  double probability = 0.0;
};

struct DegreeReport {
  std::vector<std::uint32_t> in_degree;
  std::vector<double> degree_centrality;
  std::vector<CentralityPoint> centrality_distribution;
};

struct NetworkSummary {
  std::size_t nodes = 0;
  Weight citations = 0;
  std::size_t edges = 0;
  bool self_loops_included = false;
};

// Number of distinct citing institutions per node, self-citations excluded.
std::vector<std::uint32_t> in_degree(const CitationNetwork& net);

// k_in / (N - 1). Throws Degenerate when N < 2.
std::vector<double> degree_centrality(const CitationNetwork& net);

// Exact empirical distribution of degree centrality, ascending by value.
std::vector<CentralityPoint> centrality_distribution(const CitationNetwork& net);

DegreeReport degree_report(const CitationNetwork& net);

NetworkSummary network_summary(const CitationNetwork& net);

}  // namespace citerank
