#pragma once

#include <cstddef>
#include <vector>

#include "citerank/network.hpp"

namespace citerank {

enum class DanglingPolicy {
  // Mass sitting on nodes without outgoing citations is spread over all
  // nodes before damping, so the scores stay a probability vector.
  UniformRedistribution,
  // Dangling mass is dropped; only the teleport term reaches every node.
  TeleportOnly,
};

struct PageRankConfig {
  double damping = 0.85;
  double tolerance = 1e-12;
  std::size_t max_iterations = 1000;
  DanglingPolicy dangling = DanglingPolicy::UniformRedistribution;

  // Throws InvalidArgument unless 0 <= damping < 1, tolerance > 0 and
  // max_iterations >= 1.
  void validate() const;
};

struct PageRankResult {
  std::vector<double> scores;
  std::size_t iterations_used = 0;
  bool converged = false;
  double final_delta = 0.0;
};

// Row-normalized outgoing citations. Score flows from citing to cited, so
// every source's outgoing weights are divided by its total citations given.
struct TransitionStructure {
  struct Entry {
    NodeIndex source = 0;
    double probability = 0.0;
  };
  // Incoming transitions grouped by target: entries for target t live in
  // [offsets[t], offsets[t + 1]), ordered by source.
  std::vector<std::size_t> offsets;
  std::vector<Entry> incoming;
  std::vector<bool> dangling;

  std::size_t size() const noexcept { return dangling.size(); }
  // ω̃ from source to target, zero when there is no edge.
  double probability(NodeIndex source, NodeIndex target) const;
};

TransitionStructure normalize_weights(const CitationNetwork& net);

/// Power iteration from the uniform vector:
///   π ← (1 − d)/N · 1 + d · ω̃ π,
/// with dangling mass handled per `cfg.dangling` before damping. Stops once
/// the L1 change between iterates drops to `cfg.tolerance`; if the budget
/// runs out the last iterate is returned with `converged == false`.
///
/// Throws InvalidArgument on an empty network or bad config and Numeric on
/// non-finite intermediate values.
PageRankResult pagerank(const CitationNetwork& net, const PageRankConfig& cfg = {});

inline constexpr std::size_t kDenseOracleMaxNodes = 200;

// Direct dense solve of the PageRank linear system under the same dangling
// policy. Reference implementation for tests; refuses N > 200.
std::vector<double> pagerank_dense(const CitationNetwork& net, const PageRankConfig& cfg = {});

}  // namespace citerank
