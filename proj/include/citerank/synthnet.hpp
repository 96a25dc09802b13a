#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "citerank/network.hpp"

namespace citerank {

struct Cartel {
  std::size_t members = 5;
  double internal_weight_boost = 20.0;
};

struct SynthConfig {
  std::size_t nodes = 100;
  double attachment_exponent = 1.0;
  double mean_out_citations = 10.0;
  std::optional<Cartel> cartel;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Seeded preferential-attachment citation network.
///
/// Nodes are visited in index order. Each draws a Poisson number of
/// citations (mean `mean_out_citations`); every citation picks a target
/// other than itself with probability proportional to
/// (citations received so far + 1)^attachment_exponent.
///
/// With a cartel, the base network is generated first (same draws as
/// without one), then the `members` nodes with the fewest citations
/// received (ties to the lower index) each cite every other member
/// round(internal_weight_boost) extra times.
CitationNetwork generate(const SynthConfig& cfg);

// The nodes `generate` would pick as cartel members for this config.
std::vector<NodeIndex> cartel_members(const SynthConfig& cfg);

}  // namespace citerank
