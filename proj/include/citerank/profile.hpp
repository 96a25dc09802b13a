#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citerank {

enum class Indicator { PUB, CNCI, IC, TOP, AWD };

inline constexpr std::array<Indicator, 5> kIndicators = {Indicator::PUB, Indicator::CNCI, Indicator::IC,
                                                         Indicator::TOP, Indicator::AWD};

std::string_view indicator_name(Indicator ind);
std::optional<Indicator> parse_indicator(std::string_view name);

struct YearRange {
  int first = 2010;
  int last = 2014;

  bool contains(int year) const noexcept { return year >= first && year <= last; }
};

/// One subject ranking: which records belong to it, the minimum publication
/// count for an institution to be ranked, and the indicator weights used to
/// build the composite score (indexed in `kIndicators` order).
struct SubjectProfile {
  std::string name;
  std::string category;
  long publication_threshold = 1;
  YearRange years;
  std::array<long, 5> weights{};

  long weight(Indicator ind) const { return weights[static_cast<std::size_t>(ind)]; }

  // Throws InvalidArgument when threshold < 1, the year range is inverted,
  // a weight is negative or no weight is positive.
  void validate() const;
};

// The five subjects shipped by default (DEN, FIN, LIB, TEL, VET).
const std::vector<SubjectProfile>& builtin_profiles();

// Profiles from a JSON config file:
//   {"profiles": [{"name": "DEN", "category": "...", "publication_threshold": 5,
//                  "year_range": [2010, 2014],
//                  "indicator_weights": {"PUB": 100, "CNCI": 100, ...}}]}
std::vector<SubjectProfile> load_profiles(const std::string& path);

// Looks `name` up in `profiles`; throws NotFound naming the subject.
const SubjectProfile& find_profile(const std::vector<SubjectProfile>& profiles, std::string_view name);

}  // namespace citerank
