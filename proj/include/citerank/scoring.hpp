#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "citerank/pagerank.hpp"
#include "citerank/profile.hpp"

namespace citerank {

/// Per-institution named columns for one subject. Column order is kept as
/// inserted so CSV round trips preserve the layout.
class ScoreTable {
 public:
  ScoreTable() = default;
  ScoreTable(std::string subject, std::vector<std::string> institutions);

  const std::string& subject() const noexcept { return subject_; }
  const std::vector<std::string>& institutions() const noexcept { return institutions_; }
  std::size_t rows() const noexcept { return institutions_.size(); }

  bool has_column(const std::string& name) const;
  // Throws NotFound naming the column.
  const std::vector<double>& column(const std::string& name) const;
  std::vector<std::string> column_names() const;
  std::size_t column_count() const noexcept { return columns_.size(); }
  const std::string& column_name(std::size_t i) const { return columns_.at(i).first; }

  // Adds or replaces a column. Throws InvalidArgument on a length mismatch
  // or a non-finite value.
  void set_column(const std::string& name, std::vector<double> values);

 private:
  std::string subject_;
  std::vector<std::string> institutions_;
  std::vector<std::pair<std::string, std::vector<double>>> columns_;
};

// sqrt(raw * 10000 / max(raw)): the largest value maps to 100. Throws
// InvalidArgument on empty input or negative values, Degenerate when all
// values are zero.
std::vector<double> compress(std::span<const double> raw);

// Weighted mean of the compressed indicator columns (named PUB, CNCI, IC,
// TOP, AWD), divided by the total weight so all-100 scores give 100.
// Columns with zero weight may be absent.
std::vector<double> composite_score(const ScoreTable& table, const SubjectProfile& profile);

// sqrt(pi / max(pi)) * 100.
std::vector<double> normalize_pagerank(std::span<const double> scores);
inline std::vector<double> normalize_pagerank(const PageRankResult& pr) { return normalize_pagerank(pr.scores); }

}  // namespace citerank
