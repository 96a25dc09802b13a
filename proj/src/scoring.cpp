#include "citerank/scoring.hpp"

#include <algorithm>
#include <cmath>

#include "citerank/error.hpp"

namespace citerank {

ScoreTable::ScoreTable(std::string subject, std::vector<std::string> institutions)
    : subject_(std::move(subject)), institutions_(std::move(institutions)) {}

bool ScoreTable::has_column(const std::string& name) const {
  return std::any_of(columns_.begin(), columns_.end(), [&](const auto& c) { return c.first == name; });
}

const std::vector<double>& ScoreTable::column(const std::string& name) const {
  for (const auto& [key, values] : columns_) {
    if (key == name) return values;
  }
  throw Error(ErrorCode::NotFound, "missing column '" + name + "'");
}

std::vector<std::string> ScoreTable::column_names() const {
  std::vector<std::string> names;
  names.reserve(columns_.size());
  for (const auto& c : columns_) names.push_back(c.first);
  return names;
}

void ScoreTable::set_column(const std::string& name, std::vector<double> values) {
  if (values.size() != institutions_.size()) {
    throw Error(ErrorCode::InvalidArgument, "column '" + name + "' has " + std::to_string(values.size()) +
                                                " values for " + std::to_string(institutions_.size()) +
                                                " institutions");
  }
  if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::InvalidArgument, "column '" + name + "' has a non-finite value");
  }
  for (auto& c : columns_) {
    if (c.first == name) {
      c.second = std::move(values);
      return;
    }
  }
  columns_.emplace_back(name, std::move(values));
}

std::vector<double> compress(std::span<const double> raw) {
  if (raw.empty()) throw Error(ErrorCode::InvalidArgument, "compress: empty input");
  if (std::any_of(raw.begin(), raw.end(), [](double v) { return !(v >= 0.0) || !std::isfinite(v); })) {
    throw Error(ErrorCode::InvalidArgument, "compress: raw values must be finite and non-negative");
  }
  const double top = *std::max_element(raw.begin(), raw.end());
  if (top <= 0.0) throw Error(ErrorCode::Degenerate, "compress: all raw values are zero");

  std::vector<double> out(raw.size());
  std::transform(raw.begin(), raw.end(), out.begin(), [&](double v) {
    return v == top ? 100.0 : std::sqrt(v * 10000.0 / top);
  });
  return out;
}

std::vector<double> composite_score(const ScoreTable& table, const SubjectProfile& profile) {
  profile.validate();
  std::vector<double> total(table.rows(), 0.0);
  double weight_sum = 0.0;
  for (Indicator ind : kIndicators) {
    const long w = profile.weight(ind);
    if (w == 0) continue;
    const auto& scores = table.column(std::string(indicator_name(ind)));
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += static_cast<double>(w) * scores[i];
    weight_sum += static_cast<double>(w);
  }
  for (double& v : total) v /= weight_sum;
  return total;
}

std::vector<double> normalize_pagerank(std::span<const double> scores) {
  if (scores.empty()) return {};
  const double top = *std::max_element(scores.begin(), scores.end());
  if (!(top > 0.0) || !std::isfinite(top)) {
    throw Error(ErrorCode::InvalidArgument, "normalize_pagerank: scores must be positive and finite");
  }
  std::vector<double> out(scores.size());
  std::transform(scores.begin(), scores.end(), out.begin(), [&](double v) {
    return v == top ? 100.0 : std::sqrt(v / top) * 100.0;
  });
  return out;
}

}  // namespace citerank
