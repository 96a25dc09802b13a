#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace citerank {

class ScoreTable;

// Dense row-major matrix for the small (p x p, p x k) objects used here.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  // Throws InvalidArgument when rows have different lengths.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct Correlation {
  double r = 0.0;
  double p = 1.0;  // two-sided, Student t approximation
};

// Two-sided p-value for a correlation r estimated with `dof` degrees of
// freedom, from t = r * sqrt(dof / (1 - r^2)).
double correlation_p_value(double r, double dof);

// Ranks starting at 1; tied values share the average of their positions.
std::vector<double> average_ranks(std::span<const double> values, bool descending = false);

// Sample Pearson correlation. Needs n >= 3 and non-constant inputs
// (Degenerate otherwise).
Correlation pearson(std::span<const double> x, std::span<const double> y);

// Pearson correlation of average ranks.
Correlation spearman(std::span<const double> x, std::span<const double> y);

/// Kendall's coefficient of concordance for m judges scoring the same n
/// items (one row per judge). Rows are converted to average ranks, and the
/// denominator carries the usual tie correction:
///   W = 12 S / (m^2 (n^3 - n) - m * sum(t^3 - t)).
double kendall_w(const std::vector<std::vector<double>>& rows);

// First-order partial correlation of x and y controlling for z; the
// p-value uses n - 3 degrees of freedom. Degenerate when z is perfectly
// correlated with x or y.
Correlation partial_correlation(std::span<const double> x, std::span<const double> y,
                                std::span<const double> z);

// Closed form on the three pairwise coefficients.
double partial_from_pairwise(double r_xy, double r_xz, double r_yz);

struct DisplacementSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation
  double p50 = 0.0;
  double p75 = 0.0;
  double p90 = 0.0;
};

// Nearest-rank percentile of already sorted data: element ceil(q/100 * n).
double nearest_rank_percentile(std::span<const double> sorted, double q);

// |rank_a - rank_b| per institution, each vector ranked descending with
// average ranks for ties.
std::vector<double> rank_differences(std::span<const double> score_a, std::span<const double> score_b);
DisplacementSummary rank_displacement(std::span<const double> score_a, std::span<const double> score_b);

struct ComparisonReport {
  std::string column_a;
  std::string column_b;
  std::size_t n = 0;
  Correlation pearson;
  Correlation spearman;
  double kendall_w = 0.0;
  std::map<std::string, Correlation> partial;  // keyed by control column
  DisplacementSummary displacement;
};

ComparisonReport compare(const ScoreTable& table, const std::string& column_a, const std::string& column_b,
                         const std::vector<std::string>& controls);

struct PcaResult {
  std::vector<std::string> variables;
  std::vector<double> eigenvalues;      // descending, all of them
  std::vector<double> explained_share;  // eigenvalue / p
  Matrix loadings;                      // p x retained, before rotation
  Matrix rotated_loadings;              // p x retained, after varimax
  std::vector<double> rotated_variance_share;
  std::size_t varimax_sweeps = 0;
};

// Pearson correlation matrix of the given columns.
Matrix correlation_matrix(const std::vector<std::vector<double>>& columns);

/// Kaiser-normalized varimax by pairwise planar rotations, repeated until
/// the largest rotation angle in a sweep is below `tolerance`. Columns of
/// the result are sorted by explained variance and signed so that each
/// column sums to a non-negative value.
Matrix varimax(const Matrix& loadings, double tolerance = 1e-10, std::size_t max_sweeps = 1000,
               std::size_t* sweeps_used = nullptr);

/// Principal components of a correlation matrix. Validates symmetry, unit
/// diagonal and entry range; eigenvalues below -1e-10 are rejected and
/// smaller negatives clamped to zero. `variables` may be empty.
PcaResult pca(const Matrix& corr, std::size_t retain, std::vector<std::string> variables = {});

}  // namespace citerank
