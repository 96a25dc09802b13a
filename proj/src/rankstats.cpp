#include "citerank/rankstats.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numeric>

#include "citerank/error.hpp"
#include "citerank/scoring.hpp"

namespace citerank {

namespace {

void require_same_length(std::span<const double> a, std::span<const double> b, const char* what) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": length mismatch (" + std::to_string(a.size()) +
                                                " vs " + std::to_string(b.size()) + ")");
  }
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorCode::Degenerate, "correlation undefined for a constant vector");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

double correlation_p_value(double r, double dof) {
  if (!(dof > 0.0)) return 1.0;
  if (std::abs(r) >= 1.0) return 0.0;
  const double t = std::abs(r) * std::sqrt(dof / (1.0 - r * r));
  boost::math::students_t dist(dof);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, t)));
}

std::vector<double> average_ranks(std::span<const double> values, bool descending) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return descending ? values[a] > values[b] : values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share rank (i + j) / 2 + 1
    const double rank = static_cast<double>(i + j) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

Correlation pearson(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y, "pearson");
  if (x.size() < 3) throw Error(ErrorCode::InvalidArgument, "pearson needs at least 3 observations");
  Correlation c;
  c.r = pearson_r(x, y);
  c.p = correlation_p_value(c.r, static_cast<double>(x.size()) - 2.0);
  return c;
}

Correlation spearman(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y, "spearman");
  if (x.size() < 3) throw Error(ErrorCode::InvalidArgument, "spearman needs at least 3 observations");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

double kendall_w(const std::vector<std::vector<double>>& rows) {
  const std::size_t m = rows.size();
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "kendall_w needs at least 2 rankings");
  const std::size_t n = rows.front().size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "kendall_w needs at least 2 items");

  std::vector<double> rank_sums(n, 0.0);
  double tie_terms = 0.0;
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "kendall_w: rankings differ in length (" + std::to_string(row.size()) +
                                                  " vs " + std::to_string(n) + ")");
    }
    const auto ranks = average_ranks(row);
    for (std::size_t j = 0; j < n; ++j) rank_sums[j] += ranks[j];

    std::vector<double> sorted(row.begin(), row.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i + 1);
      tie_terms += t * t * t - t;
      i = j + 1;
    }
  }

  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double mean = md * (nd + 1.0) / 2.0;
  double s = 0.0;
  for (double r : rank_sums) s += (r - mean) * (r - mean);
  const double denom = md * md * (nd * nd * nd - nd) - md * tie_terms;
  if (!(denom > 0.0)) throw Error(ErrorCode::Degenerate, "kendall_w undefined: every ranking is fully tied");
  return std::clamp(12.0 * s / denom, 0.0, 1.0);
}

double partial_from_pairwise(double r_xy, double r_xz, double r_yz) {
  if (std::abs(r_xz) >= 1.0 || std::abs(r_yz) >= 1.0) {
    throw Error(ErrorCode::Degenerate, "partial correlation undefined: control is perfectly correlated");
  }
  return std::clamp((r_xy - r_xz * r_yz) / std::sqrt((1.0 - r_xz * r_xz) * (1.0 - r_yz * r_yz)), -1.0, 1.0);
}

Correlation partial_correlation(std::span<const double> x, std::span<const double> y,
                                std::span<const double> z) {
  require_same_length(x, y, "partial_correlation");
  require_same_length(x, z, "partial_correlation");
  if (x.size() < 4) throw Error(ErrorCode::InvalidArgument, "partial correlation needs at least 4 observations");
  Correlation c;
  c.r = partial_from_pairwise(pearson_r(x, y), pearson_r(x, z), pearson_r(y, z));
  c.p = correlation_p_value(c.r, static_cast<double>(x.size()) - 3.0);
  return c;
}

double nearest_rank_percentile(std::span<const double> sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q / 100.0 * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

std::vector<double> rank_differences(std::span<const double> score_a, std::span<const double> score_b) {
  require_same_length(score_a, score_b, "rank_displacement");
  const auto ra = average_ranks(score_a, true);
  const auto rb = average_ranks(score_b, true);
  std::vector<double> d(ra.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::abs(ra[i] - rb[i]);
  return d;
}

DisplacementSummary rank_displacement(std::span<const double> score_a, std::span<const double> score_b) {
  auto d = rank_differences(score_a, score_b);
  DisplacementSummary s;
  s.n = d.size();
  if (d.empty()) return s;
  const double n = static_cast<double>(d.size());
  s.mean = std::accumulate(d.begin(), d.end(), 0.0) / n;
  if (d.size() > 1) {
    double ss = 0.0;
    for (double v : d) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / (n - 1.0));
  }
  std::sort(d.begin(), d.end());
  s.p50 = nearest_rank_percentile(d, 50);
  s.p75 = nearest_rank_percentile(d, 75);
  s.p90 = nearest_rank_percentile(d, 90);
  return s;
}

ComparisonReport compare(const ScoreTable& table, const std::string& column_a, const std::string& column_b,
                         const std::vector<std::string>& controls) {
  const auto& a = table.column(column_a);
  const auto& b = table.column(column_b);
  ComparisonReport report;
  report.column_a = column_a;
  report.column_b = column_b;
  report.n = a.size();
  report.pearson = pearson(a, b);
  report.spearman = spearman(a, b);
  report.kendall_w = kendall_w({a, b});
  for (const auto& control : controls) {
    report.partial[control] = partial_correlation(a, b, table.column(control));
  }
  report.displacement = rank_displacement(a, b);
  return report;
}

Matrix correlation_matrix(const std::vector<std::vector<double>>& columns) {
  const std::size_t p = columns.size();
  Matrix corr = Matrix::identity(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      require_same_length(columns[i], columns[j], "correlation_matrix");
      corr(i, j) = corr(j, i) = pearson_r(columns[i], columns[j]);
    }
  }
  return corr;
}

Matrix varimax(const Matrix& loadings, double tolerance, std::size_t max_sweeps, std::size_t* sweeps_used) {
  const std::size_t p = loadings.rows();
  const std::size_t k = loadings.cols();
  const double pd = static_cast<double>(p);

  // Kaiser normalization: rotate rows scaled to unit communality.
  std::vector<double> h(p, 0.0);
  Matrix x = loadings;
  for (std::size_t i = 0; i < p; ++i) {
    double c = 0.0;
    for (std::size_t j = 0; j < k; ++j) c += x(i, j) * x(i, j);
    h[i] = std::sqrt(c);
    if (h[i] > 0.0) {
      for (std::size_t j = 0; j < k; ++j) x(i, j) /= h[i];
    }
  }

  std::size_t sweeps = 0;
  if (k >= 2) {
    for (; sweeps < max_sweeps;) {
      ++sweeps;
      double largest = 0.0;
      for (std::size_t a = 0; a + 1 < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          double sum_u = 0.0, sum_v = 0.0, sum_uv2 = 0.0, sum_uv = 0.0;
          for (std::size_t i = 0; i < p; ++i) {
            const double u = x(i, a) * x(i, a) - x(i, b) * x(i, b);
            const double v = 2.0 * x(i, a) * x(i, b);
            sum_u += u;
            sum_v += v;
            sum_uv2 += u * u - v * v;
            sum_uv += u * v;
          }
          const double num = 2.0 * sum_uv - 2.0 * sum_u * sum_v / pd;
          const double den = sum_uv2 - (sum_u * sum_u - sum_v * sum_v) / pd;
          const double phi = std::atan2(num, den) / 4.0;
          largest = std::max(largest, std::abs(phi));
          const double c = std::cos(phi), s = std::sin(phi);
          for (std::size_t i = 0; i < p; ++i) {
            const double xa = x(i, a), xb = x(i, b);
            x(i, a) = xa * c + xb * s;
            x(i, b) = -xa * s + xb * c;
          }
        }
      }
      if (largest < tolerance) break;
    }
  }
  if (sweeps_used) *sweeps_used = sweeps;

  for (std::size_t i = 0; i < p; ++i) {
    if (h[i] > 0.0) {
      for (std::size_t j = 0; j < k; ++j) x(i, j) *= h[i];
    }
  }

  // Order columns by variance, then fix signs.
  std::vector<double> variance(k, 0.0);
  std::vector<double> sums(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < p; ++i) {
      variance[j] += x(i, j) * x(i, j);
      sums[j] += x(i, j);
    }
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return variance[a] > variance[b]; });
  Matrix out(p, k);
  for (std::size_t j = 0; j < k; ++j) {
    const double sign = sums[order[j]] < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < p; ++i) out(i, j) = sign * x(i, order[j]);
  }
  return out;
}

PcaResult pca(const Matrix& corr, std::size_t retain, std::vector<std::string> variables) {
  const std::size_t p = corr.rows();
  if (p == 0 || corr.cols() != p) throw Error(ErrorCode::InvalidArgument, "pca: correlation matrix must be square and non-empty");
  if (retain < 1 || retain > p) {
    throw Error(ErrorCode::InvalidArgument, "pca: cannot retain " + std::to_string(retain) + " of " +
                                                std::to_string(p) + " components");
  }
  if (!variables.empty() && variables.size() != p) {
    throw Error(ErrorCode::InvalidArgument, "pca: variable names do not match matrix size");
  }
  constexpr double kSymTol = 1e-9;
  for (std::size_t i = 0; i < p; ++i) {
    if (std::abs(corr(i, i) - 1.0) > kSymTol) {
      throw Error(ErrorCode::InvalidArgument, "pca: diagonal entry " + std::to_string(i) + " is not 1");
    }
    for (std::size_t j = 0; j < p; ++j) {
      if (!std::isfinite(corr(i, j)) || std::abs(corr(i, j)) > 1.0 + kSymTol) {
        throw Error(ErrorCode::InvalidArgument, "pca: entry outside [-1, 1]");
      }
      if (std::abs(corr(i, j) - corr(j, i)) > kSymTol) {
        throw Error(ErrorCode::InvalidArgument, "pca: matrix is not symmetric at (" + std::to_string(i) + ", " +
                                                    std::to_string(j) + ")");
      }
    }
  }

  const auto pi = static_cast<Eigen::Index>(p);
  Eigen::MatrixXd m(pi, pi);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = corr(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::Numeric, "pca: eigendecomposition failed");

  PcaResult out;
  out.variables = variables.empty() ? std::vector<std::string>{} : std::move(variables);
  if (out.variables.empty()) {
    for (std::size_t i = 0; i < p; ++i) out.variables.push_back("v" + std::to_string(i + 1));
  }
  out.loadings = Matrix(p, retain);
  // Eigen returns ascending order.
  for (std::size_t c = 0; c < p; ++c) {
    const Eigen::Index src = pi - 1 - static_cast<Eigen::Index>(c);
    double lambda = solver.eigenvalues()(src);
    if (lambda < -1e-10) throw Error(ErrorCode::InvalidArgument, "pca: matrix is not a valid correlation matrix (negative eigenvalue)");
    lambda = std::max(lambda, 0.0);
    out.eigenvalues.push_back(lambda);
    out.explained_share.push_back(lambda / static_cast<double>(p));
    if (c >= retain) continue;

    Eigen::VectorXd v = solver.eigenvectors().col(src);
    double total = v.sum();
    if (std::abs(total) < 1e-12) {
      Eigen::Index arg = 0;
      v.cwiseAbs().maxCoeff(&arg);
      total = v(arg);
    }
    if (total < 0.0) v = -v;
    const double scale = std::sqrt(lambda);
    for (std::size_t i = 0; i < p; ++i) out.loadings(i, c) = v(static_cast<Eigen::Index>(i)) * scale;
  }

  out.rotated_loadings = varimax(out.loadings, 1e-10, 1000, &out.varimax_sweeps);
  for (std::size_t c = 0; c < retain; ++c) {
    double ss = 0.0;
    for (std::size_t i = 0; i < p; ++i) ss += out.rotated_loadings(i, c) * out.rotated_loadings(i, c);
    out.rotated_variance_share.push_back(ss / static_cast<double>(p));
  }
  return out;
}

}  // namespace citerank
