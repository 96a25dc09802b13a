#include "citerank/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <json.hpp>
#include <ostream>

#include "citerank/error.hpp"

namespace citerank::io {

namespace {

using nlohmann::ordered_json;

// JSON numbers carry the same 15 significant digits as the CSV output.
double rounded(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

ordered_json correlation_json(const Correlation& c) { return {{"r", rounded(c.r)}, {"p", rounded(c.p)}}; }

void require_header(const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& expected,
                    const char* what) {
  if (rows.empty()) throw Error(ErrorCode::Parse, std::string(what) + ": empty file");
  const auto& header = rows.front();
  if (header.size() < expected.size() || !std::equal(expected.begin(), expected.end(), header.begin())) {
    std::string want;
    for (const auto& e : expected) want += (want.empty() ? "" : ",") + e;
    throw Error(ErrorCode::Parse, std::string(what) + ": header must start with '" + want + "'");
  }
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  char c;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    if (row.empty() && !field_started && field.empty()) return;  // blank line
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };

  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) throw Error(ErrorCode::Parse, "csv: unterminated quoted field");
  end_row();
  return rows;
}

double parse_number(const std::string& field, const std::string& context) {
  if (field.empty()) throw Error(ErrorCode::Parse, context + ": missing value");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size() || errno == ERANGE || !std::isfinite(v)) {
    throw Error(ErrorCode::Parse, context + ": '" + field + "' is not a finite number");
  }
  return v;
}

void write_edge_list(std::ostream& out, const CitationNetwork& net) {
  out << "source,target,weight\n";
  for (const Edge& e : net.edges()) {
    out << csv_field(net.node_id(e.source)) << ',' << csv_field(net.node_id(e.target)) << ',' << e.weight << '\n';
  }
}

void write_node_list(std::ostream& out, const CitationNetwork& net) {
  out << "institution,in_degree,degree_centrality\n";
  const auto k = in_degree(net);
  const auto c = net.size() >= 2 ? degree_centrality(net) : std::vector<double>(net.size(), 0.0);
  for (std::size_t i = 0; i < net.size(); ++i) {
    out << csv_field(net.node_id(static_cast<NodeIndex>(i))) << ',' << k[i] << ',' << format_number(c[i]) << '\n';
  }
}

void write_centrality_distribution(std::ostream& out, const std::vector<CentralityPoint>& dist) {
  out << "value,probability\n";
  for (const auto& p : dist) out << format_number(p.value) << ',' << format_number(p.probability) << '\n';
}

void write_summary(std::ostream& out, const NetworkSummary& summary, const std::string& subject,
                   std::optional<std::size_t> publications) {
  ordered_json j;
  j["subject"] = subject;
  j["nodes"] = summary.nodes;
  if (publications) j["publications"] = *publications;
  j["citations"] = summary.citations;
  j["edges"] = summary.edges;
  j["self_loops_included"] = summary.self_loops_included;
  out << j.dump(2) << '\n';
}

CitationNetwork read_edge_list(std::istream& in, const std::vector<std::string>& nodes, const std::string& subject,
                               bool keep_self_loops) {
  const auto rows = read_csv(in);
  require_header(rows, {"source", "target", "weight"}, "edge list");
  std::vector<std::tuple<std::string, std::string, Weight>> edges;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where = "edge list row " + std::to_string(r + 1);
    if (row.size() != 3) throw Error(ErrorCode::Parse, where + ": expected 3 fields");
    if (row[0].empty() || row[1].empty()) throw Error(ErrorCode::Parse, where + ": empty institution id");
    const double w = parse_number(row[2], where);
    if (w < 0.0 || w != std::floor(w)) {
      throw Error(ErrorCode::Parse, where + ": weight must be a non-negative integer");
    }
    edges.emplace_back(row[0], row[1], static_cast<Weight>(w));
  }
  return CitationNetwork::build_named(nodes, edges, subject, keep_self_loops);
}

std::vector<std::string> read_node_list(std::istream& in) {
  const auto rows = read_csv(in);
  require_header(rows, {"institution"}, "node list");
  std::vector<std::string> ids;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].empty() || rows[r][0].empty()) {
      throw Error(ErrorCode::Parse, "node list row " + std::to_string(r + 1) + ": empty institution id");
    }
    ids.push_back(rows[r][0]);
  }
  return ids;
}

std::vector<RankedEntry> rank_entries(const CitationNetwork& net, const PageRankResult& pr) {
  if (pr.scores.size() != net.size()) throw Error(ErrorCode::InvalidArgument, "ranking: score count does not match network");
  const auto normalized = normalize_pagerank(pr.scores);
  std::vector<RankedEntry> entries;
  entries.reserve(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    entries.push_back({0, net.node_id(static_cast<NodeIndex>(i)), pr.scores[i], normalized[i]});
  }
  std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.pagerank_score != b.pagerank_score) return a.pagerank_score > b.pagerank_score;
    return a.institution < b.institution;
  });
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i].rank = i + 1;
  return entries;
}

void write_ranking(std::ostream& out, const CitationNetwork& net, const PageRankResult& pr) {
  out << "rank,institution,pagerank_score,normalized_score\n";
  for (const auto& e : rank_entries(net, pr)) {
    out << e.rank << ',' << csv_field(e.institution) << ',' << format_number(e.pagerank_score) << ','
        << format_number(e.normalized_score) << '\n';
  }
}

ScoreTable read_score_table(std::istream& in, const std::string& subject) {
  const auto rows = read_csv(in);
  require_header(rows, {"institution"}, "score table");
  const auto& header = rows.front();
  std::vector<std::string> institutions;
  std::vector<std::vector<double>> columns(header.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where = "score table row " + std::to_string(r + 1);
    if (row.size() != header.size()) {
      throw Error(ErrorCode::Parse, where + ": expected " + std::to_string(header.size()) + " fields, got " +
                                        std::to_string(row.size()));
    }
    if (row[0].empty()) throw Error(ErrorCode::Parse, where + ": empty institution id");
    institutions.push_back(row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      columns[c - 1].push_back(parse_number(row[c], where + " column '" + header[c] + "'"));
    }
  }
  ScoreTable table(subject, std::move(institutions));
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (table.has_column(header[c])) throw Error(ErrorCode::Parse, "score table: duplicate column '" + header[c] + "'");
    table.set_column(header[c], std::move(columns[c - 1]));
  }
  return table;
}

void write_score_table(std::ostream& out, const ScoreTable& table) {
  const auto names = table.column_names();
  out << "institution";
  for (const auto& n : names) out << ',' << csv_field(n);
  out << '\n';
  for (std::size_t i = 0; i < table.rows(); ++i) {
    out << csv_field(table.institutions()[i]);
    for (const auto& n : names) out << ',' << format_number(table.column(n)[i]);
    out << '\n';
  }
}

LabelledMatrix read_matrix(std::istream& in) {
  const auto rows = read_csv(in);
  if (rows.empty()) throw Error(ErrorCode::Parse, "matrix: empty file");
  const auto& header = rows.front();
  const std::size_t p = header.size() - 1;
  if (p == 0) throw Error(ErrorCode::Parse, "matrix: no variables in header");
  if (rows.size() - 1 != p) {
    throw Error(ErrorCode::Parse, "matrix: " + std::to_string(p) + " columns but " + std::to_string(rows.size() - 1) +
                                      " rows");
  }
  LabelledMatrix m{{header.begin() + 1, header.end()}, Matrix(p, p)};
  for (std::size_t r = 0; r < p; ++r) {
    const auto& row = rows[r + 1];
    const std::string where = "matrix row " + std::to_string(r + 2);
    if (row.size() != p + 1) throw Error(ErrorCode::Parse, where + ": expected " + std::to_string(p + 1) + " fields");
    if (row[0] != m.labels[r]) {
      throw Error(ErrorCode::Parse, where + ": label '" + row[0] + "' does not match column '" + m.labels[r] + "'");
    }
    for (std::size_t c = 0; c < p; ++c) m.values(r, c) = parse_number(row[c + 1], where);
  }
  return m;
}

void write_matrix(std::ostream& out, const LabelledMatrix& m) {
  out << "variable";
  for (const auto& l : m.labels) out << ',' << csv_field(l);
  out << '\n';
  for (std::size_t r = 0; r < m.values.rows(); ++r) {
    out << csv_field(m.labels[r]);
    for (std::size_t c = 0; c < m.values.cols(); ++c) out << ',' << format_number(m.values(r, c));
    out << '\n';
  }
}

void write_report_json(std::ostream& out, const ComparisonReport& report) {
  ordered_json j;
  j["column_a"] = report.column_a;
  j["column_b"] = report.column_b;
  j["n"] = report.n;
  j["pearson"] = correlation_json(report.pearson);
  j["spearman"] = correlation_json(report.spearman);
  j["kendall_w"] = rounded(report.kendall_w);
  j["partial"] = ordered_json::object();
  for (const auto& [control, c] : report.partial) j["partial"][control] = correlation_json(c);
  const auto& d = report.displacement;
  j["displacement"] = {{"n", d.n},
                       {"mean", rounded(d.mean)},
                       {"std", rounded(d.std)},
                       {"p50", rounded(d.p50)},
                       {"p75", rounded(d.p75)},
                       {"p90", rounded(d.p90)}};
  out << j.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, const ComparisonReport& report) {
  out << "statistic,control,value,p_value\n";
  auto row = [&](const char* stat, const std::string& control, double value, std::optional<double> p) {
    out << stat << ',' << csv_field(control) << ',' << format_number(value) << ',' << (p ? format_number(*p) : "")
        << '\n';
  };
  row("pearson", "", report.pearson.r, report.pearson.p);
  row("spearman", "", report.spearman.r, report.spearman.p);
  row("kendall_w", "", report.kendall_w, std::nullopt);
  for (const auto& [control, c] : report.partial) row("partial", control, c.r, c.p);
  const auto& d = report.displacement;
  row("displacement_n", "", static_cast<double>(d.n), std::nullopt);
  row("displacement_mean", "", d.mean, std::nullopt);
  row("displacement_std", "", d.std, std::nullopt);
  row("displacement_p50", "", d.p50, std::nullopt);
  row("displacement_p75", "", d.p75, std::nullopt);
  row("displacement_p90", "", d.p90, std::nullopt);
}

void write_pca_json(std::ostream& out, const PcaResult& result) {
  auto vec = [](const std::vector<double>& v) {
    ordered_json a = ordered_json::array();
    for (double x : v) a.push_back(rounded(x));
    return a;
  };
  auto mat = [&](const Matrix& m) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rounded(m(i, c)));
      obj[result.variables[i]] = row;
    }
    return obj;
  };
  ordered_json j;
  j["variables"] = result.variables;
  j["retained"] = result.loadings.cols();
  j["eigenvalues"] = vec(result.eigenvalues);
  j["explained_share"] = vec(result.explained_share);
  double retained_share = 0.0;
  for (std::size_t c = 0; c < result.loadings.cols(); ++c) retained_share += result.explained_share[c];
  j["retained_share"] = rounded(retained_share);
  j["loadings"] = mat(result.loadings);
  j["rotated_loadings"] = mat(result.rotated_loadings);
  j["rotated_variance_share"] = vec(result.rotated_variance_share);
  j["varimax_sweeps"] = result.varimax_sweeps;
  out << j.dump(2) << '\n';
}

void write_pca_eigenvalues(std::ostream& out, const PcaResult& result) {
  out << "component,eigenvalue,explained_share\n";
  for (std::size_t c = 0; c < result.eigenvalues.size(); ++c) {
    out << c + 1 << ',' << format_number(result.eigenvalues[c]) << ',' << format_number(result.explained_share[c])
        << '\n';
  }
}

void write_loadings(std::ostream& out, const PcaResult& result, bool rotated) {
  const Matrix& m = rotated ? result.rotated_loadings : result.loadings;
  out << "variable";
  for (std::size_t c = 0; c < m.cols(); ++c) out << ",component" << c + 1;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << csv_field(result.variables[i]);
    for (std::size_t c = 0; c < m.cols(); ++c) out << ',' << format_number(m(i, c));
    out << '\n';
  }
}

}  // namespace citerank::io
