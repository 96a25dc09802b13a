#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "citerank/network.hpp"
#include "citerank/pagerank.hpp"
#include "citerank/rankstats.hpp"
#include "citerank/scoring.hpp"

namespace citerank::io {

// %.15g: every number written by the library goes through here.
std::string format_number(double v);

// Quotes a field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

// RFC 4180 reader: quoted fields, doubled quotes, CRLF or LF endings.
// Returns one vector per record; blank lines are skipped.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

// Strict numeric field parse; throws Parse naming `context`.
double parse_number(const std::string& field, const std::string& context);

// source,target,weight with institution ids, in (source, target) index order.
void write_edge_list(std::ostream& out, const CitationNetwork& net);
// institution,in_degree,degree_centrality
void write_node_list(std::ostream& out, const CitationNetwork& net);
// value,probability
void write_centrality_distribution(std::ostream& out, const std::vector<CentralityPoint>& dist);
// JSON object; `publications` is written when known.
void write_summary(std::ostream& out, const NetworkSummary& summary, const std::string& subject,
                   std::optional<std::size_t> publications = std::nullopt);

// Reads an edge list. `nodes`, when given, fixes the node set and order
// (edges may still introduce new ids, appended in first-seen order).
CitationNetwork read_edge_list(std::istream& in, const std::vector<std::string>& nodes = {},
                               const std::string& subject = {}, bool keep_self_loops = false);
// First column of a node list.
std::vector<std::string> read_node_list(std::istream& in);

struct RankedEntry {
  std::size_t rank = 0;
  std::string institution;
  double pagerank_score = 0.0;
  double normalized_score = 0.0;
};

// Descending by score, ties by institution id.
std::vector<RankedEntry> rank_entries(const CitationNetwork& net, const PageRankResult& pr);
// rank,institution,pagerank_score,normalized_score
void write_ranking(std::ostream& out, const CitationNetwork& net, const PageRankResult& pr);

// institution,<column>...; every cell must be present and numeric.
ScoreTable read_score_table(std::istream& in, const std::string& subject = {});
void write_score_table(std::ostream& out, const ScoreTable& table);

// Square labelled matrix: header "variable,a,b,...", one row per variable
// in the same order.
struct LabelledMatrix {
  std::vector<std::string> labels;
  Matrix values;
};
LabelledMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const LabelledMatrix& m);

void write_report_json(std::ostream& out, const ComparisonReport& report);
// statistic,control,value,p_value
void write_report_csv(std::ostream& out, const ComparisonReport& report);

void write_pca_json(std::ostream& out, const PcaResult& result);
// component,eigenvalue,explained_share
void write_pca_eigenvalues(std::ostream& out, const PcaResult& result);
// variable,component1,...
void write_loadings(std::ostream& out, const PcaResult& result, bool rotated);

}  // namespace citerank::io
