#include "citerank/citerank.h"

#include <filesystem>
#include <fstream>
#include <new>
#include <string>

#include "citerank/error.hpp"
#include "citerank/ingest.hpp"
#include "citerank/io.hpp"
#include "citerank/network.hpp"
#include "citerank/pagerank.hpp"
#include "citerank/rankstats.hpp"
#include "citerank/scoring.hpp"
#include "citerank/synthnet.hpp"
#include "citerank/version.hpp"

struct cr_network {
  citerank::CitationNetwork net;
};

struct cr_profile {
  citerank::SubjectProfile profile;
};

struct cr_records {
  citerank::ParseResult parsed;
};

struct cr_pagerank {
  citerank::PageRankResult result;
};

struct cr_table {
  citerank::ScoreTable table;
};

struct cr_report {
  citerank::ComparisonReport report;
};

struct cr_pca {
  citerank::PcaResult result;
};

namespace {

using citerank::Error;
using citerank::ErrorCode;

thread_local std::string g_last_error;

cr_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CR_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return CR_ERR_IO;
    case ErrorCode::Parse: return CR_ERR_PARSE;
    case ErrorCode::DuplicateId: return CR_ERR_DUPLICATE_ID;
    case ErrorCode::Degenerate: return CR_ERR_DEGENERATE;
    case ErrorCode::Numeric: return CR_ERR_NUMERIC;
    case ErrorCode::NotFound: return CR_ERR_NOT_FOUND;
    case ErrorCode::TooLarge: return CR_ERR_TOO_LARGE;
  }
  return CR_ERR_INTERNAL;
}

template <class F>
cr_status guarded(F&& body) {
  try {
    body();
    return CR_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CR_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CR_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": buffer holds " + std::to_string(got) +
                                                " values, need " + std::to_string(want));
  }
}

template <class Writer>
void write_file(const char* path, Writer&& writer) {
  require(path != nullptr, "null output path");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, std::string("cannot open '") + path + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, std::string("write failed for '") + path + "'");
}

std::ifstream open_input(const char* path) {
  require(path != nullptr, "null input path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, std::string("cannot open '") + path + "'");
  return in;
}

std::span<const double> view(const double* p, std::size_t n) {
  require(p != nullptr || n == 0, "null input array");
  return {p, n};
}

cr_correlation to_c(const citerank::Correlation& c) { return {c.r, c.p}; }

cr_displacement to_c(const citerank::DisplacementSummary& d) { return {d.n, d.mean, d.std, d.p50, d.p75, d.p90}; }

void copy_out(const std::vector<double>& v, double* out, std::size_t n, const char* what) {
  require(out != nullptr, "null output buffer");
  require_size(n, v.size(), what);
  std::copy(v.begin(), v.end(), out);
}

citerank::PageRankConfig from_c(const cr_pagerank_config* cfg) {
  citerank::PageRankConfig c;
  if (cfg) {
    c.damping = cfg->damping;
    c.tolerance = cfg->tolerance;
    c.max_iterations = cfg->max_iterations;
    switch (cfg->dangling) {
      case CR_DANGLING_UNIFORM: c.dangling = citerank::DanglingPolicy::UniformRedistribution; break;
      case CR_DANGLING_TELEPORT_ONLY: c.dangling = citerank::DanglingPolicy::TeleportOnly; break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown dangling policy");
    }
  }
  return c;
}

}  // namespace

extern "C" {

const char* cr_version(void) { return citerank::kVersion; }

const char* cr_last_error(void) { return g_last_error.c_str(); }

const char* cr_status_name(cr_status status) {
  switch (status) {
    case CR_OK: return "ok";
    case CR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CR_ERR_IO: return "i/o error";
    case CR_ERR_PARSE: return "parse error";
    case CR_ERR_DUPLICATE_ID: return "duplicate id";
    case CR_ERR_DEGENERATE: return "degenerate input";
    case CR_ERR_NUMERIC: return "numeric failure";
    case CR_ERR_NOT_FOUND: return "not found";
    case CR_ERR_TOO_LARGE: return "input too large";
    case CR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

// ---- networks

cr_status cr_network_read(const char* edges_path, const char* nodes_path, int keep_self_loops, cr_network** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    std::vector<std::string> nodes;
    if (nodes_path) {
      auto in = open_input(nodes_path);
      nodes = citerank::io::read_node_list(in);
    }
    auto in = open_input(edges_path);
    auto net = citerank::io::read_edge_list(in, nodes, {}, keep_self_loops != 0);
    *out = new cr_network{std::move(net)};
  });
}

cr_status cr_network_from_edges(size_t node_count, const char* const* node_ids, size_t edge_count,
                                const uint32_t* sources, const uint32_t* targets, const uint64_t* weights,
                                int keep_self_loops, cr_network** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(node_ids != nullptr || node_count == 0, "null node id array");
    require((sources && targets && weights) || edge_count == 0, "null edge array");
    std::vector<std::string> ids;
    ids.reserve(node_count);
    for (size_t i = 0; i < node_count; ++i) {
      require(node_ids[i] != nullptr, "null node id");
      ids.emplace_back(node_ids[i]);
    }
    std::vector<citerank::Edge> edges;
    edges.reserve(edge_count);
    for (size_t e = 0; e < edge_count; ++e) edges.push_back({sources[e], targets[e], weights[e]});
    *out = new cr_network{citerank::CitationNetwork::build(std::move(ids), std::move(edges), {}, keep_self_loops != 0)};
  });
}

void cr_network_free(cr_network* net) { delete net; }

size_t cr_network_node_count(const cr_network* net) { return net ? net->net.size() : 0; }

const char* cr_network_node_id(const cr_network* net, size_t i) {
  if (!net || i >= net->net.size()) return nullptr;
  return net->net.node_ids()[i].c_str();
}

cr_status cr_network_get_summary(const cr_network* net, cr_network_summary* out) {
  return guarded([&] {
    require(net && out, "null argument");
    const auto s = citerank::network_summary(net->net);
    *out = {s.nodes, s.citations, s.edges, s.self_loops_included ? 1 : 0};
  });
}

cr_status cr_network_in_degree(const cr_network* net, uint32_t* out, size_t n) {
  return guarded([&] {
    require(net && out, "null argument");
    const auto k = citerank::in_degree(net->net);
    require_size(n, k.size(), "in_degree");
    std::copy(k.begin(), k.end(), out);
  });
}

cr_status cr_network_degree_centrality(const cr_network* net, double* out, size_t n) {
  return guarded([&] {
    require(net != nullptr, "null network");
    copy_out(citerank::degree_centrality(net->net), out, n, "degree_centrality");
  });
}

cr_status cr_network_write_edges(const cr_network* net, const char* path) {
  return guarded([&] {
    require(net != nullptr, "null network");
    write_file(path, [&](std::ostream& o) { citerank::io::write_edge_list(o, net->net); });
  });
}

cr_status cr_network_write_nodes(const cr_network* net, const char* path) {
  return guarded([&] {
    require(net != nullptr, "null network");
    write_file(path, [&](std::ostream& o) { citerank::io::write_node_list(o, net->net); });
  });
}

cr_status cr_network_write_centrality(const cr_network* net, const char* path) {
  return guarded([&] {
    require(net != nullptr, "null network");
    const auto dist = citerank::centrality_distribution(net->net);
    write_file(path, [&](std::ostream& o) { citerank::io::write_centrality_distribution(o, dist); });
  });
}

cr_status cr_network_write_summary(const cr_network* net, const char* path, int64_t publications) {
  return guarded([&] {
    require(net != nullptr, "null network");
    std::optional<std::size_t> pubs;
    if (publications >= 0) pubs = static_cast<std::size_t>(publications);
    const auto summary = citerank::network_summary(net->net);
    write_file(path, [&](std::ostream& o) { citerank::io::write_summary(o, summary, net->net.subject(), pubs); });
  });
}

// ---- profiles

cr_status cr_profile_builtin(const char* name, cr_profile** out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = new cr_profile{citerank::find_profile(citerank::builtin_profiles(), name)};
  });
}

cr_status cr_profile_load(const char* config_path, const char* name, cr_profile** out) {
  return guarded([&] {
    require(config_path && name && out, "null argument");
    const auto profiles = citerank::load_profiles(config_path);
    *out = new cr_profile{citerank::find_profile(profiles, name)};
  });
}

void cr_profile_free(cr_profile* profile) { delete profile; }

const char* cr_profile_name(const cr_profile* profile) { return profile ? profile->profile.name.c_str() : nullptr; }

const char* cr_profile_category(const cr_profile* profile) {
  return profile ? profile->profile.category.c_str() : nullptr;
}

long cr_profile_threshold(const cr_profile* profile) { return profile ? profile->profile.publication_threshold : 0; }

long cr_profile_weight(const cr_profile* profile, cr_indicator indicator) {
  if (!profile || indicator < CR_PUB || indicator > CR_AWD) return 0;
  return profile->profile.weights[static_cast<std::size_t>(indicator)];
}

void cr_profile_years(const cr_profile* profile, int* first, int* last) {
  if (!profile) return;
  if (first) *first = profile->profile.years.first;
  if (last) *last = profile->profile.years.last;
}

cr_status cr_profile_set_threshold(cr_profile* profile, long threshold) {
  return guarded([&] {
    require(profile != nullptr, "null profile");
    auto p = profile->profile;
    p.publication_threshold = threshold;
    p.validate();
    profile->profile = std::move(p);
  });
}

cr_status cr_profile_set_years(cr_profile* profile, int first, int last) {
  return guarded([&] {
    require(profile != nullptr, "null profile");
    auto p = profile->profile;
    p.years = {first, last};
    p.validate();
    profile->profile = std::move(p);
  });
}

// ---- records

cr_status cr_records_read(const char* path, int strict, cr_records** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new cr_records{citerank::parse_records_file(path, strict != 0)};
  });
}

void cr_records_free(cr_records* records) { delete records; }

size_t cr_records_count(const cr_records* records) { return records ? records->parsed.records.size() : 0; }

size_t cr_records_issue_count(const cr_records* records) { return records ? records->parsed.issues.size() : 0; }

cr_status cr_records_issue(const cr_records* records, size_t i, size_t* line, const char** message) {
  return guarded([&] {
    require(records != nullptr, "null records");
    if (i >= records->parsed.issues.size()) throw Error(ErrorCode::NotFound, "issue index out of range");
    const auto& issue = records->parsed.issues[i];
    if (line) *line = issue.line;
    if (message) *message = issue.message.c_str();
  });
}

cr_status cr_records_build_network(const cr_records* records, const cr_profile* profile, int keep_self_loops,
                                   cr_network** out, cr_build_stats* stats) {
  return guarded([&] {
    require(records && profile && out, "null argument");
    profile->profile.validate();
    const auto matching = citerank::filter_records(records->parsed.records, profile->profile);
    const auto retained = citerank::apply_threshold(matching, profile->profile);
    auto net = citerank::build_network(matching, retained, profile->profile, keep_self_loops != 0);
    if (stats) {
      *stats = {matching.size(), retained.size(), citerank::retained_publication_count(matching, retained)};
    }
    *out = new cr_network{std::move(net)};
  });
}

// ---- pagerank

void cr_pagerank_config_default(cr_pagerank_config* cfg) {
  if (!cfg) return;
  const citerank::PageRankConfig d;
  *cfg = {d.damping, d.tolerance, d.max_iterations, CR_DANGLING_UNIFORM};
}

cr_status cr_pagerank_run(const cr_network* net, const cr_pagerank_config* cfg, cr_pagerank** out) {
  return guarded([&] {
    require(net && out, "null argument");
    *out = new cr_pagerank{citerank::pagerank(net->net, from_c(cfg))};
  });
}

cr_status cr_pagerank_dense(const cr_network* net, const cr_pagerank_config* cfg, double* out, size_t n) {
  return guarded([&] {
    require(net != nullptr, "null network");
    copy_out(citerank::pagerank_dense(net->net, from_c(cfg)), out, n, "pagerank_dense");
  });
}

void cr_pagerank_free(cr_pagerank* pr) { delete pr; }

size_t cr_pagerank_size(const cr_pagerank* pr) { return pr ? pr->result.scores.size() : 0; }

cr_status cr_pagerank_scores(const cr_pagerank* pr, double* out, size_t n) {
  return guarded([&] {
    require(pr != nullptr, "null result");
    copy_out(pr->result.scores, out, n, "pagerank_scores");
  });
}

size_t cr_pagerank_iterations(const cr_pagerank* pr) { return pr ? pr->result.iterations_used : 0; }

int cr_pagerank_converged(const cr_pagerank* pr) { return pr && pr->result.converged ? 1 : 0; }

double cr_pagerank_final_delta(const cr_pagerank* pr) { return pr ? pr->result.final_delta : 0.0; }

cr_status cr_pagerank_write_ranking(const cr_pagerank* pr, const cr_network* net, const char* path) {
  return guarded([&] {
    require(pr && net, "null argument");
    write_file(path, [&](std::ostream& o) { citerank::io::write_ranking(o, net->net, pr->result); });
  });
}

// ---- scoring

cr_status cr_compress(const double* raw, size_t n, double* out) {
  return guarded([&] { copy_out(citerank::compress(view(raw, n)), out, n, "compress"); });
}

cr_status cr_normalize_pagerank(const double* scores, size_t n, double* out) {
  return guarded([&] { copy_out(citerank::normalize_pagerank(view(scores, n)), out, n, "normalize_pagerank"); });
}

cr_status cr_table_read(const char* path, cr_table** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    auto in = open_input(path);
    *out = new cr_table{citerank::io::read_score_table(in)};
  });
}

cr_status cr_table_write(const cr_table* table, const char* path) {
  return guarded([&] {
    require(table != nullptr, "null table");
    write_file(path, [&](std::ostream& o) { citerank::io::write_score_table(o, table->table); });
  });
}

void cr_table_free(cr_table* table) { delete table; }

size_t cr_table_rows(const cr_table* table) { return table ? table->table.rows() : 0; }

size_t cr_table_column_count(const cr_table* table) { return table ? table->table.column_count() : 0; }

const char* cr_table_column_name(const cr_table* table, size_t i) {
  if (!table || i >= table->table.column_count()) return nullptr;
  return table->table.column_name(i).c_str();
}

cr_status cr_table_get_column(const cr_table* table, const char* name, double* out, size_t n) {
  return guarded([&] {
    require(table && name, "null argument");
    copy_out(table->table.column(name), out, n, name);
  });
}

cr_status cr_table_set_column(cr_table* table, const char* name, const double* values, size_t n) {
  return guarded([&] {
    require(table && name, "null argument");
    auto v = view(values, n);
    table->table.set_column(name, {v.begin(), v.end()});
  });
}

cr_status cr_table_add_composite(cr_table* table, const cr_profile* profile, const char* column) {
  return guarded([&] {
    require(table && profile && column, "null argument");
    const auto& p = profile->profile;
    p.validate();
    citerank::ScoreTable compressed(table->table.subject(), table->table.institutions());
    citerank::ScoreTable updated = table->table;
    for (auto ind : citerank::kIndicators) {
      if (p.weight(ind) == 0) continue;
      const std::string name(citerank::indicator_name(ind));
      auto scores = citerank::compress(table->table.column(name));
      compressed.set_column(name, scores);
      updated.set_column(name + "_score", std::move(scores));
    }
    updated.set_column(column, citerank::composite_score(compressed, p));
    table->table = std::move(updated);
  });
}

// ---- statistics

cr_status cr_pearson(const double* x, const double* y, size_t n, cr_correlation* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = to_c(citerank::pearson(view(x, n), view(y, n)));
  });
}

cr_status cr_spearman(const double* x, const double* y, size_t n, cr_correlation* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = to_c(citerank::spearman(view(x, n), view(y, n)));
  });
}

cr_status cr_partial_correlation(const double* x, const double* y, const double* z, size_t n, cr_correlation* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = to_c(citerank::partial_correlation(view(x, n), view(y, n), view(z, n)));
  });
}

cr_status cr_kendall_w(const double* rows, size_t m, size_t n, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    auto all = view(rows, m * n);
    std::vector<std::vector<double>> judges;
    for (size_t r = 0; r < m; ++r) judges.emplace_back(all.begin() + r * n, all.begin() + (r + 1) * n);
    *out = citerank::kendall_w(judges);
  });
}

cr_status cr_rank_displacement(const double* a, const double* b, size_t n, cr_displacement* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = to_c(citerank::rank_displacement(view(a, n), view(b, n)));
  });
}

cr_status cr_compare(const cr_table* table, const char* column_a, const char* column_b, const char* const* controls,
                     size_t control_count, cr_report** out) {
  return guarded([&] {
    require(table && column_a && column_b && out, "null argument");
    require(controls != nullptr || control_count == 0, "null control list");
    std::vector<std::string> names;
    for (size_t i = 0; i < control_count; ++i) {
      require(controls[i] != nullptr, "null control name");
      names.emplace_back(controls[i]);
    }
    *out = new cr_report{citerank::compare(table->table, column_a, column_b, names)};
  });
}

void cr_report_free(cr_report* report) { delete report; }

cr_correlation cr_report_pearson(const cr_report* report) {
  return report ? to_c(report->report.pearson) : cr_correlation{0.0, 1.0};
}

cr_correlation cr_report_spearman(const cr_report* report) {
  return report ? to_c(report->report.spearman) : cr_correlation{0.0, 1.0};
}

double cr_report_kendall_w(const cr_report* report) { return report ? report->report.kendall_w : 0.0; }

cr_displacement cr_report_displacement(const cr_report* report) {
  return report ? to_c(report->report.displacement) : cr_displacement{};
}

cr_status cr_report_partial(const cr_report* report, const char* control, cr_correlation* out) {
  return guarded([&] {
    require(report && control && out, "null argument");
    auto it = report->report.partial.find(control);
    if (it == report->report.partial.end()) {
      throw Error(ErrorCode::NotFound, std::string("no partial correlation for control '") + control + "'");
    }
    *out = to_c(it->second);
  });
}

cr_status cr_report_write_json(const cr_report* report, const char* path) {
  return guarded([&] {
    require(report != nullptr, "null report");
    write_file(path, [&](std::ostream& o) { citerank::io::write_report_json(o, report->report); });
  });
}

cr_status cr_report_write_csv(const cr_report* report, const char* path) {
  return guarded([&] {
    require(report != nullptr, "null report");
    write_file(path, [&](std::ostream& o) { citerank::io::write_report_csv(o, report->report); });
  });
}

// ---- pca

cr_status cr_pca_from_matrix_file(const char* path, size_t retain, cr_pca** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    auto in = open_input(path);
    auto m = citerank::io::read_matrix(in);
    *out = new cr_pca{citerank::pca(m.values, retain, std::move(m.labels))};
  });
}

cr_status cr_pca_from_matrix(const double* corr, size_t p, const char* const* names, size_t retain, cr_pca** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    auto values = view(corr, p * p);
    citerank::Matrix m(p, p);
    for (size_t i = 0; i < p; ++i) {
      for (size_t j = 0; j < p; ++j) m(i, j) = values[i * p + j];
    }
    std::vector<std::string> labels;
    if (names) {
      for (size_t i = 0; i < p; ++i) {
        require(names[i] != nullptr, "null variable name");
        labels.emplace_back(names[i]);
      }
    }
    *out = new cr_pca{citerank::pca(m, retain, std::move(labels))};
  });
}

cr_status cr_pca_from_table(const cr_table* table, const char* const* columns, size_t column_count, size_t retain,
                            cr_pca** out) {
  return guarded([&] {
    require(table && columns && out, "null argument");
    std::vector<std::vector<double>> data;
    std::vector<std::string> labels;
    for (size_t i = 0; i < column_count; ++i) {
      require(columns[i] != nullptr, "null column name");
      labels.emplace_back(columns[i]);
      data.push_back(table->table.column(columns[i]));
    }
    *out = new cr_pca{citerank::pca(citerank::correlation_matrix(data), retain, std::move(labels))};
  });
}

void cr_pca_free(cr_pca* pca) { delete pca; }

size_t cr_pca_variable_count(const cr_pca* pca) { return pca ? pca->result.variables.size() : 0; }

size_t cr_pca_retained(const cr_pca* pca) { return pca ? pca->result.loadings.cols() : 0; }

cr_status cr_pca_eigenvalues(const cr_pca* pca, double* out, size_t n) {
  return guarded([&] {
    require(pca != nullptr, "null pca");
    copy_out(pca->result.eigenvalues, out, n, "eigenvalues");
  });
}

cr_status cr_pca_explained_share(const cr_pca* pca, double* out, size_t n) {
  return guarded([&] {
    require(pca != nullptr, "null pca");
    copy_out(pca->result.explained_share, out, n, "explained_share");
  });
}

cr_status cr_pca_rotated_share(const cr_pca* pca, double* out, size_t n) {
  return guarded([&] {
    require(pca != nullptr, "null pca");
    copy_out(pca->result.rotated_variance_share, out, n, "rotated_share");
  });
}

cr_status cr_pca_loadings(const cr_pca* pca, int rotated, double* out, size_t n) {
  return guarded([&] {
    require(pca && out, "null argument");
    const auto& m = rotated ? pca->result.rotated_loadings : pca->result.loadings;
    require_size(n, m.rows() * m.cols(), "loadings");
    for (size_t i = 0; i < m.rows(); ++i) {
      for (size_t c = 0; c < m.cols(); ++c) out[i * m.cols() + c] = m(i, c);
    }
  });
}

cr_status cr_pca_write(const cr_pca* pca, const char* directory) {
  return guarded([&] {
    require(pca && directory, "null argument");
    const std::filesystem::path dir(directory);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create '" + dir.string() + "': " + ec.message());
    const auto& r = pca->result;
    write_file((dir / "pca.json").c_str(), [&](std::ostream& o) { citerank::io::write_pca_json(o, r); });
    write_file((dir / "eigenvalues.csv").c_str(), [&](std::ostream& o) { citerank::io::write_pca_eigenvalues(o, r); });
    write_file((dir / "loadings.csv").c_str(), [&](std::ostream& o) { citerank::io::write_loadings(o, r, false); });
    write_file((dir / "rotated_loadings.csv").c_str(),
               [&](std::ostream& o) { citerank::io::write_loadings(o, r, true); });
  });
}

// ---- synthetic networks

void cr_synth_config_default(cr_synth_config* cfg) {
  if (!cfg) return;
  const citerank::SynthConfig d;
  *cfg = {d.nodes, d.attachment_exponent, d.mean_out_citations, 0, 20.0, d.seed};
}

cr_status cr_synth_generate(const cr_synth_config* cfg, cr_network** out) {
  return guarded([&] {
    require(cfg && out, "null argument");
    citerank::SynthConfig c;
    c.nodes = cfg->nodes;
    c.attachment_exponent = cfg->attachment_exponent;
    c.mean_out_citations = cfg->mean_out_citations;
    c.seed = cfg->seed;
    if (cfg->cartel_members > 0) c.cartel = citerank::Cartel{cfg->cartel_members, cfg->cartel_boost};
    *out = new cr_network{citerank::generate(c)};
  });
}

}  // extern "C"
