// citerank command-line frontend.
//
//   citerank build    <records.jsonl> --subject DEN --threshold 5 --out net/
//   citerank pagerank <edges.csv> [--nodes nodes.csv] --out rank/
//   citerank score    <table.csv> --subject FIN --out scored/
//   citerank compare  <table.csv> --a arwu_score --b pagerank_score --control CNCI --out cmp/
//   citerank pca      --matrix corr.csv --retain 2 --out pca/
//   citerank synth    --nodes 100 --seed 7 --out synth/
//
// Exit codes: 0 success, 1 user or input error, 2 internal error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "citerank/citerank.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUser = 1;
constexpr int kExitInternal = 2;

struct Failure {
  int exit_code;
  std::string message;
};

void check(cr_status status, const std::string& context) {
  if (status == CR_OK) return;
  throw Failure{status == CR_ERR_INTERNAL ? kExitInternal : kExitUser,
                context + ": " + cr_status_name(status) + ": " + cr_last_error()};
}

void user_error(const std::string& message) { throw Failure{kExitUser, message}; }

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Network = std::unique_ptr<cr_network, Deleter<cr_network, cr_network_free>>;
using Profile = std::unique_ptr<cr_profile, Deleter<cr_profile, cr_profile_free>>;
using Records = std::unique_ptr<cr_records, Deleter<cr_records, cr_records_free>>;
using PageRank = std::unique_ptr<cr_pagerank, Deleter<cr_pagerank, cr_pagerank_free>>;
using Table = std::unique_ptr<cr_table, Deleter<cr_table, cr_table_free>>;
using Report = std::unique_ptr<cr_report, Deleter<cr_report, cr_report_free>>;
using Pca = std::unique_ptr<cr_pca, Deleter<cr_pca, cr_pca_free>>;

void require_file(const std::string& path) {
  if (!fs::is_regular_file(path)) user_error("input not found: " + path);
}

fs::path prepare_out(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) user_error("cannot create output directory '" + dir + "': " + ec.message());
  return fs::path(dir);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// manifest.json beside every command's outputs. Only "timestamp" varies
// between identical runs.
void write_manifest(const fs::path& out, const std::string& command, const std::vector<std::string>& inputs,
                    const ordered_json& flags, const std::vector<std::string>& outputs) {
  ordered_json j;
  j["tool"] = "citerank";
  j["version"] = cr_version();
  j["command"] = command;
  j["inputs"] = inputs;
  j["flags"] = flags;
  j["output_directory"] = out.string();
  j["outputs"] = outputs;
  j["timestamp"] = utc_timestamp();
  std::ofstream f(out / "manifest.json", std::ios::binary);
  f << j.dump(2) << '\n';
  if (!f) throw Failure{kExitInternal, "cannot write manifest in " + out.string()};
}

std::string out_file(const fs::path& dir, const char* name) { return (dir / name).string(); }

Profile load_profile(const std::string& subject, const std::string& config) {
  cr_profile* p = nullptr;
  if (!config.empty()) {
    require_file(config);
    check(cr_profile_load(config.c_str(), subject.c_str(), &p), "profile");
  } else {
    check(cr_profile_builtin(subject.c_str(), &p), "profile");
  }
  return Profile(p);
}

// ---- build

struct BuildArgs {
  std::string records;
  std::string subject;
  std::string config;
  long threshold = 0;
  bool self_loops = false;
  bool strict = false;
  std::string out = ".";
};

int run_build(const BuildArgs& a) {
  require_file(a.records);
  auto profile = load_profile(a.subject, a.config);
  if (a.threshold > 0) check(cr_profile_set_threshold(profile.get(), a.threshold), "threshold");

  cr_records* raw = nullptr;
  check(cr_records_read(a.records.c_str(), a.strict ? 1 : 0, &raw), a.records);
  Records records(raw);
  for (size_t i = 0; i < cr_records_issue_count(records.get()); ++i) {
    size_t line = 0;
    const char* message = nullptr;
    check(cr_records_issue(records.get(), i, &line, &message), "issues");
    std::cerr << a.records << ":" << line << ": skipped: " << message << '\n';
  }
  if (cr_records_count(records.get()) == 0) user_error(a.records + ": no records");

  cr_network* raw_net = nullptr;
  cr_build_stats stats{};
  check(cr_records_build_network(records.get(), profile.get(), a.self_loops ? 1 : 0, &raw_net, &stats), "build");
  Network net(raw_net);

  const auto dir = prepare_out(a.out);
  check(cr_network_write_nodes(net.get(), out_file(dir, "nodes.csv").c_str()), "nodes.csv");
  check(cr_network_write_edges(net.get(), out_file(dir, "edges.csv").c_str()), "edges.csv");
  check(cr_network_write_summary(net.get(), out_file(dir, "summary.json").c_str(),
                                 static_cast<int64_t>(stats.publications)),
        "summary.json");
  if (cr_network_node_count(net.get()) >= 2) {
    check(cr_network_write_centrality(net.get(), out_file(dir, "centrality.csv").c_str()), "centrality.csv");
  }

  int first = 0, last = 0;
  cr_profile_years(profile.get(), &first, &last);
  ordered_json flags = {{"subject", a.subject},
                        {"config", a.config},
                        {"category", cr_profile_category(profile.get())},
                        {"threshold", cr_profile_threshold(profile.get())},
                        {"year_range", {first, last}},
                        {"self_loops", a.self_loops},
                        {"strict", a.strict},
                        {"skipped_lines", cr_records_issue_count(records.get())},
                        {"matching_records", stats.matching_records}};
  write_manifest(dir, "build", {a.records}, flags, {"nodes.csv", "edges.csv", "summary.json", "centrality.csv"});
  return kExitOk;
}

// ---- pagerank

struct PageRankArgs {
  std::string edges;
  std::string nodes;
  double damping = 0.85;
  double tol = 1e-12;
  size_t max_iter = 1000;
  std::string dangling = "uniform";
  bool self_loops = false;
  std::string out = ".";
};

int run_pagerank(const PageRankArgs& a) {
  require_file(a.edges);
  if (!a.nodes.empty()) require_file(a.nodes);
  cr_network* raw = nullptr;
  check(cr_network_read(a.edges.c_str(), a.nodes.empty() ? nullptr : a.nodes.c_str(), a.self_loops ? 1 : 0, &raw),
        a.edges);
  Network net(raw);

  cr_pagerank_config cfg;
  cr_pagerank_config_default(&cfg);
  cfg.damping = a.damping;
  cfg.tolerance = a.tol;
  cfg.max_iterations = a.max_iter;
  cfg.dangling = a.dangling == "teleport" ? CR_DANGLING_TELEPORT_ONLY : CR_DANGLING_UNIFORM;

  cr_pagerank* raw_pr = nullptr;
  check(cr_pagerank_run(net.get(), &cfg, &raw_pr), "pagerank");
  PageRank pr(raw_pr);
  if (!cr_pagerank_converged(pr.get())) {
    std::cerr << "warning: no convergence after " << cr_pagerank_iterations(pr.get())
              << " iterations (last L1 change " << cr_pagerank_final_delta(pr.get()) << ")\n";
  }

  const auto dir = prepare_out(a.out);
  check(cr_pagerank_write_ranking(pr.get(), net.get(), out_file(dir, "ranking.csv").c_str()), "ranking.csv");

  std::vector<std::string> inputs = {a.edges};
  if (!a.nodes.empty()) inputs.push_back(a.nodes);
  ordered_json flags = {{"damping", a.damping},
                        {"tol", a.tol},
                        {"max_iter", a.max_iter},
                        {"dangling", a.dangling},
                        {"self_loops", a.self_loops},
                        {"iterations", cr_pagerank_iterations(pr.get())},
                        {"converged", cr_pagerank_converged(pr.get()) != 0}};
  write_manifest(dir, "pagerank", inputs, flags, {"ranking.csv"});
  return kExitOk;
}

// ---- score

struct ScoreArgs {
  std::string table;
  std::string subject;
  std::string config;
  std::string column = "arwu_score";
  std::string out = ".";
};

int run_score(const ScoreArgs& a) {
  require_file(a.table);
  auto profile = load_profile(a.subject, a.config);
  cr_table* raw = nullptr;
  check(cr_table_read(a.table.c_str(), &raw), a.table);
  Table table(raw);
  check(cr_table_add_composite(table.get(), profile.get(), a.column.c_str()), "score");
  const auto dir = prepare_out(a.out);
  check(cr_table_write(table.get(), out_file(dir, "scores.csv").c_str()), "scores.csv");
  ordered_json flags = {{"subject", a.subject}, {"config", a.config}, {"column", a.column}};
  write_manifest(dir, "score", {a.table}, flags, {"scores.csv"});
  return kExitOk;
}

// ---- compare

struct CompareArgs {
  std::string table;
  std::string col_a;
  std::string col_b;
  std::vector<std::string> controls;
  std::string out = ".";
};

int run_compare(const CompareArgs& a) {
  require_file(a.table);
  cr_table* raw = nullptr;
  check(cr_table_read(a.table.c_str(), &raw), a.table);
  Table table(raw);
  std::vector<const char*> controls;
  for (const auto& c : a.controls) controls.push_back(c.c_str());
  cr_report* raw_report = nullptr;
  check(cr_compare(table.get(), a.col_a.c_str(), a.col_b.c_str(), controls.data(), controls.size(), &raw_report),
        "compare");
  Report report(raw_report);
  const auto dir = prepare_out(a.out);
  check(cr_report_write_json(report.get(), out_file(dir, "report.json").c_str()), "report.json");
  check(cr_report_write_csv(report.get(), out_file(dir, "report.csv").c_str()), "report.csv");
  ordered_json flags = {{"a", a.col_a}, {"b", a.col_b}, {"controls", a.controls}};
  write_manifest(dir, "compare", {a.table}, flags, {"report.json", "report.csv"});
  return kExitOk;
}

// ---- pca

struct PcaArgs {
  std::string matrix;
  std::string table;
  std::vector<std::string> columns;
  size_t retain = 2;
  std::string out = ".";
};

int run_pca(const PcaArgs& a) {
  if (a.matrix.empty() == a.table.empty()) user_error("pca: give exactly one of --matrix or --table");
  cr_pca* raw = nullptr;
  std::string input;
  if (!a.matrix.empty()) {
    input = a.matrix;
    require_file(a.matrix);
    check(cr_pca_from_matrix_file(a.matrix.c_str(), a.retain, &raw), a.matrix);
  } else {
    input = a.table;
    require_file(a.table);
    if (a.columns.empty()) user_error("pca: --table needs --columns");
    cr_table* raw_table = nullptr;
    check(cr_table_read(a.table.c_str(), &raw_table), a.table);
    Table table(raw_table);
    std::vector<const char*> cols;
    for (const auto& c : a.columns) cols.push_back(c.c_str());
    check(cr_pca_from_table(table.get(), cols.data(), cols.size(), a.retain, &raw), "pca");
  }
  Pca pca(raw);
  const auto dir = prepare_out(a.out);
  check(cr_pca_write(pca.get(), dir.c_str()), "pca output");

  std::vector<double> rotated(cr_pca_retained(pca.get()));
  check(cr_pca_rotated_share(pca.get(), rotated.data(), rotated.size()), "pca");
  std::vector<double> shares(cr_pca_variable_count(pca.get()));
  check(cr_pca_explained_share(pca.get(), shares.data(), shares.size()), "pca");
  double retained = 0.0;
  for (size_t c = 0; c < rotated.size(); ++c) retained += shares[c];
  std::cout << "retained share " << retained << "; rotated shares";
  for (double s : rotated) std::cout << ' ' << s;
  std::cout << '\n';

  ordered_json flags = {{"retain", a.retain}, {"columns", a.columns}};
  write_manifest(dir, "pca", {input}, flags, {"pca.json", "eigenvalues.csv", "loadings.csv", "rotated_loadings.csv"});
  return kExitOk;
}

// ---- synth

struct SynthArgs {
  cr_synth_config cfg{};
  std::string out = ".";
};

int run_synth(const SynthArgs& a) {
  cr_network* raw = nullptr;
  check(cr_synth_generate(&a.cfg, &raw), "synth");
  Network net(raw);
  const auto dir = prepare_out(a.out);
  check(cr_network_write_nodes(net.get(), out_file(dir, "nodes.csv").c_str()), "nodes.csv");
  check(cr_network_write_edges(net.get(), out_file(dir, "edges.csv").c_str()), "edges.csv");
  ordered_json flags = {{"nodes", a.cfg.nodes},
                        {"exponent", a.cfg.attachment_exponent},
                        {"mean_out", a.cfg.mean_out_citations},
                        {"cartel_members", a.cfg.cartel_members},
                        {"cartel_boost", a.cfg.cartel_boost},
                        {"seed", a.cfg.seed}};
  write_manifest(dir, "synth", {}, flags, {"nodes.csv", "edges.csv"});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Institution citation networks, PageRank reputation scores and ranking comparisons"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cr_version()));

  const char* env_config = std::getenv("CITERANK_CONFIG");
  const std::string default_config = env_config ? env_config : "";

  BuildArgs build;
  build.config = default_config;
  auto* cmd_build = app.add_subcommand("build", "Build an institution citation network from JSON Lines records");
  cmd_build->add_option("records", build.records, "Publication records (JSON Lines)")->required();
  cmd_build->add_option("--subject", build.subject, "Subject profile name")->required();
  cmd_build->add_option("--config", build.config, "Profile config JSON (default: $CITERANK_CONFIG or built-ins)");
  cmd_build->add_option("--threshold", build.threshold, "Override the publication threshold")
      ->check(CLI::PositiveNumber);
  cmd_build->add_flag("--self-loops", build.self_loops, "Keep self-citations as self-loops");
  cmd_build->add_flag("--strict", build.strict, "Fail on the first malformed record");
  cmd_build->add_option("--out", build.out, "Output directory");

  PageRankArgs pr;
  auto* cmd_pr = app.add_subcommand("pagerank", "Rank the nodes of an edge-list network by PageRank");
  cmd_pr->add_option("edges", pr.edges, "Edge list CSV (source,target,weight)")->required();
  cmd_pr->add_option("--nodes", pr.nodes, "Node list CSV fixing the node set");
  cmd_pr->add_option("--damping", pr.damping, "Damping factor in [0, 1)")->check(CLI::Range(0.0, 1.0));
  cmd_pr->add_option("--tol", pr.tol, "L1 convergence tolerance")->check(CLI::PositiveNumber);
  cmd_pr->add_option("--max-iter", pr.max_iter, "Iteration budget")->check(CLI::PositiveNumber);
  cmd_pr->add_option("--dangling", pr.dangling, "Dangling-node policy")
      ->check(CLI::IsMember({"uniform", "teleport"}));
  cmd_pr->add_flag("--self-loops", pr.self_loops, "Keep self-loops from the edge list");
  cmd_pr->add_option("--out", pr.out, "Output directory");

  ScoreArgs score;
  score.config = default_config;
  auto* cmd_score = app.add_subcommand("score", "Compress raw indicators and add the weighted composite score");
  cmd_score->add_option("table", score.table, "Score table CSV with raw PUB, CNCI, IC, TOP, AWD columns")->required();
  cmd_score->add_option("--subject", score.subject, "Subject profile name")->required();
  cmd_score->add_option("--config", score.config, "Profile config JSON (default: $CITERANK_CONFIG or built-ins)");
  cmd_score->add_option("--column", score.column, "Name of the composite column");
  cmd_score->add_option("--out", score.out, "Output directory");

  CompareArgs cmp;
  auto* cmd_cmp = app.add_subcommand("compare", "Correlation, concordance and displacement of two score columns");
  cmd_cmp->add_option("table", cmp.table, "Score table CSV")->required();
  cmd_cmp->add_option("--a", cmp.col_a, "First score column")->required();
  cmd_cmp->add_option("--b", cmp.col_b, "Second score column")->required();
  cmd_cmp->add_option("--control", cmp.controls, "Control column for a partial correlation (repeatable)");
  cmd_cmp->add_option("--out", cmp.out, "Output directory");

  PcaArgs pca;
  auto* cmd_pca = app.add_subcommand("pca", "Principal components with varimax rotation");
  cmd_pca->add_option("--matrix", pca.matrix, "Labelled correlation matrix CSV");
  cmd_pca->add_option("--table", pca.table, "Score table CSV");
  cmd_pca->add_option("--columns", pca.columns, "Table columns to correlate")->delimiter(',');
  cmd_pca->add_option("--retain", pca.retain, "Components to retain")->check(CLI::PositiveNumber);
  cmd_pca->add_option("--out", pca.out, "Output directory");

  SynthArgs synth;
  cr_synth_config_default(&synth.cfg);
  auto* cmd_synth = app.add_subcommand("synth", "Generate a seeded synthetic citation network");
  cmd_synth->add_option("--nodes", synth.cfg.nodes, "Number of institutions")->check(CLI::PositiveNumber);
  cmd_synth->add_option("--exponent", synth.cfg.attachment_exponent, "Preferential attachment exponent");
  cmd_synth->add_option("--mean-out", synth.cfg.mean_out_citations, "Mean citations given per institution");
  cmd_synth->add_option("--cartel-members", synth.cfg.cartel_members, "Cartel size (0: none)");
  cmd_synth->add_option("--cartel-boost", synth.cfg.cartel_boost, "Extra citations per cartel pair");
  cmd_synth->add_option("--seed", synth.cfg.seed, "Random seed");
  cmd_synth->add_option("--out", synth.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUser;
  }

  try {
    if (cmd_build->parsed()) return run_build(build);
    if (cmd_pr->parsed()) return run_pagerank(pr);
    if (cmd_score->parsed()) return run_score(score);
    if (cmd_cmp->parsed()) return run_compare(cmp);
    if (cmd_pca->parsed()) return run_pca(pca);
    if (cmd_synth->parsed()) return run_synth(synth);
  } catch (const Failure& f) {
    std::cerr << "citerank: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "citerank: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
