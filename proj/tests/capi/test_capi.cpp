#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "citerank/citerank.h"

namespace fs = std::filesystem;

namespace {

const std::string kData = CITERANK_TEST_DATA;

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("citerank_capi_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(cr_version()) == "0.1.0");
  CHECK(std::string(cr_status_name(CR_ERR_PARSE)) == "parse error");
  CHECK(std::string(cr_status_name(CR_OK)) == "ok");
}

TEST_CASE("network from arrays") {
  const char* ids[] = {"a", "b", "c"};
  const uint32_t src[] = {0, 1, 2};
  const uint32_t dst[] = {1, 2, 0};
  const uint64_t w[] = {1, 1, 1};
  cr_network* net = nullptr;
  REQUIRE(cr_network_from_edges(3, ids, 3, src, dst, w, 0, &net) == CR_OK);
  CHECK(cr_network_node_count(net) == 3);
  CHECK(std::string(cr_network_node_id(net, 2)) == "c");
  CHECK(cr_network_node_id(net, 3) == nullptr);

  cr_network_summary s;
  REQUIRE(cr_network_get_summary(net, &s) == CR_OK);
  CHECK(s.citations == 3);
  uint32_t k[3];
  REQUIRE(cr_network_in_degree(net, k, 3) == CR_OK);
  CHECK(k[0] == 1);
  CHECK(cr_network_in_degree(net, k, 2) == CR_ERR_INVALID_ARGUMENT);

  cr_pagerank_config cfg;
  cr_pagerank_config_default(&cfg);
  CHECK(cfg.damping == 0.85);
  cr_pagerank* pr = nullptr;
  REQUIRE(cr_pagerank_run(net, &cfg, &pr) == CR_OK);
  double scores[3];
  REQUIRE(cr_pagerank_scores(pr, scores, 3) == CR_OK);
  for (double v : scores) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(cr_pagerank_converged(pr) == 1);
  double dense[3];
  REQUIRE(cr_pagerank_dense(net, &cfg, dense, 3) == CR_OK);
  CHECK(std::abs(dense[0] - scores[0]) < 1e-12);
  cr_pagerank_free(pr);

  cfg.damping = 1.5;
  CHECK(cr_pagerank_run(net, &cfg, &pr) == CR_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(cr_last_error()) > 0);
  cr_network_free(net);

  const uint32_t bad[] = {0, 1, 7};
  CHECK(cr_network_from_edges(3, ids, 3, src, bad, w, 0, &net) == CR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("records to network to files") {
  cr_records* recs = nullptr;
  REQUIRE(cr_records_read((kData + "/records20.jsonl").c_str(), 0, &recs) == CR_OK);
  CHECK(cr_records_count(recs) == 20);
  cr_profile* prof = nullptr;
  REQUIRE(cr_profile_builtin("TEL", &prof) == CR_OK);
  REQUIRE(cr_profile_set_threshold(prof, 3) == CR_OK);
  CHECK(cr_profile_weight(prof, CR_TOP) == 100);

  cr_network* net = nullptr;
  cr_build_stats stats;
  REQUIRE(cr_records_build_network(recs, prof, 0, &net, &stats) == CR_OK);
  CHECK(stats.retained_institutions == 4);
  CHECK(stats.publications == 18);
  cr_network_summary s;
  cr_network_get_summary(net, &s);
  CHECK(s.citations == 29);
  CHECK(s.edges == 11);

  const auto dir = scratch("records");
  REQUIRE(cr_network_write_edges(net, (dir / "edges.csv").c_str()) == CR_OK);
  REQUIRE(cr_network_write_summary(net, (dir / "summary.json").c_str(), 18) == CR_OK);
  CHECK(slurp(dir / "summary.json").find("\"publications\": 18") != std::string::npos);

  cr_network* back = nullptr;
  REQUIRE(cr_network_read((dir / "edges.csv").c_str(), nullptr, 0, &back) == CR_OK);
  CHECK(cr_network_node_count(back) == 4);
  cr_network_free(back);
  CHECK(cr_network_read((dir / "missing.csv").c_str(), nullptr, 0, &back) == CR_ERR_IO);

  cr_network_free(net);
  cr_profile_free(prof);
  cr_records_free(recs);

  REQUIRE(cr_records_read((kData + "/records_dupes10.jsonl").c_str(), 0, &recs) == CR_OK);
  CHECK(cr_records_issue_count(recs) == 1);
  size_t line = 0;
  const char* msg = nullptr;
  REQUIRE(cr_records_issue(recs, 0, &line, &msg) == CR_OK);
  CHECK(line == 5);
  cr_records_free(recs);
  CHECK(cr_records_read((kData + "/records_dupes10.jsonl").c_str(), 1, &recs) == CR_ERR_DUPLICATE_ID);
  CHECK(cr_profile_builtin("XYZ", &prof) == CR_ERR_NOT_FOUND);
}

TEST_CASE("scoring and statistics") {
  const double raw[] = {400, 100};
  double out[2];
  REQUIRE(cr_compress(raw, 2, out) == CR_OK);
  CHECK(out[0] == 100);
  CHECK(out[1] == 50);
  const double zero[] = {0, 0};
  CHECK(cr_compress(zero, 2, out) == CR_ERR_DEGENERATE);

  const double x[] = {1, 2, 3, 4};
  const double y[] = {1, 3, 2, 4};
  cr_correlation c;
  REQUIRE(cr_pearson(x, y, 4, &c) == CR_OK);
  CHECK(c.r == doctest::Approx(0.8));
  const double rows[] = {1, 2, 3, 4, 2, 1, 3, 4};
  double w = 0;
  REQUIRE(cr_kendall_w(rows, 2, 4, &w) == CR_OK);
  CHECK(w == doctest::Approx(0.9));
  const double a[] = {4, 3, 2, 1};
  cr_displacement d;
  REQUIRE(cr_rank_displacement(a, x, 4, &d) == CR_OK);
  CHECK(d.mean == 2);
}

TEST_CASE("table, composite and report") {
  const auto dir = scratch("table");
  {
    std::ofstream f(dir / "t.csv");
    f << "institution,PUB,CNCI,IC,TOP,prank\n"
         "a,400,2,0.5,10,0.3\nb,100,1.5,0.2,5,0.25\nc,50,1,0.1,2,0.2\nd,20,0.5,0.3,1,0.15\ne,10,0.2,0.1,0,0.1\n";
  }
  cr_table* t = nullptr;
  REQUIRE(cr_table_read((dir / "t.csv").c_str(), &t) == CR_OK);
  CHECK(cr_table_rows(t) == 5);
  cr_profile* fin = nullptr;
  REQUIRE(cr_profile_builtin("FIN", &fin) == CR_OK);
  REQUIRE(cr_table_add_composite(t, fin, "arwu_score") == CR_OK);
  CHECK(std::string(cr_table_column_name(t, cr_table_column_count(t) - 1)) == "arwu_score");
  double pub[5];
  REQUIRE(cr_table_get_column(t, "PUB_score", pub, 5) == CR_OK);
  CHECK(pub[0] == 100);
  CHECK(pub[1] == 50);

  const char* controls[] = {"PUB"};
  cr_report* rep = nullptr;
  REQUIRE(cr_compare(t, "arwu_score", "prank", controls, 1, &rep) == CR_OK);
  cr_correlation pc;
  CHECK(cr_report_partial(rep, "PUB", &pc) == CR_OK);
  CHECK(cr_report_partial(rep, "CIT", &pc) == CR_ERR_NOT_FOUND);
  CHECK(cr_report_write_json(rep, (dir / "r.json").c_str()) == CR_OK);
  cr_report_free(rep);
  CHECK(cr_compare(t, "arwu_score", "nope", nullptr, 0, &rep) == CR_ERR_NOT_FOUND);
  CHECK(std::string(cr_last_error()).find("nope") != std::string::npos);

  cr_profile_free(fin);
  cr_table_free(t);
}

TEST_CASE("pca handle") {
  cr_pca* p = nullptr;
  REQUIRE(cr_pca_from_matrix_file((kData + "/ranking_corr6.csv").c_str(), 2, &p) == CR_OK);
  CHECK(cr_pca_variable_count(p) == 6);
  double share[6];
  REQUIRE(cr_pca_explained_share(p, share, 6) == CR_OK);
  CHECK(share[0] + share[1] >= 0.89);
  CHECK(cr_pca_explained_share(p, share, 2) == CR_ERR_INVALID_ARGUMENT);
  double rotated[2];
  REQUIRE(cr_pca_rotated_share(p, rotated, 2) == CR_OK);
  CHECK(rotated[0] > rotated[1]);
  std::vector<double> load(12);
  REQUIRE(cr_pca_loadings(p, 1, load.data(), load.size()) == CR_OK);
  const auto dir = scratch("pca");
  REQUIRE(cr_pca_write(p, dir.c_str()) == CR_OK);
  CHECK(fs::exists(dir / "rotated_loadings.csv"));
  cr_pca_free(p);

  const double bad[] = {1, 0.5, 0.2, 1};
  CHECK(cr_pca_from_matrix(bad, 2, nullptr, 1, &p) == CR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("synthetic networks") {
  cr_synth_config cfg;
  cr_synth_config_default(&cfg);
  CHECK(cfg.nodes == 100);
  cfg.cartel_members = 5;
  cr_network* a = nullptr;
  cr_network* b = nullptr;
  REQUIRE(cr_synth_generate(&cfg, &a) == CR_OK);
  REQUIRE(cr_synth_generate(&cfg, &b) == CR_OK);
  cr_network_summary sa, sb;
  cr_network_get_summary(a, &sa);
  cr_network_get_summary(b, &sb);
  CHECK(sa.citations == sb.citations);
  CHECK(sa.edges == sb.edges);
  cr_network_free(a);
  cr_network_free(b);
  cfg.nodes = 0;
  CHECK(cr_synth_generate(&cfg, &a) == CR_ERR_INVALID_ARGUMENT);
}
