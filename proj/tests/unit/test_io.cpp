#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "citerank/error.hpp"
#include "citerank/io.hpp"

using namespace citerank;

TEST_CASE("format_number") {
  CHECK(io::format_number(0.1) == "0.1");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(100) == "100");
  CHECK(io::format_number(1.0 / 3.0) == "0.333333333333333");
}

TEST_CASE("csv quoting and reading") {
  CHECK(io::csv_field("plain") == "plain");
  CHECK(io::csv_field("a,b") == "\"a,b\"");
  CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");

  std::istringstream in("a,\"b,c\",\"d\"\"e\"\r\n\n\"multi\nline\",x,\n");
  const auto rows = io::read_csv(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "d\"e"});
  CHECK(rows[1] == std::vector<std::string>{"multi\nline", "x", ""});

  std::istringstream bad("\"open,x\n");
  CHECK_THROWS_AS(io::read_csv(bad), Error);
}

TEST_CASE("parse_number") {
  CHECK(io::parse_number("2.5", "ctx") == 2.5);
  CHECK_THROWS_WITH(io::parse_number("x1", "row 3"), doctest::Contains("row 3"));
  CHECK_THROWS_AS(io::parse_number("", "c"), Error);
  CHECK_THROWS_AS(io::parse_number("nan", "c"), Error);
  CHECK_THROWS_AS(io::parse_number("1.5abc", "c"), Error);
}

TEST_CASE("edge list round trip") {
  auto net = CitationNetwork::build_named({"a, inc", "b", "c"}, {{"a, inc", "b", 3}, {"b", "c", 1}, {"c", "a, inc", 2}});
  std::ostringstream out;
  io::write_edge_list(out, net);
  CHECK(out.str() == "source,target,weight\n\"a, inc\",b,3\nb,c,1\nc,\"a, inc\",2\n");

  std::istringstream in(out.str());
  auto back = io::read_edge_list(in, {"a, inc", "b", "c", "isolated"});
  CHECK(back.size() == 4);
  CHECK(back.weight(*back.find("a, inc"), *back.find("b")) == 3);

  std::istringstream bad("source,target,weight\na,b,1.5\n");
  CHECK_THROWS_AS(io::read_edge_list(bad), Error);
  std::istringstream wrong_header("from,to,w\na,b,1\n");
  CHECK_THROWS_AS(io::read_edge_list(wrong_header), Error);
}

TEST_CASE("node list and summary") {
  auto net = CitationNetwork::build_named({"a", "b", "c"}, {{"a", "b", 3}, {"c", "b", 1}});
  std::ostringstream nodes;
  io::write_node_list(nodes, net);
  CHECK(nodes.str() == "institution,in_degree,degree_centrality\na,0,0\nb,2,1\nc,0,0\n");
  std::istringstream in(nodes.str());
  CHECK(io::read_node_list(in) == std::vector<std::string>{"a", "b", "c"});

  std::ostringstream summary;
  io::write_summary(summary, network_summary(net), "TEL", 12);
  const auto j = nlohmann::json::parse(summary.str());
  CHECK(j["subject"] == "TEL");
  CHECK(j["nodes"] == 3);
  CHECK(j["publications"] == 12);
  CHECK(j["citations"] == 4);
  CHECK(j["edges"] == 2);
  CHECK(j["self_loops_included"] == false);
}

TEST_CASE("ranking order breaks ties by id") {
  auto net = CitationNetwork::build_named({"b", "a", "c"}, {});
  PageRankResult pr;
  pr.scores = {0.25, 0.25, 0.5};
  const auto entries = io::rank_entries(net, pr);
  CHECK(entries[0].institution == "c");
  CHECK(entries[1].institution == "a");
  CHECK(entries[2].institution == "b");
  CHECK(entries[0].normalized_score == 100);
  std::ostringstream out;
  io::write_ranking(out, net, pr);
  CHECK(out.str().rfind("rank,institution,pagerank_score,normalized_score\n1,c,0.5,100\n", 0) == 0);
}

TEST_CASE("score table round trip") {
  std::istringstream in("institution,PUB,CNCI\nx,1,2\ny,3.5,4\n");
  const auto t = io::read_score_table(in, "FIN");
  CHECK(t.rows() == 2);
  CHECK(t.column("CNCI") == std::vector<double>{2, 4});
  std::ostringstream out;
  io::write_score_table(out, t);
  CHECK(out.str() == "institution,PUB,CNCI\nx,1,2\ny,3.5,4\n");

  std::istringstream missing("institution,PUB\nx,\n");
  CHECK_THROWS_AS(io::read_score_table(missing), Error);
  std::istringstream dup("institution,PUB,PUB\nx,1,2\n");
  CHECK_THROWS_AS(io::read_score_table(dup), Error);
}

TEST_CASE("matrix round trip") {
  std::istringstream in("variable,a,b\na,1,0.5\nb,0.5,1\n");
  const auto m = io::read_matrix(in);
  CHECK(m.labels == std::vector<std::string>{"a", "b"});
  CHECK(m.values(0, 1) == 0.5);
  std::ostringstream out;
  io::write_matrix(out, m);
  CHECK(out.str() == "variable,a,b\na,1,0.5\nb,0.5,1\n");

  std::istringstream mislabelled("variable,a,b\nb,1,0.5\na,0.5,1\n");
  CHECK_THROWS_AS(io::read_matrix(mislabelled), Error);
}

TEST_CASE("report and pca serialization") {
  ScoreTable t("S", {"a", "b", "c", "d", "e"});
  t.set_column("x", {5, 4, 3, 2, 1});
  t.set_column("y", {5, 3, 4, 1, 2});
  t.set_column("z", {1, 3, 2, 5, 3});
  const auto rep = compare(t, "x", "y", {"z"});

  std::ostringstream json;
  io::write_report_json(json, rep);
  const auto j = nlohmann::json::parse(json.str());
  CHECK(j["pearson"]["r"].get<double>() == doctest::Approx(rep.pearson.r));
  CHECK(j["partial"]["z"]["r"].get<double>() == doctest::Approx(rep.partial.at("z").r));
  CHECK(j["displacement"]["n"] == 5);

  std::ostringstream csv;
  io::write_report_csv(csv, rep);
  CHECK(csv.str().rfind("statistic,control,value,p_value\n", 0) == 0);
  CHECK(csv.str().find("partial,z,") != std::string::npos);

  const auto r = pca(Matrix::identity(3), 2, {"u", "v", "w"});
  std::ostringstream loadings;
  io::write_loadings(loadings, r, true);
  CHECK(loadings.str().rfind("variable,component1,component2\nu,", 0) == 0);
  std::ostringstream eig;
  io::write_pca_eigenvalues(eig, r);
  CHECK(eig.str().rfind("component,eigenvalue,explained_share\n1,1,", 0) == 0);
  std::ostringstream pj;
  io::write_pca_json(pj, r);
  CHECK(nlohmann::json::parse(pj.str())["variables"].size() == 3);
}
