#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "citerank/error.hpp"
#include "citerank/network.hpp"

using namespace citerank;

namespace {

// A->B, C->B, B->C
CitationNetwork three_node_fixture() {
  return CitationNetwork::build({"A", "B", "C"}, {{0, 1, 1}, {2, 1, 1}, {1, 2, 1}});
}

CitationNetwork three_cycle() { return CitationNetwork::build({"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}); }

}  // namespace

TEST_CASE("build merges duplicate pairs and drops zero weights") {
  auto net = CitationNetwork::build({"x", "y"}, {{0, 1, 2}, {0, 1, 3}, {1, 0, 0}});
  REQUIRE(net.edges().size() == 1);
  CHECK(net.weight(0, 1) == 5);
  CHECK(net.weight(1, 0) == 0);
  CHECK(net.adjacency(0, 1) == 1);
  CHECK(net.adjacency(1, 0) == 0);
}

TEST_CASE("self-loops are dropped unless kept") {
  auto dropped = CitationNetwork::build({"x", "y"}, {{0, 0, 4}, {0, 1, 1}});
  CHECK(dropped.weight(0, 0) == 0);
  CHECK_FALSE(dropped.self_loops_included());

  auto kept = CitationNetwork::build({"x", "y"}, {{0, 0, 4}, {0, 1, 1}}, "s", true);
  CHECK(kept.weight(0, 0) == 4);
  CHECK(kept.self_loops_included());
  // degree statistics ignore the loop either way
  CHECK(in_degree(kept) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("invalid construction is rejected") {
  CHECK_THROWS_AS(CitationNetwork::build({"x", "x"}, {}), Error);
  CHECK_THROWS_AS(CitationNetwork::build({"x"}, {{0, 3, 1}}), Error);
}

TEST_CASE("build_named appends unknown ids in first-seen order") {
  auto net = CitationNetwork::build_named({"z"}, {{"b", "a", 2}, {"a", "z", 1}});
  CHECK(net.node_ids() == std::vector<std::string>{"z", "b", "a"});
  CHECK(net.weight(*net.find("b"), *net.find("a")) == 2);
  CHECK_FALSE(net.find("missing").has_value());
}

TEST_CASE("in_degree examples") {
  SUBCASE("star: every other node cites node 0") {
    auto net = CitationNetwork::build({"0", "1", "2", "3", "4"}, {{1, 0, 1}, {2, 0, 3}, {3, 0, 1}, {4, 0, 2}});
    CHECK(in_degree(net)[0] == 4);
    CHECK(degree_centrality(net)[0] == 1.0);
  }
  SUBCASE("isolated node") {
    auto net = CitationNetwork::build({"a", "b", "lonely"}, {{0, 1, 1}});
    CHECK(in_degree(net)[2] == 0);
    CHECK(degree_centrality(net)[2] == 0.0);
  }
  SUBCASE("three-node fixture") {
    CHECK(in_degree(three_node_fixture()) == std::vector<std::uint32_t>{0, 2, 1});
  }
  SUBCASE("empty network") { CHECK(in_degree(CitationNetwork{}).empty()); }
}

TEST_CASE("degree centrality examples") {
  CHECK(degree_centrality(three_node_fixture()) == std::vector<double>{0.0, 1.0, 0.5});
  CHECK_THROWS_AS(degree_centrality(CitationNetwork::build({"only"}, {})), Error);
}

TEST_CASE("centrality distribution examples") {
  SUBCASE("directed 3-cycle") {
    auto dist = centrality_distribution(three_cycle());
    REQUIRE(dist.size() == 1);
    CHECK(dist[0].value == 0.5);
    CHECK(dist[0].probability == 1.0);
  }
  SUBCASE("three-node fixture") {
    auto dist = centrality_distribution(three_node_fixture());
    REQUIRE(dist.size() == 3);
    CHECK(dist[0].value == 0.0);
    CHECK(dist[1].value == 0.5);
    CHECK(dist[2].value == 1.0);
    for (const auto& p : dist) CHECK(p.probability == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("no edges") {
    auto dist = centrality_distribution(CitationNetwork::build({"a", "b", "c", "d"}, {}));
    REQUIRE(dist.size() == 1);
    CHECK(dist[0].value == 0.0);
    CHECK(dist[0].probability == 1.0);
  }
}

TEST_CASE("network summary examples") {
  auto s = network_summary(three_node_fixture());
  CHECK(s.nodes == 3);
  CHECK(s.citations == 3);
  CHECK(s.edges == 3);

  auto empty = network_summary(CitationNetwork{});
  CHECK(empty.nodes == 0);
  CHECK(empty.citations == 0);
  CHECK(empty.edges == 0);

  CHECK(network_summary(CitationNetwork::build({"a", "b"}, {{0, 1, 7}})).citations == 7);
}

TEST_CASE("degree statistics agree with a dense brute force on random networks") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(2, 50);
  std::uniform_real_distribution<double> density(0.0, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = oracle::random_network(rng, size(rng), density(rng));
    const auto k = in_degree(net);
    CHECK(k == oracle::in_degree(net));

    const auto c = degree_centrality(net);
    const auto n = static_cast<double>(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
      CHECK(c[i] == k[i] / (n - 1.0));
      CHECK(c[i] <= 1.0);
      CHECK((c[i] == 1.0) == (k[i] == net.size() - 1));
    }

    double total = 0.0;
    double counted = 0.0;
    for (const auto& p : centrality_distribution(net)) {
      total += p.probability;
      counted += p.probability * n;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
    CHECK(counted == doctest::Approx(n).epsilon(1e-12));

    const auto dense = oracle::dense_weights(net);
    for (std::size_t i = 0; i < net.size(); ++i) {
      for (std::size_t j = 0; j < net.size(); ++j) {
        const int a = net.adjacency(static_cast<NodeIndex>(i), static_cast<NodeIndex>(j));
        CHECK((a == 0 || a == 1));
        CHECK((a == 1) == (dense[i][j] > 0));
      }
    }
  }
}

TEST_CASE("permuted relabels nodes and edges consistently") {
  auto net = three_node_fixture();
  const std::vector<NodeIndex> perm = {2, 0, 1};
  auto p = net.permuted(perm);
  CHECK(p.node_ids() == std::vector<std::string>{"B", "C", "A"});
  CHECK(p.weight(*p.find("A"), *p.find("B")) == 1);
  CHECK(p.weight(*p.find("B"), *p.find("A")) == 0);
  CHECK_THROWS_AS(net.permuted(std::vector<NodeIndex>{0, 0, 1}), Error);
}
