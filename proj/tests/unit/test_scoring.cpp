#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "citerank/error.hpp"
#include "citerank/scoring.hpp"

using namespace citerank;
using doctest::Approx;

TEST_CASE("compress examples") {
  CHECK(compress(std::vector<double>{400, 100}) == std::vector<double>{100, 50});
  CHECK(compress(std::vector<double>{7}) == std::vector<double>{100});
  CHECK(compress(std::vector<double>{10000, 1}) == std::vector<double>{100, 1});
}

TEST_CASE("compress rejects bad input") {
  CHECK_THROWS_AS(compress(std::vector<double>{}), Error);
  CHECK_THROWS_AS(compress(std::vector<double>{0, 0}), Error);
  CHECK_THROWS_AS(compress(std::vector<double>{1, -1}), Error);
  CHECK_THROWS_AS(compress(std::vector<double>{1, NAN}), Error);
}

TEST_CASE("composite_score") {
  const auto fin = find_profile(builtin_profiles(), "FIN");
  ScoreTable t("FIN", {"x"});
  t.set_column("PUB", {100});
  t.set_column("CNCI", {50});
  t.set_column("IC", {0});
  t.set_column("TOP", {80});
  const auto score = composite_score(t, fin);
  CHECK(score[0] == 25500.0 / 310.0);
  CHECK(score[0] == Approx(82.26).epsilon(1e-4));

  SUBCASE("missing column is named") {
    ScoreTable partial("FIN", {"x"});
    partial.set_column("PUB", {100});
    try {
      composite_score(partial, fin);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFound);
      CHECK(std::string(e.what()).find("CNCI") != std::string::npos);
    }
  }
  SUBCASE("single indicator") {
    SubjectProfile p;
    p.name = "ONE";
    p.category = "c";
    p.weights = {100, 0, 0, 0, 0};
    ScoreTable one("ONE", {"a", "b"});
    one.set_column("PUB", {100, 50});
    CHECK(composite_score(one, p) == std::vector<double>{100, 50});
  }
}

TEST_CASE("composite of all-100 scores is 100 for every built-in profile") {
  for (const auto& p : builtin_profiles()) {
    ScoreTable t(p.name, {"a", "b", "c"});
    for (auto ind : kIndicators) t.set_column(std::string(indicator_name(ind)), {100, 100, 100});
    for (double s : composite_score(t, p)) CHECK(s == Approx(100.0).epsilon(1e-15));
  }
}

TEST_CASE("composite is monotone in each column") {
  const auto den = find_profile(builtin_profiles(), "DEN");
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 100);
  for (int trial = 0; trial < 50; ++trial) {
    ScoreTable t("DEN", {"a", "b"});
    for (auto ind : kIndicators) {
      const double v = u(rng);
      t.set_column(std::string(indicator_name(ind)), {v, v});
    }
    const auto ind = kIndicators[trial % kIndicators.size()];
    auto col = t.column(std::string(indicator_name(ind)));
    col[1] = std::min(100.0, col[0] + 1.0 + u(rng) / 10);
    t.set_column(std::string(indicator_name(ind)), col);
    const auto s = composite_score(t, den);
    CHECK(s[1] >= s[0]);
  }
}

TEST_CASE("score table column handling") {
  ScoreTable t("S", {"a", "b"});
  CHECK_THROWS_AS(t.set_column("x", {1}), Error);
  CHECK_THROWS_AS(t.set_column("x", {1, INFINITY}), Error);
  t.set_column("x", {1, 2});
  t.set_column("y", {3, 4});
  t.set_column("x", {5, 6});
  CHECK(t.column_names() == std::vector<std::string>{"x", "y"});
  CHECK(t.column("x") == std::vector<double>{5, 6});
  CHECK_THROWS_WITH(t.column("z"), doctest::Contains("'z'"));
}

TEST_CASE("normalize_pagerank examples") {
  CHECK(normalize_pagerank(std::vector<double>{0.5, 0.5}) == std::vector<double>{100, 100});
  CHECK(normalize_pagerank(std::vector<double>{0.8, 0.2}) == std::vector<double>{100, 50});
  const double third = 1.0 / 3.0;
  CHECK(normalize_pagerank(std::vector<double>{third, third, third}) == std::vector<double>{100, 100, 100});
}

TEST_CASE("compress and normalize_pagerank are scale invariant and order preserving") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> value(0.0, 1000.0);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> raw(2 + trial % 30);
    for (auto& v : raw) v = value(rng);
    raw[0] += 1.0;
    const double c = scale(rng);
    std::vector<double> scaled(raw);
    for (auto& v : scaled) v *= c;

    for (auto fn : {+[](const std::vector<double>& v) { return compress(v); },
                    +[](const std::vector<double>& v) { return normalize_pagerank(v); }}) {
      const auto a = fn(raw);
      const auto b = fn(scaled);
      REQUIRE(a.size() == raw.size());
      CHECK(*std::max_element(a.begin(), a.end()) == 100.0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == Approx(b[i]).epsilon(1e-12));
        CHECK(a[i] >= 0.0);
        CHECK(a[i] <= 100.0);
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (raw[i] > raw[j]) CHECK(a[i] > a[j]);
        }
      }
    }
  }
}
