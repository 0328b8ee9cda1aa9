#include <doctest.h>

#include <matchlab/bipartite.hpp>
#include <matchlab/combinatorics.hpp>
#include <matchlab/rng.hpp>

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

using namespace matchlab;

TEST_SUITE_BEGIN("bipartite");

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(MATCHLAB_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BipartiteGraph complete(long n) {
  std::vector<std::uint32_t> rows(n, (1u << n) - 1);
  return BipartiteGraph(n, n, std::move(rows));
}

}  // namespace

TEST_CASE("parsing and validation") {
  BipartiteGraph k22 = BipartiteGraph::parse_text(read_data("k22.txt"));
  CHECK(k22.n() == 2);
  CHECK(k22.r() == 2);
  CHECK(k22.v() == 4);

  BipartiteGraph c6 = BipartiteGraph::parse_json(read_data("c6.json"));
  CHECK(c6.n() == 3);
  CHECK(c6.r() == 2);
  CHECK(BipartiteGraph::parse_text(c6.to_text()).to_text() == c6.to_text());

  CHECK_THROWS_WITH_AS(BipartiteGraph::parse_text(read_data("bad_char.txt")),
                       "graph text: line 3, column 3: expected '0' or '1', got 'x'",
                       std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph::parse_text(read_data("not_regular.txt")),
                  std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph::parse_text("10\n011\n"), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph::parse_json("{\"n\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph::parse_json("not json"), std::invalid_argument);
}

TEST_CASE("matching vectors on the corpus") {
  BipartiteGraph k22 = BipartiteGraph::parse_text(read_data("k22.txt"));
  CHECK(matching_vector(k22) == std::vector<Int>{1, 4, 2});

  BipartiteGraph c6 = BipartiteGraph::parse_text(read_data("c6.txt"));
  CHECK(matching_vector(c6) == std::vector<Int>{1, 6, 9, 2});

  // Every corpus graph with at most 20 edges agrees with the subset oracle.
  for (const char* name : {"k22.txt", "c6.txt", "k33.txt", "k44.txt", "r3_n6_a.txt"}) {
    BipartiteGraph g = BipartiteGraph::parse_text(read_data(name));
    if (g.n() * g.r() <= 20) {
      CAPTURE(name);
      CHECK(matching_vector(g) == matching_vector_brute(g));
    }
  }
  // And sampled graphs.
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    BipartiteGraph g = sample_regular_bipartite(6, 3, seed);
    CHECK(matching_vector(g) == matching_vector_brute(g));
  }
}

TEST_CASE("complete bipartite closed form") {
  for (long n = 1; n <= 5; ++n) {
    std::vector<Int> m = matching_vector(complete(n));
    for (long i = 0; i <= n; ++i)
      CHECK(m[i] == binomial(n, i) * binomial(n, i) * factorial(i));
  }
}

TEST_CASE("edge count and partial counts") {
  for (std::uint64_t seed = 3; seed <= 5; ++seed) {
    BipartiteGraph g = sample_regular_bipartite(7, 3, seed);
    std::vector<Int> full = matching_vector(g);
    CHECK(full[1] == Int(7 * 3));
    std::vector<Int> partial = partial_matching_counts(g, 4);
    for (long t = 0; t <= 4; ++t) CHECK(partial[t] == full[t]);
  }
}

TEST_CASE("complete graph matchings") {
  CHECK(complete_graph_matchings(4, 1) == 6);
  CHECK(complete_graph_matchings(4, 2) == 3);
  CHECK(complete_graph_matchings(6, 3) == 15);
  CHECK(complete_graph_matchings(4, 3) == 0);
}

TEST_CASE("d table") {
  BipartiteGraph k22 = BipartiteGraph::parse_text(read_data("k22.txt"));
  DTable t = d_table(k22);
  CHECK(t.last_index == 2);
  CHECK(t.a_ratio[0] == Rational(1));          // d(0) = 0
  CHECK(t.a_ratio[1] == Rational(1));          // d(1) = ln(4/2) - ln(6/3) = 0
  CHECK(t.a_ratio[2] == Rational(3, 2));       // d(2) = ln(3/2) > 0
  CHECK(t.delta_sign(0, 0) == 0);
  CHECK(t.delta_sign(0, 2) == 1);
  CHECK(t.delta_sign(1, 1) == 1);              // d(2) - d(1) > 0
  CHECK(t.meaningful(2, 0));
  CHECK_FALSE(t.meaningful(2, 1));
  CHECK_THROWS_AS(t.delta_sign(3, 0), std::out_of_range);
}

TEST_CASE("positivity verdicts") {
  for (const char* name : {"k22.txt", "c6.txt", "k33.txt", "k44.txt", "k55.txt",
                           "r3_n6_a.txt"}) {
    CAPTURE(name);
    BipartiteGraph g = BipartiteGraph::parse_text(read_data(name));
    CHECK(positivity_check(g).satisfies);
  }
}

TEST_CASE("verdicts are invariant under row and column relabeling") {
  SplitMix64 rng(77);
  for (std::uint64_t seed = 10; seed <= 13; ++seed) {
    BipartiteGraph g = sample_regular_bipartite(6, 3, seed);
    std::vector<Int> m = matching_vector(g);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<long> rowp(g.n()), colp(g.n());
      std::iota(rowp.begin(), rowp.end(), 0);
      std::iota(colp.begin(), colp.end(), 0);
      for (long t = g.n() - 1; t > 0; --t) {
        std::swap(rowp[t], rowp[rng.below(t + 1)]);
        std::swap(colp[t], colp[rng.below(t + 1)]);
      }
      std::vector<std::uint32_t> rows(g.n(), 0);
      for (long row = 0; row < g.n(); ++row)
        for (long col = 0; col < g.n(); ++col)
          if (g.edge(row, col)) rows[rowp[row]] |= (1u << colp[col]);
      BipartiteGraph perm(g.n(), g.r(), std::move(rows));
      CHECK(matching_vector(perm) == m);
      CHECK(positivity_check(perm).satisfies == positivity_check(g).satisfies);
    }
  }
}

TEST_CASE("exhaustive enumeration") {
  std::uint64_t count = 0;
  enumerate_regular_bipartite(2, 2, [&](const BipartiteGraph&) {
    ++count;
    return true;
  });
  CHECK(count == 1);

  count = enumerate_regular_bipartite(3, 2, [](const BipartiteGraph&) { return true; });
  CHECK(count == 6);
  count = enumerate_regular_bipartite(4, 3, [](const BipartiteGraph&) { return true; });
  CHECK(count == 24);
  count = enumerate_regular_bipartite(4, 2, [](const BipartiteGraph&) { return true; });
  CHECK(count == 90);

  // Early stop.
  std::uint64_t seen = 0;
  enumerate_regular_bipartite(4, 2, [&](const BipartiteGraph&) {
    return ++seen < 10;
  });
  CHECK(seen == 10);
}

TEST_CASE("sampler determinism and variety") {
  BipartiteGraph a = sample_regular_bipartite(8, 3, 42);
  BipartiteGraph b = sample_regular_bipartite(8, 3, 42);
  CHECK(a.to_text() == b.to_text());

  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    seen.insert(sample_regular_bipartite(8, 3, seed).to_text());
  CHECK(seen.size() > 15);

  // n = 2, r = 2 has a single simple graph.
  CHECK(sample_regular_bipartite(2, 2, 7).to_text() == "11\n11\n");
}

TEST_CASE("weak positivity statistics") {
  // d(1) = 0 identically: with i = 1, k = 0 the statistic collapses.
  WeakPositivityStats one = weak_positivity_stats(6, 3, 1, 0, 10, 3);
  CHECK(one.nonneg_count == 10);
  CHECK(one.alpha_hat == Rational(1));
  CHECK(one.beta_hat.is_zero());

  WeakPositivityStats st = weak_positivity_stats(8, 3, 2, 1, 25, 7);
  CHECK(st.samples == 25);
  CHECK(st.nonneg_count == 25);   // the first varying count enters at m_4
  CHECK(st.beta_hat.is_zero());
  CHECK(st.alpha_hat > Rational(0));

  // The second-moment bound shrinks with n (fixed i = 2, k = 2, seed 7).
  WeakPositivityStats b8 = weak_positivity_stats(8, 3, 2, 2, 200, 7);
  WeakPositivityStats b12 = weak_positivity_stats(12, 3, 2, 2, 200, 7);
  WeakPositivityStats b16 = weak_positivity_stats(16, 3, 2, 2, 200, 7);
  REQUIRE(b8.bound.has_value());
  REQUIRE(b12.bound.has_value());
  REQUIRE(b16.bound.has_value());
  CHECK(*b12.bound < *b8.bound);
  CHECK(*b16.bound < *b12.bound);

  // Same seed reproduces; the k = 2 statistic has genuine variance.
  WeakPositivityStats k2a = weak_positivity_stats(8, 3, 2, 2, 30, 11);
  WeakPositivityStats k2b = weak_positivity_stats(8, 3, 2, 2, 30, 11);
  CHECK(k2a.alpha_hat == k2b.alpha_hat);
  CHECK(k2a.beta_hat == k2b.beta_hat);
  CHECK(k2a.beta_hat > Rational(0));
  CHECK(k2a.bound.has_value());
}

TEST_SUITE_END();
