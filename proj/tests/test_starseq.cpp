#include <gtest/gtest.h>

#include <random>

#include "dstar/oracle.hpp"
#include "dstar/starseq.hpp"
#include "support/corpus.hpp"

namespace dstar {
namespace {

StarTriangle triangle(std::size_t n, std::initializer_list<long long> row_major) {
  StarTriangle t(n);
  auto it = row_major.begin();
  for (std::size_t a = 0; a < t.side(); ++a)
    for (std::size_t b = a; b < t.side(); ++b) t.entry(a, b) = *it++;
  return t;
}

const Graph k4 = make_family(Family::complete, 4);
const Graph p3 = make_family(Family::path, 3);

TEST(StarTriangle, IndexingAndSymmetry) {
  StarTriangle t(5);
  EXPECT_EQ(t.side(), 4u);
  EXPECT_EQ(t.entry_count(), 10u);
  t.entry(1, 3) = 42;
  EXPECT_EQ(t.at(1, 3), 42);
  EXPECT_EQ(t.at(3, 1), 42);
  EXPECT_EQ(t.at(0, 4), 0);   // S_{a,n-1} reads as zero
  EXPECT_EQ(t.at(9, 9), 0);
  EXPECT_THROW(t.entry(3, 1), std::out_of_range);
  EXPECT_THROW(t.entry(0, 4), std::out_of_range);
  EXPECT_EQ(StarTriangle(1).entry_count(), 0u);
  EXPECT_EQ(StarTriangle(0).entry_count(), 0u);
}

TEST(StarTriangle, RowMajorOrder) {
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  StarTriangle(4).for_each([&](std::size_t a, std::size_t b, const ExactInt&) { seen.emplace_back(a, b); });
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 0}, {0, 1}, {0, 2},
                                                                  {1, 1}, {1, 2}, {2, 2}};
  EXPECT_EQ(seen, expected);
}

TEST(StarTriangle, MixedOrdersRejected) {
  EXPECT_THROW(StarTriangle(4) + StarTriangle(5), std::invalid_argument);
  const auto t = triangle(3, {1, 2, 3});
  EXPECT_EQ(t + t - t, t);
}

TEST(StarSequence, CompleteGraphK4) {
  EXPECT_EQ(star_sequence(k4), triangle(4, {6, 24, 12, 24, 24, 6}));
}

TEST(StarSequence, PathP3) {
  ASSERT_EQ(oracle::star_count_enumerate(p3, 0, 0), 2);
  ASSERT_EQ(oracle::star_count_enumerate(p3, 0, 1), 2);
  ASSERT_EQ(oracle::star_count_enumerate(p3, 1, 1), 0);
  EXPECT_EQ(star_sequence(p3), triangle(3, {2, 2, 0}));
}

TEST(StarSequence, EdgelessIsZero) {
  EXPECT_TRUE(star_sequence(Graph(5, {})).is_zero());
  EXPECT_EQ(star_sequence(Graph(5, {})).order(), 5u);
}

TEST(StarSequence, FirstEntryIsEdgeCount) {
  for (const auto& g : testing::random_corpus(8, 200, 5)) EXPECT_EQ(star_sequence(g).at(0, 0), g.size());
}

TEST(StarSequence, MatchesEnumerationOracle) {
  for (const auto& g : testing::random_corpus(7, 150, 23)) {
    const auto s = star_sequence(g);
    for (std::size_t a = 0; a < s.side(); ++a)
      for (std::size_t b = a; b < s.side(); ++b)
        ASSERT_EQ(s.at(a, b), oracle::star_count_enumerate(g, a, b)) << encode_graph6(g);
  }
}

TEST(FrequencySequence, Examples) {
  EXPECT_EQ(frequency_sequence(k4), triangle(4, {0, 0, 0, 0, 0, 6}));
  EXPECT_EQ(frequency_sequence(p3), triangle(3, {0, 2, 0}));
}

TEST(FrequencySequence, TwinHubGraph) {
  // degrees n-1, n-1, 2, ..., 2: the hub edge sits at (n-2, n-2) and the
  // 2(n-2) hub-to-middle edges have degree pair (2, n-1), i.e. index (1, n-2)
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto g = testing::twin_hub_graph(n);
    const auto f = frequency_sequence(g);
    EXPECT_EQ(f.at(n - 2, n - 2), 1);
    EXPECT_EQ(f.at(1, n - 2), 2 * (n - 2));
    EXPECT_EQ(f.at(0, n - 2), 0);
    EXPECT_EQ(handshake_sum(f), g.size());
    EXPECT_EQ(star_sequence(g).at(n - 2, n - 2), 1);
  }
}

TEST(Inversion, K4BothDirections) {
  const auto s = star_sequence(k4);
  const auto f = frequency_sequence(k4);
  EXPECT_EQ(star_from_frequency(f), s);
  EXPECT_EQ(frequency_from_star(s), f);
}

TEST(Inversion, ZeroAndP3) {
  EXPECT_TRUE(star_from_frequency(StarTriangle(6)).is_zero());
  EXPECT_TRUE(frequency_from_star(StarTriangle(6)).is_zero());
  EXPECT_EQ(star_from_frequency(triangle(3, {0, 2, 0})), triangle(3, {2, 2, 0}));
}

TEST(Inversion, GraphCorpus) {
  auto corpus = testing::random_corpus(8, 300, 41);
  for (const auto& g : testing::family_corpus(8)) corpus.push_back(g);
  for (const auto& g : corpus) {
    const auto s = star_sequence(g);
    const auto f = frequency_sequence(g);
    ASSERT_EQ(star_from_frequency(f), s) << encode_graph6(g);
    ASSERT_EQ(frequency_from_star(s), f) << encode_graph6(g);
  }
}

TEST(Inversion, ArbitraryTrianglesRoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = testing::random_triangle(rng() % 7, 5, rng);
    EXPECT_EQ(frequency_from_star(star_from_frequency(t)), t);
    EXPECT_EQ(star_from_frequency(frequency_from_star(t)), t);
  }
}

TEST(Inversion, NonRealizableTriangleMayGoNegative) {
  // S_{0,1} = 1 alone is not graph-realizable; its preimage has negative entries
  const auto f = frequency_from_star(triangle(3, {0, 1, 0}));
  bool negative = false;
  f.for_each([&](std::size_t, std::size_t, const ExactInt& v) { negative = negative || v < 0; });
  EXPECT_TRUE(negative);
}

TEST(Handshake, Examples) {
  EXPECT_EQ(handshake_sum(frequency_sequence(k4)), 6);
  EXPECT_EQ(handshake_sum(frequency_sequence(p3)), 2);
  EXPECT_EQ(handshake_sum(StarTriangle(5)), 0);
}

TEST(InverseDegree, Examples) {
  EXPECT_EQ(inverse_degree_sum(frequency_sequence(k4)), 4);
  EXPECT_EQ(inverse_degree_sum(frequency_sequence(p3)), 3);
  EXPECT_EQ(inverse_degree_sum(frequency_sequence(parse_edge_list("n 3\n0 1\n"))), 2);
}

TEST(InverseDegree, EqualsNonIsolatedVertexCount) {
  auto corpus = testing::random_corpus(8, 300, 8);
  for (const auto& g : testing::isolated_vertex_corpus()) corpus.push_back(g);
  for (const auto& g : corpus) {
    const auto f = frequency_sequence(g);
    EXPECT_EQ(inverse_degree_sum(f), ExactRational(g.order() - isolated_count(g)));
    EXPECT_EQ(handshake_sum(f), g.size());
  }
}

}  // namespace
}  // namespace dstar
