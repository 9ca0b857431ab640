#include <gtest/gtest.h>

#include <random>

#include "dstar/io.hpp"
#include "support/corpus.hpp"

namespace dstar::io {
namespace {

const Graph k4 = make_family(Family::complete, 4);

TEST(TriangleJson, Layout) {
  const auto j = triangle_to_json(star_sequence(k4));
  EXPECT_EQ(j["n"], 4);
  ASSERT_EQ(j["entries"].size(), 6u);
  EXPECT_EQ(j["entries"][1], json::array({0, 1, "24"}));
  EXPECT_EQ(j["entries"][5], json::array({2, 2, "6"}));
}

TEST(TriangleJson, RoundTripKeepsHugeValues) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = testing::random_triangle(rng() % 8, 9, rng);
    if (t.side() > 0) t.entry(0, t.side() - 1) = -ExactInt("123456789012345678901234567890");
    EXPECT_EQ(triangle_from_json(json::parse(triangle_to_json(t).dump())), t);
  }
}

TEST(TriangleJson, MissingEntriesAreZero) {
  const auto t = triangle_from_json(json::parse(R"({"n": 4, "entries": [[2, 2, "6"]]})"));
  EXPECT_EQ(t, frequency_sequence(k4));
}

TEST(TriangleJson, RejectsBadDocuments) {
  for (const char* doc : {R"({"entries": []})", R"({"n": 4, "entries": [[2, 1, "6"]]})",
                          R"({"n": 4, "entries": [[0, 3, "6"]]})",
                          R"({"n": 4, "entries": [[0, 0, 6]]})",
                          R"({"n": 4, "entries": [[0, 0, "6x"]]})",
                          R"({"n": 4, "entries": [[0, 0, "1"], [0, 0, "2"]]})"})
    EXPECT_THROW(triangle_from_json(json::parse(doc)), FormatError) << doc;
}

TEST(TriangleCsv, K4) {
  EXPECT_EQ(triangle_to_csv(star_sequence(k4)), "a,b,value\n0,0,6\n0,1,24\n0,2,12\n1,1,24\n1,2,24\n2,2,6\n");
}

TEST(TriangleLatex, K4Frequency) {
  EXPECT_EQ(triangle_to_latex(frequency_sequence(k4), "f"),
            "\\begin{array}{l}\n"
            "  f_{0,0}=0,\\ f_{0,1}=0,\\ f_{0,2}=0 \\\\\n"
            "  f_{1,1}=0,\\ f_{1,2}=0 \\\\\n"
            "  f_{2,2}=6\n"
            "\\end{array}\n");
}

TEST(GfJson, RoundTrip) {
  const auto gf = generating_function(k4);
  const auto j = gf_to_json(gf);
  EXPECT_EQ(j["denominator_roots"], json::array({0, 1, 2, 3, 4, 6, 9}));
  EXPECT_EQ(j["numerator"][0], "6");
  EXPECT_EQ(gf_from_json(json::parse(j.dump())), gf);
  EXPECT_THROW(gf_from_json(json::parse(R"({"numerator": ["1"], "denominator_roots": [1, 1]})")),
               FormatError);
}

TEST(GfText, K2) {
  const auto gf = generating_function(make_family(Family::complete, 2));
  EXPECT_EQ(gf_to_plain(gf), "(1) / (1 - t)");
  EXPECT_EQ(gf_to_latex(gf), "\\mathcal{G}(M_2,t)=\\frac{1}{(1 - t)}");
}

TEST(PolynomialText, SignsAndUnits) {
  const Coefficients c{ExactInt{-2}, ExactInt{1}, ExactInt{0}, ExactInt{-1}, ExactInt{12}};
  EXPECT_EQ(polynomial_to_string(c, "t"), "-2 + t - t^3 + 12 t^4");
  EXPECT_EQ(polynomial_to_string(Coefficients{}, "t"), "0");
}

}  // namespace
}  // namespace dstar::io
