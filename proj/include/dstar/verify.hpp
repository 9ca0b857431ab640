#pragma once

// Identity checks run against one graph at a time: the inverse pair, the
// edge-sum identities, three-route Zagreb agreement, the generating function
// and its recurrence, and enumeration against the binomial formula.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dstar/exactnum.hpp"
#include "dstar/graph.hpp"
#include "dstar/oracle.hpp"
#include "dstar/starseq.hpp"
#include "dstar/zagreb.hpp"

namespace dstar::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct GraphReport {
  std::string graph6;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
  }
};

struct Options {
  /// Highest p for the three-route comparison.
  std::size_t p_max = 6;
  /// Enumeration oracle runs only up to this order.
  std::size_t oracle_max_order = 7;
  /// Adds one to S_{0,0} (and to the star-route M2^(0)) before checking.
  bool inject_fault = false;
};

/// G(n, 1/2) with one raw bit of a 64-bit Mersenne twister per vertex pair,
/// so a seed reproduces the same graph on every platform.
inline Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (rng() >> 63) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::vector<Graph> random_graphs(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(n, rng));
  return out;
}

namespace detail {

inline CheckResult make(std::string name, bool passed, std::string detail = {}) {
  return CheckResult{std::move(name), passed, false, passed ? std::string{} : std::move(detail)};
}

inline CheckResult skipped(std::string name, std::string why) {
  return CheckResult{std::move(name), true, true, std::move(why)};
}

}  // namespace detail

inline GraphReport check_graph(const Graph& g, const Options& options = {}) {
  using detail::make;
  GraphReport report;
  report.graph6 = encode_graph6(g);
  auto& checks = report.checks;

  auto star = star_sequence(g);
  const auto freq = frequency_sequence(g);
  if (options.inject_fault && star.side() > 0) star.entry(0, 0) += 1;

  checks.push_back(make("inversion.forward", star_from_frequency(freq) == star,
                        "S computed from f differs from S computed from degrees"));
  checks.push_back(make("inversion.inverse", frequency_from_star(star) == freq,
                        "f recovered from S differs from f computed from degrees"));
  {
    const auto total = handshake_sum(freq);
    const bool ok = total == g.size() && star.at(0, 0) == g.size();
    checks.push_back(make("handshake", ok,
                          "sum f = " + total.str() + ", S00 = " + star.at(0, 0).str() +
                              ", m = " + std::to_string(g.size())));
  }
  {
    const auto sum = inverse_degree_sum(freq);
    const ExactRational expected = ExactInt(g.order() - isolated_count(g));
    checks.push_back(make("inverse_degree", sum == expected,
                          "got " + sum.str() + ", expected " + expected.str()));
  }
  {
    std::string detail;
    for (std::size_t p = 0; p <= options.p_max && detail.empty(); ++p) {
      const auto direct = m2_direct(g, p);
      const auto via_f = m2_from_frequency(freq, p);
      auto via_s = m2_from_star(star, p);
      if (options.inject_fault && p == 0 && star.side() == 0) via_s += 1;
      if (direct != via_f || direct != via_s)
        detail = "p=" + std::to_string(p) + ": direct " + direct.str() + ", frequency " +
                 via_f.str() + ", star " + via_s.str();
    }
    checks.push_back(make("zagreb.three_routes", detail.empty(), detail));
  }

  if (g.order() == 0) {
    for (const char* name : {"gf.numerator_vanishing", "gf.series_match", "recurrence.instance",
                             "recurrence.shifted"})
      checks.push_back(detail::skipped(name, "needs n >= 1"));
  } else {
    const auto gf = generating_function(g);
    const std::size_t order = gf.denominator_roots.size();
    const std::size_t horizon = std::max(2 * order, options.p_max);
    const auto values = m2_sequence(g, horizon + 1);

    const auto conv = convolution_coefficients(gf.denominator(), values);
    std::string tail_detail;
    for (std::size_t p = order; p < conv.size() && tail_detail.empty(); ++p)
      if (conv[p] != 0) tail_detail = "a_" + std::to_string(p) + " = " + conv[p].str();
    checks.push_back(make("gf.numerator_vanishing", tail_detail.empty(), tail_detail));

    const auto series = oracle::series_divide(gf.numerator, gf.denominator(), values.size());
    std::string series_detail;
    for (std::size_t p = 0; p < values.size() && series_detail.empty(); ++p)
      if (series[p] != values[p])
        series_detail = "p=" + std::to_string(p) + ": series " + series[p].str() + ", direct " +
                        values[p].str();
    checks.push_back(make("gf.series_match", series_detail.empty(), series_detail));

    const auto rec = recurrence_check(g.order(), values);
    checks.push_back(make("recurrence.instance", rec.instance_holds(),
                          "M2^(" + std::to_string(rec.order) + ") = " + rec.instance_lhs.str() +
                              ", rhs = " + rec.instance_rhs.str()));
    checks.push_back(make("recurrence.shifted", rec.violations.empty(),
                          rec.violations.empty()
                              ? std::string{}
                              : "p=" + std::to_string(rec.violations.front().p) +
                                    ": residual " + rec.violations.front().residual.str()));
  }

  if (g.order() <= options.oracle_max_order) {
    std::string detail;
    for (std::size_t a = 0; a < star.side() && detail.empty(); ++a)
      for (std::size_t b = a; b < star.side() && detail.empty(); ++b) {
        const auto counted = oracle::star_count_enumerate(g, a, b);
        if (counted != star.at(a, b))
          detail = "S" + std::to_string(a) + "," + std::to_string(b) + ": formula " +
                   star.at(a, b).str() + ", enumerated " + counted.str();
      }
    checks.push_back(make("oracle.star_enumeration", detail.empty(), detail));
  } else {
    checks.push_back(detail::skipped("oracle.star_enumeration",
                                     "n > " + std::to_string(options.oracle_max_order)));
  }

  std::sort(checks.begin(), checks.end(),
            [](const CheckResult& x, const CheckResult& y) { return x.name < y.name; });
  return report;
}

/// Per-check pass/fail/skip tallies across many graph reports, keyed by name.
struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

inline std::map<std::string, Tally> tally(const std::vector<GraphReport>& reports) {
  std::map<std::string, Tally> out;
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      auto& t = out[c.name];
      if (c.skipped) ++t.skipped;
      else if (c.passed) ++t.passed;
      else ++t.failed;
    }
  return out;
}

}  // namespace dstar::verify
