#pragma once

// Command-line front end. run() never calls exit(), so the tests can drive it
// in-process with string streams.
//
//   dstar [GRAPH | --family KIND:PARAMS | --random n=K count=C seed=S]
//         [--format auto|edgelist|graph6] [-o json|csv|latex|plain]
//         info | triangles | zagreb | gf | verify

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dstar/dstar.hpp"
#include "dstar/oracle.hpp"
#include "dstar/verify.hpp"

namespace dstar::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv, latex, plain };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "latex") return OutputFormat::latex;
  if (s == "plain") return OutputFormat::plain;
  throw UsageError("unknown output format '" + s + "'");
}

// ---------------------------------------------------------------------------
// Graph sources

inline std::size_t parse_count(const std::string& s, const std::string& what) {
  std::size_t value = 0;
  if (!dstar::detail::parse_natural(s, value)) throw UsageError("bad " + what + ": '" + s + "'");
  return value;
}

/// KIND:PARAMS with KIND in complete, path, cycle, star, double-star.
inline Graph parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("family must look like KIND:PARAMS");
  const std::string kind = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);
  try {
    if (kind == "complete") return make_family(Family::complete, parse_count(params, "n"));
    if (kind == "path") return make_family(Family::path, parse_count(params, "n"));
    if (kind == "cycle") return make_family(Family::cycle, parse_count(params, "n"));
    if (kind == "star") return make_family(Family::star, parse_count(params, "leaf count"));
    if (kind == "double-star" || kind == "double_star") {
      const auto comma = params.find(',');
      if (comma == std::string::npos) throw UsageError("double-star needs A,B");
      return make_family(Family::double_star, parse_count(params.substr(0, comma), "a"),
                         parse_count(params.substr(comma + 1), "b"));
    }
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + kind + "'");
}

struct RandomSpec {
  std::size_t n = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
};

inline RandomSpec parse_random(const std::vector<std::string>& tokens) {
  RandomSpec spec;
  bool have_n = false;
  for (const auto& t : tokens) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError("random spec tokens look like key=value");
    const auto key = t.substr(0, eq);
    const auto value = parse_count(t.substr(eq + 1), key);
    if (key == "n") {
      spec.n = value;
      have_n = true;
    } else if (key == "count") {
      spec.count = value;
    } else if (key == "seed") {
      spec.seed = value;
    } else {
      throw UsageError("unknown random spec key '" + key + "'");
    }
  }
  if (!have_n) throw UsageError("random spec needs n=K");
  return spec;
}

/// `format` is auto, edgelist or graph6. Auto picks the edge-list reader when
/// the first meaningful line starts with the `n` header.
inline Graph parse_graph_text(const std::string& text, const std::string& format) {
  std::string chosen = format;
  if (chosen == "auto") {
    chosen = "graph6";
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      auto body = dstar::detail::trim(std::string_view(line).substr(0, line.find('#')));
      if (body.empty()) continue;
      if (body.size() >= 2 && body[0] == 'n' && (body[1] == ' ' || body[1] == '\t'))
        chosen = "edgelist";
      break;
    }
  }
  if (chosen == "edgelist") return parse_edge_list(text);
  if (chosen == "graph6") {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      auto body = dstar::detail::trim(line);
      if (!body.empty()) return parse_graph6(body);
    }
    return parse_graph6("");
  }
  throw UsageError("unknown input format '" + format + "'");
}

// ---------------------------------------------------------------------------
// Subcommands

struct Context {
  std::ostream& out;
  std::ostream& err;
  OutputFormat format = OutputFormat::json;
  bool color = false;
};

inline void require_format(const Context& ctx, std::initializer_list<OutputFormat> allowed,
                           const char* command) {
  for (auto f : allowed)
    if (f == ctx.format) return;
  throw UsageError(std::string("output format not available for '") + command + "'");
}

inline int cmd_info(const Graph& g, Context& ctx) {
  require_format(ctx, {OutputFormat::json, OutputFormat::plain}, "info");
  const auto d = degrees(g);
  if (ctx.format == OutputFormat::json) {
    nlohmann::json j{{"n", g.order()},
                     {"m", g.size()},
                     {"degrees", d},
                     {"isolated", isolated_count(g)},
                     {"graph6", encode_graph6(g)}};
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "n = " << g.order() << "\nm = " << g.size() << "\ndegrees =";
    for (auto x : d) ctx.out << " " << x;
    ctx.out << "\nisolated = " << isolated_count(g) << "\ngraph6 = " << encode_graph6(g) << "\n";
  }
  return ok;
}

inline int cmd_triangles(const Graph& g, const std::string& which, Context& ctx) {
  if (which != "star" && which != "freq" && which != "both")
    throw UsageError("--which must be star, freq or both");
  const auto star = star_sequence(g);
  const auto freq = frequency_sequence(g);
  const bool want_star = which != "freq", want_freq = which != "star";
  const bool round_trip =
      which != "both" || (star_from_frequency(freq) == star && frequency_from_star(star) == freq);

  switch (ctx.format) {
    case OutputFormat::json: {
      nlohmann::json j;
      if (which == "star") j = io::triangle_to_json(star);
      else if (which == "freq") j = io::triangle_to_json(freq);
      else
        j = {{"star", io::triangle_to_json(star)},
             {"frequency", io::triangle_to_json(freq)},
             {"round_trip", round_trip}};
      ctx.out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      if (which != "both") {
        ctx.out << io::triangle_to_csv(want_star ? star : freq);
      } else {
        ctx.out << "triangle,a,b,value\n";
        auto rows = [&](const StarTriangle& t, const char* name) {
          t.for_each([&](std::size_t a, std::size_t b, const ExactInt& v) {
            ctx.out << name << "," << a << "," << b << "," << v.str() << "\n";
          });
        };
        rows(star, "star");
        rows(freq, "frequency");
      }
      break;
    case OutputFormat::latex:
      if (want_star) ctx.out << io::triangle_to_latex(star, "S");
      if (want_freq) ctx.out << io::triangle_to_latex(freq, "f");
      break;
    case OutputFormat::plain:
      if (want_star) ctx.out << io::triangle_to_plain(star, "S");
      if (want_freq) ctx.out << io::triangle_to_plain(freq, "f");
      if (which == "both") ctx.out << "round trip: " << (round_trip ? "ok" : "FAILED") << "\n";
      break;
  }
  return round_trip ? ok : verification_failed;
}

/// "3", "0..3" and "0,2,5" forms, possibly repeated.
inline std::vector<std::size_t> expand_p_list(const std::vector<std::string>& items) {
  std::vector<std::size_t> ps;
  for (const auto& item : items) {
    std::stringstream parts(item);
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (auto dots = part.find(".."); dots != std::string::npos) {
        const auto lo = parse_count(part.substr(0, dots), "p");
        const auto hi = parse_count(part.substr(dots + 2), "p");
        if (lo > hi) throw UsageError("empty p range '" + part + "'");
        for (auto p = lo; p <= hi; ++p) ps.push_back(p);
      } else {
        ps.push_back(parse_count(part, "p"));
      }
    }
  }
  if (ps.empty()) throw UsageError("no p values given");
  return ps;
}

inline int cmd_zagreb(const Graph& g, const std::vector<std::string>& p_items, bool cross_check,
                      Context& ctx) {
  require_format(ctx, {OutputFormat::json, OutputFormat::csv, OutputFormat::plain}, "zagreb");
  const auto ps = expand_p_list(p_items);
  const auto star = cross_check ? star_sequence(g) : StarTriangle{};
  const auto freq = cross_check ? frequency_sequence(g) : StarTriangle{};

  bool agree = true;
  nlohmann::json rows = nlohmann::json::array();
  if (ctx.format == OutputFormat::csv) ctx.out << (cross_check ? "p,direct,frequency,star\n" : "p,value\n");
  for (auto p : ps) {
    const auto direct = m2_direct(g, p);
    ExactInt via_f, via_s;
    if (cross_check) {
      via_f = m2_from_frequency(freq, p);
      via_s = m2_from_star(star, p);
      agree = agree && via_f == direct && via_s == direct;
    }
    switch (ctx.format) {
      case OutputFormat::json:
        if (cross_check)
          rows.push_back({{"p", p},
                          {"direct", direct.str()},
                          {"frequency", via_f.str()},
                          {"star", via_s.str()},
                          {"agree", via_f == direct && via_s == direct}});
        else
          rows.push_back({{"p", p}, {"value", direct.str()}});
        break;
      case OutputFormat::csv:
        ctx.out << p << "," << direct.str();
        if (cross_check) ctx.out << "," << via_f.str() << "," << via_s.str();
        ctx.out << "\n";
        break;
      default:
        ctx.out << "M2^(" << p << ") = " << direct.str();
        if (cross_check)
          ctx.out << (via_f == direct && via_s == direct ? "  [routes agree]"
                                                           : "  [ROUTES DISAGREE: frequency " +
                                                                 via_f.str() + ", star " +
                                                                 via_s.str() + "]");
        ctx.out << "\n";
    }
  }
  if (ctx.format == OutputFormat::json) ctx.out << nlohmann::json{{"values", rows}}.dump(2) << "\n";
  if (!agree) ctx.err << "error: Zagreb routes disagree\n";
  return agree ? ok : verification_failed;
}

inline int cmd_gf(const Graph& g, std::size_t terms, Context& ctx) {
  if (g.order() == 0) throw UsageError("generating function needs a graph with n >= 1");
  const auto gf = generating_function(g);
  std::vector<ExactInt> series, direct;
  bool matches = true;
  if (terms > 0) {
    series = oracle::series_divide(gf.numerator, gf.denominator(), terms);
    direct = m2_sequence(g, terms);
    matches = series == direct;
  }
  auto strings = [](const std::vector<ExactInt>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.str());
    return s;
  };
  switch (ctx.format) {
    case OutputFormat::json: {
      auto j = io::gf_to_json(gf);
      if (terms > 0) {
        j["series"] = strings(series);
        j["series_matches_direct"] = matches;
      }
      ctx.out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      ctx.out << "power,numerator\n";
      for (std::size_t k = 0; k < gf.numerator.size(); ++k)
        ctx.out << k << "," << gf.numerator[k].str() << "\n";
      break;
    case OutputFormat::latex:
      ctx.out << io::gf_to_latex(gf) << "\n";
      break;
    case OutputFormat::plain:
      ctx.out << io::gf_to_plain(gf) << "\n";
      break;
  }
  if (terms > 0 && ctx.format != OutputFormat::json) {
    ctx.out << (ctx.format == OutputFormat::csv ? "# series:" : "series:");
    for (std::size_t k = 0; k < series.size(); ++k) ctx.out << (k ? ", " : " ") << series[k].str();
    ctx.out << (matches ? "" : "  [MISMATCH]") << "\n";
  }
  return matches ? ok : verification_failed;
}

inline int cmd_verify(const std::vector<Graph>& graphs, const verify::Options& options,
                      bool parallel, Context& ctx) {
  require_format(ctx, {OutputFormat::json, OutputFormat::csv, OutputFormat::plain}, "verify");
  std::vector<verify::GraphReport> reports;
  reports.reserve(graphs.size());
  if (parallel) {
    std::vector<std::future<verify::GraphReport>> pending;
    for (const auto& g : graphs)
      pending.push_back(std::async(std::launch::async,
                                   [&g, &options] { return verify::check_graph(g, options); }));
    for (auto& f : pending) reports.push_back(f.get());
  } else {
    for (const auto& g : graphs) reports.push_back(verify::check_graph(g, options));
  }

  const auto tallies = verify::tally(reports);
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();

  switch (ctx.format) {
    case OutputFormat::json: {
      nlohmann::json checks = nlohmann::json::object();
      for (const auto& [name, t] : tallies)
        checks[name] = {{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
      nlohmann::json failures = nlohmann::json::array();
      for (const auto& r : reports)
        for (const auto& c : r.checks)
          if (!c.passed)
            failures.push_back({{"graph6", r.graph6}, {"check", c.name}, {"detail", c.detail}});
      nlohmann::json j{{"graphs", reports.size()},
                       {"p_max", options.p_max},
                       {"checks", checks},
                       {"failures", failures},
                       {"passed", all_passed}};
      ctx.out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      ctx.out << "check,passed,failed,skipped\n";
      for (const auto& [name, t] : tallies)
        ctx.out << name << "," << t.passed << "," << t.failed << "," << t.skipped << "\n";
      break;
    default: {
      const char* green = ctx.color ? "\033[32m" : "";
      const char* red = ctx.color ? "\033[31m" : "";
      const char* reset = ctx.color ? "\033[0m" : "";
      for (const auto& [name, t] : tallies) {
        ctx.out << (t.failed ? red : green) << (t.failed ? "FAIL" : "PASS") << reset << "  "
                << name << "  (" << t.passed << " passed, " << t.failed << " failed, "
                << t.skipped << " skipped)\n";
      }
      ctx.out << reports.size() << " graph(s), " << (all_passed ? "all checks passed" : "FAILURES")
              << "\n";
    }
  }
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (!c.passed) ctx.err << "failed " << c.name << " on graph6 " << r.graph6 << ": " << c.detail << "\n";
  return all_passed ? ok : verification_failed;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin, bool color = false) {
  CLI::App app{"Double-star sequences and general second Zagreb indices of simple graphs", "dstar"};
  app.require_subcommand(1);

  std::string graph_path, input_format = "auto", family, output = "json";
  std::vector<std::string> random_tokens;
  app.add_option("graph", graph_path, "Graph file (edge list or graph6), '-' for stdin");
  app.add_option("--format", input_format, "Input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  app.add_option("--family", family,
                 "Built-in graph: complete:N, path:N, cycle:N, star:K, double-star:A,B");
  app.add_option("--random", random_tokens, "Random graphs for verify: n=K [count=C] [seed=S]")
      ->expected(1, 3);
  app.add_option("-o,--output", output, "Output format: json, csv, latex, plain")
      ->check(CLI::IsMember({"json", "csv", "latex", "plain"}));

  auto* info = app.add_subcommand("info", "Order, size, degrees and isolated vertices");
  auto* triangles = app.add_subcommand("triangles", "Double-star and frequency triangles");
  std::string which = "star";
  triangles->add_option("--which", which, "star, freq or both")
      ->check(CLI::IsMember({"star", "freq", "both"}));
  auto* zagreb = app.add_subcommand("zagreb", "General second Zagreb indices");
  std::vector<std::string> p_items;
  bool cross_check = false;
  zagreb->add_option("-p", p_items, "Exponents: 3, 0..6 or 1,2,5")->required();
  zagreb->add_flag("--cross-check", cross_check, "Compare edge-sum, frequency and star routes");
  auto* gf = app.add_subcommand("gf", "Ordinary generating function of M2^(p)");
  std::size_t terms = 0;
  gf->add_option("--terms", terms, "Append this many series coefficients");
  auto* verify_cmd = app.add_subcommand("verify", "Run every identity check");
  verify::Options options;
  bool parallel = false;
  verify_cmd->add_option("--pmax", options.p_max, "Highest p for the three-route comparison");
  verify_cmd->add_flag("--inject-fault", options.inject_fault, "Corrupt S_{0,0} (harness self-test)");
  verify_cmd->add_flag("--parallel", parallel, "Check graphs concurrently");
  for (auto* sub : {info, triangles, zagreb, gf, verify_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    Context ctx{out, err, parse_output_format(output), color};
    const int sources =
        (graph_path.empty() ? 0 : 1) + (family.empty() ? 0 : 1) + (random_tokens.empty() ? 0 : 1);
    if (sources != 1) throw UsageError("give exactly one of GRAPH, --family or --random");

    std::vector<Graph> graphs;
    if (!random_tokens.empty()) {
      if (!verify_cmd->parsed()) throw UsageError("--random is only accepted by verify");
      const auto spec = parse_random(random_tokens);
      graphs = verify::random_graphs(spec.n, spec.count, spec.seed);
    } else if (!family.empty()) {
      graphs.push_back(parse_family(family));
    } else {
      std::string text;
      if (graph_path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
      } else {
        std::ifstream file(graph_path, std::ios::binary);
        if (!file) throw UsageError("cannot open '" + graph_path + "'");
        text.assign(std::istreambuf_iterator<char>(file), {});
      }
      graphs.push_back(parse_graph_text(text, input_format));
    }

    if (info->parsed()) return cmd_info(graphs.front(), ctx);
    if (triangles->parsed()) return cmd_triangles(graphs.front(), which, ctx);
    if (zagreb->parsed()) return cmd_zagreb(graphs.front(), p_items, cross_check, ctx);
    if (gf->parsed()) return cmd_gf(graphs.front(), terms, ctx);
    return cmd_verify(graphs, options, parallel, ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
}

/// Colored plain output only on a terminal, and never when NO_COLOR is set.
inline bool want_color() {
  const char* no_color = std::getenv("NO_COLOR");
  return (no_color == nullptr || *no_color == '\0') && isatty(STDOUT_FILENO);
}

}  // namespace dstar::cli
