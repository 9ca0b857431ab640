#pragma once

// Text serializations for triangles and generating functions. Exact integers
// always travel as decimal strings.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dstar/exactnum.hpp"
#include "dstar/starseq.hpp"
#include "dstar/zagreb.hpp"

namespace dstar::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline ExactInt parse_exact(const json& j) {
  if (!j.is_string()) throw FormatError("exact integers must be decimal strings");
  const auto& s = j.get_ref<const std::string&>();
  const std::size_t digits_from = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == digits_from) throw FormatError("empty decimal string");
  for (std::size_t i = digits_from; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw FormatError("not a decimal integer: " + s);
  return ExactInt(s);
}

// ---------------------------------------------------------------------------
// Triangles: { "n": int, "entries": [[a, b, "value"], ...] }

inline json triangle_to_json(const StarTriangle& t) {
  json entries = json::array();
  t.for_each([&](std::size_t a, std::size_t b, const ExactInt& v) {
    entries.push_back(json::array({a, b, v.str()}));
  });
  return json{{"n", t.order()}, {"entries", std::move(entries)}};
}

/// Entries not listed are zero; listing an entry twice is an error.
inline StarTriangle triangle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw FormatError("triangle JSON needs 'n' and 'entries'");
  if (!j["n"].is_number_unsigned()) throw FormatError("'n' must be a non-negative integer");
  StarTriangle t(j["n"].get<std::size_t>());
  std::vector<bool> seen(t.entry_count(), false);
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw FormatError("each entry must be [a, b, \"value\"]");
    const auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
    if (a > b || b >= t.side()) throw FormatError("entry index outside the triangle");
    const std::size_t flat = a * t.side() - (a == 0 ? 0 : a * (a - 1) / 2) + (b - a);
    if (seen[flat]) throw FormatError("duplicate triangle entry");
    seen[flat] = true;
    t.entry(a, b) = parse_exact(e[2]);
  }
  return t;
}

inline std::string triangle_to_csv(const StarTriangle& t) {
  std::string out = "a,b,value\n";
  t.for_each([&](std::size_t a, std::size_t b, const ExactInt& v) {
    out += std::to_string(a) + "," + std::to_string(b) + "," + v.str() + "\n";
  });
  return out;
}

/// One row per a, laid out like the usual triangle display.
inline std::string triangle_to_plain(const StarTriangle& t, std::string_view symbol) {
  std::string out;
  for (std::size_t a = 0; a < t.side(); ++a) {
    for (std::size_t b = a; b < t.side(); ++b) {
      if (b > a) out += ", ";
      out += std::string(symbol) + "[" + std::to_string(a) + "," + std::to_string(b) +
             "]=" + t.at(a, b).str();
    }
    out += "\n";
  }
  return out;
}

inline std::string triangle_to_latex(const StarTriangle& t, std::string_view symbol) {
  std::string out = "\\begin{array}{l}\n";
  for (std::size_t a = 0; a < t.side(); ++a) {
    out += "  ";
    for (std::size_t b = a; b < t.side(); ++b) {
      if (b > a) out += ",\\ ";
      out += std::string(symbol) + "_{" + std::to_string(a) + "," + std::to_string(b) +
             "}=" + t.at(a, b).str();
    }
    out += a + 1 < t.side() ? " \\\\\n" : "\n";
  }
  out += "\\end{array}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Generating functions: { "numerator": ["..."], "denominator_roots": [c, ...] }

inline json gf_to_json(const RationalGF& gf) {
  json numerator = json::array();
  for (const auto& c : gf.numerator) numerator.push_back(c.str());
  return json{{"numerator", std::move(numerator)},
              {"denominator_roots", gf.denominator_roots.values()}};
}

inline RationalGF gf_from_json(const json& j) {
  if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator_roots"))
    throw FormatError("generating function JSON needs 'numerator' and 'denominator_roots'");
  RationalGF gf;
  for (const auto& c : j["numerator"]) gf.numerator.push_back(parse_exact(c));
  std::vector<NatSet::value_type> roots;
  for (const auto& c : j["denominator_roots"]) {
    if (!c.is_number_unsigned()) throw FormatError("denominator roots must be naturals");
    roots.push_back(c.get<NatSet::value_type>());
  }
  gf.denominator_roots = NatSet(std::move(roots));
  if (gf.denominator_roots.size() != j["denominator_roots"].size())
    throw FormatError("denominator roots must be distinct");
  return gf;
}

/// e.g. "1 - 3 t + 2 t^2"; "0" for the zero polynomial.
inline std::string polynomial_to_string(std::span<const ExactInt> coeffs, std::string_view var,
                                        bool latex = false) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const ExactInt& c = coeffs[i];
    if (c == 0) continue;
    const ExactInt magnitude = c < 0 ? ExactInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1 && i > 0;
    if (!unit) out += magnitude.str();
    if (i > 0) {
      if (!unit) out += latex ? "\\," : " ";
      out += var;
      if (i > 1) out += latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string gf_denominator_factors(const RationalGF& gf, bool latex) {
  std::string out;
  for (auto c : gf.denominator_roots) {
    if (c == 0) continue;
    const std::string ct = c == 1 ? "t" : std::to_string(c) + (latex ? "\\,t" : " t");
    out += "(1 - " + ct + ")";
  }
  return out.empty() ? "1" : out;
}

inline std::string gf_to_plain(const RationalGF& gf) {
  return "(" + polynomial_to_string(gf.numerator, "t") + ") / " +
         gf_denominator_factors(gf, false);
}

inline std::string gf_to_latex(const RationalGF& gf) {
  return "\\mathcal{G}(M_2,t)=\\frac{" + polynomial_to_string(gf.numerator, "t", true) + "}{" +
         gf_denominator_factors(gf, true) + "}";
}

}  // namespace dstar::io
