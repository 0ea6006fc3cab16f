#pragma once

// JSON and CSV encodings. Exact values are always strings ("num/den", or a bare
// integer); floats are written with 17 significant digits.

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuegenus/exact.hpp"
#include "cuegenus/numerics.hpp"
#include "cuegenus/pseries.hpp"
#include "cuegenus/quasimod.hpp"

namespace cuegenus {

using json = nlohmann::json;

inline constexpr const char* kSeriesSchema = "cuegenus.qseries/1";
inline constexpr const char* kTableSchema = "cuegenus.genus_table/1";
inline constexpr const char* kPolySchema = "cuegenus.quasimodular/1";

/// Shortest text that round-trips through strtod at 17 significant digits.
inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
  return std::string(buf, end);
}

inline json rational_array(const std::vector<Rational>& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

inline std::vector<Rational> parse_rational_array(const json& a) {
  if (!a.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : a) {
    if (!v.is_string()) throw std::invalid_argument("rationals must be encoded as strings");
    out.push_back(parse_rational(v.get<std::string>()));
  }
  return out;
}

inline json to_json(const QSeries& s) {
  return json{{"schema", kSeriesSchema},
              {"D", s.order()},
              {"convention", "plain"},
              {"coeffs", rational_array(s.coefficients())}};
}

inline QSeries qseries_from_json(const json& j) {
  if (j.value("schema", "") != kSeriesSchema) throw std::invalid_argument("not a QSeries document");
  if (j.at("convention").get<std::string>() != "plain") {
    throw std::invalid_argument("QSeries documents store plain coefficients");
  }
  QSeries s(parse_rational_array(j.at("coeffs")));
  if (s.order() != j.at("D").get<int>()) throw std::invalid_argument("QSeries length disagrees with D");
  return s;
}

/// entries[d] lists T[d][1..G].
inline json to_json(const GenusTable& t) {
  json rows = json::array();
  for (int d = 0; d <= t.max_degree(); ++d) {
    std::vector<Rational> r;
    for (int g = 1; g <= t.max_genus(); ++g) r.push_back(t.at(d, g));
    rows.push_back(rational_array(r));
  }
  return json{{"schema", kTableSchema},
              {"D", t.max_degree()},
              {"G", t.max_genus()},
              {"convention", to_string(t.convention())},
              {"entries", std::move(rows)}};
}

inline GenusTable genus_table_from_json(const json& j) {
  if (j.value("schema", "") != kTableSchema) throw std::invalid_argument("not a GenusTable document");
  const int D = j.at("D").get<int>();
  const int G = j.at("G").get<int>();
  GenusTable t(D, G, convention_from_string(j.at("convention").get<std::string>()));
  const json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != D + 1) {
    throw std::invalid_argument("GenusTable entries disagree with D");
  }
  for (int d = 0; d <= D; ++d) {
    auto r = parse_rational_array(rows[static_cast<std::size_t>(d)]);
    if (static_cast<int>(r.size()) != G) throw std::invalid_argument("GenusTable row disagrees with G");
    for (int g = 1; g <= G; ++g) t.at(d, g) = r[static_cast<std::size_t>(g - 1)];
  }
  return t;
}

inline json to_json(const QuasimodularPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back(json{{"a", m.e2}, {"b", m.e4}, {"c", m.e6}, {"coeff", to_string(c)}});
  }
  return json{{"schema", kPolySchema}, {"max_weight", p.max_weight()}, {"terms", std::move(terms)}};
}

inline QuasimodularPoly quasimodular_from_json(const json& j) {
  if (j.value("schema", "") != kPolySchema) throw std::invalid_argument("not a quasimodular document");
  QuasimodularPoly p;
  for (const auto& t : j.at("terms")) {
    p.set({t.at("a").get<int>(), t.at("b").get<int>(), t.at("c").get<int>()},
          parse_rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

inline json to_json(const ConvergenceRow& r) {
  return json{{"N", r.N},
              {"q", format_double(r.q)},
              {"m", r.m},
              {"scaled_value", format_double(r.scaled_value)},
              {"tail_estimate", format_double(r.tail_estimate)},
              {"D", r.D},
              {"warning", r.warning}};
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_field(fields[i]);
  }
  os << "\r\n";
}

}  // namespace cuegenus
