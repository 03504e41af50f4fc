#pragma once

// JSON views of the toolkit's value types.  Rationals are ["num","den"]
// decimal-string pairs; integer matrices are arrays of row arrays.

#include <string>
#include <vector>

#include <json.hpp>

#include "gjt/classify3.hpp"
#include "gjt/jordan.hpp"
#include "gjt/matrix.hpp"
#include "gjt/sequences.hpp"

namespace gjt {

using nlohmann::json;

inline json rational_to_json(const Rational& q) {
  return json::array({q.get_num().get_str(), q.get_den().get_str()});
}

inline Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw std::invalid_argument("rational: expected [\"num\",\"den\"]");
  Rational q(Integer(j[0].get<std::string>()), Integer(j[1].get<std::string>()));
  if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
  q.canonicalize();
  return q;
}

inline json to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) entries.push_back(rational_to_json(m.at(r, c)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline RationalMatrix rational_matrix_from_json(const json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix: entry count does not match shape");
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = rational_from_json(entries[static_cast<std::size_t>(r) *
                                                  static_cast<std::size_t>(cols) +
                                              static_cast<std::size_t>(c)]);
  return m;
}

inline json to_json(const TriangularIntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline TriangularIntMatrix triangular_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected array of rows");
  const int n = static_cast<int>(j.size());
  TriangularIntMatrix m(n);
  for (int r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix: rows must all have the matrix size");
    for (int c = 0; c < n; ++c) m.at(r, c) = row[static_cast<std::size_t>(c)].get<int>();
  }
  if (!m.is_upper_triangular())
    throw std::invalid_argument("matrix: entries below the diagonal must be zero");
  return m;
}

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const JordanDegreeType& s) {
  json out = json::array();
  for (const auto& [part, degree] : s.entries)
    out.push_back(json{{"part", part}, {"degree", degree}});
  return out;
}

inline json to_json(const ConditionReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back(json{{"condition", v.condition},
                              {"index", v.index},
                              {"position", v.position},
                              {"detail", v.detail}});
  return json{{"passed", report.passed},
              {"violations", violations},
              {"warnings", report.warnings}};
}

inline json to_json(const ParamTriple& p) {
  return json{{"d", p.d}, {"r", p.r}, {"s", p.s}, {"t", p.t}, {"clause", clause_name(p.clause)}};
}

inline json to_json(const ClassifiedProfile& profile) {
  return json{{"variant", variant_name(profile.variant)},
              {"h_a", profile.h_a},
              {"h_a1", profile.h_a1},
              {"h_a2", profile.h_a2}};
}

inline json to_json(const ParamPair& p) {
  return json{{"d", p.d}, {"r", p.r}, {"s", p.s}, {"boundary", p.boundary}};
}

inline json to_json(const TwoLineProfile& profile) {
  return json{{"h_a", profile.h_a}, {"h_a1", profile.h_a1}};
}

}  // namespace gjt
