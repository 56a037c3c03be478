#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "dsv/cells.hpp"
#include "dsv/presentations.hpp"
#include "dsv/symfunc.hpp"
#include "dsv/verify.hpp"

namespace dsv {
namespace jsonio {

using nlohmann::json;

// The empty partition is spelled "0" so every key survives Partition::parse.
inline std::string partition_key(const Partition& mu) {
  return mu.empty() ? "0" : mu.to_string();
}

inline json spec_json(const RingSpec& spec) {
  return json{{"n", spec.n}, {"lambda", partition_key(spec.lambda)}, {"s", spec.s}};
}

// Ordered [degree, coefficient] pairs; degrees double under the cohomological
// convention (the default everywhere outside the library internals).
inline json series_json(const QPolynomial& h, bool cohomological = true) {
  json out = json::array();
  for (int d = 0; d <= h.top_degree(); ++d) {
    long long c = h.coeff(d);
    if (c == 0) continue;
    out.push_back(json::array({cohomological ? 2 * d : d, c}));
  }
  return out;
}

inline json symmetric_function_json(const SymmetricFunction& f) {
  json out = json::object();
  for (const auto& [mu, c] : f.terms()) out[partition_key(mu)] = c;
  return out;
}

inline json graded_frobenius_json(const GradedSymmetricFunction& frob, bool cohomological = true) {
  json out = json::object();
  for (const auto& [d, f] : frob.pieces()) {
    if (f.is_zero()) continue;
    out[std::to_string(cohomological ? 2 * d : d)] = symmetric_function_json(f);
  }
  return out;
}

// Row-major sparse cells as [row, col, label] triples, 1-based.
inline json iprd_json(const IPRDFilling& iprd) {
  json out = json::array();
  for (const auto& cell : iprd.filled_cells()) out.push_back({cell[0], cell[1], cell[2]});
  return out;
}

inline json cell_json(const Cell& cell) {
  return json{{"w", cell.w},
              {"iprd", iprd_json(cell.iprd)},
              {"dim", cell.dimension},
              {"component", component_of(cell.iprd).to_string()}};
}

inline json component_json(const Component& comp) {
  return json{{"class", comp.cls.to_string()},
              {"count", comp.cells.size()},
              {"top_dim", comp.top_dimension}};
}

// The distinguished monomial basis as an ordered term list, graded pieces in
// ascending degree and monomials in descending order within each.
inline json basis_json(const RingSpec& spec, bool cohomological = true) {
  std::vector<Monomial> monos = artin_basis(spec);
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return drl_less(b, a);
  });
  json out = json::array();
  for (const Monomial& m : monos) {
    out.push_back(json{{"monomial", to_string(m)},
                       {"degree", cohomological ? 2 * m.degree : m.degree}});
  }
  return out;
}

inline json check_results_json(const std::vector<CheckResult>& rows) {
  json out = json::array();
  for (const CheckResult& row : rows) {
    out.push_back(json{{"family", row.family},
                       {"instance", row.instance},
                       {"status", row.pass ? "pass" : "fail"},
                       {"detail", row.detail}});
  }
  return out;
}

inline json verify_report_json(const RingSpec& spec, const std::vector<CheckResult>& rows) {
  bool pass = std::all_of(rows.begin(), rows.end(), [](const CheckResult& r) { return r.pass; });
  json witnesses = json::array();
  for (const CheckResult& row : rows) {
    if (!row.pass) witnesses.push_back(row.family + ": " + row.detail);
  }
  return json{{"schema", "1"},
              {"spec", spec_json(spec)},
              {"status", pass ? "pass" : "fail"},
              {"witnesses", witnesses},
              {"checks", check_results_json(rows)}};
}

}  // namespace jsonio
}  // namespace dsv
