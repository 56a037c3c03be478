#pragma once

#include <string>

#include "dsv/cells.hpp"
#include "dsv/partition.hpp"
#include "dsv/qpoly.hpp"
#include "dsv/symfunc.hpp"

namespace dsv {
namespace latex {

// Display-math emitters.  Output is meant for human eyes only and is never
// parsed back, so the formatting favours readability over round-tripping.

inline std::string partition(const Partition& mu) {
  if (mu.empty()) return "\\varnothing";
  return "(" + mu.to_string() + ")";
}

inline std::string qpolynomial(const QPolynomial& h, bool cohomological = true) {
  if (h.top_degree() < 0) return "0";
  std::string out;
  for (int d = 0; d <= h.top_degree(); ++d) {
    long long c = h.coeff(d);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    int shown = cohomological ? 2 * d : d;
    if (shown == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "q";
    if (shown != 1) out += "^{" + std::to_string(shown) + "}";
  }
  return out;
}

inline std::string schur_sum(const SymmetricFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [mu, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c);
    out += "s_{" + partition(mu) + "}";
  }
  return out;
}

inline std::string graded_schur_sum(const GradedSymmetricFunction& frob, bool cohomological = true) {
  std::string out;
  for (const auto& [d, f] : frob.pieces()) {
    if (f.is_zero()) continue;
    if (!out.empty()) out += " + ";
    int shown = cohomological ? 2 * d : d;
    if (shown > 0) {
      out += "q^{" + std::to_string(shown) + "}";
      out += "\\left(" + schur_sum(f) + "\\right)";
    } else {
      out += schur_sum(f);
    }
  }
  return out.empty() ? "0" : out;
}

// Young-diagram rendering of a sparse filling via the ytableau package:
// \none marks an empty cell.
inline std::string young_diagram(const IPRDFilling& iprd) {
  std::string out = "\\begin{ytableau}\n";
  for (const auto& row : iprd.rows()) {
    std::string line;
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b) line += " & ";
      line += row[b] > 0 ? std::to_string(row[b]) : std::string("\\none");
    }
    out += line + " \\\\\n";
  }
  return out + "\\end{ytableau}";
}

}  // namespace latex
}  // namespace dsv
