#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsv/partition.hpp"
#include "dsv/presentations.hpp"
#include "dsv/tableaux.hpp"

namespace dsv {

// Total filling of the padded shape by the labels 1..K. Bijectivity is a
// construction invariant; the stronger compatibility conditions are checked
// separately so deliberately broken fillings can still be built in tests.
class ShapeFilling {
 public:
  ShapeFilling(RingSpec spec, TableauRows rows)
      : spec_(std::move(spec)), rows_(std::move(rows)) {
    Partition shape = spec_.padded_shape();
    if (static_cast<int>(rows_.size()) != shape.length())
      throw std::invalid_argument("filling has the wrong number of rows");
    pos_.assign(spec_.K() + 1, {0, 0});
    for (int a = 1; a <= shape.length(); ++a) {
      const auto& row = rows_[a - 1];
      if (static_cast<int>(row.size()) != shape.part(a))
        throw std::invalid_argument("filling row length does not match the shape");
      for (int b = 1; b <= static_cast<int>(row.size()); ++b) {
        int v = row[b - 1];
        if (v < 1 || v > spec_.K())
          throw std::invalid_argument("filling label out of range: " + std::to_string(v));
        if (pos_[v].first != 0)
          throw std::invalid_argument("filling label repeated: " + std::to_string(v));
        pos_[v] = {a, b};
      }
    }
    // The shape has exactly K cells, so distinct in-range labels are a
    // bijection onto 1..K.
  }

  const RingSpec& spec() const { return spec_; }
  Partition shape() const { return spec_.padded_shape(); }
  const TableauRows& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int row_length(int a) const { return static_cast<int>(rows_[a - 1].size()); }

  // 1-based cell access.
  int label(int a, int b) const { return rows_[a - 1][b - 1]; }
  int right_edge_label(int a) const { return rows_[a - 1].back(); }
  std::pair<int, int> cell_of(int label) const {
    if (label < 1 || label >= static_cast<int>(pos_.size()))
      throw std::out_of_range("no such label");
    return pos_[label];
  }

  // The inner shape occupies the rightmost lambda_a cells of row a.
  bool is_inner_cell(int a, int b) const {
    return a <= spec_.lambda.length() && b > row_length(a) - spec_.lambda.part(a);
  }

  bool operator==(const ShapeFilling& other) const {
    return spec_ == other.spec_ && rows_ == other.rows_;
  }

  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t a = 0; a < rows_.size(); ++a) {
      if (a) out << " / ";
      for (std::size_t b = 0; b < rows_[a].size(); ++b) {
        if (b) out << ' ';
        out << rows_[a][b];
      }
    }
    return out.str();
  }

 private:
  RingSpec spec_;
  TableauRows rows_;
  std::vector<std::pair<int, int>> pos_;
};

// Outcome of the compatibility check: the first violated condition by name,
// with the witnessing cells spelled out.
struct CompatibilityReport {
  bool ok = true;
  std::string condition;
  std::string detail;
};

namespace detail {

inline std::string cell_text(int a, int b, int v) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")=" + std::to_string(v);
}

}  // namespace detail

// Checks the six conditions in order and reports the first failure. (S1) holds
// for every constructed ShapeFilling but is re-verified for completeness.
inline CompatibilityReport schubert_compatibility(const ShapeFilling& T) {
  const RingSpec& sp = T.spec();
  const int k = sp.k();
  const int rows = T.row_count();

  auto fail = [](std::string cond, std::string detail) {
    return CompatibilityReport{false, std::move(cond), std::move(detail)};
  };

  // S1: bijection onto 1..K.
  {
    std::vector<char> seen(sp.K() + 1, 0);
    for (int a = 1; a <= rows; ++a)
      for (int b = 1; b <= T.row_length(a); ++b) {
        int v = T.label(a, b);
        if (v < 1 || v > sp.K() || seen[v])
          return fail("S1", "label " + std::to_string(v) + " at " + detail::cell_text(a, b, v) +
                                " breaks the bijection onto 1.." + std::to_string(sp.K()));
        seen[v] = 1;
      }
  }

  // S2: the inner cells carry exactly 1..k.
  for (int a = 1; a <= rows; ++a)
    for (int b = 1; b <= T.row_length(a); ++b) {
      int v = T.label(a, b);
      if (T.is_inner_cell(a, b) && v > k)
        return fail("S2", "inner cell " + detail::cell_text(a, b, v) + " exceeds k=" +
                              std::to_string(k));
      if (!T.is_inner_cell(a, b) && v <= k)
        return fail("S2", "outer cell " + detail::cell_text(a, b, v) + " lies in 1..k");
    }

  // S3: rows decrease left to right.
  for (int a = 1; a <= rows; ++a)
    for (int b = 1; b < T.row_length(a); ++b)
      if (T.label(a, b) <= T.label(a, b + 1))
        return fail("S3", detail::cell_text(a, b, T.label(a, b)) + " does not exceed " +
                              detail::cell_text(a, b + 1, T.label(a, b + 1)));

  // S4: an inner label exceeds every label one column to its right.
  for (int a = 1; a <= rows; ++a)
    for (int b = 1; b <= T.row_length(a); ++b) {
      if (!T.is_inner_cell(a, b)) continue;
      for (int c = 1; c <= rows; ++c)
        if (T.row_length(c) >= b + 1 && T.label(a, b) <= T.label(c, b + 1))
          return fail("S4", "inner " + detail::cell_text(a, b, T.label(a, b)) +
                                " does not exceed " +
                                detail::cell_text(c, b + 1, T.label(c, b + 1)));
    }

  // S5: right-edge labels increase top to bottom.
  for (int a = 1; a < rows; ++a)
    if (T.right_edge_label(a) >= T.right_edge_label(a + 1))
      return fail("S5", "right edge " + detail::cell_text(a, T.row_length(a), T.right_edge_label(a)) +
                            " is not below " +
                            detail::cell_text(a + 1, T.row_length(a + 1), T.right_edge_label(a + 1)));

  // S6: left shifts preserve relative order away from column 1.
  for (int a = 1; a <= rows; ++a)
    for (int b = 2; b <= T.row_length(a); ++b)
      for (int c = 1; c <= rows; ++c)
        for (int d = 2; d <= T.row_length(c); ++d)
          if (T.label(a, b) > T.label(c, d) && T.label(a, b - 1) < T.label(c, d - 1))
            return fail("S6", detail::cell_text(a, b, T.label(a, b)) + " > " +
                                  detail::cell_text(c, d, T.label(c, d)) + " but " +
                                  detail::cell_text(a, b - 1, T.label(a, b - 1)) + " < " +
                                  detail::cell_text(c, d - 1, T.label(c, d - 1)));

  return CompatibilityReport{};
}

inline bool is_schubert_compatible(const ShapeFilling& T) {
  return schubert_compatibility(T).ok;
}

// Canonical compatible filling: scan down the columns of the padded shape from
// right to left, assigning 1, 2, ... in the order visited.
inline ShapeFilling reading_order_filling(const RingSpec& spec) {
  Partition shape = spec.padded_shape();
  TableauRows rows(shape.length());
  for (int a = 1; a <= shape.length(); ++a) rows[a - 1].assign(shape.part(a), 0);
  int next = 0;
  int widest = shape.empty() ? 0 : shape.part(1);
  for (int b = widest; b >= 1; --b)
    for (int a = 1; a <= shape.length(); ++a)
      if (shape.part(a) >= b) rows[a - 1][b - 1] = ++next;
  return ShapeFilling(spec, std::move(rows));
}

// Flattening: delete the right-edge cell of row i (and, past the inner rows,
// the first cell of every other row), relabel order-preservingly, then re-sort
// rows by their new right-edge labels.
struct FlattenResult {
  ShapeFilling filling;
  std::vector<int> fl;  // old label -> new label, 0 when deleted; index 0 unused
  int branch_row = 0;
};

inline FlattenResult flatten(const ShapeFilling& T, int i) {
  const RingSpec& sp = T.spec();
  const int ell = sp.lambda.length();
  if (i < 1 || i > sp.s) throw std::out_of_range("flatten row out of range");
  if (i > T.row_count()) throw std::out_of_range("flatten row is empty");

  std::vector<char> deleted(sp.K() + 1, 0);
  deleted[T.right_edge_label(i)] = 1;
  if (i > ell)
    for (int a = 1; a <= T.row_count(); ++a)
      if (a != i) deleted[T.label(a, 1)] = 1;

  std::vector<int> fl(sp.K() + 1, 0);
  int next = 0;
  for (int v = 1; v <= sp.K(); ++v)
    if (!deleted[v]) fl[v] = ++next;

  RingSpec sub = i <= ell ? RingSpec(sp.n - 1, remove_row(sp.lambda, i), sp.s)
                          : RingSpec(sp.n - 1, sp.lambda, sp.s);

  TableauRows kept;
  for (int a = 1; a <= T.row_count(); ++a) {
    std::vector<int> row;
    for (int b = 1; b <= T.row_length(a); ++b) {
      int v = T.label(a, b);
      if (!deleted[v]) row.push_back(fl[v]);
    }
    if (!row.empty()) kept.push_back(std::move(row));
  }
  std::sort(kept.begin(), kept.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              return x.back() < y.back();
            });
  for (std::size_t a = 1; a < kept.size(); ++a)
    if (kept[a].size() > kept[a - 1].size())
      throw std::logic_error("flatten produced a non-partition shape");

  return FlattenResult{ShapeFilling(sub, std::move(kept)), std::move(fl), i};
}

}  // namespace dsv
