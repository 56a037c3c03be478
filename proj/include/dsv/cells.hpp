#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dsv/config.hpp"
#include "dsv/filling.hpp"
#include "dsv/partition.hpp"
#include "dsv/qpoly.hpp"
#include "dsv/tableaux.hpp"

namespace dsv {

// Injective partial filling of the padded shape: filled cells form a suffix of
// each row, labels decrease along rows, every inner cell is filled, and the
// labels used are exactly 1..n. Empty cells are stored as 0.
class IPRDFilling {
 public:
  IPRDFilling(RingSpec spec, TableauRows rows)
      : spec_(std::move(spec)), rows_(std::move(rows)) {
    std::string why;
    if (!valid(spec_, rows_, &why)) throw std::invalid_argument("invalid partial filling: " + why);
  }

  static bool valid(const RingSpec& spec, const TableauRows& rows, std::string* why = nullptr) {
    auto reject = [&](const std::string& text) {
      if (why) *why = text;
      return false;
    };
    Partition shape = spec.padded_shape();
    if (static_cast<int>(rows.size()) != shape.length()) return reject("wrong number of rows");
    std::vector<char> seen(spec.n + 1, 0);
    int filled = 0;
    for (int a = 1; a <= shape.length(); ++a) {
      const auto& row = rows[a - 1];
      if (static_cast<int>(row.size()) != shape.part(a)) return reject("row length mismatch");
      for (int b = 1; b <= static_cast<int>(row.size()); ++b) {
        int v = row[b - 1];
        if (v < 0 || v > spec.n) return reject("label out of range");
        if (v == 0) {
          if (b > 1 && row[b - 2] != 0) return reject("filled cells are not right justified");
          continue;
        }
        if (seen[v]) return reject("label repeated");
        seen[v] = 1;
        filled += 1;
        if (b > 1 && row[b - 2] != 0 && row[b - 2] <= v) return reject("row is not decreasing");
      }
      int inner = spec.lambda.part(a);
      for (int b = shape.part(a) - inner + 1; b <= shape.part(a); ++b)
        if (row[b - 1] == 0) return reject("inner cell left empty");
    }
    if (filled != spec.n) return reject("wrong number of filled cells");
    return true;
  }

  const RingSpec& spec() const { return spec_; }
  const TableauRows& rows() const { return rows_; }
  int label(int a, int b) const { return rows_[a - 1][b - 1]; }

  // Row-major (row, column, label) triples of the filled cells, 1-based.
  std::vector<std::array<int, 3>> filled_cells() const {
    std::vector<std::array<int, 3>> out;
    for (int a = 1; a <= static_cast<int>(rows_.size()); ++a)
      for (int b = 1; b <= static_cast<int>(rows_[a - 1].size()); ++b)
        if (rows_[a - 1][b - 1] != 0) out.push_back({a, b, rows_[a - 1][b - 1]});
    return out;
  }

  bool operator==(const IPRDFilling& other) const {
    return spec_ == other.spec_ && rows_ == other.rows_;
  }
  bool operator<(const IPRDFilling& other) const { return rows_ < other.rows_; }

  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t a = 0; a < rows_.size(); ++a) {
      if (a) out << " / ";
      for (std::size_t b = 0; b < rows_[a].size(); ++b) {
        if (b) out << ' ';
        if (rows_[a][b] == 0)
          out << '.';
        else
          out << rows_[a][b];
      }
    }
    return out.str();
  }

 private:
  RingSpec spec_;
  TableauRows rows_;
};

namespace detail {

inline void validate_injective_word(const std::vector<int>& w, const RingSpec& spec) {
  if (static_cast<int>(w.size()) != spec.n)
    throw std::invalid_argument("w must list n values");
  std::vector<char> seen(spec.K() + 1, 0);
  for (int v : w) {
    if (v < 1 || v > spec.K()) throw std::invalid_argument("w value out of range");
    if (seen[v]) throw std::invalid_argument("w must be injective");
    seen[v] = 1;
  }
}

// Cell of the filling labelled by position: entry i sits where T holds w(i).
inline TableauRows place_labels(const std::vector<int>& w, const ShapeFilling& T) {
  TableauRows rows(T.row_count());
  for (int a = 1; a <= T.row_count(); ++a) rows[a - 1].assign(T.row_length(a), 0);
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    auto [a, b] = T.cell_of(w[i - 1]);
    rows[a - 1][b - 1] = i;
  }
  return rows;
}

}  // namespace detail

// A1: the image covers 1..k. A2: a value off the right edge may only appear
// once its right neighbour has appeared.
inline bool is_admissible(const std::vector<int>& w, const ShapeFilling& T) {
  const RingSpec& spec = T.spec();
  detail::validate_injective_word(w, spec);
  std::vector<char> image(spec.K() + 1, 0);
  for (int v : w) image[v] = 1;
  for (int c = 1; c <= spec.k(); ++c)
    if (!image[c]) return false;
  std::vector<char> earlier(spec.K() + 1, 0);
  for (int v : w) {
    auto [a, b] = T.cell_of(v);
    if (b != T.row_length(a) && !earlier[T.label(a, b + 1)]) return false;
    earlier[v] = 1;
  }
  return true;
}

inline IPRDFilling iprd_of(const std::vector<int>& w, const ShapeFilling& T) {
  return IPRDFilling(T.spec(), detail::place_labels(w, T));
}

// dim = (i-1) + dim of the flattened map, where w(1) sits at the right edge of
// row i; iterated until the word is exhausted.
inline int cell_dimension(const std::vector<int>& w, const ShapeFilling& T) {
  if (!is_admissible(w, T))
    throw std::invalid_argument("cell dimension is only defined for admissible maps");
  std::vector<int> cur = w;
  ShapeFilling t = T;
  int dim = 0;
  while (!cur.empty()) {
    auto [a, b] = t.cell_of(cur.front());
    if (b != t.row_length(a)) throw std::logic_error("admissible word does not start on the right edge");
    FlattenResult fr = flatten(t, a);
    dim += a - 1;
    std::vector<int> next;
    next.reserve(cur.size() - 1);
    for (std::size_t j = 1; j < cur.size(); ++j) {
      int v = fr.fl[cur[j]];
      if (v == 0) throw std::logic_error("flatten deleted a label still used by the word");
      next.push_back(v);
    }
    cur = std::move(next);
    t = fr.filling;
  }
  return dim;
}

struct Cell {
  std::vector<int> w;
  IPRDFilling iprd;
  int dimension = 0;
};

namespace detail {

struct RawCell {
  std::vector<int> w;
  int dim = 0;
};

std::vector<RawCell> cells_below(const ShapeFilling& T);

// All cells whose word starts at the right edge of row i.
inline std::vector<RawCell> branch_cells(const ShapeFilling& T, int i) {
  FlattenResult fr = flatten(T, i);
  CompatibilityReport rep = schubert_compatibility(fr.filling);
  if (!rep.ok)
    throw std::logic_error("flatten lost compatibility (" + rep.condition + ": " + rep.detail + ")");
  std::vector<int> unfl(fr.filling.spec().K() + 1, 0);
  for (int v = 1; v <= T.spec().K(); ++v)
    if (fr.fl[v]) unfl[fr.fl[v]] = v;
  int edge = T.right_edge_label(i);
  std::vector<RawCell> out;
  std::vector<RawCell> sub = cells_below(fr.filling);
  out.reserve(sub.size());
  for (RawCell& rc : sub) {
    RawCell cell;
    cell.w.reserve(rc.w.size() + 1);
    cell.w.push_back(edge);
    for (int v : rc.w) cell.w.push_back(unfl[v]);
    cell.dim = (i - 1) + rc.dim;
    out.push_back(std::move(cell));
  }
  return out;
}

inline std::vector<RawCell> cells_below(const ShapeFilling& T) {
  if (T.spec().n == 0) return {RawCell{{}, 0}};
  std::vector<RawCell> out;
  for (int i = 1; i <= T.row_count(); ++i)
    for (RawCell& rc : branch_cells(T, i)) out.push_back(std::move(rc));
  return out;
}

}  // namespace detail

// All admissible words for the reading-order filling, with their position
// fillings and dimensions, sorted lexicographically by word. The search is
// split over the choice of w(1); each branch is independent, and the final
// sort makes parallel and serial runs identical.
inline std::vector<Cell> enumerate_cells(const RingSpec& spec) {
  config::check(spec.n <= config::limits().paving_max_n, "paving",
                "n=" + std::to_string(spec.n) + " exceeds " +
                    std::to_string(config::limits().paving_max_n));
  ShapeFilling T = reading_order_filling(spec);
  std::vector<detail::RawCell> raw;
  int branches = T.row_count();
  if (spec.n == 0) {
    raw = detail::cells_below(T);
  } else if (config::thread_count() > 1 && branches > 1) {
    std::vector<std::vector<detail::RawCell>> per(branches);
    std::vector<std::exception_ptr> errors(branches);
    std::vector<std::thread> pool;
    for (int i = 1; i <= branches; ++i)
      pool.emplace_back([&, i] {
        try {
          per[i - 1] = detail::branch_cells(T, i);
        } catch (...) {
          errors[i - 1] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
    for (auto& chunk : per)
      for (auto& rc : chunk) raw.push_back(std::move(rc));
  } else {
    raw = detail::cells_below(T);
  }
  std::sort(raw.begin(), raw.end(),
            [](const detail::RawCell& x, const detail::RawCell& y) { return x.w < y.w; });
  std::vector<Cell> out;
  out.reserve(raw.size());
  for (detail::RawCell& rc : raw) {
    IPRDFilling p = iprd_of(rc.w, T);
    out.push_back(Cell{std::move(rc.w), std::move(p), rc.dim});
  }
  return out;
}

inline QPolynomial paving_hilbert(const RingSpec& spec) {
  QPolynomial h;
  for (const Cell& cell : enumerate_cells(spec)) h.add(cell.dimension, 1);
  return h;
}

// Filling of the inner shape with distinct labels from 1..n, decreasing along
// rows and down columns. These index the irreducible pieces.
class ComponentClass {
 public:
  ComponentClass(int n, Partition shape, TableauRows rows)
      : n_(n), shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length())
      throw std::invalid_argument("class has the wrong number of rows");
    std::vector<char> seen(n_ + 1, 0);
    for (int a = 1; a <= shape_.length(); ++a) {
      const auto& row = rows_[a - 1];
      if (static_cast<int>(row.size()) != shape_.part(a))
        throw std::invalid_argument("class row length mismatch");
      for (int b = 1; b <= static_cast<int>(row.size()); ++b) {
        int v = row[b - 1];
        if (v < 1 || v > n_) throw std::invalid_argument("class label out of range");
        if (seen[v]) throw std::invalid_argument("class label repeated");
        seen[v] = 1;
        if (b > 1 && row[b - 2] <= v) throw std::invalid_argument("class row not decreasing");
        if (a > 1 && shape_.part(a - 1) >= b && rows_[a - 2][b - 1] <= v)
          throw std::invalid_argument("class column not decreasing");
      }
    }
  }

  int n() const { return n_; }
  const Partition& shape() const { return shape_; }
  const TableauRows& rows() const { return rows_; }

  bool operator==(const ComponentClass& other) const {
    return n_ == other.n_ && shape_ == other.shape_ && rows_ == other.rows_;
  }
  bool operator<(const ComponentClass& other) const { return rows_ < other.rows_; }

  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t a = 0; a < rows_.size(); ++a) {
      if (a) out << '/';
      for (std::size_t b = 0; b < rows_[a].size(); ++b) {
        if (b) out << ',';
        out << rows_[a][b];
      }
    }
    return out.str();
  }

 private:
  int n_ = 0;
  Partition shape_;
  TableauRows rows_;
};

// Restrict the position filling to the inner shape and sort each column
// decreasingly; the result is the canonical representative of the class.
inline ComponentClass component_of(const IPRDFilling& p) {
  const RingSpec& spec = p.spec();
  const Partition& lambda = spec.lambda;
  Partition shape = spec.padded_shape();
  TableauRows rows(lambda.length());
  for (int a = 1; a <= lambda.length(); ++a) {
    int width = shape.part(a);
    for (int b = width - lambda.part(a) + 1; b <= width; ++b)
      rows[a - 1].push_back(p.label(a, b));
  }
  int widest = lambda.empty() ? 0 : lambda.part(1);
  Partition conj = lambda.conjugate();
  for (int b = 1; b <= widest; ++b) {
    std::vector<int> column;
    for (int a = 1; a <= conj.part(b); ++a) column.push_back(rows[a - 1][b - 1]);
    std::sort(column.begin(), column.end(), std::greater<int>());
    for (int a = 1; a <= conj.part(b); ++a) rows[a - 1][b - 1] = column[a - 1];
  }
  return ComponentClass(spec.n, lambda, std::move(rows));
}

inline ComponentClass component_of_cell(const std::vector<int>& w, const ShapeFilling& T) {
  if (!is_admissible(w, T))
    throw std::invalid_argument("component classes are only defined for admissible maps");
  return component_of(iprd_of(w, T));
}

struct Component {
  ComponentClass cls;
  std::vector<std::vector<int>> cells;  // words, lexicographically sorted
  int top_dimension = 0;
};

// Groups the cells by class; components appear in order of their smallest word.
inline std::vector<Component> enumerate_components(const RingSpec& spec) {
  std::vector<Cell> cells = enumerate_cells(spec);
  std::vector<Component> out;
  std::map<ComponentClass, std::size_t> index;
  for (const Cell& cell : cells) {
    ComponentClass cls = component_of(cell.iprd);
    auto [it, fresh] = index.try_emplace(std::move(cls), out.size());
    if (fresh) out.push_back(Component{it->first, {}, 0});
    Component& comp = out[it->second];
    comp.cells.push_back(cell.w);
    comp.top_dimension = std::max(comp.top_dimension, cell.dimension);
  }
  return out;
}

// All fillings of the inner shape by distinct labels from 1..n with decreasing
// rows and columns: a label set overlaid with a reversed standard tableau.
inline std::vector<ComponentClass> p_classes(int n, const Partition& lambda) {
  config::check(n <= config::limits().paving_max_n, "paving",
                "n=" + std::to_string(n) + " exceeds " +
                    std::to_string(config::limits().paving_max_n));
  int k = lambda.size();
  if (k > n) throw std::invalid_argument("the inner shape cannot exceed n cells");
  std::vector<ComponentClass> out;
  std::vector<StandardTableau> tableaux = enumerate_syt(lambda);
  detail::for_each_subset(n, k, [&](const std::vector<int>& pick) {
    for (const StandardTableau& q : tableaux) {
      TableauRows rows(lambda.length());
      for (int a = 1; a <= lambda.length(); ++a) {
        rows[a - 1].resize(lambda.part(a));
        for (int b = 1; b <= lambda.part(a); ++b)
          rows[a - 1][b - 1] = pick[k - q.rows[a - 1][b - 1]] + 1;
      }
      out.push_back(ComponentClass(n, lambda, std::move(rows)));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Boundary case s = len(lambda): the labels smaller than the least absent one
// must fill an entire row. Above the boundary every class occurs.
inline bool class_is_nonempty(const ComponentClass& cls, int s) {
  if (s > cls.shape().length()) return true;
  std::vector<char> present(cls.n() + 2, 0);
  for (const auto& row : cls.rows())
    for (int v : row) present[v] = 1;
  int mex = 1;
  while (present[mex]) mex += 1;
  for (const auto& row : cls.rows())
    if (row.front() < mex) return true;
  return false;
}

// For the single-column inner shape at the boundary, rows of the position
// filling cut the labels 1..n into the blocks of an ordered set partition.
inline std::vector<std::vector<int>> osp_of_cell(const std::vector<int>& w, const ShapeFilling& T) {
  const RingSpec& spec = T.spec();
  int k = spec.k();
  bool column_shape = k >= 1 && spec.lambda.length() == k && spec.s == k;
  if (!column_shape)
    throw std::invalid_argument("ordered set partitions need a single-column inner shape with s = k");
  if (!is_admissible(w, T))
    throw std::invalid_argument("ordered set partitions are only defined for admissible maps");
  IPRDFilling p = iprd_of(w, T);
  std::vector<std::vector<int>> blocks(p.rows().size());
  for (std::size_t a = 0; a < p.rows().size(); ++a) {
    for (int v : p.rows()[a])
      if (v != 0) blocks[a].push_back(v);
    std::sort(blocks[a].begin(), blocks[a].end());
  }
  return blocks;
}

// Direct enumeration of the partial fillings, independent of the cell search:
// pick how many cells of each row are filled, then distribute the labels.
inline std::vector<IPRDFilling> enumerate_iprds_direct(const RingSpec& spec) {
  config::check(spec.n <= config::limits().paving_max_n, "paving",
                "n=" + std::to_string(spec.n) + " exceeds " +
                    std::to_string(config::limits().paving_max_n));
  Partition shape = spec.padded_shape();
  int rows = shape.length();
  std::vector<IPRDFilling> out;
  std::vector<int> take(rows, 0);
  TableauRows grid(rows);
  for (int a = 1; a <= rows; ++a) grid[a - 1].assign(shape.part(a), 0);

  std::function<void(int, std::vector<int>&)> fill_rows = [&](int a, std::vector<int>& left) {
    if (a == rows) {
      out.push_back(IPRDFilling(spec, grid));
      return;
    }
    detail::for_each_subset(static_cast<int>(left.size()), take[a], [&](const std::vector<int>& pick) {
      std::vector<int> chosen, rest;
      std::size_t at = 0;
      for (std::size_t j = 0; j < left.size(); ++j) {
        if (at < pick.size() && static_cast<int>(j) == pick[at]) {
          chosen.push_back(left[j]);
          at += 1;
        } else {
          rest.push_back(left[j]);
        }
      }
      std::sort(chosen.begin(), chosen.end(), std::greater<int>());
      int width = shape.part(a + 1);
      for (int b = 0; b < take[a]; ++b) grid[a][width - take[a] + b] = chosen[b];
      fill_rows(a + 1, rest);
      for (int b = 0; b < take[a]; ++b) grid[a][width - take[a] + b] = 0;
    });
  };

  std::function<void(int, int)> choose_sizes = [&](int a, int left) {
    if (a == rows) {
      if (left == 0) {
        std::vector<int> labels(spec.n);
        for (int v = 1; v <= spec.n; ++v) labels[v - 1] = v;
        fill_rows(0, labels);
      }
      return;
    }
    int lo = spec.lambda.part(a + 1);
    int hi = std::min(shape.part(a + 1), left);
    for (int t = lo; t <= hi; ++t) {
      take[a] = t;
      choose_sizes(a + 1, left - t);
    }
  };
  choose_sizes(0, spec.n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dsv
