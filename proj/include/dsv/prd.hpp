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
#include "dsv/partition.hpp"
#include "dsv/presentations.hpp"
#include "dsv/symfunc.hpp"
#include "dsv/tableaux.hpp"

namespace dsv {

// Partial row-decreasing filling of the padded shape: filled cells form a
// suffix of each row, entries weakly decrease along rows (repeats allowed),
// every inner cell is filled, and exactly n cells carry a positive entry.
// Empty cells are stored as 0.
class PRDFilling {
 public:
  PRDFilling(RingSpec spec, TableauRows rows)
      : spec_(std::move(spec)), rows_(std::move(rows)) {
    std::string why;
    if (!valid(spec_, rows_, &why))
      throw std::invalid_argument("invalid row-decreasing filling: " + why);
  }

  static bool valid(const RingSpec& spec, const TableauRows& rows, std::string* why = nullptr) {
    auto reject = [&](const std::string& text) {
      if (why) *why = text;
      return false;
    };
    Partition shape = spec.padded_shape();
    if (static_cast<int>(rows.size()) != shape.length()) return reject("wrong number of rows");
    int filled = 0;
    for (int a = 1; a <= shape.length(); ++a) {
      const auto& row = rows[a - 1];
      if (static_cast<int>(row.size()) != shape.part(a)) return reject("row length mismatch");
      for (int b = 1; b <= static_cast<int>(row.size()); ++b) {
        int v = row[b - 1];
        if (v < 0) return reject("negative entry");
        if (v == 0) {
          if (b > 1 && row[b - 2] != 0) return reject("filled cells are not right justified");
          continue;
        }
        filled += 1;
        if (b > 1 && row[b - 2] != 0 && row[b - 2] < v) return reject("row increases");
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

  // Multiplicity of each letter 1..letters among the filled cells.
  std::vector<int> content(int letters) const {
    std::vector<int> out(letters, 0);
    for (const auto& row : rows_)
      for (int v : row)
        if (v > 0) {
          if (v > letters) throw std::invalid_argument("entry above the letter bound");
          out[v - 1] += 1;
        }
    return out;
  }

  // Row-major (row, column, entry) triples of the filled cells, 1-based.
  std::vector<std::array<int, 3>> filled_cells() const {
    std::vector<std::array<int, 3>> out;
    for (int a = 1; a <= static_cast<int>(rows_.size()); ++a)
      for (int b = 1; b <= static_cast<int>(rows_[a - 1].size()); ++b)
        if (rows_[a - 1][b - 1] != 0) out.push_back({a, b, rows_[a - 1][b - 1]});
    return out;
  }

  bool operator==(const PRDFilling& other) const {
    return spec_ == other.spec_ && rows_ == other.rows_;
  }
  bool operator<(const PRDFilling& other) const { return rows_ < other.rows_; }

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

// Inversion count of a row-decreasing filling, split by the four kinds of
// attacking pairs.  Inner cells are the rightmost lambda_a cells of row a,
// which occupy the columns past n-k in every inner row.
struct InvBreakdown {
  long long same_column = 0;    // inner pairs in one column, bigger entry above
  long long adjacent = 0;       // inner pairs in adjacent columns, lower row first
  long long entry_column = 0;   // first inner column against earlier outside rows
  long long outside_rows = 0;   // each filled outside cell counts its row above
  long long total() const { return same_column + adjacent + entry_column + outside_rows; }
  bool operator==(const InvBreakdown&) const = default;
};

inline InvBreakdown inversions(const PRDFilling& phi) {
  const RingSpec& spec = phi.spec();
  int split = spec.n - spec.k();  // inner columns start at split + 1
  std::vector<std::array<int, 3>> inner, outside;
  for (const auto& cell : phi.filled_cells()) {
    bool is_inner = cell[0] <= spec.lambda.length() && cell[1] > split;
    (is_inner ? inner : outside).push_back(cell);
  }
  InvBreakdown inv;
  for (const auto& [i, j, v] : inner) {
    for (const auto& [i2, j2, v2] : inner) {
      if (j2 == j && i < i2 && v > v2) inv.same_column += 1;
      if (j2 == j - 1 && i2 < i && v > v2) inv.adjacent += 1;
    }
    if (j == split + 1)
      for (const auto& [i2, j2, v2] : outside) {
        (void)j2;
        if (i2 < i && v > v2) inv.entry_column += 1;
      }
  }
  for (const auto& [i2, j2, v2] : outside) {
    (void)j2;
    (void)v2;
    inv.outside_rows += i2 - 1;
  }
  return inv;
}

// All row-decreasing fillings of the padded shape with the given letter
// multiplicities (content[v-1] copies of v), ordered by their row data.
inline std::vector<PRDFilling> enumerate_prd(const RingSpec& spec,
                                             const std::vector<int>& content) {
  config::check(spec.n <= config::limits().paving_max_n, "paving_max_n",
                spec.to_string() + " has n = " + std::to_string(spec.n));
  std::vector<PRDFilling> out;
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("negative content entry");
    total += c;
  }
  if (total != spec.n) return out;
  Partition shape = spec.padded_shape();
  TableauRows rows(shape.length());
  for (int a = 1; a <= shape.length(); ++a) rows[a - 1].assign(shape.part(a), 0);
  std::vector<int> remaining(content);
  // Rows are filled top to bottom; within a row the suffix grows leftwards,
  // so each new entry must not drop below the one to its right.
  std::function<void(int, int, int, int)> rec = [&](int a, int b, int floor, int placed) {
    if (a > shape.length()) {
      if (placed == spec.n) out.emplace_back(spec, rows);
      return;
    }
    int width = shape.part(a);
    // Option 1: close this row (only once its inner cells are covered).
    if (width - b >= spec.lambda.part(a)) rec(a + 1, shape.part(a + 1), 1, placed);
    // Option 2: extend the suffix by one cell at column b.
    if (b >= 1 && placed < spec.n) {
      for (int v = floor; v <= static_cast<int>(remaining.size()); ++v) {
        if (remaining[v - 1] == 0) continue;
        rows[a - 1][b - 1] = v;
        remaining[v - 1] -= 1;
        rec(a, b - 1, v, placed + 1);
        remaining[v - 1] += 1;
        rows[a - 1][b - 1] = 0;
      }
    }
  };
  rec(1, shape.part(1), 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Per-degree monomial coefficients contributed by one content vector.
inline std::map<int, long long> prd_degree_counts(const RingSpec& spec,
                                                  const std::vector<int>& content) {
  std::map<int, long long> counts;
  for (const PRDFilling& phi : enumerate_prd(spec, content)) {
    long long d = inversions(phi).total();
    counts[static_cast<int>(d)] += 1;
  }
  return counts;
}

}  // namespace detail

// Graded character of the quotient ring, one symmetric function per degree.
// Fillings are enumerated for partition contents only; the coefficient of a
// monomial depends only on the sorted content, so this determines the whole
// expansion.  Contents are processed in parallel when threads are enabled.
inline GradedSymmetricFunction graded_frobenius(const RingSpec& spec) {
  std::vector<Partition> contents = partitions_of(spec.n);
  std::vector<std::map<int, long long>> counts(contents.size());
  int threads = std::min<int>(config::thread_count(), static_cast<int>(contents.size()));
  if (threads > 1) {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        try {
          for (std::size_t i = t; i < contents.size(); i += threads)
            counts[i] = detail::prd_degree_counts(spec, contents[i].parts());
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& worker : pool) worker.join();
    for (const auto& error : errors)
      if (error) std::rethrow_exception(error);
  } else {
    for (std::size_t i = 0; i < contents.size(); ++i)
      counts[i] = detail::prd_degree_counts(spec, contents[i].parts());
  }
  std::map<int, std::map<Partition, long long>> monomial;
  for (std::size_t i = 0; i < contents.size(); ++i)
    for (const auto& [degree, value] : counts[i]) monomial[degree][contents[i]] = value;
  GradedSymmetricFunction out;
  for (const auto& [degree, coeffs] : monomial) {
    SymmetricFunction piece = monomial_to_schur(coeffs, spec.n);
    if (!piece.nonnegative())
      throw std::runtime_error("negative Schur coefficient in degree " +
                               std::to_string(2 * degree) + " of " + spec.to_string());
    out.set_piece(degree, std::move(piece));
  }
  return out;
}

// Comparison of the top graded piece against its predicted character: the
// induced shape character when s exceeds the number of rows of lambda, and
// a skew character on the padded shape at the boundary.
struct TopDegreeReport {
  RingSpec spec;
  bool pass = false;
  int top_cohomological_degree = -1;
  SymmetricFunction expected;
  SymmetricFunction actual;
  std::string message;
};

inline TopDegreeReport top_degree_check(const RingSpec& spec) {
  TopDegreeReport report{spec};
  GradedSymmetricFunction frob = graded_frobenius(spec);
  int ell = spec.lambda.length();
  long long top = n_stat(spec.lambda) +
                  static_cast<long long>(spec.n - spec.k()) * (spec.s - 1);
  report.top_cohomological_degree = 2 * static_cast<int>(top);
  if (frob.top_degree() != top) {
    report.message = "top degree is " + std::to_string(2 * frob.top_degree()) +
                     " but should be " + std::to_string(2 * top);
    return report;
  }
  if (spec.s > ell) {
    report.expected = induced_specht(spec.n, spec.lambda);
  } else {
    std::vector<int> parts(spec.s - 1, spec.n - spec.k());
    if (spec.n == spec.k()) parts.clear();
    report.expected = skew_schur(spec.padded_shape(), Partition(std::move(parts)));
  }
  report.actual = frob.piece(static_cast<int>(top));
  if (report.actual == report.expected) {
    report.pass = true;
    return report;
  }
  std::string diff;
  auto note = [&](const Partition& mu) {
    long long want = report.expected.coeff(mu), got = report.actual.coeff(mu);
    if (want == got) return;
    if (!diff.empty()) diff += ", ";
    diff += "s(" + mu.to_string() + "): expected " + std::to_string(want) + ", got " +
            std::to_string(got);
  };
  for (const auto& [mu, c] : report.expected.terms()) {
    (void)c;
    note(mu);
  }
  for (const auto& [mu, c] : report.actual.terms()) {
    (void)c;
    if (report.expected.coeff(mu) == 0) note(mu);
  }
  report.message = "top piece differs: " + diff;
  return report;
}

}  // namespace dsv
