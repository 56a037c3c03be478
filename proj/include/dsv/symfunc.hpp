#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsv/partition.hpp"
#include "dsv/qpoly.hpp"
#include "dsv/tableaux.hpp"

namespace dsv {

// Homogeneous symmetric function stored by Schur coefficients.  All terms
// must have the same degree; the zero function carries no degree.
class SymmetricFunction {
 public:
  SymmetricFunction() = default;

  static SymmetricFunction schur(const Partition& mu) {
    SymmetricFunction f;
    f.add(mu, 1);
    return f;
  }

  void add(const Partition& mu, long long value) {
    if (value == 0) return;
    if (!coeffs_.empty() && mu.size() != degree())
      throw std::invalid_argument("mixed degrees in a symmetric function");
    auto it = coeffs_.find(mu);
    if (it == coeffs_.end()) {
      coeffs_.emplace(mu, value);
      return;
    }
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }

  long long coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? 0 : it->second;
  }

  const std::map<Partition, long long>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first.size(); }

  // Dimension of the corresponding representation: Schur coefficients
  // weighted by standard tableau counts.
  long long dimension() const {
    long long total = 0;
    for (const auto& [mu, c] : coeffs_) total += c * syt_count(mu);
    return total;
  }

  bool nonnegative() const {
    for (const auto& [mu, c] : coeffs_) {
      (void)mu;
      if (c < 0) return false;
    }
    return true;
  }

  SymmetricFunction omega() const {
    SymmetricFunction out;
    for (const auto& [mu, c] : coeffs_) out.add(mu.conjugate(), c);
    return out;
  }

  SymmetricFunction& operator+=(const SymmetricFunction& other) {
    for (const auto& [mu, c] : other.coeffs_) add(mu, c);
    return *this;
  }

  friend SymmetricFunction operator+(SymmetricFunction a, const SymmetricFunction& b) {
    return a += b;
  }

  bool operator==(const SymmetricFunction&) const = default;

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : coeffs_) {
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      long long a = c < 0 ? -c : c;
      if (a != 1) out += std::to_string(a) + "*";
      out += "s(" + mu.to_string() + ")";
    }
    return out;
  }

 private:
  std::map<Partition, long long> coeffs_;
};

// Multiply by the complete homogeneous function h_m: add a horizontal strip
// of m cells in every possible way.
inline SymmetricFunction pieri_h(const SymmetricFunction& f, int m) {
  if (m < 0) throw std::invalid_argument("pieri_h needs m >= 0");
  SymmetricFunction out;
  for (const auto& [mu, c] : f.terms()) {
    std::vector<int> grown;
    // Row i of the result holds between mu_i and mu_{i-1} cells.
    std::function<void(int, int)> rec = [&](int row, int left) {
      if (left == 0) {
        std::vector<int> parts = grown;
        for (int i = row; i <= mu.length(); ++i) parts.push_back(mu.part(i));
        out.add(Partition(std::move(parts)), c);
        return;
      }
      if (row > mu.length() + 1) return;
      int lo = std::max(mu.part(row), 1);
      int hi = row == 1 ? mu.part(1) + left : mu.part(row - 1);
      hi = std::min(hi, mu.part(row) + left);
      for (int len = lo; len <= hi; ++len) {
        grown.push_back(len);
        rec(row + 1, left - (len - mu.part(row)));
        grown.pop_back();
      }
    };
    if (m == 0) {
      out.add(mu, c);
      continue;
    }
    rec(1, m);
  }
  return out;
}

// Frobenius image of the S_n representation induced from the Specht module
// of shape lambda tensored with a trivial factor on the remaining letters.
inline SymmetricFunction induced_specht(int n, const Partition& lambda) {
  if (lambda.size() > n) throw std::invalid_argument("induced_specht needs |lambda| <= n");
  return pieri_h(SymmetricFunction::schur(lambda), n - lambda.size());
}

// Schur expansion of the skew function s_{outer/inner} by enumerating
// Littlewood-Richardson fillings: semistandard, and the reverse reading
// word (rows right to left, top to bottom) is a lattice word.
inline SymmetricFunction skew_schur(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner))
    throw std::invalid_argument("skew_schur needs inner contained in outer");
  SymmetricFunction out;
  int cells = outer.size() - inner.size();
  std::vector<std::vector<int>> fill(outer.length() + 1);
  for (int r = 1; r <= outer.length(); ++r) fill[r].assign(outer.part(r) + 1, 0);
  std::vector<long long> count(cells + 1, 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    while (r <= outer.length() && c <= inner.part(r)) {
      ++r;
      c = r <= outer.length() ? outer.part(r) : 0;
    }
    if (r > outer.length()) {
      std::vector<int> parts;
      for (int v = 1; v <= cells && count[v] > 0; ++v)
        parts.push_back(static_cast<int>(count[v]));
      out.add(Partition(std::move(parts)), 1);
      return;
    }
    int hi = std::min(r, cells);
    if (c < outer.part(r)) hi = std::min(hi, fill[r][c + 1]);
    for (int v = 1; v <= hi; ++v) {
      if (v > 1 && count[v - 1] <= count[v]) continue;  // lattice condition
      if (r > 1 && c > inner.part(r - 1) && fill[r - 1][c] >= v) continue;
      fill[r][c] = v;
      count[v] += 1;
      rec(r, c - 1);
      count[v] -= 1;
      fill[r][c] = 0;
    }
  };
  if (outer.length() == 0) return SymmetricFunction::schur(Partition{});
  rec(1, outer.part(1));
  return out;
}

// Rewrite coefficients on the monomial basis into the Schur basis.  Missing
// partitions count as zero.  Throws if the coefficients are inconsistent,
// i.e. the input was not a symmetric function of degree n.
inline SymmetricFunction monomial_to_schur(const std::map<Partition, long long>& monomial,
                                           int n) {
  for (const auto& [mu, c] : monomial) {
    (void)c;
    if (mu.size() != n)
      throw std::invalid_argument("monomial coefficient on a partition of the wrong size");
  }
  std::map<Partition, long long> work(monomial);
  std::vector<Partition> order = partitions_of(n);
  SymmetricFunction out;
  for (const Partition& nu : order) {  // lex descending refines dominance
    auto it = work.find(nu);
    long long a = it == work.end() ? 0 : it->second;
    if (a == 0) continue;
    out.add(nu, a);
    for (const Partition& mu : order) {
      long long k = kostka_number(nu, mu);
      if (k != 0) work[mu] -= a * k;
    }
  }
  for (const auto& [mu, c] : work) {
    if (c != 0)
      throw std::invalid_argument("coefficients do not describe a symmetric function: m(" +
                                  mu.to_string() + ") left over");
  }
  return out;
}

// Symmetric function graded by algebraic degree (half the cohomological
// degree).  Zero pieces are dropped.
class GradedSymmetricFunction {
 public:
  GradedSymmetricFunction() = default;

  void set_piece(int alg_degree, SymmetricFunction f) {
    if (alg_degree < 0) throw std::invalid_argument("negative degree");
    if (f.is_zero())
      pieces_.erase(alg_degree);
    else
      pieces_[alg_degree] = std::move(f);
  }

  void add(int alg_degree, const Partition& mu, long long value) {
    if (alg_degree < 0) throw std::invalid_argument("negative degree");
    auto& piece = pieces_[alg_degree];
    piece.add(mu, value);
    if (piece.is_zero()) pieces_.erase(alg_degree);
  }

  SymmetricFunction piece(int alg_degree) const {
    auto it = pieces_.find(alg_degree);
    return it == pieces_.end() ? SymmetricFunction{} : it->second;
  }

  const std::map<int, SymmetricFunction>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }
  int top_degree() const { return pieces_.empty() ? -1 : pieces_.rbegin()->first; }

  QPolynomial dimension_series() const {
    QPolynomial out;
    for (const auto& [d, f] : pieces_) out.add(d, f.dimension());
    return out;
  }

  bool schur_positive() const {
    for (const auto& [d, f] : pieces_) {
      (void)d;
      if (!f.nonnegative()) return false;
    }
    return true;
  }

  GradedSymmetricFunction truncated(int max_alg_degree) const {
    GradedSymmetricFunction out;
    for (const auto& [d, f] : pieces_)
      if (d <= max_alg_degree) out.pieces_[d] = f;
    return out;
  }

  bool operator==(const GradedSymmetricFunction&) const = default;

  std::string to_string() const {
    if (pieces_.empty()) return "0";
    std::string out;
    for (const auto& [d, f] : pieces_) {
      if (!out.empty()) out += " + ";
      out += "q^" + std::to_string(2 * d) + "*(" + f.to_string() + ")";
    }
    return out;
  }

 private:
  std::map<int, SymmetricFunction> pieces_;
};

}  // namespace dsv
