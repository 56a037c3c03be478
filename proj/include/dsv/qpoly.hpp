#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dsv {

// Polynomial in q with nonnegative support on even cohomological degrees.
// Coefficients are stored by algebraic degree d; the cohomological degree is
// 2d and doubling happens only at the reporting boundary.
class QPolynomial {
 public:
  QPolynomial() = default;

  static QPolynomial one() {
    QPolynomial p;
    p.c_ = {1};
    return p;
  }

  long long coeff(int alg_degree) const {
    if (alg_degree < 0 || alg_degree >= static_cast<int>(c_.size())) return 0;
    return c_[alg_degree];
  }

  void add(int alg_degree, long long value) {
    if (alg_degree < 0) throw std::invalid_argument("negative degree");
    if (alg_degree >= static_cast<int>(c_.size())) c_.resize(alg_degree + 1, 0);
    c_[alg_degree] += value;
    trim();
  }

  QPolynomial& operator+=(const QPolynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
    trim();
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }

  // Multiply by q^{shift} (algebraic).
  QPolynomial shifted(int shift) const {
    QPolynomial out;
    if (is_zero()) return out;
    out.c_.assign(c_.size() + shift, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i + shift] = c_[i];
    return out;
  }

  bool is_zero() const { return c_.empty(); }
  int top_degree() const { return static_cast<int>(c_.size()) - 1; }  // algebraic; -1 if zero

  long long total() const {
    long long t = 0;
    for (long long v : c_) t += v;
    return t;
  }

  bool palindromic() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return true;
  }

  bool nonnegative() const {
    for (long long v : c_) if (v < 0) return false;
    return true;
  }

  const std::vector<long long>& coeffs() const { return c_; }

  bool operator==(const QPolynomial&) const = default;

  std::string to_string(bool cohomological = true) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      int d = static_cast<int>(i) * (cohomological ? 2 : 1);
      if (d == 0) {
        out += std::to_string(c_[i]);
      } else {
        if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
        out += "q^" + std::to_string(d);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<long long> c_;
};

}  // namespace dsv
