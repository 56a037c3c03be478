#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsv {

struct Monomial {
  std::vector<int> exps;
  int degree = 0;

  static Monomial one(int nvars) {
    Monomial m;
    m.exps.assign(nvars, 0);
    return m;
  }

  static Monomial of_exps(std::vector<int> exps) {
    Monomial m;
    m.degree = std::accumulate(exps.begin(), exps.end(), 0);
    m.exps = std::move(exps);
    return m;
  }

  // 0-based variable index.
  static Monomial variable(int i, int nvars, int power = 1) {
    Monomial m = one(nvars);
    m.exps[i] = power;
    m.degree = power;
    return m;
  }

  int nvars() const { return static_cast<int>(exps.size()); }
  bool is_one() const { return degree == 0; }

  bool operator==(const Monomial& other) const { return exps == other.exps; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (int i = 0; i < m.nvars(); ++i) m.exps[i] += b.exps[i];
  m.degree += b.degree;
  return m;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

inline Monomial quotient(const Monomial& num, const Monomial& den) {
  Monomial m = num;
  for (int i = 0; i < m.nvars(); ++i) {
    m.exps[i] -= den.exps[i];
    if (m.exps[i] < 0) throw std::invalid_argument("monomial quotient not integral");
  }
  m.degree -= den.degree;
  return m;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.degree = 0;
  for (int i = 0; i < m.nvars(); ++i) {
    m.exps[i] = std::max(a.exps[i], b.exps[i]);
    m.degree += m.exps[i];
  }
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exps[i] > 0 && b.exps[i] > 0) return false;
  return true;
}

// Graded reverse lexicographic order with x1 > x2 > ... > xn.
inline bool drl_less(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.exps[i] - b.exps[i];
    if (d != 0) return d > 0;
  }
  return false;
}

struct DrlGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return drl_less(b, a); }
};

inline std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out;
}

}  // namespace dsv
