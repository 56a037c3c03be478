#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsv/monomial.hpp"

namespace dsv {

using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coeff;
  bool operator==(const Term& other) const {
    return mono == other.mono && coeff == other.coeff;
  }
};

// Multivariate polynomial over Q with terms kept strictly decreasing in the
// fixed degrevlex order, so the leading term is terms().front().
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }

  static Poly constant(int nvars, Rational c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({Monomial::one(nvars), std::move(c)});
    return p;
  }

  static Poly monomial(Monomial m, Rational c = 1) {
    Poly p(m.nvars());
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  static Poly variable(int i, int nvars) { return monomial(Monomial::variable(i, nvars)); }

  // Sorts, combines equal monomials, drops zero coefficients.
  static Poly from_terms(int nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return drl_less(b.mono, a.mono); });
    Poly p(nvars);
    for (Term& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }

  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree; }

  bool is_homogeneous() const {
    for (const Term& t : terms_)
      if (t.mono.degree != terms_.front().mono.degree) return false;
    return true;
  }

  Poly& operator+=(const Poly& other) {
    *this = merged(*this, other, 1);
    return *this;
  }
  Poly& operator-=(const Poly& other) {
    *this = merged(*this, other, -1);
    return *this;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return merged(a, b, 1); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merged(a, b, -1); }

  Poly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (Term& t : terms_) t.coeff *= c;
    }
    return *this;
  }

  // this * (c * m)
  Poly times_term(const Monomial& m, const Rational& c) const {
    Poly out(nvars_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.nvars_);
    for (const Term& t : b.terms_) out += a.times_term(t.mono, t.coeff);
    return out;
  }

  void make_monic() {
    if (terms_.empty()) return;
    Rational lead = terms_.front().coeff;
    for (Term& t : terms_) t.coeff /= lead;
  }

  bool operator==(const Poly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  // "c*x1^a1*..." with terms in decreasing order; integer coefficients are
  // printed without denominator.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : terms_) {
      if (!out.empty()) out += " + ";
      out += t.coeff.get_str();
      if (!t.mono.is_one()) out += "*" + dsv::to_string(t.mono);
    }
    return out;
  }

 private:
  static Poly merged(const Poly& a, const Poly& b, int sign) {
    Poly out(std::max(a.nvars_, b.nvars_));
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      bool take_a;
      if (i == a.terms_.size()) {
        take_a = false;
      } else if (j == b.terms_.size()) {
        take_a = true;
      } else if (a.terms_[i].mono == b.terms_[j].mono) {
        Rational c = a.terms_[i].coeff + sign * b.terms_[j].coeff;
        if (c != 0) out.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
        continue;
      } else {
        take_a = drl_less(b.terms_[j].mono, a.terms_[i].mono);
      }
      if (take_a) {
        out.terms_.push_back(a.terms_[i++]);
      } else {
        out.terms_.push_back({b.terms_[j].mono, sign * b.terms_[j].coeff});
        ++j;
      }
    }
    return out;
  }

  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Elementary symmetric polynomial e_d in the variables listed in subset
// (0-based indices into x1..xn). e_0 = 1; d > |subset| gives 0.
inline Poly elementary_symmetric(const std::vector<int>& subset, int d, int nvars) {
  if (d < 0) throw std::invalid_argument("negative degree");
  if (d > static_cast<int>(subset.size())) return Poly(nvars);
  if (d == 0) return Poly::constant(nvars, 1);
  std::vector<Term> terms;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    Monomial m = Monomial::one(nvars);
    for (int idx : pick) {
      m.exps[subset[idx]] += 1;
      m.degree += 1;
    }
    terms.push_back({std::move(m), Rational(1)});
    int pos = d - 1;
    while (pos >= 0 && pick[pos] == static_cast<int>(subset.size()) - d + pos) --pos;
    if (pos < 0) break;
    pick[pos] += 1;
    for (int j = pos + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Poly::from_terms(nvars, std::move(terms));
}

// Apply x_i -> x_{perm[i]} (0-based), perm a permutation of 0..nvars-1.
inline Poly permute_variables(const Poly& p, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != p.nvars())
    throw std::invalid_argument("permutation length must match variable count");
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    std::vector<int> exps(p.nvars(), 0);
    for (int i = 0; i < p.nvars(); ++i) exps[perm[i]] = t.mono.exps[i];
    terms.push_back({Monomial::of_exps(std::move(exps)), t.coeff});
  }
  return Poly::from_terms(p.nvars(), std::move(terms));
}

// Extend to a larger variable count, exponents padded with zeros.
inline Poly lift_to_nvars(const Poly& p, int nvars) {
  if (nvars < p.nvars()) throw std::invalid_argument("cannot drop variables");
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    Monomial m = t.mono;
    m.exps.resize(nvars, 0);
    terms.push_back({std::move(m), t.coeff});
  }
  return Poly::from_terms(nvars, std::move(terms));
}

}  // namespace dsv
