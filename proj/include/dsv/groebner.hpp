#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsv/polynomial.hpp"
#include "dsv/qpoly.hpp"

namespace dsv {

// Thrown by standard monomial enumeration when some variable has no pure
// power among the leading monomials, i.e. the quotient is not finite.
class InfiniteQuotientError : public std::runtime_error {
 public:
  explicit InfiniteQuotientError(int var /*0-based*/)
      : std::runtime_error("quotient is infinite dimensional: no pure power of x" +
                           std::to_string(var + 1) + " among leading monomials"),
        var_(var) {}
  int var() const { return var_; }

 private:
  int var_;
};

// Reduced basis for a homogeneous ideal under degrevlex with x1 > ... > xn.
// When truncation_degree >= 0 the basis decides ideal membership only up to
// that total degree.
struct GroebnerBasis {
  int nvars = 0;
  std::vector<Poly> gens;  // monic, interreduced, sorted by leading monomial
  int truncation_degree = -1;
  bool truncated() const { return truncation_degree >= 0; }
  bool operator==(const GroebnerBasis&) const = default;
};

// Full reduction: every term of the result is reducible by no generator.
// Deterministic: generators are scanned in their stored order.
inline Poly normal_form(const Poly& p, const std::vector<Poly>& gens) {
  Poly rem(p.nvars());
  Poly h = p;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool reduced = false;
    for (const Poly& g : gens) {
      if (divides(g.leading_term().mono, lt.mono)) {
        h -= g.times_term(quotient(lt.mono, g.leading_term().mono),
                          lt.coeff / g.leading_term().coeff);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem += Poly::monomial(lt.mono, lt.coeff);
      h -= Poly::monomial(lt.mono, lt.coeff);
    }
  }
  return rem;
}

inline Poly normal_form(const Poly& p, const GroebnerBasis& basis) {
  if (basis.truncated() && p.degree() > basis.truncation_degree)
    throw std::logic_error("normal form beyond the truncation degree is undecided");
  return normal_form(p, basis.gens);
}

// Normal forms taken one monomial at a time with memoisation. The remainder
// of division by a reduced basis is canonical, so this agrees with
// normal_form; the intermediates, however, stay expressed in already reduced
// monomials, which avoids the swell of term-by-term division on inputs like
// high variable powers.
class MonomialReducer {
 public:
  explicit MonomialReducer(const GroebnerBasis& basis) : basis_(&basis) {}

  Poly reduce(const Poly& p) {
    if (basis_->truncated() && p.degree() > basis_->truncation_degree)
      throw std::logic_error("normal form beyond the truncation degree is undecided");
    Poly out(p.nvars());
    for (const Term& t : p.terms())
      out += mono_form(t.mono).times_term(Monomial::one(p.nvars()), t.coeff);
    return out;
  }

 private:
  struct DrlLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return drl_less(a, b); }
  };

  const GroebnerBasis* basis_;
  std::map<Monomial, Poly, DrlLess> memo_;

  // Iterative two-phase descent: children of a monomial under one division
  // step are strictly smaller in the term order, so every chain lands on
  // reduced monomials eventually.
  const Poly& mono_form(const Monomial& m) {
    std::vector<Monomial> stack{m};
    while (!stack.empty()) {
      Monomial cur = stack.back();
      if (memo_.count(cur)) {
        stack.pop_back();
        continue;
      }
      const Poly* reducer = nullptr;
      for (const Poly& g : basis_->gens)
        if (divides(g.leading_term().mono, cur)) {
          reducer = &g;
          break;
        }
      if (!reducer) {
        memo_.emplace(cur, Poly::monomial(cur));
        stack.pop_back();
        continue;
      }
      Monomial shift = quotient(cur, reducer->leading_term().mono);
      bool ready = true;
      for (std::size_t i = 1; i < reducer->terms().size(); ++i) {
        Monomial child = reducer->terms()[i].mono * shift;
        if (!memo_.count(child)) {
          stack.push_back(std::move(child));
          ready = false;
        }
      }
      if (!ready) continue;
      Poly acc(cur.nvars());
      const Rational& lead = reducer->leading_term().coeff;
      for (std::size_t i = 1; i < reducer->terms().size(); ++i) {
        const Term& t = reducer->terms()[i];
        acc -= memo_.at(t.mono * shift).times_term(Monomial::one(cur.nvars()), t.coeff / lead);
      }
      memo_.emplace(std::move(cur), std::move(acc));
      stack.pop_back();
    }
    return memo_.at(m);
  }
};

namespace detail {

struct Pair {
  int lcm_degree;
  Monomial lcm;
  int i, j;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    if (!(a.lcm == b.lcm)) return drl_less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace detail

// Buchberger with the product and chain criteria. Input generators must be
// homogeneous and share the variable count. max_degree >= 0 truncates the
// computation to S-pairs of that total degree, which is enough to decide
// membership of homogeneous polynomials up to max_degree.
inline GroebnerBasis buchberger(std::vector<Poly> input, int max_degree = -1) {
  int nvars = -1;
  std::vector<Poly> gens;
  for (Poly& p : input) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous())
      throw std::invalid_argument("buchberger requires homogeneous generators");
    if (nvars < 0) nvars = p.nvars();
    if (p.nvars() != nvars) throw std::invalid_argument("mixed variable counts");
    if (max_degree >= 0 && p.degree() > max_degree) continue;
    gens.push_back(std::move(p));
  }
  GroebnerBasis out;
  out.nvars = std::max(nvars, 0);
  out.truncation_degree = max_degree;
  if (gens.empty()) return out;

  std::sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return drl_less(a.leading_term().mono, b.leading_term().mono);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Poly> basis;
  std::set<detail::Pair, detail::PairLess> pending;
  std::set<std::pair<int, int>> done;  // popped or skipped

  auto add_generator = [&](Poly p) {
    p.make_monic();
    int t = static_cast<int>(basis.size());
    for (int i = 0; i < t; ++i) {
      Monomial l = lcm(basis[i].leading_term().mono, p.leading_term().mono);
      if (max_degree >= 0 && l.degree > max_degree) continue;
      pending.insert({l.degree, std::move(l), i, t});
    }
    basis.push_back(std::move(p));
  };

  for (const Poly& g : gens) {
    Poly r = normal_form(g, basis);
    if (!r.is_zero()) add_generator(std::move(r));
  }

  auto treated = [&](int a, int b) {
    return done.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    detail::Pair pr = *pending.begin();
    pending.erase(pending.begin());
    done.insert({pr.i, pr.j});
    const Poly& f = basis[pr.i];
    const Poly& g = basis[pr.j];
    if (coprime(f.leading_term().mono, g.leading_term().mono)) continue;
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (divides(basis[k].leading_term().mono, pr.lcm) && treated(pr.i, k) &&
          treated(pr.j, k))
        chained = true;
    }
    if (chained) continue;
    Poly s = f.times_term(quotient(pr.lcm, f.leading_term().mono), 1) -
             g.times_term(quotient(pr.lcm, g.leading_term().mono), 1);
    Poly r = normal_form(s, basis);
    if (!r.is_zero()) add_generator(std::move(r));
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (divides(basis[j].leading_term().mono, basis[i].leading_term().mono)) keep[i] = false;
    }
  }
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Tail-reduce each survivor against the others; leading terms are stable.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], others);
    minimal[i].make_monic();
  }
  std::sort(minimal.begin(), minimal.end(), [](const Poly& a, const Poly& b) {
    return drl_less(a.leading_term().mono, b.leading_term().mono);
  });
  out.gens = std::move(minimal);
  return out;
}

// Monomials not divisible by any leading monomial, grouped by total degree.
// Requires a finite quotient: every variable must have a pure power among the
// leading monomials (the offending variable is reported otherwise).
inline std::vector<std::vector<Monomial>> standard_monomials_by_degree(
    const GroebnerBasis& basis) {
  if (basis.truncated())
    throw std::logic_error("standard monomials of a truncated basis are undecided");
  std::vector<Monomial> lts;
  for (const Poly& g : basis.gens) lts.push_back(g.leading_term().mono);
  for (const Monomial& lt : lts)
    if (lt.is_one()) return {};  // unit ideal, zero quotient
  int n = basis.nvars;
  std::vector<int> cap(n, -1);
  for (const Monomial& lt : lts) {
    int nz = -1;
    bool pure = true;
    for (int v = 0; v < n; ++v) {
      if (lt.exps[v] > 0) {
        if (nz >= 0) {
          pure = false;
          break;
        }
        nz = v;
      }
    }
    if (pure && nz >= 0 && (cap[nz] < 0 || lt.exps[nz] < cap[nz])) cap[nz] = lt.exps[nz];
  }
  for (int v = 0; v < n; ++v)
    if (cap[v] < 0) throw InfiniteQuotientError(v);

  std::vector<std::vector<Monomial>> by_degree;
  std::vector<int> exps(n, 0);
  auto emit = [&](const Monomial& m) {
    if (static_cast<int>(by_degree.size()) <= m.degree) by_degree.resize(m.degree + 1);
    by_degree[m.degree].push_back(m);
  };
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      Monomial m = Monomial::of_exps(exps);
      for (const Monomial& lt : lts)
        if (divides(lt, m)) return;
      emit(m);
      return;
    }
    for (int e = 0; e < cap[v]; ++e) {
      exps[v] = e;
      rec(v + 1);
    }
    exps[v] = 0;
  };
  rec(0);
  for (auto& bucket : by_degree)
    std::sort(bucket.begin(), bucket.end(), drl_less);
  return by_degree;
}

inline QPolynomial standard_monomial_series(const GroebnerBasis& basis) {
  QPolynomial q;
  auto groups = standard_monomials_by_degree(basis);
  for (std::size_t d = 0; d < groups.size(); ++d)
    if (!groups[d].empty()) q.add(static_cast<int>(d), static_cast<long long>(groups[d].size()));
  return q;
}

}  // namespace dsv
