#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dsv/config.hpp"
#include "dsv/groebner.hpp"
#include "dsv/linalg.hpp"
#include "dsv/partition.hpp"
#include "dsv/polynomial.hpp"
#include "dsv/qpoly.hpp"

namespace dsv {

// Parameters (n, lambda, s) with |lambda| = k <= n and s >= max(len(lambda), 1).
struct RingSpec {
  int n = 0;
  Partition lambda;
  int s = 1;

  RingSpec(int n_, Partition lambda_, int s_) : n(n_), lambda(std::move(lambda_)), s(s_) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (lambda.size() > n) throw std::invalid_argument("|lambda| must be at most n");
    if (s < lambda.length() || s < 1)
      throw std::invalid_argument("s must be a positive integer >= len(lambda)");
  }

  int k() const { return lambda.size(); }
  int K() const { return s * (n - k()) + k(); }
  Partition padded_shape() const { return big_lambda(n, lambda, s); }

  std::string to_string() const {
    std::ostringstream out;
    out << "(n=" << n << ", lambda=" << (lambda.empty() ? "0" : lambda.to_string())
        << ", s=" << s << ")";
    return out.str();
  }

  auto operator<=>(const RingSpec&) const = default;
};

namespace detail {

template <typename Fn>
void for_each_subset(int n, int m, Fn&& fn) {
  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  if (m > n) return;
  while (true) {
    fn(pick);
    int pos = m - 1;
    while (pos >= 0 && pick[pos] == n - m + pos) --pos;
    if (pos < 0) break;
    pick[pos] += 1;
    for (int j = pos + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Normal form of x_var^power by repeated multiply-and-reduce, so the working
// polynomial stays expressed in standard monomials at every degree.
inline Poly reduced_power(MonomialReducer& reducer, int var, int nvars, int power) {
  Poly nf = reducer.reduce(Poly::monomial(Monomial::variable(var, nvars)));
  for (int d = 2; d <= power; ++d)
    nf = reducer.reduce(nf.times_term(Monomial::variable(var, nvars), 1));
  return nf;
}

}  // namespace detail

// Generators e_d(S) over S a subset of {x_1..x_n} and
// d > |S| - (last |S| parts of lambda'), restricted to 1 <= d <= |S|.
inline std::vector<Poly> ideal_I_n_lambda(int n, const Partition& lambda) {
  if (lambda.size() > n) throw std::invalid_argument("|lambda| must be at most n");
  Partition conj = lambda.conjugate();
  std::vector<Poly> gens;
  for (int m = 1; m <= n; ++m) {
    long long tail = 0;
    for (int j = n - m + 1; j <= n; ++j) tail += conj.part(j);
    int lo = std::max(m - static_cast<int>(tail) + 1, 1);
    if (lo > m) continue;
    detail::for_each_subset(n, m, [&](const std::vector<int>& pick) {
      for (int d = lo; d <= m; ++d) gens.push_back(elementary_symmetric(pick, d, n));
    });
  }
  return gens;
}

inline std::vector<Poly> ideal_I_n_lambda(const RingSpec& spec) {
  return ideal_I_n_lambda(spec.n, spec.lambda);
}

// The above plus the power generators x_i^s.
inline std::vector<Poly> ideal_I_n_lambda_s(const RingSpec& spec) {
  std::vector<Poly> gens = ideal_I_n_lambda(spec);
  for (int i = 0; i < spec.n; ++i)
    gens.push_back(Poly::monomial(Monomial::variable(i, spec.n, spec.s)));
  return gens;
}

// Block symmetric ideal in |mu| variables attached to a composition mu and a
// partition nu of the same size. The variables split into consecutive blocks
// X_1..X_l of sizes mu_1..mu_l; each subset of blocks contributes the
// elementary symmetric polynomials of its union in degrees
// d > (sum of chosen mu_i) - (nu'_{l-p+1} + ... + nu'_m).
inline std::vector<Poly> ideal_blocks(const std::vector<int>& mu, const Partition& nu) {
  int m = std::accumulate(mu.begin(), mu.end(), 0);
  if (m != nu.size()) throw std::invalid_argument("composition and partition sizes differ");
  for (int part : mu)
    if (part <= 0) throw std::invalid_argument("composition parts must be positive");
  int l = static_cast<int>(mu.size());
  std::vector<int> start(l + 1, 0);
  for (int j = 0; j < l; ++j) start[j + 1] = start[j] + mu[j];
  Partition conj = nu.conjugate();
  std::vector<Poly> gens;
  for (int p = 1; p <= l; ++p) {
    long long tail = 0;
    for (int j = l - p + 1; j <= m; ++j) tail += conj.part(j);
    detail::for_each_subset(l, p, [&](const std::vector<int>& blocks) {
      std::vector<int> vars;
      int total = 0;
      for (int b : blocks) {
        total += mu[b];
        for (int v = start[b]; v < start[b + 1]; ++v) vars.push_back(v);
      }
      int lo = std::max(total - static_cast<int>(tail) + 1, 1);
      for (int d = lo; d <= total; ++d) gens.push_back(elementary_symmetric(vars, d, m));
    });
  }
  return gens;
}

// The composition (1^n, (s-1)^{n-k}) used for the containment checks; the
// repeated part is dropped entirely when s = 1.
inline std::vector<int> containment_composition(const RingSpec& spec) {
  std::vector<int> mu(spec.n, 1);
  if (spec.s > 1) mu.insert(mu.end(), spec.n - spec.k(), spec.s - 1);
  return mu;
}

// Memoized reduced bases for the quotient presentations.
inline std::shared_ptr<const GroebnerBasis> groebner_of(const RingSpec& spec) {
  config::check(spec.n <= config::limits().groebner_max_vars, "groebner_max_vars",
                "n = " + std::to_string(spec.n));
  static std::mutex lock;
  static std::map<RingSpec, std::shared_ptr<const GroebnerBasis>> memo;
  {
    std::scoped_lock guard(lock);
    auto it = memo.find(spec);
    if (it != memo.end()) return it->second;
  }
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(ideal_I_n_lambda_s(spec)));
  std::scoped_lock guard(lock);
  return memo.emplace(spec, std::move(basis)).first->second;
}

inline QPolynomial hilbert_groebner(const RingSpec& spec) {
  return standard_monomial_series(*groebner_of(spec));
}

namespace detail {

using HilbKey = std::tuple<int, std::vector<int>, int>;

inline QPolynomial hilbert_rec(int n, const Partition& lambda, int s,
                               std::map<HilbKey, QPolynomial>& memo) {
  if (lambda.size() > n) return QPolynomial{};
  if (n == 0) return QPolynomial::one();
  HilbKey key{n, lambda.parts(), s};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  QPolynomial total;
  for (int i = 1; i <= lambda.length(); ++i)
    total += hilbert_rec(n - 1, remove_row(lambda, i), s, memo).shifted(i - 1);
  for (int i = lambda.length() + 1; i <= s; ++i)
    total += hilbert_rec(n - 1, lambda, s, memo).shifted(i - 1);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

inline QPolynomial hilbert_recursive(const RingSpec& spec) {
  static std::mutex lock;
  static std::map<detail::HilbKey, QPolynomial> memo;
  std::scoped_lock guard(lock);
  return detail::hilbert_rec(spec.n, spec.lambda, spec.s, memo);
}

namespace detail {

inline void artin_rec(int n, const Partition& lambda, int s, std::vector<int>& exps,
                      std::vector<Monomial>& out) {
  if (lambda.size() > n) return;
  if (n == 0) {
    out.push_back(Monomial::of_exps(exps));
    return;
  }
  for (int i = 1; i <= lambda.length(); ++i) {
    exps[n - 1] = i - 1;
    artin_rec(n - 1, remove_row(lambda, i), s, exps, out);
  }
  for (int i = lambda.length() + 1; i <= s; ++i) {
    exps[n - 1] = i - 1;
    artin_rec(n - 1, lambda, s, exps, out);
  }
  exps[n - 1] = 0;
}

}  // namespace detail

// The recursive monomial basis: branch i at stage n multiplies by x_n^{i-1}.
inline std::vector<Monomial> artin_basis(const RingSpec& spec) {
  std::vector<Monomial> out;
  std::vector<int> exps(spec.n, 0);
  detail::artin_rec(spec.n, spec.lambda, spec.s, exps, out);
  return out;
}

struct ArtinBasisReport {
  bool pass = false;
  int fail_degree = -1;
  // Rational coefficients of a vanishing combination of the basis elements in
  // the failing degree, aligned with `witnesses`.
  std::vector<std::string> dependency;
  std::vector<std::string> witnesses;
  std::string message;
};

// Checks that the recursive basis is a graded basis of the quotient: the
// counts per degree match the standard-monomial counts and the normal forms
// are linearly independent.
inline ArtinBasisReport verify_artin_basis(const RingSpec& spec) {
  ArtinBasisReport report;
  auto basis = groebner_of(spec);
  auto standard = standard_monomials_by_degree(*basis);
  std::vector<std::vector<Monomial>> artin_by_degree;
  for (const Monomial& m : artin_basis(spec)) {
    if (static_cast<int>(artin_by_degree.size()) <= m.degree)
      artin_by_degree.resize(m.degree + 1);
    artin_by_degree[m.degree].push_back(m);
  }
  std::size_t degrees = std::max(standard.size(), artin_by_degree.size());
  for (std::size_t d = 0; d < degrees; ++d) {
    const auto std_d = d < standard.size() ? standard[d] : std::vector<Monomial>{};
    const auto artin_d = d < artin_by_degree.size() ? artin_by_degree[d] : std::vector<Monomial>{};
    if (std_d.size() != artin_d.size()) {
      report.fail_degree = static_cast<int>(d);
      report.message = "degree " + std::to_string(2 * d) + ": basis has " +
                       std::to_string(artin_d.size()) + " elements but the quotient has rank " +
                       std::to_string(std_d.size());
      return report;
    }
    if (artin_d.empty()) continue;
    std::map<Monomial, std::size_t, DrlGreater> column;
    for (std::size_t c = 0; c < std_d.size(); ++c) column.emplace(std_d[c], c);
    std::vector<std::vector<Rational>> rows;
    for (const Monomial& m : artin_d) {
      Poly nf = normal_form(Poly::monomial(m), *basis);
      std::vector<Rational> row(std_d.size(), 0);
      for (const Term& t : nf.terms()) row[column.at(t.mono)] = t.coeff;
      rows.push_back(std::move(row));
    }
    if (auto dependency = left_kernel_vector(rows)) {
      report.fail_degree = static_cast<int>(d);
      for (std::size_t i = 0; i < artin_d.size(); ++i) {
        if ((*dependency)[i] == 0) continue;
        report.dependency.push_back((*dependency)[i].get_str());
        report.witnesses.push_back(to_string(artin_d[i]));
      }
      report.message = "degree " + std::to_string(2 * d) + ": normal forms are dependent";
      return report;
    }
  }
  report.pass = true;
  report.message = "basis verified through degree " + std::to_string(2 * (degrees ? degrees - 1 : 0));
  return report;
}

struct ContainmentReport {
  bool pass = false;
  int checked = 0;
  // Generators with nonzero normal form, with the offending remainders.
  std::vector<std::string> witnesses;
  std::string message;
};

// Empirical check that every generator of the quotient ideal reduces to zero
// modulo the block symmetric ideal of the padded shape, using a basis
// truncated at the largest generator degree.
inline ContainmentReport verify_containment(const RingSpec& spec) {
  config::check(spec.K() <= config::limits().section5_max_vars, "section5_max_vars",
                "K = " + std::to_string(spec.K()));
  ContainmentReport report;
  int K = spec.K();
  std::vector<Poly> targets = ideal_I_n_lambda_s(spec);
  std::vector<Poly> block_gens = ideal_blocks(containment_composition(spec), spec.padded_shape());
  if (spec.k() == spec.n && spec.n > 0 && block_gens == ideal_I_n_lambda(spec)) {
    // Singleton blocks reproduce the e_d(S) generators verbatim, so only the
    // power generators call for a division, against a basis cut at degree s.
    // The generator set is permutation stable, so one power settles them all.
    report.checked = static_cast<int>(block_gens.size()) + spec.n;
    GroebnerBasis blocks = buchberger(std::move(block_gens), spec.s);
    MonomialReducer reducer(blocks);
    if (Poly reduced = detail::reduced_power(reducer, 0, K, spec.s); !reduced.is_zero())
      report.witnesses.push_back("x1^" + std::to_string(spec.s) + " -> " + reduced.to_string());
    report.pass = report.witnesses.empty();
    report.message = report.pass
                         ? "all " + std::to_string(report.checked) + " generators reduce to zero"
                         : std::to_string(report.witnesses.size()) + " generators fail to reduce";
    return report;
  }
  // The block ideal is stable under permuting the n singleton-block
  // variables: a permuted union of blocks is again a union with the same size
  // profile and the same degree bound. Membership of one representative per
  // subset size therefore settles the whole orbit of generators.
  std::vector<Poly> reps;
  Partition conj = spec.lambda.conjugate();
  for (int m = 1; m <= spec.n; ++m) {
    long long tail = 0;
    for (int j = spec.n - m + 1; j <= spec.n; ++j) tail += conj.part(j);
    int lo = std::max(m - static_cast<int>(tail) + 1, 1);
    std::vector<int> lead(m);
    for (int i = 0; i < m; ++i) lead[i] = i;
    for (int d = lo; d <= m; ++d) reps.push_back(elementary_symmetric(lead, d, spec.n));
  }
  int max_degree = spec.s;
  for (const Poly& g : targets) max_degree = std::max(max_degree, g.degree());
  GroebnerBasis blocks = buchberger(std::move(block_gens), max_degree);
  MonomialReducer reducer(blocks);
  report.checked = static_cast<int>(targets.size());
  for (const Poly& g : reps) {
    Poly reduced = reducer.reduce(lift_to_nvars(g, K));
    if (!reduced.is_zero())
      report.witnesses.push_back(g.to_string() + " -> " + reduced.to_string());
  }
  if (spec.n > 0) {
    if (Poly reduced = detail::reduced_power(reducer, 0, K, spec.s); !reduced.is_zero())
      report.witnesses.push_back("x1^" + std::to_string(spec.s) + " -> " + reduced.to_string());
  }
  report.pass = report.witnesses.empty();
  report.message = report.pass
                       ? "all " + std::to_string(report.checked) + " generators reduce to zero"
                       : std::to_string(report.witnesses.size()) + " generators fail to reduce";
  return report;
}

}  // namespace dsv
