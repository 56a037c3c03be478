#pragma once
// Cross-module consistency checks behind the `verify` subcommand. Every
// invariant promised by the library is swept over a parameter range and
// reported as one matrix row per family and size. The families recompute
// everything from scratch on purpose: agreement between independent code
// paths is the whole point.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dsv/cells.hpp"
#include "dsv/hall_littlewood.hpp"
#include "dsv/prd.hpp"
#include "dsv/presentations.hpp"
#include "dsv/stable.hpp"

namespace dsv {

struct CheckResult {
  std::string family;
  std::string instance;
  bool pass = true;
  std::string detail;
};

namespace detail {

inline long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

inline long long stirling2(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k <= 0 || k > n) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

// All ring parameters with this n and s <= max_s.
template <typename Fn>
void for_each_spec(int n, int max_s, Fn&& fn) {
  for (int k = 0; k <= n; ++k)
    for (const Partition& lambda : partitions_of(k))
      for (int s = std::max(lambda.length(), 1); s <= max_s; ++s)
        fn(RingSpec(n, lambda, s));
}

inline CheckResult row(std::string family, std::string instance, bool pass,
                       std::string detail) {
  return CheckResult{std::move(family), std::move(instance), pass, std::move(detail)};
}

// Collects the first failure; counts instances either way.
struct Tally {
  int checked = 0;
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  std::string summary(const std::string& unit) const {
    return pass ? std::to_string(checked) + " " + unit : detail;
  }
};

}  // namespace detail

// Conjugation, the n statistic, hook counts and padded-shape sizes.
inline std::vector<CheckResult> check_partitions(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_n; ++n) {
    detail::Tally t;
    for (const Partition& lambda : partitions_of(n)) {
      Partition conj = lambda.conjugate();
      t.require(conj.conjugate() == lambda, "conjugate is not an involution at " + lambda.to_string());
      long long cols = 0;
      for (int j = 1; j <= conj.length(); ++j)
        cols += detail::binomial_ll(conj.part(j), 2);
      t.require(n_stat(lambda) == cols, "n statistic mismatch at " + lambda.to_string());
      if (n <= config::limits().syt_max_cells) {
        long long direct = 0;
        for_each_syt(lambda, [&](const StandardTableau&) { ++direct; });
        t.require(syt_count(lambda) == direct, "tableau count mismatch at " + lambda.to_string());
      }
    }
    detail::for_each_spec(n, 4, [&](const RingSpec& spec) {
      Partition shape = spec.padded_shape();
      t.require(shape.size() == spec.K(), "padded shape size mismatch at " + spec.to_string());
      t.require(shape.conjugate().conjugate() == shape,
                "padded conjugation mismatch at " + spec.to_string());
    });
    out.push_back(detail::row("partitions", "n=" + std::to_string(n), t.pass, t.summary("identities")));
  }
  return out;
}

// The reduced basis must not depend on generator order, and must reduce its
// own input to zero.
inline std::vector<CheckResult> check_groebner_determinism(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= std::min(max_n, 4); ++n) {
    detail::Tally t;
    detail::for_each_spec(n, 3, [&](const RingSpec& spec) {
      std::vector<Poly> gens = ideal_I_n_lambda_s(spec);
      GroebnerBasis forward = buchberger(gens);
      std::reverse(gens.begin(), gens.end());
      GroebnerBasis backward = buchberger(gens);
      t.require(forward == backward, "basis depends on generator order at " + spec.to_string());
      for (const Poly& g : gens)
        t.require(normal_form(g, forward).is_zero(),
                  "generator fails to reduce at " + spec.to_string());
    });
    out.push_back(detail::row("groebner-determinism", "n=" + std::to_string(n), t.pass,
                              t.summary("bases")));
  }
  return out;
}

// Four routes to the Hilbert series: Groebner standard monomials, the
// branching recursion, cell dimensions, and the graded character.
inline std::vector<CheckResult> check_hilbert_agreement(int max_n, int max_s = 4) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_n; ++n) {
    detail::Tally t;
    detail::for_each_spec(n, max_s, [&](const RingSpec& spec) {
      QPolynomial reference = hilbert_recursive(spec);
      if (spec.n <= 6)
        t.require(hilbert_groebner(spec) == reference,
                  "Groebner series differs at " + spec.to_string());
      if (spec.n <= config::limits().paving_max_n) {
        t.require(paving_hilbert(spec) == reference, "cell series differs at " + spec.to_string());
        t.require(graded_frobenius(spec).dimension_series() == reference,
                  "character dimensions differ at " + spec.to_string());
      }
    });
    out.push_back(detail::row("hilbert-agreement", "n=" + std::to_string(n), t.pass,
                              t.summary("ring specs")));
  }
  return out;
}

// Top degree 2(n(lambda) + (s-1)(n-k)) with a positive leading coefficient.
inline std::vector<CheckResult> check_top_degree(int max_n, int max_s = 4) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_n; ++n) {
    detail::Tally t;
    detail::for_each_spec(n, max_s, [&](const RingSpec& spec) {
      QPolynomial h = hilbert_recursive(spec);
      int expected = n_stat(spec.lambda) + (spec.s - 1) * (spec.n - spec.k());
      t.require(h.top_degree() == expected, "top degree differs at " + spec.to_string());
      t.require(h.coeff(expected) > 0, "top coefficient not positive at " + spec.to_string());
    });
    out.push_back(detail::row("top-degree", "n=" + std::to_string(n), t.pass,
                              t.summary("ring specs")));
  }
  return out;
}

// Artin monomials stay linearly independent degree by degree.
inline std::vector<CheckResult> check_artin(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= std::min(max_n, 5); ++n) {
    detail::Tally t;
    detail::for_each_spec(n, 4, [&](const RingSpec& spec) {
      ArtinBasisReport report = verify_artin_basis(spec);
      t.require(report.pass, spec.to_string() + ": " + report.message);
    });
    out.push_back(detail::row("artin-basis", "n=" + std::to_string(n), t.pass,
                              t.summary("ring specs")));
  }
  return out;
}

// Every generator lies in the block-symmetric ideal with composition
// (1^n, (s-1)^(n-k)); swept by total variable count K. For n = k the block
// ideal does not depend on s and raising s only appends multiples of x_i^l,
// so the boundary value of s settles every larger one.
inline std::vector<CheckResult> check_containment(int max_K, int max_n) {
  std::vector<CheckResult> out;
  std::map<int, std::vector<RingSpec>> by_K;
  for (int n = 1; n <= std::min(max_K, max_n); ++n)
    for (int k = 0; k <= n; ++k)
      for (const Partition& lambda : partitions_of(k)) {
        if (k == n) {
          by_K[n].push_back(RingSpec(n, lambda, std::max(lambda.length(), 1)));
          continue;
        }
        for (int s = std::max(lambda.length(), 1); s * (n - k) + k <= max_K; ++s)
          by_K[s * (n - k) + k].push_back(RingSpec(n, lambda, s));
      }
  std::vector<std::pair<int, RingSpec>> jobs;
  for (const auto& [K, specs] : by_K)
    for (const RingSpec& spec : specs) jobs.emplace_back(K, spec);
  std::vector<std::pair<bool, std::string>> results(jobs.size());
  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < jobs.size(); i += stride) {
      ContainmentReport report = verify_containment(jobs[i].second);
      results[i] = {report.pass, jobs[i].second.to_string() + ": " + report.message};
    }
  };
  int threads = std::min<int>(config::thread_count(), static_cast<int>(jobs.size()));
  if (threads > 1) {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          run(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (std::thread& worker : pool) worker.join();
    for (const std::exception_ptr& error : errors)
      if (error) std::rethrow_exception(error);
  } else {
    run(0, 1);
  }
  std::size_t at = 0;
  for (const auto& [K, specs] : by_K) {
    detail::Tally t;
    for (std::size_t i = 0; i < specs.size(); ++i, ++at)
      t.require(results[at].first, results[at].second);
    out.push_back(detail::row("containment", "K=" + std::to_string(K), t.pass,
                              t.summary("ring specs")));
  }
  return out;
}

// The ideal is symmetric: permuted generators still reduce to zero.
inline std::vector<CheckResult> check_generator_symmetry(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    detail::Tally t;
    std::vector<std::vector<int>> perms;
    std::vector<int> rev(n);
    for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
    perms.push_back(rev);
    if (n >= 2) {
      std::vector<int> swap_front(n);
      for (int i = 0; i < n; ++i) swap_front[i] = i;
      std::swap(swap_front[0], swap_front[1]);
      perms.push_back(swap_front);
    }
    if (n >= 3) {
      std::vector<int> cycle(n);
      for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
      perms.push_back(cycle);
    }
    detail::for_each_spec(n, 3, [&](const RingSpec& spec) {
      auto basis = groebner_of(spec);
      for (const Poly& g : ideal_I_n_lambda_s(spec))
        for (const auto& perm : perms)
          t.require(normal_form(permute_variables(g, perm), *basis).is_zero(),
                    "permuted generator escapes the ideal at " + spec.to_string());
    });
    out.push_back(detail::row("generator-symmetry", "n=" + std::to_string(n), t.pass,
                              t.summary("reductions")));
  }
  return out;
}

// n = k: the power generators are redundant and the graded character is the
// transformed Hall-Littlewood expansion, computed here by charge.
inline std::vector<CheckResult> check_square_case(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    detail::Tally t;
    for (const Partition& lambda : partitions_of(n)) {
      int s = lambda.length();
      RingSpec spec(n, lambda, s);
      if (n <= 6)
        t.require(buchberger(ideal_I_n_lambda_s(spec)) == buchberger(ideal_I_n_lambda(spec)),
                  "power generators change the basis at " + spec.to_string());
      if (n <= config::limits().paving_max_n)
        t.require(graded_frobenius(spec) == modified_hall_littlewood(lambda),
                  "character differs from the charge expansion at " + spec.to_string());
    }
    out.push_back(detail::row("square-case", "n=" + std::to_string(n), t.pass,
                              t.summary("shapes")));
  }
  return out;
}

// lambda = (1^k), s = k: cells count ordered set partitions of [n] into k
// blocks, and the ideal matches the explicit power-and-elementary form.
inline std::vector<CheckResult> check_rank_case(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= std::min(max_n, config::limits().paving_max_n); ++n) {
    detail::Tally t;
    for (int k = 1; k <= n; ++k) {
      RingSpec spec(n, Partition(std::vector<int>(k, 1)), k);
      std::vector<Cell> cells = enumerate_cells(spec);
      long long expected = 1;
      for (int i = 1; i <= k; ++i) expected *= i;
      expected *= detail::stirling2(n, k);
      t.require(static_cast<long long>(cells.size()) == expected,
                "cell count differs from ordered set partitions at " + spec.to_string());
      std::set<std::vector<std::vector<int>>> osps;
      ShapeFilling T = reading_order_filling(spec);
      for (const Cell& cell : cells) osps.insert(osp_of_cell(cell.w, T));
      t.require(static_cast<long long>(osps.size()) == expected,
                "cells and set partitions fail to biject at " + spec.to_string());
      if (n <= 6) {
        std::vector<Poly> plain;
        for (int i = 0; i < n; ++i) {
          Monomial m = Monomial::variable(i, n);
          for (int rep = 1; rep < k; ++rep) m = m * Monomial::variable(i, n);
          plain.push_back(Poly::monomial(m));
        }
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        for (int d = n; d > n - k; --d) plain.push_back(elementary_symmetric(all, d, n));
        t.require(buchberger(ideal_I_n_lambda_s(spec)) == buchberger(plain),
                  "explicit presentation differs at " + spec.to_string());
      }
    }
    out.push_back(detail::row("rank-case", "n=" + std::to_string(n), t.pass,
                              t.summary("ranks")));
  }
  return out;
}

// Component classes: count, the boundary nonemptiness rule, and
// equidimensionality of the top cells.
inline std::vector<CheckResult> check_components(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= std::min(max_n, 6); ++n) {
    detail::Tally t;
    detail::for_each_spec(n, 3, [&](const RingSpec& spec) {
      std::vector<Component> comps = enumerate_components(spec);
      int ell = spec.lambda.length();
      if (spec.s > ell) {
        long long expected = detail::binomial_ll(spec.n, spec.k()) * syt_count(spec.lambda);
        t.require(static_cast<long long>(comps.size()) == expected,
                  "component count differs at " + spec.to_string());
      }
      std::set<ComponentClass> seen;
      for (const Component& comp : comps) seen.insert(comp.cls);
      std::set<ComponentClass> predicted;
      for (const ComponentClass& cls : p_classes(spec.n, spec.lambda))
        if (class_is_nonempty(cls, spec.s)) predicted.insert(cls);
      t.require(seen == predicted, "nonempty classes differ at " + spec.to_string());
      int top = n_stat(spec.lambda) + (spec.s - 1) * (spec.n - spec.k());
      for (const Component& comp : comps)
        t.require(comp.top_dimension == top, "component misses the top dimension at " +
                                                 spec.to_string() + " class " + comp.cls.to_string());
    });
    out.push_back(detail::row("components", "n=" + std::to_string(n), t.pass,
                              t.summary("ring specs")));
  }
  return out;
}

// The cell search and the direct enumeration must list the same partial
// fillings.
inline std::vector<CheckResult> check_cell_bijection(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= std::min(max_n, 6); ++n) {
    detail::Tally t;
    detail::for_each_spec(n, 3, [&](const RingSpec& spec) {
      std::vector<IPRDFilling> from_cells;
      for (const Cell& cell : enumerate_cells(spec)) from_cells.push_back(cell.iprd);
      std::sort(from_cells.begin(), from_cells.end());
      t.require(std::adjacent_find(from_cells.begin(), from_cells.end()) == from_cells.end(),
                "cells repeat a filling at " + spec.to_string());
      t.require(from_cells == enumerate_iprds_direct(spec),
                "cell fillings differ from the direct list at " + spec.to_string());
    });
    out.push_back(detail::row("cell-bijection", "n=" + std::to_string(n), t.pass,
                              t.summary("ring specs")));
  }
  return out;
}

// Schur positivity, the trivial bottom piece, and the predicted top piece.
inline std::vector<CheckResult> check_frobenius(int max_n, int max_s = 4) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= std::min(max_n, config::limits().paving_max_n); ++n) {
    detail::Tally t;
    detail::for_each_spec(n, max_s, [&](const RingSpec& spec) {
      GradedSymmetricFunction frob = graded_frobenius(spec);
      t.require(frob.schur_positive(), "negative Schur coefficient at " + spec.to_string());
      t.require(frob.piece(0) == SymmetricFunction::schur(Partition(std::vector<int>(spec.n > 0, spec.n))),
                "degree zero is not trivial at " + spec.to_string());
      TopDegreeReport report = top_degree_check(spec);
      t.require(report.pass, spec.to_string() + ": " + report.message);
      if (spec.s > spec.lambda.length()) {
        long long comps = detail::binomial_ll(spec.n, spec.k()) * syt_count(spec.lambda);
        t.require(frob.piece(frob.top_degree()).dimension() == comps,
                  "top piece dimension differs from the component count at " + spec.to_string());
      }
    });
    out.push_back(detail::row("frobenius", "n=" + std::to_string(n), t.pass,
                              t.summary("ring specs")));
  }
  return out;
}

// Raising s leaves low degrees alone once s clears the cutoff.
inline std::vector<CheckResult> check_stability(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= std::min(max_n, 4); ++n) {
    detail::Tally t;
    for (int k = 0; k <= n; ++k)
      for (const Partition& lambda : partitions_of(k)) {
        GradedSymmetricFunction stable = stable_frobenius(n, lambda, 4);
        int far = std::max(lambda.length(), 1) + 4;
        t.require(stable == graded_frobenius(RingSpec(n, lambda, far)).truncated(2),
                  "stable character differs from a large-s truncation at n=" + std::to_string(n) +
                      ", lambda=" + (lambda.empty() ? "0" : lambda.to_string()));
      }
    out.push_back(detail::row("stability", "n=" + std::to_string(n), t.pass,
                              t.summary("shapes")));
  }
  return out;
}

// The rank rings are graded but not Poincare dual; a witness must exist.
inline std::vector<CheckResult> check_palindromicity_witness(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k < n; ++k) {
      RingSpec spec(n, Partition(std::vector<int>(k, 1)), k);
      QPolynomial h = hilbert_recursive(spec);
      if (!h.palindromic()) {
        out.push_back(detail::row("palindromicity", "witness", true,
                                  spec.to_string() + " has series " + h.to_string()));
        return out;
      }
    }
  out.push_back(detail::row("palindromicity", "witness", false,
                            "all rank cases through n=" + std::to_string(max_n) +
                                " are palindromic"));
  return out;
}

// The full matrix, in a fixed order.
inline std::vector<CheckResult> verify_all(int max_n) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> rows) {
    out.insert(out.end(), std::make_move_iterator(rows.begin()),
               std::make_move_iterator(rows.end()));
  };
  append(check_partitions(max_n));
  append(check_groebner_determinism(max_n));
  append(check_hilbert_agreement(max_n));
  append(check_top_degree(max_n));
  append(check_artin(max_n));
  append(check_containment(std::min(10, max_n + 4), max_n));
  append(check_generator_symmetry(max_n));
  append(check_square_case(max_n));
  append(check_rank_case(max_n));
  append(check_components(max_n));
  append(check_cell_bijection(max_n));
  append(check_frobenius(max_n));
  append(check_stability(max_n));
  append(check_palindromicity_witness(max_n));
  return out;
}

// Checks for one ring, used when the subcommand is given explicit parameters.
inline std::vector<CheckResult> verify_spec(const RingSpec& spec) {
  std::vector<CheckResult> out;
  std::string label = spec.to_string();
  QPolynomial reference = hilbert_recursive(spec);

  detail::Tally agree;
  if (spec.n <= 6)
    agree.require(hilbert_groebner(spec) == reference, "Groebner series differs");
  if (spec.n <= config::limits().paving_max_n) {
    agree.require(paving_hilbert(spec) == reference, "cell series differs");
    agree.require(graded_frobenius(spec).dimension_series() == reference,
                  "character dimensions differ");
  }
  out.push_back(detail::row("hilbert-agreement", label, agree.pass, agree.summary("methods")));

  int expected = n_stat(spec.lambda) + (spec.s - 1) * (spec.n - spec.k());
  out.push_back(detail::row("top-degree", label, reference.top_degree() == expected,
                            reference.top_degree() == expected
                                ? "top cohomological degree " + std::to_string(2 * expected)
                                : "expected 2*" + std::to_string(expected) + ", found 2*" +
                                      std::to_string(reference.top_degree())));

  if (spec.n <= 6) {
    ArtinBasisReport artin = verify_artin_basis(spec);
    out.push_back(detail::row("artin-basis", label, artin.pass, artin.message));
  }
  if (spec.K() <= config::limits().section5_max_vars && spec.n >= 1) {
    ContainmentReport cont = verify_containment(spec);
    out.push_back(detail::row("containment", label, cont.pass, cont.message));
  }
  if (spec.n <= config::limits().paving_max_n) {
    GradedSymmetricFunction frob = graded_frobenius(spec);
    out.push_back(detail::row("schur-positivity", label, frob.schur_positive(),
                              frob.schur_positive() ? "all pieces Schur positive"
                                                    : "negative coefficient found"));
    TopDegreeReport top = top_degree_check(spec);
    out.push_back(detail::row("top-piece", label, top.pass,
                              top.pass ? "matches the predicted character" : top.message));
  }
  return out;
}

}  // namespace dsv
