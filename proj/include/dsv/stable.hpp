#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dsv/partition.hpp"
#include "dsv/prd.hpp"
#include "dsv/symfunc.hpp"

namespace dsv {

// Graded character of the inverse limit over growing s, reliable up to the
// cutoff: every filled cell in row i past the rows of lambda forces i-1
// inversions, so low degrees stop changing once s is large enough.  The row
// count is raised until two consecutive values agree below the cutoff.
inline GradedSymmetricFunction stable_frobenius(int n, const Partition& lambda,
                                                int max_cohomological_degree) {
  if (max_cohomological_degree < 0)
    throw std::invalid_argument("stable_frobenius needs a nonnegative cutoff");
  if (lambda.size() > n) throw std::invalid_argument("stable_frobenius needs |lambda| <= n");
  int cutoff = max_cohomological_degree / 2;
  int s = std::max(lambda.length(), 1);
  GradedSymmetricFunction prev = graded_frobenius(RingSpec(n, lambda, s)).truncated(cutoff);
  int cap = s + cutoff + 3;
  for (s += 1; s <= cap; ++s) {
    GradedSymmetricFunction cur = graded_frobenius(RingSpec(n, lambda, s)).truncated(cutoff);
    if (cur == prev) return cur;
    prev = std::move(cur);
  }
  throw std::logic_error("stable character did not settle below the cutoff");
}

// Conjugate every Schur term and flip the grading around the given top
// cohomological degree.  Applying the same twist twice gives back the input.
inline GradedSymmetricFunction omega_and_reverse(const GradedSymmetricFunction& f,
                                                 int top_cohomological_degree) {
  if (top_cohomological_degree % 2 != 0)
    throw std::invalid_argument("top degree must be even");
  int top = top_cohomological_degree / 2;
  if (f.top_degree() > top)
    throw std::invalid_argument("grading reversal needs the top degree to cover the support");
  GradedSymmetricFunction out;
  for (const auto& [d, piece] : f.pieces()) out.set_piece(top - d, piece.omega());
  return out;
}

}  // namespace dsv
