#pragma once

#include <optional>
#include <vector>

#include "dsv/polynomial.hpp"

namespace dsv {

// Row rank of an exact rational matrix (rows may have differing lengths in
// principle; callers pass rectangular data).
inline int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// A nontrivial rational combination of the rows equal to zero, if one exists.
// Row operations are tracked through an augmented identity block, so the
// returned coefficients refer to the original row order.
inline std::optional<std::vector<Rational>> left_kernel_vector(
    const std::vector<std::vector<Rational>>& input) {
  std::size_t nrows = input.size();
  std::size_t cols = input.empty() ? 0 : input[0].size();
  std::vector<std::vector<Rational>> rows = input;
  std::vector<std::vector<Rational>> track(nrows, std::vector<Rational>(nrows, 0));
  for (std::size_t r = 0; r < nrows; ++r) track[r][r] = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(track[rank], track[pivot]);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
      for (std::size_t c = 0; c < nrows; ++c) track[r][c] -= factor * track[rank][c];
    }
    ++rank;
  }
  for (std::size_t r = 0; r < nrows; ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) {
        zero = false;
        break;
      }
    if (zero) return track[r];
  }
  return std::nullopt;
}

}  // namespace dsv
