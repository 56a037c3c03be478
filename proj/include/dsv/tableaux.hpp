#pragma once

#include <functional>
#include <numeric>
#include <vector>

#include "dsv/config.hpp"
#include "dsv/partition.hpp"

namespace dsv {

using TableauRows = std::vector<std::vector<int>>;

struct StandardTableau {
  Partition shape;
  TableauRows rows;
  bool operator==(const StandardTableau&) const = default;
};

// Hook length formula, n! / prod(hooks) with overflow kept at bay by
// cancelling each factorial factor against the hooks first.
inline long long syt_count(const Partition& shape) {
  int n = shape.size();
  if (n == 0) return 1;
  Partition conj = shape.conjugate();
  std::vector<long long> hooks;
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.part(i); ++j)
      hooks.push_back(shape.part(i) - j + conj.part(j) - i + 1);
  long long result = 1;
  for (int m = 2; m <= n; ++m) {
    long long value = m;
    for (auto& h : hooks) {
      if (h > 1) {
        long long g = std::gcd(value, h);
        value /= g;
        h /= g;
      }
      if (value == 1) break;
    }
    result *= value;
  }
  return result;
}

inline void for_each_syt(const Partition& shape,
                         const std::function<void(const StandardTableau&)>& visit) {
  int n = shape.size();
  config::check(n <= config::limits().syt_max_cells, "syt_max_cells",
                "shape has " + std::to_string(n) + " cells");
  TableauRows rows(shape.length());
  for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape[i], 0);
  std::vector<int> fill(shape.length(), 0);  // number of filled cells per row
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      visit(StandardTableau{shape, rows});
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      int c = fill[r];
      if (c >= shape[r]) continue;
      if (r > 0 && fill[r - 1] <= c) continue;  // cell above must be filled
      rows[r][c] = next;
      fill[r] += 1;
      rec(next + 1);
      fill[r] -= 1;
      rows[r][c] = 0;
    }
  };
  rec(1);
}

inline std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); });
  return out;
}

// Semistandard tableaux of the given shape and content (content[i] copies of
// i+1): rows weakly increase, columns strictly increase.
inline void for_each_ssyt(const Partition& shape, const std::vector<int>& content,
                          const std::function<void(const TableauRows&)>& visit) {
  TableauRows rows(shape.length());
  for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape[i], 0);
  std::vector<int> remaining(content);
  int total = 0;
  for (int c : content) total += c;
  if (total != shape.size()) return;
  // Fill cells row-major; value constraints look left and up.
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == shape.length()) {
      visit(rows);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= shape[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0 && c < shape[r - 1]) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(content.size()); ++v) {
      if (remaining[v - 1] == 0) continue;
      rows[r][c] = v;
      remaining[v - 1] -= 1;
      rec(nr, nc);
      remaining[v - 1] += 1;
      rows[r][c] = 0;
    }
  };
  if (shape.length() == 0) {
    visit(rows);
    return;
  }
  rec(0, 0);
}

inline long long kostka_number(const Partition& shape, const Partition& content) {
  long long count = 0;
  for_each_ssyt(shape, content.parts(), [&](const TableauRows&) { ++count; });
  return count;
}

}  // namespace dsv
