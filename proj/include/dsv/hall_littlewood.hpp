#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dsv/config.hpp"
#include "dsv/partition.hpp"
#include "dsv/symfunc.hpp"
#include "dsv/tableaux.hpp"

namespace dsv {

// Charge of a word whose letter multiplicities weakly decrease.  Standard
// subwords are peeled off one at a time: find the rightmost 1, then scan
// leftwards cyclically for a 2, a 3, and so on; the running index starts at
// zero and grows by one whenever the scan wraps around the left end.
inline long long charge(const std::vector<int>& word) {
  int top = 0;
  for (int v : word) {
    if (v < 1) throw std::invalid_argument("word letters must be positive");
    top = std::max(top, v);
  }
  std::vector<int> count(top, 0);
  for (int v : word) count[v - 1] += 1;
  for (int v = 1; v < top; ++v)
    if (count[v - 1] < count[v])
      throw std::invalid_argument("charge needs weakly decreasing letter multiplicities");
  long long total = 0;
  std::vector<int> w = word;
  while (!w.empty()) {
    int m = *std::max_element(w.begin(), w.end());
    std::vector<char> marked(w.size(), 0);
    int pos = -1;
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
      if (w[i] == 1) {
        pos = i;
        break;
      }
    if (pos < 0) throw std::logic_error("letter 1 missing from a subword round");
    marked[pos] = 1;
    long long index = 0;
    for (int v = 2; v <= m; ++v) {
      int i = pos;
      bool wrapped = false;
      while (true) {
        i -= 1;
        if (i < 0) {
          i = static_cast<int>(w.size()) - 1;
          wrapped = true;
        }
        if (i == pos) throw std::logic_error("letter missing from a subword round");
        if (w[i] == v) break;
      }
      if (wrapped) index += 1;
      total += index;
      pos = i;
      marked[i] = 1;
    }
    std::vector<int> rest;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!marked[i]) rest.push_back(w[i]);
    w = std::move(rest);
  }
  return total;
}

// Cocharge is the complementary statistic against the maximum charge that
// the letter multiplicities allow.
inline long long cocharge(const std::vector<int>& word) {
  int top = 0;
  for (int v : word) top = std::max(top, v);
  std::vector<int> count(top, 0);
  for (int v : word) {
    if (v < 1) throw std::invalid_argument("word letters must be positive");
    count[v - 1] += 1;
  }
  Partition content;
  try {
    content = Partition(count);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cocharge needs weakly decreasing letter multiplicities");
  }
  return n_stat(content) - charge(word);
}

// Rows read left to right, bottom row first.
inline std::vector<int> reading_word(const TableauRows& rows) {
  std::vector<int> out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    for (int v : *it) out.push_back(v);
  return out;
}

// Modified Hall-Littlewood symmetric function: the shape of each
// semistandard tableau of content lambda contributes to the graded piece
// given by its cocharge.
inline GradedSymmetricFunction modified_hall_littlewood(const Partition& lambda) {
  config::check(lambda.size() <= config::limits().hall_littlewood_max, "hall_littlewood_max",
                "lambda has " + std::to_string(lambda.size()) + " cells");
  GradedSymmetricFunction out;
  long long shift = n_stat(lambda);
  for (const Partition& mu : partitions_of(lambda.size())) {
    for_each_ssyt(mu, lambda.parts(), [&](const TableauRows& tableau) {
      long long c = shift - charge(reading_word(tableau));
      out.add(static_cast<int>(c), mu, 1);
    });
  }
  return out;
}

}  // namespace dsv
