#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsv {

// Weakly decreasing sequence of positive integers. Trailing zeros are never
// stored, so the empty partition is Partition{}.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }
  Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

  // Sorts decreasing and strips zeros; rejects negative entries.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
  }

  // Accepts "2,1"; the empty partition is spelled "" or "0".
  static Partition parse(const std::string& text) {
    if (text.empty() || text == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad partition entry '" + item + "'");
      }
      if (used != item.size()) throw std::invalid_argument("bad partition entry '" + item + "'");
      parts.push_back(value);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  // 1-based access with part(i) = 0 beyond the length.
  int part(int i) const {
    return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
  }

  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition{};
    out.assign(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) out[j] += 1;
    return Partition(std::move(out));
  }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
      if (inner.parts_[i] > parts_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  auto operator<=>(const Partition&) const = default;

 private:
  void validate() const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  std::vector<int> parts_;
};

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// n(lambda) = sum_i C(lambda'_i, 2) = sum_i (i-1) * lambda_i.
inline long long n_stat(const Partition& lambda) {
  long long r = 0;
  for (int i = 1; i <= lambda.length(); ++i) r += static_cast<long long>(i - 1) * lambda.part(i);
  return r;
}

// Dominance order on partitions of equal size: prefix sums of mu never exceed
// those of nu.
inline bool dominance_leq(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw std::invalid_argument("dominance needs equal sizes");
  long long pm = 0, pn = 0;
  int len = std::max(mu.length(), nu.length());
  for (int i = 1; i <= len; ++i) {
    pm += mu.part(i);
    pn += nu.part(i);
    if (pm > pn) return false;
  }
  return true;
}

// Padded shape (n-k+lambda_1, ..., n-k+lambda_s) with zero parts dropped.
inline Partition big_lambda(int n, const Partition& lambda, int s) {
  int k = lambda.size();
  if (n < 0 || k > n) throw std::invalid_argument("big_lambda needs |lambda| <= n");
  if (s < lambda.length() || s < 1) throw std::invalid_argument("big_lambda needs s >= max(len(lambda), 1)");
  std::vector<int> parts;
  for (int i = 1; i <= s; ++i) {
    int p = n - k + lambda.part(i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

// Decrement row i (1-based), re-sort, drop a trailing zero.
inline Partition remove_row(const Partition& lambda, int i) {
  if (i < 1 || i > lambda.length()) throw std::invalid_argument("remove_row: no such row");
  std::vector<int> parts = lambda.parts();
  parts[i - 1] -= 1;
  return Partition::from_unsorted(std::move(parts));
}

namespace detail {
inline void partitions_rec(int remaining, int cap, std::vector<int>& acc,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(cap, remaining); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

// All partitions of k, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw std::invalid_argument("partitions_of negative");
  std::vector<Partition> out;
  std::vector<int> acc;
  detail::partitions_rec(k, k == 0 ? 1 : k, acc, out);
  return out;
}

}  // namespace dsv
