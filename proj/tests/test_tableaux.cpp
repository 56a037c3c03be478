#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "dsv/tableaux.hpp"

using dsv::Partition;

TEST_CASE("hook length counts") {
  CHECK(dsv::syt_count(Partition{}) == 1);
  CHECK(dsv::syt_count(Partition({5})) == 1);
  CHECK(dsv::syt_count(Partition({1, 1, 1, 1})) == 1);
  CHECK(dsv::syt_count(Partition({2, 1})) == 2);
  CHECK(dsv::syt_count(Partition({2, 2})) == 2);
  CHECK(dsv::syt_count(Partition({3, 2})) == 5);
  CHECK(dsv::syt_count(Partition({4, 2})) == 9);
  CHECK(dsv::syt_count(Partition({2, 2, 1})) == 5);
  CHECK(dsv::syt_count(Partition({3, 2, 1})) == 16);
  CHECK(dsv::syt_count(Partition({5, 4, 3, 2, 1})) == 292864);
}

TEST_CASE("sum of squared counts is n factorial") {
  long long factorial = 1;
  for (int n = 1; n <= 8; ++n) {
    factorial *= n;
    long long sum = 0;
    for (const Partition& p : dsv::partitions_of(n)) {
      long long f = dsv::syt_count(p);
      sum += f * f;
    }
    CHECK(sum == factorial);
  }
}

namespace {

bool standard(const Partition& shape, const dsv::TableauRows& rows) {
  std::set<int> seen;
  for (int r = 0; r < shape.length(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape[r]) return false;
    for (int c = 0; c < shape[r]; ++c) {
      int v = rows[r][c];
      if (v < 1 || v > shape.size() || !seen.insert(v).second) return false;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("standard tableau enumeration matches the count") {
  for (int n = 0; n <= 7; ++n) {
    for (const Partition& p : dsv::partitions_of(n)) {
      auto all = dsv::enumerate_syt(p);
      CHECK(static_cast<long long>(all.size()) == dsv::syt_count(p));
      std::set<dsv::TableauRows> distinct;
      for (const auto& t : all) {
        CHECK(standard(p, t.rows));
        distinct.insert(t.rows);
      }
      CHECK(distinct.size() == all.size());
    }
  }
}

TEST_CASE("enumeration guard") {
  Partition big({13});
  CHECK_THROWS_AS(dsv::enumerate_syt(big), dsv::GuardError);
  dsv::config::limits().enforce = false;
  CHECK(dsv::enumerate_syt(big).size() == 1);
  dsv::config::limits().enforce = true;
}

TEST_CASE("kostka numbers") {
  CHECK(dsv::kostka_number(Partition({3, 1}), Partition({3, 1})) == 1);
  CHECK(dsv::kostka_number(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(dsv::kostka_number(Partition({3, 1}), Partition({2, 1, 1})) == 2);
  CHECK(dsv::kostka_number(Partition({2, 2}), Partition({2, 1, 1})) == 1);
  CHECK(dsv::kostka_number(Partition({2, 2}), Partition({1, 1, 1, 1})) == 2);
  CHECK(dsv::kostka_number(Partition({2, 2}), Partition({3, 1})) == 0);
  CHECK(dsv::kostka_number(Partition({4}), Partition({2, 1, 1})) == 1);
  // Content equal to the shape forces the superstandard filling; content all
  // ones recovers the standard count.
  for (const Partition& p : dsv::partitions_of(6)) {
    CHECK(dsv::kostka_number(p, p) == 1);
    Partition ones({1, 1, 1, 1, 1, 1});
    CHECK(dsv::kostka_number(p, ones) == dsv::syt_count(p));
  }
}

TEST_CASE("semistandard enumeration respects composition contents") {
  // Kostka numbers do not depend on the order of the content vector.
  auto count = [](const Partition& shape, std::vector<int> content) {
    long long c = 0;
    dsv::for_each_ssyt(shape, content, [&](const dsv::TableauRows&) { ++c; });
    return c;
  };
  CHECK(count(Partition({2, 1}), {1, 0, 2}) == 1);
  CHECK(count(Partition({2, 1}), {2, 1}) == 1);
  CHECK(count(Partition({2, 1}), {1, 2}) == 1);
  CHECK(count(Partition({3, 2, 1}), {2, 2, 1, 1}) == count(Partition({3, 2, 1}), {1, 2, 1, 2}));
  // Mismatched totals visit nothing.
  CHECK(count(Partition({2, 1}), {1, 1}) == 0);
}
