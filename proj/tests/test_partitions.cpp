#include <catch2/catch_amalgamated.hpp>

#include "dsv/partition.hpp"

using dsv::Partition;

TEST_CASE("partition construction and validation") {
  CHECK(Partition{}.empty());
  CHECK(Partition{3, 1}.size() == 4);
  CHECK(Partition{3, 1}.length() == 2);
  CHECK(Partition{5, 5, 2}.part(2) == 5);
  CHECK(Partition{5, 5, 2}.part(4) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::from_unsorted({0, 2, 1, 0, 2}) == Partition({2, 2, 1}));
}

TEST_CASE("partition parsing") {
  CHECK(Partition::parse("") == Partition{});
  CHECK(Partition::parse("0") == Partition{});
  CHECK(Partition::parse("2,1") == Partition({2, 1}));
  CHECK(Partition::parse("4,4,1").to_string() == "4,4,1");
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,-1"), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Partition{}.conjugate() == Partition{});
  for (const Partition& p : dsv::partitions_of(6)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("containment") {
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK(Partition({3, 2}).contains(Partition{}));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({2, 2, 1})));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({4})));
}

TEST_CASE("binomial") {
  CHECK(dsv::binomial(0, 0) == 1);
  CHECK(dsv::binomial(5, 2) == 10);
  CHECK(dsv::binomial(10, 5) == 252);
  CHECK(dsv::binomial(4, 7) == 0);
  CHECK(dsv::binomial(52, 5) == 2598960);
}

TEST_CASE("n statistic") {
  CHECK(dsv::n_stat(Partition{}) == 0);
  CHECK(dsv::n_stat(Partition({2, 1})) == 1);
  CHECK(dsv::n_stat(Partition({2, 2})) == 2);
  CHECK(dsv::n_stat(Partition({1, 1, 1})) == 3);
  // Agrees with sum of C(conjugate part, 2).
  for (const Partition& p : dsv::partitions_of(7)) {
    long long via_conjugate = 0;
    Partition conj = p.conjugate();
    for (int c : conj.parts()) via_conjugate += dsv::binomial(c, 2);
    CHECK(dsv::n_stat(p) == via_conjugate);
  }
}

TEST_CASE("dominance order") {
  CHECK(dsv::dominance_leq(Partition({1, 1, 1, 1}), Partition({4})));
  CHECK(dsv::dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(dsv::dominance_leq(Partition({3, 1}), Partition({2, 2})));
  // Incomparable pair.
  CHECK_FALSE(dsv::dominance_leq(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK_FALSE(dsv::dominance_leq(Partition({4, 1, 1}), Partition({3, 3})));
  CHECK_THROWS_AS(dsv::dominance_leq(Partition({2}), Partition({3})), std::invalid_argument);
  // Reflexive, and every partition sits between the extremes.
  for (const Partition& p : dsv::partitions_of(6)) {
    CHECK(dsv::dominance_leq(p, p));
    CHECK(dsv::dominance_leq(p, Partition({6})));
    CHECK(dsv::dominance_leq(Partition({1, 1, 1, 1, 1, 1}), p));
  }
}

TEST_CASE("padded shape") {
  CHECK(dsv::big_lambda(4, Partition({2, 1}), 3) == Partition({3, 2, 1}));
  CHECK(dsv::big_lambda(2, Partition{}, 2) == Partition({2, 2}));
  CHECK(dsv::big_lambda(6, Partition({2, 2}), 4) == Partition({4, 4, 2, 2}));
  CHECK(dsv::big_lambda(6, Partition({1, 1, 1}), 3) == Partition({4, 4, 4}));
  CHECK(dsv::big_lambda(5, Partition({2, 1}), 3) == Partition({4, 3, 2}));
  CHECK(dsv::big_lambda(7, Partition({2, 2}), 4) == Partition({5, 5, 3, 3}));
  CHECK(dsv::big_lambda(3, Partition({3}), 1) == Partition({3}));
  // Rows of length zero are dropped when n = |lambda|.
  CHECK(dsv::big_lambda(2, Partition({2}), 2) == Partition({2}));
  CHECK_THROWS_AS(dsv::big_lambda(2, Partition({2, 1}), 2), std::invalid_argument);
  CHECK_THROWS_AS(dsv::big_lambda(4, Partition({2, 1}), 1), std::invalid_argument);
}

TEST_CASE("row removal") {
  CHECK(dsv::remove_row(Partition({2, 1}), 1) == Partition({1, 1}));
  CHECK(dsv::remove_row(Partition({2, 1}), 2) == Partition({2}));
  CHECK(dsv::remove_row(Partition({2, 2}), 1) == Partition({2, 1}));
  CHECK(dsv::remove_row(Partition({1}), 1) == Partition{});
  CHECK_THROWS_AS(dsv::remove_row(Partition({2, 1}), 3), std::invalid_argument);
}

TEST_CASE("partition lists") {
  auto p0 = dsv::partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());
  auto p5 = dsv::partitions_of(5);
  REQUIRE(p5.size() == 7);
  CHECK(p5.front() == Partition({5}));
  CHECK(p5[1] == Partition({4, 1}));
  CHECK(p5[2] == Partition({3, 2}));
  CHECK(p5.back() == Partition({1, 1, 1, 1, 1}));
  // Lexicographically decreasing throughout.
  for (std::size_t i = 0; i + 1 < p5.size(); ++i) CHECK(p5[i] > p5[i + 1]);
  CHECK(dsv::partitions_of(10).size() == 42);
}
