#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "dsv/cells.hpp"
#include "dsv/filling.hpp"
#include "dsv/presentations.hpp"

using dsv::Cell;
using dsv::ComponentClass;
using dsv::IPRDFilling;
using dsv::Partition;
using dsv::RingSpec;
using dsv::ShapeFilling;
using dsv::TableauRows;

namespace {

std::vector<int> word(const std::string& digits) {
  std::vector<int> w;
  for (char c : digits) w.push_back(c - '0');
  return w;
}

dsv::QPolynomial qp(const std::vector<long long>& coeffs) {
  dsv::QPolynomial h;
  for (std::size_t d = 0; d < coeffs.size(); ++d) h.add(static_cast<int>(d), coeffs[d]);
  return h;
}

// Every injective word, tested against the admissibility predicate directly.
template <typename Fn>
void for_each_injective_word(int n, int K, Fn&& fn) {
  std::vector<int> w;
  std::vector<char> used(K + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == n) {
      fn(w);
      return;
    }
    for (int v = 1; v <= K; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      w.push_back(v);
      self(self);
      w.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
}

long long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

}  // namespace

TEST_CASE("reading order fillings match the worked examples") {
  CHECK(dsv::reading_order_filling(RingSpec(4, Partition{2, 1}, 3)).rows() ==
        TableauRows{{4, 2, 1}, {5, 3}, {6}});
  CHECK(dsv::reading_order_filling(RingSpec(2, Partition{}, 2)).rows() ==
        TableauRows{{3, 1}, {4, 2}});
  CHECK(dsv::reading_order_filling(RingSpec(5, Partition{2, 1}, 3)).rows() ==
        TableauRows{{7, 4, 2, 1}, {8, 5, 3}, {9, 6}});
  CHECK(dsv::reading_order_filling(RingSpec(6, Partition{2, 2}, 4)).rows() ==
        TableauRows{{9, 5, 3, 1}, {10, 6, 4, 2}, {11, 7}, {12, 8}});
  CHECK(dsv::reading_order_filling(RingSpec(6, Partition{1, 1, 1}, 3)).rows() ==
        TableauRows{{10, 7, 4, 1}, {11, 8, 5, 2}, {12, 9, 6, 3}});
  CHECK(dsv::reading_order_filling(RingSpec(7, Partition{2, 2}, 4)).rows() ==
        TableauRows{{13, 9, 5, 3, 1}, {14, 10, 6, 4, 2}, {15, 11, 7}, {16, 12, 8}});
  CHECK(dsv::reading_order_filling(RingSpec(0, Partition{}, 3)).rows() == TableauRows{});
}

TEST_CASE("reading order fillings are compatible") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Partition& lam : dsv::partitions_of(k))
        for (int s = std::max(lam.length(), 1); s <= 4; ++s) {
          ShapeFilling T = dsv::reading_order_filling(RingSpec(n, lam, s));
          dsv::CompatibilityReport rep = dsv::schubert_compatibility(T);
          INFO(RingSpec(n, lam, s).to_string() << " violated " << rep.condition << ": "
                                               << rep.detail);
          CHECK(rep.ok);
        }
}

TEST_CASE("compatibility checker names the first broken condition") {
  auto condition = [](const ShapeFilling& T) { return dsv::schubert_compatibility(T).condition; };

  // inner cell holding an outer label
  CHECK(condition(ShapeFilling(RingSpec(4, Partition{2, 1}, 3), {{4, 2, 6}, {5, 3}, {1}})) == "S2");
  // increasing row
  CHECK(condition(ShapeFilling(RingSpec(2, Partition{}, 2), {{1, 3}, {4, 2}})) == "S3");
  // inner label not above the next column
  CHECK(condition(ShapeFilling(RingSpec(4, Partition{2, 2}, 2), {{2, 1}, {4, 3}})) == "S4");
  // right edges out of order
  CHECK(condition(ShapeFilling(RingSpec(2, Partition{}, 2), {{4, 2}, {3, 1}})) == "S5");
  // left shift reverses a comparison
  CHECK(condition(ShapeFilling(RingSpec(2, Partition{}, 2), {{4, 1}, {3, 2}})) == "S6");

  dsv::CompatibilityReport rep =
      dsv::schubert_compatibility(ShapeFilling(RingSpec(2, Partition{}, 2), {{1, 3}, {4, 2}}));
  CHECK_FALSE(rep.ok);
  CHECK(rep.detail.find("(1,1)") != std::string::npos);
  CHECK(rep.detail.find("(1,2)") != std::string::npos);
}

TEST_CASE("shape filling validation") {
  CHECK_THROWS_AS(ShapeFilling(RingSpec(2, Partition{}, 2), {{3, 1}, {4, 4}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ShapeFilling(RingSpec(2, Partition{}, 2), {{3, 1}, {5, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ShapeFilling(RingSpec(2, Partition{}, 2), {{3, 1, 4}, {2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ShapeFilling(RingSpec(2, Partition{}, 2), {{3, 1}}), std::invalid_argument);

  ShapeFilling T = dsv::reading_order_filling(RingSpec(4, Partition{2, 1}, 3));
  CHECK(T.cell_of(5) == std::pair<int, int>(2, 1));
  CHECK(T.right_edge_label(2) == 3);
  CHECK(T.label(1, 2) == 2);
  CHECK(T.is_inner_cell(1, 2));
  CHECK_FALSE(T.is_inner_cell(1, 1));
  CHECK_FALSE(T.is_inner_cell(3, 1));
  CHECK(T.to_string() == "4 2 1 / 5 3 / 6");
}

TEST_CASE("flatten reproduces the worked example") {
  ShapeFilling T = dsv::reading_order_filling(RingSpec(7, Partition{2, 2}, 4));

  dsv::FlattenResult low = dsv::flatten(T, 1);
  CHECK(low.filling.spec() == RingSpec(6, Partition{2, 1}, 4));
  CHECK(low.filling.rows() ==
        TableauRows{{13, 9, 5, 3, 1}, {12, 8, 4, 2}, {14, 10, 6}, {15, 11, 7}});
  CHECK(low.fl[1] == 0);
  for (int v = 2; v <= 16; ++v) CHECK(low.fl[v] == v - 1);

  dsv::FlattenResult high = dsv::flatten(T, 3);
  CHECK(high.filling.spec() == RingSpec(6, Partition{2, 2}, 4));
  CHECK(high.filling.rows() == TableauRows{{8, 5, 3, 1}, {9, 6, 4, 2}, {11, 7}, {12, 10}});
  for (int v = 1; v <= 6; ++v) CHECK(high.fl[v] == v);
  CHECK(high.fl[7] == 0);
  CHECK(high.fl[13] == 0);
  CHECK(high.fl[14] == 0);
  CHECK(high.fl[16] == 0);
  CHECK(high.fl[8] == 7);
  CHECK(high.fl[9] == 8);
  CHECK(high.fl[10] == 9);
  CHECK(high.fl[11] == 10);
  CHECK(high.fl[12] == 11);
  CHECK(high.fl[15] == 12);

  CHECK(dsv::schubert_compatibility(low.filling).ok);
  CHECK(dsv::schubert_compatibility(high.filling).ok);

  CHECK_THROWS_AS(dsv::flatten(T, 0), std::out_of_range);
  CHECK_THROWS_AS(dsv::flatten(T, 5), std::out_of_range);

  // deleting the single cell of a one-box diagram
  ShapeFilling tiny = dsv::reading_order_filling(RingSpec(1, Partition{1}, 1));
  CHECK(dsv::flatten(tiny, 1).filling.rows() == TableauRows{});
}

TEST_CASE("flatten keeps compatibility across the sweep") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Partition& lam : dsv::partitions_of(k))
        for (int s = std::max(lam.length(), 1); s <= 3; ++s) {
          ShapeFilling T = dsv::reading_order_filling(RingSpec(n, lam, s));
          for (int i = 1; i <= T.row_count(); ++i) {
            dsv::FlattenResult fr = dsv::flatten(T, i);
            INFO(RingSpec(n, lam, s).to_string() << " row " << i);
            CHECK(dsv::schubert_compatibility(fr.filling).ok);
          }
        }
}

TEST_CASE("admissibility of the worked examples") {
  ShapeFilling T6 = dsv::reading_order_filling(RingSpec(6, Partition{2, 2}, 4));
  CHECK(dsv::is_admissible(word("274813"), T6));
  CHECK(dsv::cell_dimension(word("274813"), T6) == 6);

  ShapeFilling T5 = dsv::reading_order_filling(RingSpec(5, Partition{2, 1}, 3));
  CHECK(dsv::is_admissible(word("16243"), T5));
  CHECK(dsv::component_of_cell(word("16243"), T5).rows() == TableauRows{{5, 1}, {3}});

  // image misses an inner label
  CHECK_FALSE(dsv::is_admissible(word("16245"), T5));
  // starting off the right edge
  CHECK_FALSE(dsv::is_admissible(word("41235"), T5));

  CHECK_THROWS_AS(dsv::is_admissible(word("162"), T5), std::invalid_argument);
  CHECK_THROWS_AS(dsv::is_admissible(word("16244"), T5), std::invalid_argument);
  CHECK_THROWS_AS(dsv::cell_dimension(word("41235"), T5), std::invalid_argument);
}

TEST_CASE("partial filling validation") {
  RingSpec spec(4, Partition{2, 1}, 3);
  CHECK_NOTHROW(IPRDFilling(spec, {{4, 2, 1}, {0, 3}, {0}}));
  CHECK_NOTHROW(IPRDFilling(spec, {{0, 2, 1}, {0, 3}, {4}}));
  // filled cell left of an empty one
  CHECK_THROWS_AS(IPRDFilling(spec, {{4, 0, 1}, {0, 3}, {2}}), std::invalid_argument);
  // row increases
  CHECK_THROWS_AS(IPRDFilling(spec, {{2, 3, 1}, {0, 4}, {0}}), std::invalid_argument);
  // inner cell left empty
  CHECK_THROWS_AS(IPRDFilling(spec, {{4, 2, 1}, {0, 0}, {3}}), std::invalid_argument);
  // wrong number of filled cells
  CHECK_THROWS_AS(IPRDFilling(spec, {{0, 2, 1}, {0, 3}, {0}}), std::invalid_argument);
  // repeated label
  CHECK_THROWS_AS(IPRDFilling(spec, {{4, 2, 1}, {0, 2}, {0}}), std::invalid_argument);

  IPRDFilling p(spec, {{0, 2, 1}, {0, 3}, {4}});
  CHECK(p.to_string() == ". 2 1 / . 3 / 4");
  CHECK(p.filled_cells() ==
        std::vector<std::array<int, 3>>{{1, 2, 2}, {1, 3, 1}, {2, 2, 3}, {3, 1, 4}});
}

TEST_CASE("the map is admissible exactly when the position filling is partial row-decreasing") {
  for (RingSpec spec : {RingSpec(4, Partition{2, 1}, 3), RingSpec(3, Partition{1, 1}, 2),
                        RingSpec(2, Partition{}, 2), RingSpec(3, Partition{3}, 1)}) {
    ShapeFilling T = dsv::reading_order_filling(spec);
    std::vector<std::vector<int>> admissible;
    for_each_injective_word(spec.n, spec.K(), [&](const std::vector<int>& w) {
      bool adm = dsv::is_admissible(w, T);
      CHECK(adm == IPRDFilling::valid(spec, dsv::detail::place_labels(w, T)));
      if (adm) admissible.push_back(w);
    });
    std::vector<std::vector<int>> enumerated;
    for (const Cell& cell : dsv::enumerate_cells(spec)) enumerated.push_back(cell.w);
    CHECK(admissible == enumerated);  // both lexicographically sorted
  }
}

TEST_CASE("the three cells of the smallest interesting space") {
  RingSpec spec(2, Partition{1}, 2);
  std::vector<Cell> cells = dsv::enumerate_cells(spec);
  REQUIRE(cells.size() == 3);
  CHECK(cells[0].w == word("12"));
  CHECK(cells[0].dimension == 0);
  CHECK(cells[1].w == word("13"));
  CHECK(cells[1].dimension == 1);
  CHECK(cells[2].w == word("31"));
  CHECK(cells[2].dimension == 1);
  CHECK(cells[1].iprd.rows() == TableauRows{{0, 1}, {2}});
  CHECK(dsv::paving_hilbert(spec) == qp({1, 2}));
}

TEST_CASE("cell counts and dimensions for the running example") {
  RingSpec spec(4, Partition{2, 1}, 3);
  std::vector<Cell> cells = dsv::enumerate_cells(spec);
  REQUIRE(cells.size() == 22);
  int top = 0;
  for (const Cell& cell : cells) {
    ShapeFilling T = dsv::reading_order_filling(spec);
    CHECK(dsv::is_admissible(cell.w, T));
    CHECK(cell.dimension == dsv::cell_dimension(cell.w, T));
    top = std::max(top, cell.dimension);
  }
  CHECK(top == 3);
  CHECK(dsv::paving_hilbert(spec) == qp({1, 4, 9, 8}));
}

TEST_CASE("degenerate cell structures") {
  // single flag: one cell of dimension zero
  for (int n = 1; n <= 4; ++n) {
    std::vector<Cell> cells = dsv::enumerate_cells(RingSpec(n, Partition{}, 1));
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].dimension == 0);
  }
  std::vector<Cell> empty = dsv::enumerate_cells(RingSpec(0, Partition{}, 2));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].w.empty());
  CHECK(empty[0].dimension == 0);
  CHECK(dsv::paving_hilbert(RingSpec(0, Partition{}, 2)) == qp({1}));
  CHECK(dsv::paving_hilbert(RingSpec(2, Partition{}, 3)) == qp({1, 2, 3, 2, 1}));
}

TEST_CASE("cell enumeration agrees with the recursive series") {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Partition& lam : dsv::partitions_of(k))
        for (int s = std::max(lam.length(), 1); s <= 4; ++s) {
          RingSpec spec(n, lam, s);
          INFO(spec.to_string());
          CHECK(dsv::paving_hilbert(spec) == dsv::hilbert_recursive(spec));
        }
  // two larger spot checks
  CHECK(dsv::paving_hilbert(RingSpec(6, Partition{2, 2}, 4)) ==
        dsv::hilbert_recursive(RingSpec(6, Partition{2, 2}, 4)));
  CHECK(dsv::paving_hilbert(RingSpec(6, Partition{1, 1, 1}, 3)) ==
        dsv::hilbert_recursive(RingSpec(6, Partition{1, 1, 1}, 3)));
}

TEST_CASE("cells are in bijection with partial row-decreasing fillings") {
  for (RingSpec spec : {RingSpec(4, Partition{2, 1}, 3), RingSpec(2, Partition{1}, 2),
                        RingSpec(3, Partition{}, 2), RingSpec(5, Partition{2, 1}, 3),
                        RingSpec(6, Partition{2, 2}, 4), RingSpec(4, Partition{2, 1}, 2),
                        RingSpec(4, Partition{4}, 1), RingSpec(3, Partition{1, 1, 1}, 3)}) {
    std::vector<IPRDFilling> via_cells;
    for (const Cell& cell : dsv::enumerate_cells(spec)) via_cells.push_back(cell.iprd);
    std::sort(via_cells.begin(), via_cells.end());
    CHECK(std::adjacent_find(via_cells.begin(), via_cells.end()) == via_cells.end());
    std::vector<IPRDFilling> direct = dsv::enumerate_iprds_direct(spec);
    INFO(spec.to_string());
    CHECK(via_cells == direct);
  }
}

TEST_CASE("component classes of the running example") {
  RingSpec spec(4, Partition{2, 1}, 3);
  std::vector<dsv::Component> comps = dsv::enumerate_components(spec);
  REQUIRE(comps.size() == 8);

  std::vector<std::size_t> counts;
  for (const dsv::Component& comp : comps) {
    counts.push_back(comp.cells.size());
    CHECK(comp.top_dimension == 3);
  }
  CHECK(counts == std::vector<std::size_t>{6, 4, 2, 3, 2, 2, 2, 1});

  auto words = [](const std::vector<std::string>& digits) {
    std::vector<std::vector<int>> out;
    for (const std::string& d : digits) out.push_back(word(d));
    return out;
  };
  CHECK(comps[0].cells == words({"1234", "1235", "1236", "1324", "1325", "1326"}));
  CHECK(comps[1].cells == words({"1243", "1263", "1352", "1362"}));
  CHECK(comps[2].cells == words({"1623", "1632"}));
  CHECK(comps[3].cells == words({"3124", "3125", "3126"}));
  CHECK(comps[4].cells == words({"3152", "3162"}));
  CHECK(comps[5].cells == words({"3512", "3612"}));
  CHECK(comps[6].cells == words({"6123", "6132"}));
  CHECK(comps[7].cells == words({"6312"}));

  CHECK(comps[0].cls.rows() == TableauRows{{3, 1}, {2}});
  CHECK(comps[7].cls.rows() == TableauRows{{4, 3}, {2}});

  ShapeFilling T = dsv::reading_order_filling(spec);
  CHECK(dsv::component_of_cell(word("1234"), T) == comps[0].cls);
  CHECK(dsv::component_of_cell(word("6312"), T) == comps[7].cls);
}

TEST_CASE("component class validation and canonical sorting") {
  CHECK_THROWS_AS(ComponentClass(4, Partition{2, 1}, {{1, 3}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(ComponentClass(4, Partition{2, 1}, {{2, 1}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(ComponentClass(4, Partition{2, 1}, {{3, 1}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(ComponentClass(2, Partition{2, 1}, {{3, 1}, {2}}), std::invalid_argument);
  CHECK(ComponentClass(4, Partition{2, 1}, {{3, 1}, {2}}).to_string() == "3,1/2");

  // single column: the class is forced
  RingSpec spec(3, Partition{1, 1, 1}, 3);
  std::vector<dsv::Component> comps = dsv::enumerate_components(spec);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].cls.rows() == TableauRows{{3}, {2}, {1}});
  CHECK(comps[0].cells.size() == 6);
  CHECK(comps[0].top_dimension == 3);
}

TEST_CASE("component counts follow the binomial times tableau formula") {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Partition& lam : dsv::partitions_of(k))
        for (int s = lam.length() + 1; s <= 4; ++s) {
          RingSpec spec(n, lam, s);
          std::vector<dsv::Component> comps = dsv::enumerate_components(spec);
          INFO(spec.to_string());
          CHECK(static_cast<long long>(comps.size()) ==
                dsv::binomial(n, k) * dsv::syt_count(lam));

          std::vector<ComponentClass> seen;
          for (const dsv::Component& comp : comps) seen.push_back(comp.cls);
          std::sort(seen.begin(), seen.end());
          CHECK(seen == dsv::p_classes(n, lam));
        }
}

TEST_CASE("every component reaches the common dimension") {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Partition& lam : dsv::partitions_of(k))
        for (int s = std::max(lam.length(), 1); s <= 4; ++s) {
          RingSpec spec(n, lam, s);
          long long expected = dsv::n_stat(lam) + static_cast<long long>(s - 1) * (n - k);
          for (const dsv::Component& comp : dsv::enumerate_components(spec)) {
            INFO(spec.to_string() << " class " << comp.cls.to_string());
            CHECK(comp.top_dimension == expected);
          }
        }
}

TEST_CASE("boundary nonemptiness criterion") {
  // at s = len(lambda), exactly the classes passing the row-fill test occur
  for (RingSpec spec : {RingSpec(4, Partition{2, 1}, 2), RingSpec(3, Partition{2, 1}, 2),
                        RingSpec(5, Partition{2, 1}, 2), RingSpec(4, Partition{2, 2}, 2),
                        RingSpec(5, Partition{3, 1, 1}, 3)}) {
    std::vector<ComponentClass> occurring;
    for (const dsv::Component& comp : dsv::enumerate_components(spec)) occurring.push_back(comp.cls);
    std::sort(occurring.begin(), occurring.end());

    std::vector<ComponentClass> predicted;
    for (const ComponentClass& cls : dsv::p_classes(spec.n, spec.lambda))
      if (dsv::class_is_nonempty(cls, spec.s)) predicted.push_back(cls);
    INFO(spec.to_string());
    CHECK(occurring == predicted);
  }

  CHECK(dsv::enumerate_components(RingSpec(4, Partition{2, 1}, 2)).size() == 5);
  // above the boundary every class is declared nonempty
  for (const ComponentClass& cls : dsv::p_classes(4, Partition{2, 1}))
    CHECK(dsv::class_is_nonempty(cls, 3));
}

TEST_CASE("ordered set partitions from the single column shape") {
  RingSpec spec(6, Partition{1, 1, 1}, 3);
  ShapeFilling T = dsv::reading_order_filling(spec);
  CHECK(dsv::osp_of_cell(word("253618"), T) ==
        std::vector<std::vector<int>>{{5}, {1, 2, 6}, {3, 4}});

  // k = 1: a single block
  RingSpec line(3, Partition{1}, 1);
  ShapeFilling Tline = dsv::reading_order_filling(line);
  std::vector<Cell> cells = dsv::enumerate_cells(line);
  REQUIRE(cells.size() == 1);
  CHECK(dsv::osp_of_cell(cells[0].w, Tline) == std::vector<std::vector<int>>{{1, 2, 3}});

  ShapeFilling T5 = dsv::reading_order_filling(RingSpec(5, Partition{2, 1}, 3));
  CHECK_THROWS_AS(dsv::osp_of_cell(word("16243"), T5), std::invalid_argument);
}

TEST_CASE("cells biject with ordered set partitions") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k) {
      RingSpec spec(n, Partition(std::vector<int>(k, 1)), k);
      ShapeFilling T = dsv::reading_order_filling(spec);
      std::set<std::vector<std::vector<int>>> osps;
      std::vector<Cell> cells = dsv::enumerate_cells(spec);
      for (const Cell& cell : cells) {
        std::vector<std::vector<int>> osp = dsv::osp_of_cell(cell.w, T);
        REQUIRE(static_cast<int>(osp.size()) == k);
        std::vector<char> covered(n + 1, 0);
        for (const auto& block : osp) {
          CHECK_FALSE(block.empty());
          for (int v : block) {
            CHECK(!covered[v]);
            covered[v] = 1;
          }
        }
        for (int v = 1; v <= n; ++v) CHECK(covered[v]);
        osps.insert(osp);
      }
      INFO("n=" << n << " k=" << k);
      long long expected = 1;
      for (int j = 2; j <= k; ++j) expected *= j;
      expected *= stirling2(n, k);
      CHECK(static_cast<long long>(cells.size()) == expected);
      CHECK(static_cast<long long>(osps.size()) == expected);
    }
}

TEST_CASE("cell enumeration guard") {
  CHECK_THROWS_AS(dsv::enumerate_cells(RingSpec(8, Partition{}, 1)), dsv::GuardError);
  CHECK_THROWS_AS(dsv::p_classes(8, Partition{1}), dsv::GuardError);
  dsv::config::limits().enforce = false;
  CHECK(dsv::enumerate_cells(RingSpec(8, Partition{}, 1)).size() == 1);
  dsv::config::limits().enforce = true;
}

TEST_CASE("parallel and serial enumerations agree") {
  RingSpec spec(5, Partition{2, 1}, 3);
  int saved = dsv::config::thread_count();
  dsv::config::thread_count() = 1;
  std::vector<Cell> serial = dsv::enumerate_cells(spec);
  dsv::config::thread_count() = 4;
  std::vector<Cell> parallel = dsv::enumerate_cells(spec);
  dsv::config::thread_count() = saved;
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].w == parallel[i].w);
    CHECK(serial[i].dimension == parallel[i].dimension);
    CHECK(serial[i].iprd == parallel[i].iprd);
  }
}
