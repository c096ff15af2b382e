#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathbetti/formulas.hpp"
#include "pathbetti/homology.hpp"

using namespace pathbetti;

namespace {

BettiTable hochster_table(const PathFamily& f) {
  return BettiTable::from_grid(f, hochster_grid(f).grid, Provenance::hochster_oracle, f.n);
}

}  // namespace

TEST_CASE("betti_line examples") {
  const PathFamily l5{GraphKind::line, 5, 2};
  CHECK(hochster_betti(l5, 2, 3) == 3);
  CHECK(betti_line(5, 2, 2, 3) == 3);
  for (int t = 2; t <= 5; ++t)
    for (int n = t; n <= 15; ++n) CHECK(betti_line(n, t, 1, t) == n - t + 1);
  CHECK(count_eligible({GraphKind::line, 4, 2}, 3, 4 - 1) == 0);
  CHECK(hochster_betti({GraphKind::line, 4, 2}, 3, 4) == 0);
  CHECK(betti_line(4, 2, 3, 4) == 0);
  CHECK(betti_line(4, 2, 0, 0) == 1);
  CHECK(betti_line(6, 3, 2, 5) == 0);  // t - 1 does not divide j - i
  CHECK_THROWS_AS(betti_line(3, 4, 1, 4), std::invalid_argument);
}

TEST_CASE("betti_cycle examples") {
  CHECK(betti_cycle(4, 2, 2, 3) == 4);
  CHECK(betti_cycle(4, 2, 3, 4) == 1);
  CHECK(betti_cycle(6, 2, 4, 6) == 2);
  CHECK(betti_cycle(5, 4, 1, 4) == 5);
  for (int t = 2; t <= 5; ++t)
    for (int n = t + 1; n <= 15; ++n) CHECK(betti_cycle(n, t, 1, t) == n);
  CHECK(betti_cycle(6, 2, 3, 6) == 0);
  CHECK(betti_cycle(6, 2, 4, 7) == 0);
  CHECK_THROWS_AS(betti_cycle(4, 4, 1, 4), std::invalid_argument);
}

TEST_CASE("betti_table examples") {
  const auto c4 = betti_table({GraphKind::cycle, 4, 2});
  const std::map<std::pair<int, int>, Count> expected{
      {{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}};
  CHECK(c4.entries == expected);
  CHECK(hochster_table({GraphKind::cycle, 4, 2}).entries == expected);

  for (int t = 2; t <= 6; ++t) {
    const auto principal = betti_table({GraphKind::line, t, t});
    const std::map<std::pair<int, int>, Count> one{{{0, 0}, 1}, {{1, t}, 1}};
    CHECK(principal.entries == one);
  }

  const auto l5 = betti_table({GraphKind::line, 5, 2});
  CHECK(l5.at(2, 3) == 3);
  CHECK(l5.at(2, 4) == 1);
  CHECK(hochster_table({GraphKind::line, 5, 2}).entries == l5.entries);
}

TEST_CASE("nonzero_predicate examples") {
  CHECK(nonzero_predicate({GraphKind::line, 5, 2}, 2, 3));
  CHECK_FALSE(nonzero_predicate({GraphKind::cycle, 6, 2}, 4, 5));
  CHECK(count_eligible({GraphKind::cycle, 6, 2}, 4, 5) == 0);
  CHECK(nonzero_predicate({GraphKind::cycle, 7, 3}, 0, 0));
  CHECK(nonzero_predicate({GraphKind::line, 2, 2}, 0, 0));
}

TEST_CASE("literal line condition (c) misses beta_{2,3} of the 2-path ideal of L_5") {
  // n = 5 = 3*1 + 2, so p = 1 and the remainder equals t.
  const int n = 5, t = 2, i = 2, j = 3;
  const auto [p, r] = split(n, t);
  REQUIRE(p == 1);
  REQUIRE(r == t);
  const double ell = static_cast<double>(j - i) / (t - 1);
  const bool literal_c = (p + 1) >= ell && ell >= (i + 1) / 2.0;
  CHECK_FALSE(literal_c);
  CHECK(betti_line(n, t, i, j) == 3);
  CHECK(hochster_betti({GraphKind::line, n, t}, i, j) == 3);
  CHECK(nonzero_predicate({GraphKind::line, n, t}, i, j));
}

TEST_CASE("predicate gates the value exactly") {
  for (int t = 2; t <= 6; ++t) {
    for (int n = t; n <= 30; ++n) {
      for (GraphKind kind : {GraphKind::line, GraphKind::cycle}) {
        if (kind == GraphKind::cycle && n == t) continue;
        const PathFamily f{kind, n, t};
        for (int i = 0; i <= n + 1; ++i)
          for (int j = 0; j <= n + 1; ++j) {
            CAPTURE(f.name());
            CAPTURE(i);
            CAPTURE(j);
            CHECK(nonzero_predicate(f, i, j) == (betti(f, i, j) != 0));
          }
      }
    }
  }
}

TEST_CASE("linear strand specialisations") {
  for (int t = 2; t <= 5; ++t) {
    for (int n = t + 1; n <= 40; ++n) {
      for (int i = 0; t * i < n; ++i) {
        CHECK(betti_cycle(n, t, i, t * i) == cycle_run_count(n, i, t));
        CHECK(betti_line(n, t, i, t * i) == binomial(n - i * t + 1, i));
      }
    }
  }
}

TEST_CASE("shift law beta_{i+j, ti+j} = C(i, j) beta_{i, ti}") {
  for (int t = 2; t <= 5; ++t) {
    for (int n = t + 1; n <= 40; ++n) {
      for (int i = 1; t * i < n; ++i) {
        for (int j = 0; j <= i && t * i + j < n; ++j) {
          CHECK(betti_cycle(n, t, i + j, t * i + j) ==
                binomial(i, j) * betti_cycle(n, t, i, t * i));
          CHECK(betti_line(n, t, i + j, t * i + j) ==
                binomial(i, j) * binomial(n - i * t, i) +
                    binomial(i - 1, j) * binomial(n - i * t, i - 1));
        }
      }
    }
  }
}

TEST_CASE("entries vanish above the t-linear bound and satisfy the shape test") {
  for (int t = 2; t <= 5; ++t) {
    for (int n = t + 1; n <= 25; ++n) {
      for (GraphKind kind : {GraphKind::line, GraphKind::cycle}) {
        const PathFamily f{kind, n, t};
        for (int i = 1; i <= n; ++i)
          for (int j = t * i + 1; j <= n; ++j) CHECK(betti(f, i, j) == 0);
        for (const auto& [cell, value] : betti_table(f).entries) {
          if (cell.second >= n) continue;
          const auto shape = shape_params(t, cell.first, cell.second);
          REQUIRE(shape);
          CHECK(shape->ell >= 0);
          CHECK(shape->added >= 0);
        }
      }
    }
  }
}

TEST_CASE("alternating sum of each table vanishes") {
  // K-polynomial at z = 1 is zero for a nonzero proper ideal.
  for (int t = 2; t <= 6; ++t) {
    for (int n : {t + 1, 2 * t + 3, 50, 137}) {
      for (GraphKind kind : {GraphKind::line, GraphKind::cycle}) {
        Count sum = 0;
        for (const auto& [cell, value] : betti_table({kind, n, t}).entries)
          sum += cell.first % 2 == 0 ? value : Count(-value);
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("big tables exceed 64 bits and agree serial vs parallel") {
  const PathFamily f{GraphKind::line, 300, 2};
  const auto serial = betti_table(f, Execution::serial);
  const auto parallel = betti_table(f, Execution::parallel);
  CHECK(serial.entries == parallel.entries);
  Count biggest = 0;
  for (const auto& [cell, value] : serial.entries) biggest = std::max(biggest, value);
  CHECK(biggest > Count("18446744073709551615"));
}

TEST_CASE("pd and reg of lines") {
  CHECK(pd_line(4, 2) == 2);
  CHECK(reg_line(4, 2) == 1);
  for (int t = 2; t <= 6; ++t) {
    CHECK(pd_line(t, t) == 1);
    CHECK(reg_line(t, t) == t - 1);
  }
  CHECK(pd_line(7, 3) == 3);
  CHECK(reg_line(7, 3) == 4);

  const PdReg l4 = pd_reg_from_table(hochster_table({GraphKind::line, 4, 2}));
  CHECK(l4 == PdReg{2, 1});
  const PdReg l7 = pd_reg_from_table(hochster_table({GraphKind::line, 7, 3}));
  CHECK(l7 == PdReg{3, 4});
}

TEST_CASE("pd_reg_from_table") {
  CHECK(pd_reg_from_table(betti_table({GraphKind::cycle, 4, 2})) == PdReg{3, 1});
  BettiTable trivial{{GraphKind::line, 3, 2}, Provenance::formula, {{{0, 0}, 1}}};
  CHECK(pd_reg_from_table(trivial) == PdReg{0, 0});
  for (int t = 2; t <= 4; ++t)
    for (int n = t; n <= 14; ++n)
      CHECK(pd_reg_from_table(betti_table({GraphKind::line, n, t})) ==
            PdReg{pd_line(n, t), reg_line(n, t)});
}

TEST_CASE("split") {
  for (long t = 2; t <= 6; ++t)
    for (long n = 0; n <= 50; ++n) {
      const auto [p, r] = split(n, t);
      CHECK(n == (t + 1) * p + r);
      CHECK(r >= 0);
      CHECK(r <= t);
    }
}
