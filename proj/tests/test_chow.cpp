#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monrep/chow.hpp"
#include "monrep/errors.hpp"
#include "monrep/monoid.hpp"
#include "monrep/partition.hpp"
#include "monrep/power_sum.hpp"

using namespace monrep;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("normalization membership") {
  CHECK(in_S_normalization(P({6, 3}), 3));
  CHECK(!in_S_normalization(P({7, 3, 2}), 3));
  CHECK(!in_S_normalization(P({5}), 3));  // 3 does not divide 5
  CHECK_THROWS_AS(in_S_normalization(P({2, 1, 1, 1}), 3), std::invalid_argument);
}

TEST_CASE("hole scan prefixes: nothing through degree 3, then (7,3,2)") {
  CHECK(chow3_hole_scan(3).empty());
  auto holes = chow3_hole_scan(4);
  REQUIRE(holes.size() == 1);
  CHECK(holes[0].lambda == P({7, 3, 2}));
  CHECK(holes[0].degree == 4);
  CHECK(holes[0].ambient_mult == 1);
  CHECK(holes[0].normalization_mult == 0);
}

TEST_CASE("scan results are degree-prefix stable and parallel-invariant") {
  auto d5 = chow3_hole_scan(5);
  auto d6 = chow3_hole_scan(6);
  REQUIRE(d5.size() <= d6.size());
  for (size_t i = 0; i < d5.size(); ++i) {
    CHECK(d5[i].lambda == d6[i].lambda);
    CHECK(d5[i].degree == d6[i].degree);
    CHECK(d5[i].ambient_mult == d6[i].ambient_mult);
  }
  auto threaded = chow3_hole_scan(6, 4);
  REQUIRE(threaded.size() == d6.size());
  for (size_t i = 0; i < d6.size(); ++i)
    CHECK(threaded[i].lambda == d6[i].lambda);
}

TEST_CASE("every reported hole satisfies the saturation description") {
  // Sat(S(Chow_3)) = three rows, size divisible by three; as a monoid it is
  // generated by (1,1,1), (2,1,0), (3,0,0) and (3,3,0).
  FGMonoid sat(3, {{1, 1, 1}, {2, 1, 0}, {3, 0, 0}, {3, 3, 0}});
  for (const auto& rec : chow3_hole_scan(6)) {
    CHECK(rec.ambient_mult > 0);
    CHECK(rec.normalization_mult == 0);
    CHECK(rec.lambda.size() == 3 * rec.degree);
    CHECK(rec.lambda.length() <= 3);
    CHECK(sat.in_saturation(
        {rec.lambda.part(0), rec.lambda.part(1), rec.lambda.part(2)}));
  }
}

TEST_CASE("hole scan re-derives through the public single queries") {
  for (const auto& rec : chow3_hole_scan(5)) {
    CHECK(mult_sym_sym(rec.lambda, rec.degree, 3) == rec.ambient_mult);
    CHECK(normalization_mult(rec.lambda, 3) == 0);
  }
}

TEST_CASE("infinite family members are confirmed holes") {
  auto base = infinite_family_check(0, 0);
  CHECK(base.lambda == P({7, 3, 2}));
  CHECK(base.degree == 4);
  CHECK(base.ambient_mult > 0);
  CHECK(base.normalization_mult == 0);
  CHECK(base.chain_consistent);
  CHECK(base.confirmed_hole);
  CHECK(base.cut_chain.size() == 2);  // one pair of columns cut

  auto j1 = infinite_family_check(1, 0);
  CHECK(j1.lambda == P({10, 3, 2}));
  CHECK(j1.confirmed_hole);

  auto k1 = infinite_family_check(0, 1);
  CHECK(k1.lambda == P({11, 7, 6}));
  CHECK(k1.degree == 8);
  CHECK(k1.confirmed_hole);
  CHECK(k1.cut_chain.size() == 4);

  CHECK_THROWS_AS(infinite_family_check(7, 0), GuardViolation);
  CHECK_THROWS_AS(infinite_family_check(0, 2), GuardViolation);
}

TEST_CASE("family verdicts agree with the direct membership queries") {
  for (int k = 0; 4 + 4 * k <= 10; ++k)
    for (int j = 0; 4 + 4 * k + j <= 10; ++j) {
      auto verdict = infinite_family_check(j, k);
      CHECK(verdict.ambient_mult ==
            mult_sym_sym(verdict.lambda, verdict.degree, 3));
      CHECK(verdict.normalization_mult == normalization_mult(verdict.lambda, 3));
      CHECK(verdict.confirmed_hole);
    }
}

TEST_CASE("exact D values and the exponential bound") {
  auto b3 = bound_D(3);
  CHECK(b3.d_value == 15);
  CHECK(b3.bound == 27);
  CHECK(b3.holds);
  CHECK(b3.hilbert_leading_ok);
  CHECK(b3.hilbert_samples ==
        std::vector<BigInt>{10, 56, 220, 680, 1771});

  auto b4 = bound_D(4);
  CHECK(b4.d_value == 15400);
  CHECK(b4.bound == 65536);
  CHECK(b4.holds);
  CHECK(b4.hilbert_leading_ok);

  auto b2 = bound_D(2);
  CHECK(b2.d_value == 1);
  CHECK(b2.bound == 1);
  CHECK(!b2.holds);
  CHECK(b2.hilbert_leading_ok);
}

TEST_CASE("D over the bound is strictly decreasing for n = 3..7") {
  Rational prev;
  for (int n = 3; n <= 7; ++n) {
    auto report = bound_D(n);
    CHECK(report.holds);
    Rational ratio = report.d_value / Rational(report.bound);
    if (n > 3) CHECK(ratio < prev);
    prev = ratio;
  }
}

TEST_CASE("Alon-Tarsi differences by full enumeration") {
  CHECK(alon_tarsi_delta(1) == 1);
  CHECK(alon_tarsi_delta(2) == 2);
  CHECK(alon_tarsi_delta(3) == 0);  // odd sizes balance out
  CHECK(alon_tarsi_delta(4) != 0);
  CHECK_THROWS_AS(alon_tarsi_delta(6), GuardViolation);
}

TEST_CASE("two-variable exception: Sym^n Sym^k weights have both parts even") {
  std::vector<IntVec> gens;
  for (int k = 1; k <= 6; ++k)
    for (const auto& la : enumerate_partitions(2 * k, 2))
      if (mult_sym_sym(la, 2, k) > 0) {
        CHECK(la.part(0) % 2 == 0);
        CHECK(la.part(1) % 2 == 0);
        gens.push_back({la.part(0), la.part(1)});
      }
  FGMonoid m(2, std::move(gens));
  CHECK(m.in_group({2, 0}));
  CHECK(m.in_group({0, 2}));
  CHECK(!m.in_group({1, 1}));
  CHECK(!m.in_group({2, 1}));
}
