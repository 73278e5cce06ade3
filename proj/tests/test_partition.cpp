#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "monrep/errors.hpp"
#include "monrep/partition.hpp"

using namespace monrep;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("construction canonicalizes and validates") {
  CHECK(P({}).empty());
  CHECK(P({3, 1}).size() == 4);
  CHECK(P({3, 1}).length() == 2);
  CHECK(P({3, 1, 0, 0}) == P({3, 1}));  // trailing zeros dropped
  CHECK(P({5}).part(0) == 5);
  CHECK(P({5}).part(3) == 0);
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
}

TEST_CASE("text form round-trips") {
  CHECK(P({7, 3, 2}).str() == "7,3,2");
  CHECK(P({}).str() == "-");
  CHECK(Partition::parse("7,3,2") == P({7, 3, 2}));
  CHECK(Partition::parse("-") == P({}));
  CHECK(Partition::parse("") == P({}));
  CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
}

TEST_CASE("enumeration: base cases and order") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{P({})});
  CHECK(enumerate_partitions(4, 2) ==
        std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
  // reverse-lexicographic order on parts
  CHECK(enumerate_partitions(4) ==
        std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                               P({1, 1, 1, 1})});
  auto p12 = enumerate_partitions(12, 3);
  CHECK(std::find(p12.begin(), p12.end(), P({7, 3, 2})) != p12.end());
}

TEST_CASE("enumeration counts match A000041") {
  const size_t a000041[] = {1,  1,  2,  3,  5,   7,   11,  15,
                            22, 30, 42, 56, 77,  101, 135, 176,
                            231, 297, 385, 490, 627};
  for (int n = 0; n <= 20; ++n)
    CHECK(enumerate_partitions(n).size() == a000041[n]);
}

TEST_CASE("enumeration respects both bounds") {
  for (const auto& la : enumerate_partitions(10, 3, 4)) {
    CHECK(la.length() <= 3);
    CHECK(la.part(0) <= 4);
    CHECK(la.size() == 10);
  }
  std::set<Partition> seen;
  for (const auto& la : enumerate_partitions(9))
    CHECK(seen.insert(la).second);  // each exactly once
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
  CHECK(conjugate(P({2, 2})) == P({2, 2}));
  for (int n = 1; n <= 6; ++n)
    CHECK(conjugate(P({n})) == P(std::vector<int>(static_cast<size_t>(n), 1)));
  for (const auto& la : enumerate_partitions(9))
    CHECK(conjugate(conjugate(la)) == la);
}

TEST_CASE("z values") {
  CHECK(z_of(P({1, 1, 1})) == 6);
  CHECK(z_of(P({3})) == 3);
  CHECK(z_of(P({2, 1})) == 2);
  CHECK(z_of(P({})) == 1);
}

TEST_CASE("class sizes partition the group: sum N!/z = N!") {
  for (unsigned n = 0; n <= 12; ++n) {
    BigInt sum = 0;
    for (const auto& mu : enumerate_partitions(static_cast<int>(n)))
      sum += factorial(n) / z_of(mu);
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("rectangle") {
  CHECK(rectangle(3, 5) == P({5, 5, 5}));
  CHECK(rectangle(2, 1) == P({1, 1}));
  CHECK(rectangle(4, 4) == P({4, 4, 4, 4}));
  CHECK(rectangle(2, 0) == P({}));
}

TEST_CASE("add_to_first_row") {
  CHECK(add_to_first_row(P({3, 3}), 3) == P({6, 3}));
  CHECK(add_to_first_row(P({2, 2}), 2 * (5 - 1)) == P({10, 2}));
  CHECK(add_to_first_row(P({}), 4) == P({4}));
  for (const auto& la : enumerate_partitions(6))
    CHECK(add_to_first_row(la, 0) == la);
}

TEST_CASE("cut_columns") {
  CHECK(cut_columns(P({7, 3, 2}), 3, 2) == P({5, 1}));
  CHECK(cut_columns(P({4, 4, 4}), 3, 4) == P({}));
  CHECK(cut_columns(P({3, 1}), 3, 0) == P({3, 1}));
  CHECK_THROWS_AS(cut_columns(P({3, 1}), 3, 1), std::invalid_argument);  // implicit zero part
  CHECK_THROWS_AS(cut_columns(P({3, 1}), 2, 2), std::invalid_argument);  // part too small
  CHECK_THROWS_AS(cut_columns(P({3, 1, 1}), 2, 0), std::invalid_argument);  // too many parts
}

TEST_CASE("cut_columns round-trips against padding") {
  for (const auto& la : enumerate_partitions(12, 3)) {
    if (la.length() < 3 || la.part(2) < 2) continue;
    Partition cut = cut_columns(la, 3, 2);
    std::vector<int> padded;
    for (int i = 0; i < 3; ++i) padded.push_back(cut.part(i) + 2);
    CHECK(Partition(padded) == la);
  }
}

TEST_CASE("lambda_of_lemma") {
  CHECK(lambda_of_lemma(3, 3) == P({4, 4, 1}));
  CHECK(lambda_of_lemma(4, 3) == P({7, 4, 1}));
  for (int n = 2; n <= 7; ++n)
    CHECK(lambda_of_lemma(n, 2) == P({2 * n - 2, 2}));
  CHECK_THROWS_AS(lambda_of_lemma(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(lambda_of_lemma(2, 3), std::invalid_argument);
}

TEST_CASE("lambda_of_lemma shape: size nk, short column of length k") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 2; k <= n; ++k) {
      Partition la = lambda_of_lemma(n, k);
      CHECK(la.size() == n * k);
      CHECK(la.part(k) == 0);
      // Row k is the appended column for k >= 3; at k = 2 the shape is
      // (2n-2, 2) with no extra column.
      CHECK(la.part(k - 1) == (k >= 3 ? 1 : 2));
    }
}

TEST_CASE("stretched and merged") {
  CHECK(stretched(P({3, 1}), 2) == P({6, 2}));
  CHECK(stretched(P({3, 1}), 0) == P({}));
  CHECK(merged(P({3, 1}), P({2, 2})) == P({3, 2, 2, 1}));
  CHECK(merged(P({}), P({2})) == P({2}));
}

TEST_CASE("is_hook") {
  CHECK(is_hook(P({5, 1})));
  CHECK(is_hook(P({3, 1, 1})));
  CHECK(is_hook(P({4})));
  CHECK(!is_hook(P({3, 2})));
  CHECK(!is_hook(P({})));
}
