#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monrep/characters.hpp"
#include "monrep/errors.hpp"
#include "monrep/partition.hpp"
#include "monrep/power_sum.hpp"

using namespace monrep;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Rational R(long long num, long long den) { return Rational(num) / Rational(den); }

// dim of the GL_m irreducible λ by the hook content formula:
// Π_{(i,j)} (m + j - i) / hook(i,j).  Zero when ℓ(λ) > m.
BigInt gl_dimension(const Partition& la, int m) {
  if (la.length() > m) return 0;
  const Partition conj = conjugate(la);
  Rational dim = 1;
  for (int i = 0; i < la.length(); ++i)
    for (int j = 0; j < la.part(i); ++j) {
      dim *= Rational(m + j - i);
      dim /= Rational(la.part(i) - j + conj.part(j) - i - 1);
    }
  REQUIRE(denominator(dim) == 1);
  return numerator(dim);
}

BigInt sym_sym_dimension(int d, int n, int m) {
  // dim Sym^d Sym^n C^m = C(C(n+m-1, m-1) + d - 1, d)
  return binomial(binomial(BigInt(n + m - 1), static_cast<unsigned>(m - 1)) +
                      BigInt(d - 1),
                  static_cast<unsigned>(d));
}

}  // namespace

TEST_CASE("h_in_p: classical expansions") {
  PowerSumVector h1 = h_in_p(1);
  CHECK(h1.coeffs.at(P({1})) == 1);
  CHECK(h1.coeffs.size() == 1);

  PowerSumVector h2 = h_in_p(2);
  CHECK(h2.coeffs.at(P({2})) == R(1, 2));
  CHECK(h2.coeffs.at(P({1, 1})) == R(1, 2));

  PowerSumVector h3 = h_in_p(3);
  CHECK(h3.coeffs.at(P({3})) == R(1, 3));
  CHECK(h3.coeffs.at(P({2, 1})) == R(1, 2));
  CHECK(h3.coeffs.at(P({1, 1, 1})) == R(1, 6));
}

TEST_CASE("h_plethysm_h degenerate shapes") {
  for (int n = 1; n <= 6; ++n)
    CHECK(h_plethysm_h(1, n).coeffs == h_in_p(n).coeffs);
  for (int d = 0; d <= 6; ++d)
    CHECK(h_plethysm_h(d, 1).coeffs == h_in_p(d).coeffs);
}

TEST_CASE("Sym^2 Sym^2 decomposes as (4) + (2,2)") {
  const PowerSumVector& f = h_plethysm_h(2, 2);
  SchurExpansion expansion = schur_expansion(f);
  CHECK(expansion.mults.size() == 2);
  CHECK(expansion.mults.at(P({4})) == 1);
  CHECK(expansion.mults.at(P({2, 2})) == 1);
  CHECK(schur_mult(P({3, 1}), f) == 0);
  // independent oracle agrees
  CHECK(brute_force_mult(P({4}), 2, 2) == 1);
  CHECK(brute_force_mult(P({2, 2}), 2, 2) == 1);
  CHECK(brute_force_mult(P({3, 1}), 2, 2) == 0);
}

TEST_CASE("evaluation at the identity gives the ambient dimension") {
  for (int m = 1; m <= 4; ++m) {
    CHECK(h_plethysm_h(2, 3).evaluate_at_identity(m) ==
          Rational(sym_sym_dimension(2, 3, m)));
    CHECK(h_plethysm_h(3, 2).evaluate_at_identity(m) ==
          Rational(sym_sym_dimension(3, 2, m)));
    CHECK(h_plethysm_h(4, 3).evaluate_at_identity(m) ==
          Rational(sym_sym_dimension(4, 3, m)));
  }
}

TEST_CASE("mult_sym_sym: facts pinned from the construction lemmas") {
  CHECK(mult_sym_sym(P({6, 3}), 3, 3) > 0);
  CHECK(mult_sym_sym(P({3, 3}), 2, 3) == 0);
  CHECK(mult_sym_sym(P({4, 4, 4}), 4, 3) > 0);
  CHECK(mult_sym_sym(P({7, 3, 2}), 4, 3) > 0);
  for (int n = 3; n <= 6; ++n)
    CHECK(mult_sym_sym(P({2 * n - 2, 2}), n, 2) > 0);
  CHECK_THROWS_AS(mult_sym_sym(P({3, 1}), 2, 3), SizeMismatchError);
}

TEST_CASE("oracle equivalence on every shape with |λ| <= 12, <= 3 rows") {
  for (int n = 1; n <= 12; ++n)
    for (int d = 1; d * n <= 12; ++d)
      for (const auto& la : enumerate_partitions(d * n, 3))
        CHECK(mult_sym_sym(la, d, n) == brute_force_mult(la, d, n));
}

TEST_CASE("brute force guards") {
  CHECK_THROWS_AS(brute_force_mult(P({18}), 6, 3), GuardViolation);
  CHECK_THROWS_AS(brute_force_mult(P({4, 4, 4, 2, 2}), 8, 2), GuardViolation);
  CHECK(brute_force_mult(P({12}), 12, 1) == 1);  // Sym^N of a line
}

TEST_CASE("dimension bookkeeping: weighted Schur sum vs ambient dimension") {
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int d = 1; d * n <= 12; ++d) {
        BigInt total = 0;
        for (const auto& la : enumerate_partitions(d * n, m))
          total += mult_sym_sym(la, d, n) * gl_dimension(la, m);
        CHECK(total == sym_sym_dimension(d, n, m));
      }
}

TEST_CASE("no hook with at least two rows occurs, through dn <= 15") {
  for (int n = 2; n <= 15; ++n)
    for (int d = 1; d * n <= 15; ++d) {
      const int size = d * n;
      for (int arm = 1; arm < size; ++arm) {
        std::vector<int> parts{arm};
        parts.insert(parts.end(), static_cast<size_t>(size - arm), 1);
        CHECK(mult_sym_sym(P(std::move(parts)), d, n) == 0);
      }
    }
}

TEST_CASE("row adding: λ in Sym^n Sym^k pushes to Sym^{ℓ+n} Sym^k") {
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k * n <= 12; ++k)
      for (const auto& la : enumerate_partitions(n * k))
        if (mult_sym_sym(la, n, k) > 0)
          for (int l = 1; l <= 2; ++l)
            CHECK(mult_sym_sym(add_to_first_row(la, l * k), l + n, k) > 0);
}

TEST_CASE("column-cut equality: two columns of length n trade for inner +2") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k * n <= 10; ++k)
      for (const auto& la : enumerate_partitions(n * k, n)) {
        std::vector<int> widened;
        for (int i = 0; i < n; ++i) widened.push_back(la.part(i) + 2);
        CHECK(mult_sym_sym(la, n, k) ==
              mult_sym_sym(P(std::move(widened)), n, k + 2));
      }
}

TEST_CASE("constructed partitions of the group lemma occur") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= n; ++k)
      CHECK(mult_sym_sym(lambda_of_lemma(n, k), n, k) > 0);
}

TEST_CASE("doubled partitions occur: 2λ in Sym^n Sym^2k") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (const auto& la : enumerate_partitions(n * k, n))
        CHECK(mult_sym_sym(stretched(la, 2), n, 2 * k) > 0);
}

TEST_CASE("schur_expansion respects the row bound") {
  SchurExpansion expansion = schur_expansion(h_plethysm_h(3, 3), 2);
  for (const auto& [la, mult] : expansion.mults) {
    CHECK(la.length() <= 2);
    CHECK(mult > 0);
  }
}
