#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monrep/characters.hpp"
#include "monrep/errors.hpp"
#include "monrep/partition.hpp"

using namespace monrep;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent dimension oracle: hook length formula, dim λ = N!/Π hooks.
BigInt hook_length_dimension(const Partition& la) {
  const Partition conj = conjugate(la);
  BigInt hooks = 1;
  for (int i = 0; i < la.length(); ++i)
    for (int j = 0; j < la.part(i); ++j)
      hooks *= BigInt(la.part(i) - j + conj.part(j) - i - 1);
  return factorial(static_cast<unsigned>(la.size())) / hooks;
}

}  // namespace

TEST_CASE("square_class") {
  CHECK(square_class(P({2})) == P({1, 1}));
  CHECK(square_class(P({3})) == P({3}));
  CHECK(square_class(P({4, 2})) == P({2, 2, 1, 1}));
  for (const auto& mu : enumerate_partitions(9))
    CHECK(square_class(mu).size() == mu.size());
}

TEST_CASE("character values: pinned examples") {
  // trivial representation
  for (const auto& mu : enumerate_partitions(6))
    CHECK(mn_character(P({6}), mu) == 1);
  CHECK(mn_character(P({1, 1, 1}), P({3})) == 1);   // sign of a 3-cycle
  CHECK(mn_character(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(mn_character(P({2, 1}), P({3})) == -1);
  CHECK_THROWS_AS(mn_character(P({2, 1}), P({2, 2})), SizeMismatchError);
}

TEST_CASE("sign character is the parity of N minus number of cycles") {
  for (const auto& mu : enumerate_partitions(8)) {
    const int transpositions = mu.size() - mu.length();
    CHECK(mn_character(P(std::vector<int>(8, 1)), mu) ==
          (transpositions % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("row orthogonality up to N = 10") {
  for (int n = 1; n <= 10; ++n) {
    const auto lambdas = enumerate_partitions(n);
    std::vector<ClassFunction> chars;
    for (const auto& la : lambdas) chars.push_back(character_class_function(la));
    for (size_t a = 0; a < chars.size(); ++a)
      for (size_t b = a; b < chars.size(); ++b) {
        Rational ip = inner_product(chars[a], chars[b]);
        CHECK(ip == (a == b ? 1 : 0));
      }
  }
}

TEST_CASE("column orthogonality up to N = 10") {
  for (int n = 1; n <= 10; ++n) {
    const auto lambdas = enumerate_partitions(n);
    for (const auto& mu : enumerate_partitions(n)) {
      BigInt sum = 0;
      for (const auto& la : lambdas) {
        BigInt v = mn_character(la, mu);
        sum += v * v;
      }
      CHECK(sum == z_of(mu));
    }
  }
}

TEST_CASE("identity-class values match the hook length formula to N = 14") {
  for (int n = 1; n <= 14; ++n) {
    const Partition identity = rectangle(n, 1);
    for (const auto& la : enumerate_partitions(n))
      CHECK(mn_character(la, identity) == hook_length_dimension(la));
  }
}

TEST_CASE("inner products: irreducibility and orthogonality") {
  CHECK(inner_product(character_class_function(P({2, 1})),
                      character_class_function(P({2, 1}))) == 1);
  CHECK(inner_product(character_class_function(P({2})),
                      character_class_function(P({1, 1}))) == 0);
}

TEST_CASE("tensor square of the standard S_3 representation") {
  // Decompose χ^{(2,1)}·χ^{(2,1)} pointwise; brute-force oracle values
  // come straight from the 3-class character table of S_3.
  ClassFunction std3 = character_class_function(P({2, 1}));
  ClassFunction square = pointwise_product(std3, std3);
  CHECK(inner_product(square, character_class_function(P({3}))) == 1);
  CHECK(inner_product(square, character_class_function(P({1, 1, 1}))) == 1);
  CHECK(inner_product(square, std3) == 1);
}

TEST_CASE("class function plumbing") {
  ClassFunction f = character_class_function(P({2, 2}));
  CHECK(f.degree == 4);
  CHECK(f.at(P({1, 1, 1, 1})) == 2);
  CHECK(f.at(P({3, 1})) == -1);
  ClassFunction g;
  g.degree = 3;
  CHECK_THROWS_AS(inner_product(f, g), SizeMismatchError);
  CHECK(character_cache_entries() > 0);
}
