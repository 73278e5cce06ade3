#pragma once

#include <map>

#include "monrep/numbers.hpp"
#include "monrep/partition.hpp"

namespace monrep {

// Cycle type of σ² for σ of cycle type mu: an odd part c stays one part c,
// an even part c splits into two parts c/2.
Partition square_class(const Partition& mu);

// Irreducible symmetric-group character value χ^λ(μ) by the
// Murnaghan–Nakayama rule, stripping border strips for the parts of μ in
// decreasing order.  Values are memoized in a process-wide cache; repeated
// calls are answered from it.  Requires |λ| = |μ|.
//
// Cache capacity defaults to 8M entries and can be overridden through the
// MONREP_CHAR_CACHE_MAX environment variable (read once, at first use).
// When the cache is full further values are still computed exactly, just
// not retained.
BigInt mn_character(const Partition& la, const Partition& mu);

size_t character_cache_entries();
void clear_character_cache();

// A class function on S_N: sparse map from cycle types to exact rationals;
// absent keys mean 0.
struct ClassFunction {
  int degree = 0;
  std::map<Partition, Rational> values;

  Rational at(const Partition& mu) const;
};

// ⟨f,g⟩ = Σ_μ f(μ)·g(μ)/z_μ.  Requires equal degree.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// χ^λ materialized on every class of S_{|λ|}.
ClassFunction character_class_function(const Partition& la);

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g);

}  // namespace monrep
