#pragma once

#include <span>
#include <vector>

#include "monrep/numbers.hpp"

namespace monrep {

// Canonical Hermite-normal-form basis of the lattice (integer span) of a set
// of integer vectors: pivot columns strictly increasing, pivots positive,
// entries above each pivot reduced into [0, pivot).  Row operations preserve
// the span exactly, so lattices are equal iff their canonical rows are.
class LatticeBasis {
 public:
  LatticeBasis(const std::vector<std::vector<BigInt>>& generators, int dim);

  int dim() const { return dim_; }
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

  // v in the integer span?
  bool contains(std::span<const BigInt> v) const;

 private:
  int dim_ = 0;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<int> pivot_col_;
};

// Exact feasibility of  Σ_j x_j·columns[j] = target, x >= 0  over Q
// (phase-1 simplex with Bland's rule; terminates, no floating point).
bool nonneg_combination_exists(const std::vector<std::vector<Rational>>& columns,
                               std::span<const Rational> target);

}  // namespace monrep
