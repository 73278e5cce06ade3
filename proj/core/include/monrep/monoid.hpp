#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "monrep/lattice.hpp"
#include "monrep/numbers.hpp"

namespace monrep {

using IntVec = std::vector<long long>;

// Abstract membership predicate "v in S".  Must be deterministic and total
// on the box it is queried over, and safe to call concurrently.
using MembershipOracle = std::function<bool(const IntVec&)>;

// Finitely generated submonoid of Z^r presented by its generator list.
// The derived lattice basis (Hermite form of the generators) answers group
// membership; cone membership is exact rational feasibility over the
// generators.  Immutable after construction.
class FGMonoid {
 public:
  FGMonoid(int rank, std::vector<IntVec> generators);

  int rank() const { return rank_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  const LatticeBasis& lattice() const { return lattice_; }

  // v in A(S) = S - S, the group generated by S.
  bool in_group(const IntVec& v) const;
  // v a nonnegative rational combination of the generators.
  bool in_cone(const IntVec& v) const;
  // Sat(S) = A(S) ∩ C_Q(S).
  bool in_saturation(const IntVec& v) const;

  // Membership in the monoid itself: is v a nonnegative *integer*
  // combination of the generators?  Complete when every generator is
  // componentwise nonnegative (the combination can never overshoot);
  // otherwise a bounded search with each coefficient capped by coeff_bound.
  bool generated_membership(const IntVec& v, long long coeff_bound) const;

  MembershipOracle generator_oracle(long long coeff_bound) const;

 private:
  int rank_;
  std::vector<IntVec> generators_;
  LatticeBasis lattice_;
  bool all_nonneg_;
};

// All v with 0 <= v_i <= box_i, in_saturation(v) true and oracle(v) false,
// in lexicographic order.
std::vector<IntVec> holes_in_box(const FGMonoid& monoid,
                                 const MembershipOracle& oracle,
                                 const IntVec& box);

// Least c in 1..e_max with oracle(c·v) true, or nullopt.
std::optional<long long> min_stretch(const IntVec& v,
                                     const MembershipOracle& oracle,
                                     long long e_max);

}  // namespace monrep
