#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "monrep/numbers.hpp"

namespace monrep {

// Weakly decreasing tuple of positive integers, stored without trailing
// zeros; the empty tuple is the unique partition of 0.  Serves both as a GL
// highest weight and as a symmetric-group cycle type.  Immutable after
// construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }                        // |λ|
  int length() const { return static_cast<int>(parts_.size()); }  // ℓ(λ)
  bool empty() const { return parts_.empty(); }

  // 0-based; parts beyond ℓ(λ) read as 0.
  int part(int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  auto operator<=>(const Partition&) const = default;

  // Text form: comma-separated parts, "7,3,2"; the empty partition is "-".
  std::string str() const;
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n subject to the bounds (0 = unbounded), each exactly
// once, in reverse-lexicographic order on parts: (4), (3,1), (2,2), ...
std::vector<Partition> enumerate_partitions(int n, int max_len = 0,
                                            int max_part = 0);

// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& la);

// Order of the centralizer of a permutation of cycle type mu:
// z_mu = prod_i i^{m_i} m_i! over part multiplicities m_i.
BigInt z_of(const Partition& mu);

// n rows each of length row_len (empty if row_len = 0).
Partition rectangle(int rows, int row_len);

// λ with t added to its first part (a first part is created if λ is empty).
Partition add_to_first_row(const Partition& la, int t);

// Subtract c from each of the n parts of λ, dropping zeros.  Requires
// ℓ(λ) <= n, and when c > 0 additionally ℓ(λ) = n with λ_n >= c, so that no
// implicit zero part would have to shrink.
Partition cut_columns(const Partition& la, int n, int c);

// For n >= k >= 2 and d = k(k-1)/2: take μ = (d+1, d+1, 1^{k-2}) of size k²
// and add (n-k)k to its first part.  The result has size nk, part k equal
// to 1 and no parts beyond k.
Partition lambda_of_lemma(int n, int k);

// Componentwise multiple c·λ (each part times c); c >= 0.
Partition stretched(const Partition& la, int c);

// Sorted union of the parts of a and b (the cycle type of a disjoint
// product; the key product in the power-sum basis).
Partition merged(const Partition& a, const Partition& b);

bool is_hook(const Partition& la);  // (a, 1^b) with b >= 1, or a single row

}  // namespace monrep
