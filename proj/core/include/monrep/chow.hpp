#pragma once

#include <vector>

#include "monrep/numbers.hpp"
#include "monrep/partition.hpp"

namespace monrep {

// A partition certified outside the degree-graded monoid of the Chow variety
// but inside its saturation: positive multiplicity in the ambient coordinate
// ring (Sym^degree Sym^n) and zero in the normalization (Sym^n Sym^degree).
struct HoleRecord {
  Partition lambda;
  int degree = 0;
  BigInt ambient_mult = 0;
  BigInt normalization_mult = 0;
};

// Multiplicity of λ in Sym^n Sym^{|λ|/n}; 0 when n does not divide |λ|.
// Requires ℓ(λ) <= n.
BigInt normalization_mult(const Partition& la, int n);
bool in_S_normalization(const Partition& la, int n);

// For each d <= d_max and λ ⊢ 3d with at most 3 rows: report λ iff its
// multiplicity in Sym^d Sym^3 is positive while its multiplicity in
// Sym^3 Sym^d vanishes.  Sorted by d, then reverse-lexicographically.
std::vector<HoleRecord> chow3_hole_scan(int d_max, int threads = 1,
                                        int d_max_guard = 10);

struct FamilyVerdict {
  Partition lambda;
  int degree = 0;                    // λ lives in Sym^degree Sym^3
  BigInt ambient_mult = 0;           // in Sym^degree Sym^3
  BigInt normalization_mult = 0;     // in Sym^3 Sym^degree
  std::vector<BigInt> cut_chain;     // Sym^3-side multiplicity after cutting
                                     // i pairs of length-3 columns, i = 0..2k+1
  bool chain_consistent = false;     // all chain entries equal
  bool confirmed_hole = false;
};

// λ = (7+4k+3j, 3+4k, 2+4k), degree 4+4k+j.  Checks ambient positivity,
// normalization vanishing, and the column-cut reduction down to the hook
// (5+3j, 1) in Sym^3 Sym^{2+j}.  Guarded by 4+4k+j <= guard.
FamilyVerdict infinite_family_check(int j, int k, int guard = 10);

struct BoundReport {
  int n = 0;
  Rational d_value;                 // (n²-n)! / (n!·(n-1)!^n), exact
  BigInt bound;                     // n^{n²-2n}
  bool holds = false;               // d_value < bound
  std::vector<BigInt> hilbert_samples;  // H(k) for k = 1..5 with
                                        // H(k) = C(C(k+n-1,n-1)+n-1, n)
  bool hilbert_leading_ok = false;  // Δ^r H(0) == D with r = n²-n, i.e. the
                                    // degree-r leading coefficient is D/r!
};

BoundReport bound_D(int n);

// (#even - #odd) Latin squares of size n; the sign of a square is the
// product of the signs of all its row and column permutations.  Full
// backtracking enumeration; guarded by n <= guard (default 5).
long long alon_tarsi_delta(int n, int guard = 5);

}  // namespace monrep
