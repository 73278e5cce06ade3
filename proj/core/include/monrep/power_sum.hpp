#pragma once

#include <map>

#include "monrep/numbers.hpp"
#include "monrep/partition.hpp"

namespace monrep {

// A symmetric function of degree N in the power-sum basis: sparse map from
// partitions of N to exact rational coefficients of p_μ.  Equivalently a
// class function on S_N under p_μ ↦ indicator of the class μ (scaled).
struct PowerSumVector {
  int degree = 0;
  std::map<Partition, Rational> coeffs;

  // Value of the underlying symmetric function at x = (1,...,1), m ones:
  // Σ_μ coeffs(μ)·m^{ℓ(μ)}.  For h_d[h_n] this is dim Sym^d Sym^n C^m.
  Rational evaluate_at_identity(int m) const;
};

// Sparse map from partitions of N to (strictly positive) multiplicities.
struct SchurExpansion {
  int degree = 0;
  std::map<Partition, BigInt> mults;
};

// h_n = Σ_{ρ⊢n} p_ρ / z_ρ.
PowerSumVector h_in_p(int n);

// Power-sum expansion of the plethysm h_d[h_n], degree d·n, via
// h_d = Σ_{τ⊢d} p_τ/z_τ and p_k[h_n] = h_in_p(n) with every part times k.
// Results are cached per (d, n); callers share the returned reference.
const PowerSumVector& h_plethysm_h(int d, int n);

// Coefficient of the Schur function s_λ in f: Σ_μ coeffs(μ)·χ^λ(μ).
// Aborts (InternalArithmeticError) if the exact sum is not an integer.
BigInt schur_mult(const Partition& la, const PowerSumVector& f);

// Multiplicity of the GL irreducible λ in Sym^outer Sym^inner of a space
// with at least ℓ(λ) variables.  Requires |λ| = outer·inner.
BigInt mult_sym_sym(const Partition& la, int outer, int inner);

// Same value by an independent route: the alternating weight-count
//   Σ_{w∈S_m} sgn(w)·W(λ + δ - w(δ)),  m = ℓ(λ), δ = (m-1,...,1,0),
// where W(β) counts size-`outer` multisets of degree-`inner` exponent
// vectors in m variables with coordinate sum β.  Shares nothing with the
// character path.  Guarded: outer·inner <= 16 and ℓ(λ) <= 4.
BigInt brute_force_mult(const Partition& la, int outer, int inner);

// Every λ of degree f.degree with positive coefficient (ℓ(λ) <= max_rows
// when max_rows > 0).  Coefficients must come out nonnegative.
SchurExpansion schur_expansion(const PowerSumVector& f, int max_rows = 0);

}  // namespace monrep
