#pragma once

#include "monrep/numbers.hpp"
#include "monrep/partition.hpp"

namespace monrep {

// Kronecker coefficient g(λ,μ,ν) = Σ_ρ χ^λ(ρ)χ^μ(ρ)χ^ν(ρ)/z_ρ.
// Requires |λ| = |μ| = |ν|; integrality and nonnegativity are asserted.
BigInt kron(const Partition& la, const Partition& mu, const Partition& nu);

// Multiplicity of χ^λ in the symmetrized square of χ^μ:
//   Σ_ρ χ^λ(ρ)·(χ^μ(ρ)² + χ^μ(square_class(ρ)))/(2·z_ρ).
// Asserts integrality and 0 <= sym_kron <= kron(λ,μ,μ).
BigInt sym_kron(const Partition& la, const Partition& mu);

// The complementary alternating part (minus sign in the formula above);
// sym_kron + antisym_kron = kron(λ,μ,μ).
BigInt antisym_kron(const Partition& la, const Partition& mu);

// True iff n divides |λ| and sym_kron(λ, n×d) > 0 with d = |λ|/n.
// Requires ℓ(λ) <= n².
bool in_S_o_det(const Partition& la, int n);

}  // namespace monrep
