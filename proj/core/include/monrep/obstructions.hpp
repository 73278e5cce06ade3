#pragma once

#include <string>
#include <vector>

#include "monrep/numbers.hpp"
#include "monrep/partition.hpp"

namespace monrep {

struct ScanCandidate {
  Partition lambda;
  BigInt plethysm_mult = 0;
  BigInt symkron = 0;
};

struct DegreeStats {
  int d = 0;
  long long checked = 0;
  double seconds = 0.0;  // diagnostics only; golden comparisons ignore it
};

struct ScanReport {
  std::string kind;  // "problem1" or "det3gap"
  int n = 0;
  int d_max = 0;
  int max_rows = 0;
  std::vector<ScanCandidate> candidates;  // sorted by degree, then revlex
  std::vector<DegreeStats> per_degree;
};

// Serialized schema:
// {"params":{"kind":...,"n":...,"dmax":...,"max_rows":...},
//  "candidates":[{"partition":[...],"plethysm":int,"symkron":int}],
//  "per_degree":[{"d":int,"checked":int,"seconds":float}]}
std::string report_to_json(const ScanReport& report);
ScanReport report_from_json(const std::string& text);

// Two reports equal up to the seconds diagnostics.
bool reports_equivalent(const ScanReport& a, const ScanReport& b);

// For each d <= d_max and λ ⊢ dn with ℓ(λ) <= n: candidate iff λ has
// positive multiplicity in Sym^d Sym^n and sym_kron(λ, n×d) = 0.
// Guard: n·d_max <= nd_guard (default 20).  When checkpoint_path is
// nonempty the report is rewritten there after every completed degree and
// an existing compatible file is resumed instead of recomputed.
ScanReport problem1_scan(int n, int d_max, int threads = 1,
                         const std::string& checkpoint_path = "",
                         int nd_guard = 20);

// For each d <= d_max and λ ⊢ 3d with ℓ(λ) <= 9: candidate iff the
// multiplicity of λ in Sym^d Sym^3 strictly exceeds sym_kron(λ, 3×d).
// Candidates with symkron = 0 are hole certificates on the orbit side.
// Guard: d_max <= d_guard (default 7).
ScanReport det3_gap_scan(int d_max, int threads = 1,
                         const std::string& checkpoint_path = "",
                         int d_guard = 7);

// Exact form of the padded-weight necessary condition:
// n·λ₁ >= (n-m)·|λ|.  Requires n > m >= 1.
bool padded_filter(const Partition& la, int n, int m);

}  // namespace monrep
