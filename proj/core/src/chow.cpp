#include "monrep/chow.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "monrep/errors.hpp"
#include "monrep/parallel.hpp"
#include "monrep/power_sum.hpp"

namespace monrep {

BigInt normalization_mult(const Partition& la, int n) {
  if (n < 1) throw std::invalid_argument("normalization_mult: need n >= 1");
  if (la.length() > n)
    throw std::invalid_argument("normalization_mult: more than n rows");
  if (la.size() % n != 0) return 0;
  return mult_sym_sym(la, n, la.size() / n);
}

bool in_S_normalization(const Partition& la, int n) {
  return normalization_mult(la, n) > 0;
}

std::vector<HoleRecord> chow3_hole_scan(int d_max, int threads,
                                        int d_max_guard) {
  if (d_max < 1) throw std::invalid_argument("chow3_hole_scan: need d_max >= 1");
  if (d_max > d_max_guard)
    throw GuardViolation("chow3_hole_scan: d_max exceeds the resource guard");
  std::vector<HoleRecord> records;
  for (int d = 1; d <= d_max; ++d) {
    const PowerSumVector& ambient = h_plethysm_h(d, 3);
    const PowerSumVector& normalization = h_plethysm_h(3, d);
    const std::vector<Partition> lambdas = enumerate_partitions(3 * d, 3);
    std::vector<HoleRecord> slots(lambdas.size());
    parallel_for(lambdas.size(), threads, [&](size_t i) {
      const Partition& la = lambdas[i];
      BigInt a = schur_mult(la, ambient);
      if (a <= 0) return;
      BigInt nm = schur_mult(la, normalization);
      if (nm != 0) return;
      slots[i] = HoleRecord{la, d, std::move(a), 0};
    });
    for (auto& rec : slots)
      if (rec.ambient_mult > 0) records.push_back(std::move(rec));
  }
  return records;
}

FamilyVerdict infinite_family_check(int j, int k, int guard) {
  if (j < 0 || k < 0)
    throw std::invalid_argument("infinite_family_check: need j, k >= 0");
  const int d = 4 + 4 * k + j;
  if (d > guard)
    throw GuardViolation("infinite_family_check: 4+4k+j exceeds the guard");

  FamilyVerdict verdict;
  verdict.lambda = Partition({7 + 4 * k + 3 * j, 3 + 4 * k, 2 + 4 * k});
  verdict.degree = d;
  verdict.ambient_mult = mult_sym_sym(verdict.lambda, d, 3);

  // Cut i pairs of length-3 columns: λ - 2i·(1,1,1) inside Sym^3 Sym^{d-2i}.
  // After all 2k+1 cuts the shape is the hook (5+3j, 1).
  for (int i = 0; i <= 2 * k + 1; ++i) {
    std::vector<int> parts;
    for (int p : verdict.lambda.parts())
      if (p - 2 * i > 0) parts.push_back(p - 2 * i);
    verdict.cut_chain.push_back(
        mult_sym_sym(Partition(std::move(parts)), 3, d - 2 * i));
  }
  verdict.normalization_mult = verdict.cut_chain.front();
  verdict.chain_consistent =
      std::all_of(verdict.cut_chain.begin(), verdict.cut_chain.end(),
                  [&](const BigInt& v) { return v == verdict.cut_chain.front(); });
  verdict.confirmed_hole = verdict.ambient_mult > 0 &&
                           verdict.normalization_mult == 0 &&
                           verdict.chain_consistent;
  return verdict;
}

namespace {

BigInt hilbert_count(int n, int k) {
  return binomial(binomial(BigInt(k + n - 1), static_cast<unsigned>(n - 1)) +
                      BigInt(n - 1),
                  static_cast<unsigned>(n));
}

}  // namespace

BoundReport bound_D(int n) {
  if (n < 2) throw std::invalid_argument("bound_D: need n >= 2");
  BoundReport report;
  report.n = n;
  const unsigned r = static_cast<unsigned>(n * n - n);
  Rational denom = Rational(factorial(static_cast<unsigned>(n))) *
                   Rational(pow_int(factorial(static_cast<unsigned>(n - 1)),
                                    static_cast<unsigned>(n)));
  report.d_value = Rational(factorial(r)) / denom;
  report.bound = pow_int(BigInt(n), static_cast<unsigned>(n * n - 2 * n));
  report.holds = report.d_value < Rational(report.bound);

  for (int k = 1; k <= 5; ++k)
    report.hilbert_samples.push_back(hilbert_count(n, k));

  // The Hilbert count is a degree-r polynomial in k; its r-th finite
  // difference equals r!·(leading coefficient).  Leading = D/r! exactly
  // when that difference equals D.
  BigInt diff = 0;
  for (unsigned i = 0; i <= r; ++i) {
    BigInt term = binomial(BigInt(r), i) * hilbert_count(n, static_cast<int>(i));
    if ((r - i) % 2 == 0) diff += term;
    else diff -= term;
  }
  report.hilbert_leading_ok = Rational(diff) == report.d_value;
  return report;
}

long long alon_tarsi_delta(int n, int guard) {
  if (n < 1) throw std::invalid_argument("alon_tarsi_delta: need n >= 1");
  if (n > guard)
    throw GuardViolation("alon_tarsi_delta: n exceeds the enumeration guard");

  // Cells fill row by row; rows grow left to right and columns top to
  // bottom, so placing symbol s adds one inversion for every larger symbol
  // already in its row and in its column.  The running parity is the sign
  // of the square when the last cell lands.
  std::vector<unsigned> row_used(static_cast<size_t>(n), 0);
  std::vector<unsigned> col_used(static_cast<size_t>(n), 0);
  long long delta = 0;

  std::function<void(int, int)> place = [&](int cell, int parity) {
    if (cell == n * n) {
      delta += parity % 2 == 0 ? 1 : -1;
      return;
    }
    const size_t i = static_cast<size_t>(cell / n);
    const size_t j = static_cast<size_t>(cell % n);
    for (int s = 0; s < n; ++s) {
      const unsigned bit = 1u << s;
      if ((row_used[i] & bit) || (col_used[j] & bit)) continue;
      const unsigned larger = ~((bit << 1) - 1);
      const int added = std::popcount(row_used[i] & larger) +
                        std::popcount(col_used[j] & larger);
      row_used[i] |= bit;
      col_used[j] |= bit;
      place(cell + 1, parity + added);
      row_used[i] &= ~bit;
      col_used[j] &= ~bit;
    }
  };
  place(0, 0);
  return delta;
}

}  // namespace monrep
