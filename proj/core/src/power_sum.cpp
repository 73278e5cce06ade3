#include "monrep/power_sum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "monrep/characters.hpp"
#include "monrep/errors.hpp"

namespace monrep {

Rational PowerSumVector::evaluate_at_identity(int m) const {
  Rational sum = 0;
  for (const auto& [mu, c] : coeffs)
    sum += c * pow_int(BigInt(m), static_cast<unsigned>(mu.length()));
  return sum;
}

PowerSumVector h_in_p(int n) {
  if (n < 0) throw std::invalid_argument("h_in_p: negative degree");
  PowerSumVector f;
  f.degree = n;
  for (const Partition& rho : enumerate_partitions(n))
    f.coeffs.emplace(rho, Rational(1) / Rational(z_of(rho)));
  return f;
}

namespace {

// p_k[h_n]: the expansion of h_n with every part multiplied by k.
PowerSumVector p_k_of_h(int k, int n) {
  PowerSumVector f;
  f.degree = k * n;
  for (const Partition& rho : enumerate_partitions(n))
    f.coeffs.emplace(stretched(rho, k), Rational(1) / Rational(z_of(rho)));
  return f;
}

void add_scaled(PowerSumVector& acc, const PowerSumVector& term,
                const Rational& scale) {
  for (const auto& [mu, c] : term.coeffs) {
    Rational& slot = acc.coeffs[mu];
    slot += c * scale;
    if (slot == 0) acc.coeffs.erase(mu);
  }
}

PowerSumVector product(const PowerSumVector& a, const PowerSumVector& b) {
  PowerSumVector out;
  out.degree = a.degree + b.degree;
  for (const auto& [mu, cmu] : a.coeffs)
    for (const auto& [nu, cnu] : b.coeffs) {
      Rational& slot = out.coeffs[merged(mu, nu)];
      slot += cmu * cnu;
    }
  return out;
}

PowerSumVector compute_h_plethysm_h(int d, int n) {
  PowerSumVector out;
  out.degree = d * n;
  for (const Partition& tau : enumerate_partitions(d)) {
    PowerSumVector term;
    term.degree = 0;
    term.coeffs.emplace(Partition{}, Rational(1));
    for (int k : tau.parts()) term = product(term, p_k_of_h(k, n));
    add_scaled(out, term, Rational(1) / Rational(z_of(tau)));
  }
  return out;
}

}  // namespace

const PowerSumVector& h_plethysm_h(int d, int n) {
  if (d < 0 || n < 1)
    throw std::invalid_argument("h_plethysm_h: need d >= 0, n >= 1");
  // Computed exactly once per (d, n): concurrent scans block on the entry
  // instead of expanding the same plethysm in parallel.
  struct Entry {
    std::once_flag flag;
    PowerSumVector value;
  };
  static std::map<std::pair<int, int>, Entry> memo;
  static std::mutex mutex;
  Entry* entry;
  {
    std::lock_guard lock(mutex);
    entry = &memo[{d, n}];
  }
  std::call_once(entry->flag,
                 [&] { entry->value = compute_h_plethysm_h(d, n); });
  return entry->value;
}

BigInt schur_mult(const Partition& la, const PowerSumVector& f) {
  if (la.size() != f.degree)
    throw SizeMismatchError("schur_mult: |lambda| != degree of f");
  Rational sum = 0;
  for (const auto& [mu, c] : f.coeffs) sum += c * Rational(mn_character(la, mu));
  if (denominator(sum) != 1)
    throw InternalArithmeticError("schur_mult: non-integer Schur coefficient");
  return numerator(sum);
}

BigInt mult_sym_sym(const Partition& la, int outer, int inner) {
  if (outer < 0 || inner < 1)
    throw std::invalid_argument("mult_sym_sym: need outer >= 0, inner >= 1");
  if (la.size() != outer * inner)
    throw SizeMismatchError("mult_sym_sym: |lambda| != outer*inner");
  BigInt m = schur_mult(la, h_plethysm_h(outer, inner));
  if (m < 0)
    throw InternalArithmeticError("mult_sym_sym: negative plethysm multiplicity");
  return m;
}

namespace {

// Dense table of W(β) for all multiset sizes 0..outer, indexed by β packed in
// base (cap+1).  Counting multisets: items processed one at a time with the
// count index ascending, so each exponent vector may repeat.
struct WeightTable {
  int m = 0;
  int cap = 0;
  size_t grid = 0;
  std::vector<std::vector<BigInt>> dp;  // dp[count][packed β]

  const BigInt& lookup(int count, const std::vector<int>& beta) const {
    static const BigInt zero = 0;
    size_t idx = 0;
    for (int i = 0; i < m; ++i) {
      if (beta[static_cast<size_t>(i)] < 0 || beta[static_cast<size_t>(i)] > cap)
        return zero;
      idx = idx * static_cast<size_t>(cap + 1) +
            static_cast<size_t>(beta[static_cast<size_t>(i)]);
    }
    return dp[static_cast<size_t>(count)][idx];
  }
};

WeightTable build_weight_table(int outer, int inner, int m) {
  WeightTable t;
  t.m = m;
  t.cap = outer * inner;
  t.grid = 1;
  for (int i = 0; i < m; ++i) t.grid *= static_cast<size_t>(t.cap + 1);
  t.dp.assign(static_cast<size_t>(outer) + 1, std::vector<BigInt>(t.grid));
  t.dp[0][0] = 1;

  // All degree-`inner` exponent vectors in m variables, lexicographic.
  std::vector<std::vector<int>> items;
  std::vector<int> v(static_cast<size_t>(m), 0);
  std::function<void(int, int)> gen = [&](int pos, int rem) {
    if (pos == m - 1) {
      v[static_cast<size_t>(pos)] = rem;
      items.push_back(v);
      return;
    }
    for (int x = 0; x <= rem; ++x) {
      v[static_cast<size_t>(pos)] = x;
      gen(pos + 1, rem - x);
    }
  };
  gen(0, inner);

  std::vector<size_t> strides(static_cast<size_t>(m));
  size_t s = 1;
  for (int i = m - 1; i >= 0; --i) {
    strides[static_cast<size_t>(i)] = s;
    s *= static_cast<size_t>(t.cap + 1);
  }

  for (const auto& item : items) {
    size_t shift = 0;
    for (int i = 0; i < m; ++i)
      shift += strides[static_cast<size_t>(i)] * static_cast<size_t>(item[static_cast<size_t>(i)]);
    for (int c = 1; c <= outer; ++c) {
      auto& cur = t.dp[static_cast<size_t>(c)];
      const auto& prev = t.dp[static_cast<size_t>(c - 1)];
      // β ranges over the grid; entries where β - item would leave the box
      // are skipped by starting each coordinate at item[i].
      std::function<void(int, size_t)> walk = [&](int pos, size_t idx) {
        if (pos == m) {
          cur[idx] += prev[idx - shift];
          return;
        }
        for (int x = item[static_cast<size_t>(pos)]; x <= t.cap; ++x)
          walk(pos + 1, idx + strides[static_cast<size_t>(pos)] * static_cast<size_t>(x));
      };
      walk(0, 0);
    }
  }
  return t;
}

const WeightTable& weight_table(int outer, int inner, int m) {
  static std::map<std::tuple<int, int, int>, WeightTable> memo;
  static std::shared_mutex mutex;
  const std::tuple<int, int, int> key{outer, inner, m};
  {
    std::shared_lock lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  WeightTable t = build_weight_table(outer, inner, m);
  std::unique_lock lock(mutex);
  return memo.emplace(key, std::move(t)).first->second;
}

}  // namespace

BigInt brute_force_mult(const Partition& la, int outer, int inner) {
  if (outer < 0 || inner < 1)
    throw std::invalid_argument("brute_force_mult: need outer >= 0, inner >= 1");
  if (la.size() != outer * inner)
    throw SizeMismatchError("brute_force_mult: |lambda| != outer*inner");
  if (outer * inner > 16 || la.length() > 4)
    throw GuardViolation("brute_force_mult: outer*inner <= 16 and len <= 4 only");
  if (la.empty()) return 1;  // Sym^0, the trivial weight

  const int m = la.length();
  const WeightTable& table = weight_table(outer, inner, m);

  std::vector<int> sigma(static_cast<size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (sigma[static_cast<size_t>(i)] > sigma[static_cast<size_t>(j)]) ++inversions;
    std::vector<int> beta(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
      beta[static_cast<size_t>(i)] = la.part(i) + sigma[static_cast<size_t>(i)] - i;
    const BigInt& w = table.lookup(outer, beta);
    if (inversions % 2 == 0) total += w;
    else total -= w;
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  if (total < 0)
    throw InternalArithmeticError("brute_force_mult: negative multiplicity");
  return total;
}

SchurExpansion schur_expansion(const PowerSumVector& f, int max_rows) {
  SchurExpansion out;
  out.degree = f.degree;
  for (const Partition& la : enumerate_partitions(f.degree, max_rows)) {
    BigInt m = schur_mult(la, f);
    if (m < 0)
      throw InternalArithmeticError("schur_expansion: negative coefficient");
    if (m > 0) out.mults.emplace(la, std::move(m));
  }
  return out;
}

}  // namespace monrep
