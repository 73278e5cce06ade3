#include "monrep/kronecker.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "monrep/characters.hpp"
#include "monrep/errors.hpp"

namespace monrep {

namespace {

// Per-μ class data reused across the many λ of a scan: for every class ρ of
// S_N the tuple (z_ρ, χ^μ(ρ), χ^μ(ρ²-class)).  Rectangles n×d are the hot
// case but the cache is keyed by arbitrary μ.
struct MuClassData {
  std::vector<Partition> classes;
  std::vector<BigInt> z;
  std::vector<BigInt> chi;
  std::vector<BigInt> chi_square;
};

const MuClassData& mu_class_data(const Partition& mu) {
  // Built exactly once per μ; racing builders would each walk the full
  // class list, which dominates a scan's setup cost.
  struct Entry {
    std::once_flag flag;
    MuClassData data;
  };
  static std::map<Partition, Entry> memo;
  static std::mutex mutex;
  Entry* entry;
  {
    std::lock_guard lock(mutex);
    entry = &memo[mu];
  }
  std::call_once(entry->flag, [&] {
    MuClassData& data = entry->data;
    data.classes = enumerate_partitions(mu.size());
    data.z.reserve(data.classes.size());
    data.chi.reserve(data.classes.size());
    data.chi_square.reserve(data.classes.size());
    for (const Partition& rho : data.classes) {
      data.z.push_back(z_of(rho));
      data.chi.push_back(mn_character(mu, rho));
      data.chi_square.push_back(mn_character(mu, square_class(rho)));
    }
  });
  return entry->data;
}

BigInt as_nonneg_integer(const Rational& sum, const char* what) {
  if (denominator(sum) != 1) throw InternalArithmeticError(what);
  BigInt v = numerator(sum);
  if (v < 0) throw InternalArithmeticError(what);
  return v;
}

// (χ²(ρ) ± χ(ρ²))/2 summed against χ^λ.
BigInt half_sum(const Partition& la, const Partition& mu, int sign) {
  if (la.size() != mu.size())
    throw SizeMismatchError("sym_kron: |lambda| != |mu|");
  const MuClassData& data = mu_class_data(mu);
  Rational sum = 0;
  for (size_t i = 0; i < data.classes.size(); ++i) {
    const BigInt& c = data.chi[i];
    BigInt inner = c * c + sign * data.chi_square[i];
    if (inner == 0) continue;
    BigInt cl = mn_character(la, data.classes[i]);
    if (cl == 0) continue;
    sum += Rational(cl * inner) / Rational(2 * data.z[i]);
  }
  return as_nonneg_integer(sum, "sym_kron: non-integer or negative value");
}

}  // namespace

BigInt kron(const Partition& la, const Partition& mu, const Partition& nu) {
  if (la.size() != mu.size() || la.size() != nu.size())
    throw SizeMismatchError("kron: partitions of different sizes");
  Rational sum = 0;
  for (const Partition& rho : enumerate_partitions(la.size())) {
    BigInt a = mn_character(la, rho);
    if (a == 0) continue;
    BigInt b = mn_character(mu, rho);
    if (b == 0) continue;
    BigInt c = mn_character(nu, rho);
    if (c == 0) continue;
    sum += Rational(a * b * c) / Rational(z_of(rho));
  }
  return as_nonneg_integer(sum, "kron: non-integer or negative value");
}

BigInt sym_kron(const Partition& la, const Partition& mu) {
  BigInt s = half_sum(la, mu, +1);
  BigInt a = half_sum(la, mu, -1);
  // s + a = kron(λ,μ,μ); both halves integral and nonnegative, so s is
  // automatically within [0, kron].
  (void)a;
  return s;
}

BigInt antisym_kron(const Partition& la, const Partition& mu) {
  return half_sum(la, mu, -1);
}

bool in_S_o_det(const Partition& la, int n) {
  if (n < 1) throw std::invalid_argument("in_S_o_det: need n >= 1");
  if (la.length() > n * n)
    throw std::invalid_argument("in_S_o_det: more than n^2 rows");
  if (la.size() % n != 0) return false;
  const int d = la.size() / n;
  return sym_kron(la, rectangle(n, d)) > 0;
}

}  // namespace monrep
