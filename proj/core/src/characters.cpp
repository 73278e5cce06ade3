#include "monrep/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

#include "monrep/errors.hpp"

namespace monrep {

Partition square_class(const Partition& mu) {
  std::vector<int> parts;
  parts.reserve(mu.parts().size() * 2);
  for (int c : mu.parts()) {
    if (c % 2 == 1) {
      parts.push_back(c);
    } else {
      parts.push_back(c / 2);
      parts.push_back(c / 2);
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

namespace {

// Keys pack both shapes into one byte string: [ℓ(λ), λ parts..., μ parts...].
// Parts are bounded by 255, far beyond anything reachable at desk scale.
std::string cache_key(const std::vector<int>& la, const std::vector<int>& mu,
                      size_t mu_from) {
  std::string key;
  key.reserve(1 + la.size() + (mu.size() - mu_from));
  key.push_back(static_cast<char>(la.size()));
  for (int p : la) key.push_back(static_cast<char>(static_cast<unsigned char>(p)));
  for (size_t i = mu_from; i < mu.size(); ++i)
    key.push_back(static_cast<char>(static_cast<unsigned char>(mu[i])));
  return key;
}

// Sharded map: concurrent scans hit the cache on every recursion step, so a
// single lock would serialize them.  Entries race benignly (both writers
// compute the same value) and are never erased below the cap, so node
// references stay valid outside the lock.
struct CharCache {
  static constexpr size_t kShards = 64;
  struct alignas(64) Shard {
    std::mutex mutex;
    std::unordered_map<std::string, BigInt> map;
  };
  Shard shards[kShards];
  size_t max_entries_per_shard;

  CharCache() {
    size_t max_entries = 8'000'000;
    if (const char* env = std::getenv("MONREP_CHAR_CACHE_MAX")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0') max_entries = static_cast<size_t>(v);
    }
    max_entries_per_shard = max_entries / kShards + 1;
  }

  Shard& shard_for(const std::string& key) {
    return shards[std::hash<std::string>{}(key) % kShards];
  }

  const BigInt* lookup(const std::string& key) {
    Shard& s = shard_for(key);
    std::lock_guard lock(s.mutex);
    auto it = s.map.find(key);
    return it == s.map.end() ? nullptr : &it->second;
  }

  void store(std::string key, BigInt value) {
    Shard& s = shard_for(key);
    std::lock_guard lock(s.mutex);
    if (s.map.size() < max_entries_per_shard)
      s.map.emplace(std::move(key), std::move(value));
  }

  size_t size() {
    size_t total = 0;
    for (auto& s : shards) {
      std::lock_guard lock(s.mutex);
      total += s.map.size();
    }
    return total;
  }

  void clear() {
    for (auto& s : shards) {
      std::lock_guard lock(s.mutex);
      s.map.clear();
    }
  }
};

CharCache& cache() {
  static CharCache c;
  return c;
}

/*
 * One Murnaghan–Nakayama step on beta numbers.  With L rows, the beta set is
 * {λ_i + L - 1 - i}; removing a border strip of length r means replacing some
 * beta number b by b - r, legal iff b >= r and b - r is not already a beta
 * number.  The strip height is the count of beta numbers strictly between
 * b - r and b, giving the sign (-1)^height.
 */
BigInt mn_rec(const std::vector<int>& la, const std::vector<int>& mu,
              size_t mu_from) {
  if (la.empty()) return 1;  // sizes match, so μ is exhausted too
  std::string key = cache_key(la, mu, mu_from);
  auto& c = cache();
  if (const BigInt* cached = c.lookup(key)) return *cached;

  const int r = mu[mu_from];
  const int rows = static_cast<int>(la.size());
  std::vector<int> beta(la.size());
  for (int i = 0; i < rows; ++i)
    beta[static_cast<size_t>(i)] = la[static_cast<size_t>(i)] + rows - 1 - i;
  // beta is strictly decreasing.

  BigInt total = 0;
  for (int i = 0; i < rows; ++i) {
    const int b = beta[static_cast<size_t>(i)];
    if (b < r) break;
    const int target = b - r;
    bool occupied = false;
    int passed = 0;
    for (int j = i + 1; j < rows; ++j) {
      const int other = beta[static_cast<size_t>(j)];
      if (other == target) {
        occupied = true;
        break;
      }
      if (other > target) ++passed;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[static_cast<size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> nla;
    nla.reserve(nb.size());
    const int nrows = static_cast<int>(nb.size());
    for (int j = 0; j < nrows; ++j) {
      const int part = nb[static_cast<size_t>(j)] - (nrows - 1 - j);
      if (part > 0) nla.push_back(part);
    }
    const BigInt sub = mn_rec(nla, mu, mu_from + 1);
    if (passed % 2 == 0) total += sub;
    else total -= sub;
  }

  c.store(std::move(key), total);
  return total;
}

}  // namespace

BigInt mn_character(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size())
    throw SizeMismatchError("mn_character: |lambda| != |mu|");
  if (la.part(0) > 255 || la.length() > 255 || mu.length() > 255)
    throw GuardViolation("mn_character: partition exceeds supported size");
  return mn_rec(la.parts(), mu.parts(), 0);
}

size_t character_cache_entries() { return cache().size(); }

void clear_character_cache() { cache().clear(); }

Rational ClassFunction::at(const Partition& mu) const {
  auto it = values.find(mu);
  return it == values.end() ? Rational(0) : it->second;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree != g.degree)
    throw SizeMismatchError("inner_product: class functions on different S_N");
  Rational sum = 0;
  for (const auto& [mu, fv] : f.values) {
    auto it = g.values.find(mu);
    if (it == g.values.end()) continue;
    sum += fv * it->second / Rational(z_of(mu));
  }
  return sum;
}

ClassFunction character_class_function(const Partition& la) {
  ClassFunction f;
  f.degree = la.size();
  for (const Partition& mu : enumerate_partitions(la.size())) {
    BigInt v = mn_character(la, mu);
    if (v != 0) f.values.emplace(mu, Rational(v));
  }
  return f;
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree != g.degree)
    throw SizeMismatchError("pointwise_product: class functions on different S_N");
  ClassFunction out;
  out.degree = f.degree;
  for (const auto& [mu, fv] : f.values) {
    auto it = g.values.find(mu);
    if (it == g.values.end()) continue;
    Rational v = fv * it->second;
    if (v != 0) out.values.emplace(mu, std::move(v));
  }
  return out;
}

}  // namespace monrep
