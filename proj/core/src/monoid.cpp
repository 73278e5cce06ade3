#include "monrep/monoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "monrep/errors.hpp"

namespace monrep {

namespace {

std::vector<std::vector<BigInt>> to_bigint_rows(const std::vector<IntVec>& vs) {
  std::vector<std::vector<BigInt>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v.begin(), v.end());
  return out;
}

}  // namespace

FGMonoid::FGMonoid(int rank, std::vector<IntVec> generators)
    : rank_(rank),
      generators_(std::move(generators)),
      lattice_(to_bigint_rows(generators_), rank) {
  if (rank < 0) throw std::invalid_argument("FGMonoid: negative rank");
  for (const auto& g : generators_)
    if (static_cast<int>(g.size()) != rank)
      throw SizeMismatchError("FGMonoid: generator of wrong dimension");
  all_nonneg_ = true;
  for (const auto& g : generators_)
    for (long long x : g)
      if (x < 0) all_nonneg_ = false;
}

bool FGMonoid::in_group(const IntVec& v) const {
  if (static_cast<int>(v.size()) != rank_)
    throw SizeMismatchError("in_group: wrong dimension");
  std::vector<BigInt> w(v.begin(), v.end());
  return lattice_.contains(w);
}

bool FGMonoid::in_cone(const IntVec& v) const {
  if (static_cast<int>(v.size()) != rank_)
    throw SizeMismatchError("in_cone: wrong dimension");
  std::vector<std::vector<Rational>> columns;
  columns.reserve(generators_.size());
  for (const auto& g : generators_) {
    std::vector<Rational> col;
    col.reserve(g.size());
    for (long long x : g) col.emplace_back(x);
    columns.push_back(std::move(col));
  }
  std::vector<Rational> target(v.begin(), v.end());
  return nonneg_combination_exists(columns, target);
}

bool FGMonoid::in_saturation(const IntVec& v) const {
  return in_group(v) && in_cone(v);
}

namespace {

bool nonneg_reach(const FGMonoid& monoid, const IntVec& v,
                  std::set<IntVec>& dead) {
  if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }))
    return true;
  if (dead.count(v)) return false;
  for (const auto& g : monoid.generators()) {
    bool fits = true;
    for (size_t i = 0; i < v.size(); ++i)
      if (g[i] > v[i]) {
        fits = false;
        break;
      }
    if (!fits) continue;
    bool moved = false;
    IntVec rest(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      rest[i] = v[i] - g[i];
      if (g[i] != 0) moved = true;
    }
    if (!moved) continue;  // zero generator
    if (nonneg_reach(monoid, rest, dead)) return true;
  }
  dead.insert(v);
  return false;
}

bool bounded_search(const FGMonoid& monoid, const IntVec& v,
                    long long coeff_bound, size_t gen_index,
                    IntVec& residual) {
  if (gen_index == monoid.generators().size())
    return std::all_of(residual.begin(), residual.end(),
                       [](long long x) { return x == 0; });
  const auto& g = monoid.generators()[gen_index];
  for (long long c = 0; c <= coeff_bound; ++c) {
    if (bounded_search(monoid, v, coeff_bound, gen_index + 1, residual))
      return true;
    for (size_t i = 0; i < residual.size(); ++i) residual[i] -= g[i];
  }
  for (size_t i = 0; i < residual.size(); ++i)
    residual[i] += (coeff_bound + 1) * g[i];
  return false;
}

}  // namespace

bool FGMonoid::generated_membership(const IntVec& v,
                                    long long coeff_bound) const {
  if (static_cast<int>(v.size()) != rank_)
    throw SizeMismatchError("generated_membership: wrong dimension");
  if (all_nonneg_) {
    if (std::any_of(v.begin(), v.end(), [](long long x) { return x < 0; }))
      return false;
    std::set<IntVec> dead;
    return nonneg_reach(*this, v, dead);
  }
  IntVec residual = v;
  return bounded_search(*this, v, coeff_bound, 0, residual);
}

MembershipOracle FGMonoid::generator_oracle(long long coeff_bound) const {
  return [this, coeff_bound](const IntVec& v) {
    return generated_membership(v, coeff_bound);
  };
}

std::vector<IntVec> holes_in_box(const FGMonoid& monoid,
                                 const MembershipOracle& oracle,
                                 const IntVec& box) {
  if (static_cast<int>(box.size()) != monoid.rank())
    throw SizeMismatchError("holes_in_box: wrong dimension");
  for (long long b : box)
    if (b < 0) throw std::invalid_argument("holes_in_box: negative box bound");
  std::vector<IntVec> holes;
  IntVec v(box.size(), 0);
  for (;;) {
    if (monoid.in_saturation(v) && !oracle(v)) holes.push_back(v);
    // lexicographic odometer
    size_t i = box.size();
    while (i > 0) {
      --i;
      if (v[i] < box[i]) {
        ++v[i];
        std::fill(v.begin() + static_cast<long>(i) + 1, v.end(), 0);
        break;
      }
      if (i == 0) return holes;
    }
    if (box.empty()) return holes;
  }
}

std::optional<long long> min_stretch(const IntVec& v,
                                     const MembershipOracle& oracle,
                                     long long e_max) {
  if (e_max < 1) throw std::invalid_argument("min_stretch: need e_max >= 1");
  for (long long c = 1; c <= e_max; ++c) {
    IntVec cv(v.size());
    for (size_t i = 0; i < v.size(); ++i) cv[i] = c * v[i];
    if (oracle(cv)) return c;
  }
  return std::nullopt;
}

}  // namespace monrep
