#include "monrep/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "monrep/errors.hpp"

namespace monrep {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LatticeBasis::LatticeBasis(const std::vector<std::vector<BigInt>>& generators,
                           int dim)
    : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("LatticeBasis: negative dimension");
  std::vector<std::vector<BigInt>> work;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dim)
      throw SizeMismatchError("LatticeBasis: generator of wrong dimension");
    work.push_back(g);
  }

  size_t top = 0;
  for (int col = 0; col < dim && top < work.size(); ++col) {
    // Euclid on the entries of this column below `top` until one survives.
    for (;;) {
      size_t best = work.size();
      for (size_t i = top; i < work.size(); ++i) {
        if (work[i][static_cast<size_t>(col)] == 0) continue;
        if (best == work.size() ||
            abs(work[i][static_cast<size_t>(col)]) <
                abs(work[best][static_cast<size_t>(col)]))
          best = i;
      }
      if (best == work.size()) break;  // column clear below top
      std::swap(work[top], work[best]);
      bool reduced_all = true;
      for (size_t i = top + 1; i < work.size(); ++i) {
        const BigInt& e = work[i][static_cast<size_t>(col)];
        if (e == 0) continue;
        BigInt q = floor_div(e, work[top][static_cast<size_t>(col)]);
        for (int j = 0; j < dim; ++j)
          work[i][static_cast<size_t>(j)] -= q * work[top][static_cast<size_t>(j)];
        if (work[i][static_cast<size_t>(col)] != 0) reduced_all = false;
      }
      if (reduced_all) {
        if (work[top][static_cast<size_t>(col)] < 0)
          for (int j = 0; j < dim; ++j) work[top][static_cast<size_t>(j)] = -work[top][static_cast<size_t>(j)];
        rows_.push_back(work[top]);
        pivot_col_.push_back(col);
        ++top;
        break;
      }
    }
  }

  // Reduce entries above each pivot into [0, pivot) for a canonical form.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int col = pivot_col_[r];
    const BigInt& pivot = rows_[r][static_cast<size_t>(col)];
    for (size_t above = 0; above < r; ++above) {
      BigInt q = floor_div(rows_[above][static_cast<size_t>(col)], pivot);
      if (q == 0) continue;
      for (int j = 0; j < dim; ++j)
        rows_[above][static_cast<size_t>(j)] -= q * rows_[r][static_cast<size_t>(j)];
    }
  }
}

bool LatticeBasis::contains(std::span<const BigInt> v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw SizeMismatchError("LatticeBasis::contains: wrong dimension");
  std::vector<BigInt> w(v.begin(), v.end());
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int col = pivot_col_[r];
    const BigInt& e = w[static_cast<size_t>(col)];
    if (e == 0) continue;
    const BigInt& pivot = rows_[r][static_cast<size_t>(col)];
    if (e % pivot != 0) return false;
    BigInt q = e / pivot;
    for (int j = 0; j < dim_; ++j)
      w[static_cast<size_t>(j)] -= q * rows_[r][static_cast<size_t>(j)];
  }
  for (const BigInt& x : w)
    if (x != 0) return false;
  return true;
}

bool nonneg_combination_exists(const std::vector<std::vector<Rational>>& columns,
                               std::span<const Rational> target) {
  const size_t m = target.size();
  const size_t n = columns.size();
  for (const auto& col : columns)
    if (col.size() != m)
      throw SizeMismatchError("nonneg_combination_exists: column dimension");

  /*
   * Phase-1 tableau: [A | I | b] with rows flipped so b >= 0, artificial
   * basis, minimizing the sum of artificials.  Bland's rule (smallest
   * eligible index, smallest basic index on ties) guarantees termination.
   * Feasible iff the optimum is 0.
   */
  const size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols));
  for (size_t i = 0; i < m; ++i) {
    const bool flip = target[i] < 0;
    for (size_t j = 0; j < n; ++j)
      tab[i][j] = flip ? -columns[j][i] : columns[j][i];
    tab[i][n + i] = 1;
    tab[i][cols - 1] = flip ? -target[i] : target[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Objective row in canonical form w.r.t. the artificial basis.
  std::vector<Rational> obj(cols);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < m; ++i) obj[j] -= tab[i][j];
  for (size_t i = 0; i < m; ++i) obj[cols - 1] -= tab[i][cols - 1];

  for (;;) {
    size_t enter = cols - 1;
    for (size_t j = 0; j < n + m; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols - 1) break;  // optimal

    size_t leave = m;
    Rational best_ratio = 0;
    for (size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols - 1] / tab[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw InternalArithmeticError("simplex: phase-1 objective unbounded");

    const Rational pivot = tab[leave][enter];
    for (size_t j = 0; j < cols; ++j) tab[leave][j] /= pivot;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rational f = tab[i][enter];
      for (size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (obj[enter] != 0) {
      const Rational f = obj[enter];
      for (size_t j = 0; j < cols; ++j) obj[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  return obj[cols - 1] == 0;  // optimum = -obj rhs
}

}  // namespace monrep
