#include "monrep/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "monrep/errors.hpp"

namespace monrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "-") return Partition{};
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad partition literal: '" +
                                  std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n, int max_len, int max_part) {
  if (n < 0 || max_len < 0 || max_part < 0)
    throw std::invalid_argument("enumerate_partitions: negative argument");
  const int len_bound = max_len == 0 ? n : max_len;
  const int part_bound = max_part == 0 ? n : max_part;
  std::vector<Partition> out;
  std::vector<int> acc;
  // Descending first-part choice yields reverse-lexicographic order.
  std::function<void(int, int, int)> rec = [&](int rem, int bound, int slots) {
    if (rem == 0) {
      out.emplace_back(acc);
      return;
    }
    if (slots == 0) return;
    for (int p = std::min(rem, bound); p >= 1; --p) {
      // Even with all remaining slots at p we must be able to reach rem.
      if (static_cast<long long>(p) * slots < rem) break;
      acc.push_back(p);
      rec(rem - p, p, slots - 1);
      acc.pop_back();
    }
  };
  rec(n, part_bound, n == 0 ? 1 : len_bound);
  return out;
}

Partition conjugate(const Partition& la) {
  std::vector<int> cols(static_cast<size_t>(la.part(0)), 0);
  for (int p : la.parts())
    for (int j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
  return Partition(std::move(cols));
}

BigInt z_of(const Partition& mu) {
  BigInt z = 1;
  const auto& parts = mu.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const size_t mult = j - i;
    for (size_t m = 1; m <= mult; ++m) z *= BigInt(parts[i]) * BigInt(m);
    i = j;
  }
  return z;
}

Partition rectangle(int rows, int row_len) {
  if (rows < 1 || row_len < 0)
    throw std::invalid_argument("rectangle: need rows >= 1, row_len >= 0");
  if (row_len == 0) return Partition{};
  return Partition(std::vector<int>(static_cast<size_t>(rows), row_len));
}

Partition add_to_first_row(const Partition& la, int t) {
  if (t < 0) throw std::invalid_argument("add_to_first_row: negative amount");
  if (t == 0) return la;
  std::vector<int> parts = la.parts();
  if (parts.empty()) parts.push_back(t);
  else parts[0] += t;
  return Partition(std::move(parts));
}

Partition cut_columns(const Partition& la, int n, int c) {
  if (n < 0 || c < 0) throw std::invalid_argument("cut_columns: negative argument");
  if (la.length() > n)
    throw std::invalid_argument("cut_columns: partition has more than n parts");
  if (c == 0) return la;
  if (la.length() < n || la.part(n - 1) < c)
    throw std::invalid_argument(
        "cut_columns: some of the n parts are smaller than the cut");
  std::vector<int> parts;
  for (int p : la.parts())
    if (p - c > 0) parts.push_back(p - c);
  return Partition(std::move(parts));
}

Partition lambda_of_lemma(int n, int k) {
  if (k < 2 || n < k)
    throw std::invalid_argument("lambda_of_lemma: need n >= k >= 2");
  const int d = k * (k - 1) / 2;
  std::vector<int> mu{d + 1, d + 1};
  mu.insert(mu.end(), static_cast<size_t>(k - 2), 1);
  return add_to_first_row(Partition(std::move(mu)), (n - k) * k);
}

Partition stretched(const Partition& la, int c) {
  if (c < 0) throw std::invalid_argument("stretched: negative factor");
  if (c == 0) return Partition{};
  std::vector<int> parts = la.parts();
  for (int& p : parts) p *= c;
  return Partition(std::move(parts));
}

Partition merged(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(parts), std::greater<int>());
  return Partition(std::move(parts));
}

bool is_hook(const Partition& la) {
  return !la.empty() && la.part(1) <= 1;
}

}  // namespace monrep
