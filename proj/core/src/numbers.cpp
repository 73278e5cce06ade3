#include "monrep/numbers.hpp"

namespace monrep {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(const BigInt& n, unsigned k) {
  if (n < 0) return 0;
  if (n < k) return 0;
  BigInt c = 1;
  // c stays integral at every step: C(n,i) = C(n,i-1)*(n-i+1)/i.
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - static_cast<int>(i) + 1;
    c /= static_cast<int>(i);
  }
  return c;
}

BigInt pow_int(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace monrep
