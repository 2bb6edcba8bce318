#include "unifd/series.hpp"

#include <gmp.h>

namespace unifd::detail {

bool exact_integer_root(const BigInt& v, unsigned long b, BigInt& root) {
  if (v < 0) return false;
  BigInt r;
  const int exact = mpz_root(r.backend().data(), v.backend().data(), b);
  if (!exact) return false;
  root = r;
  return true;
}

}  // namespace unifd::detail
