#include "unifd/oracle.hpp"

#include <limits>

namespace unifd::oracle {

std::uint64_t binomial_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  if (c > BigInt(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return c.convert_to<std::uint64_t>();
}

}  // namespace unifd::oracle
