#include "unifd/explicit_form.hpp"

#include <mutex>
#include <utility>

namespace unifd {

std::vector<Rational> denominator_table(int d, int p) {
  if (d < 1 || p < 1) throw std::invalid_argument("denominators need d >= 1 and p >= 1");

  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Rational>> cache;

  std::lock_guard lock(mutex);
  if (auto it = cache.find({d, p}); it != cache.end()) return it->second;

  const int n = p + d;
  std::vector<Rational> den(n);
  den[0] = 1;
  for (int m = d + 1; m <= n - 1; ++m) den[0] *= -m;
  for (int j = 1; j < n; ++j) den[j] = Rational(-j, n - j) * den[j - 1];

  cache.emplace(std::make_pair(d, p), den);
  return den;
}

}  // namespace unifd
