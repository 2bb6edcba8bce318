#pragma once

#include <cstdint>

namespace unifd {

/// Tally of scalar additions (incl. subtractions) and multiplications,
/// threaded explicitly through the numerator algorithms.
struct OpCount {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;

  friend bool operator==(const OpCount&, const OpCount&) = default;
};

}  // namespace unifd
