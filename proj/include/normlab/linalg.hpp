#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "normlab/error.hpp"
#include "normlab/types.hpp"

namespace normlab {

// Row-major square array over an arbitrary commutative ring (forms, p-adic
// numbers, intervals) where Eigen's division-based kernels do not apply.
template <typename T>
using SquareArray = std::vector<std::vector<T>>;

// Division-free determinant by Laplace expansion memoized over column
// subsets: O(2^n n) ring operations. Suitable for n <= 10 or so.
template <typename T>
T subset_determinant(SquareArray<T> const& m, T const& one) {
  int const n = static_cast<int>(m.size());
  if (n == 0) return one;
  if (n > 16) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "subset determinant limited to n <= 16");
  }
  std::vector<std::optional<T>> minors(std::size_t{1} << n);
  minors[0] = one;
  // Masks in order of popcount, so every sub-mask is ready before use.
  for (int k = 1; k <= n; ++k) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::optional<T> acc;
      for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        int const above = std::popcount(mask >> (j + 1));
        T term = m[k - 1][j] * *minors[mask & ~(1u << j)];
        if (above % 2 == 1) term = -term;
        if (acc) {
          *acc = *acc + term;
        } else {
          acc = std::move(term);
        }
      }
      minors[mask] = std::move(acc);
    }
    // Minors with popcount k-1 are no longer needed.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) == k - 1 && k - 1 > 0) minors[mask].reset();
    }
  }
  return *minors[(1u << n) - 1];
}

// Exact determinant by Gaussian elimination over Q.
Rational determinant(RationalMatrix const& m);

// Exact inverse; throws SINGULAR_MATRIX.
RationalMatrix inverse(RationalMatrix const& m);

}  // namespace normlab
