#pragma once

// Independent reference routes used to cross-check the library: these must
// never share evaluation code with the implementation they verify.

#include <cy3inv/gw_series.hpp>
#include <cy3inv/lattice.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

namespace cy3inv::testing {

/// Expands the sparse coefficient map into the full dense symmetric tensor
/// (std::next_permutation enumerates the distinct index orders) and sums
/// naively over all rank^3 entries.
inline Int eval_cubic_dense(const CubicForm& cubic, const DivisorClass& a,
                            const DivisorClass& b, const DivisorClass& c) {
  const std::size_t n = cubic.rank();
  std::vector<Int> tensor(n * n * n, Int(0));
  for (const auto& [triple, value] : cubic.coefficients()) {
    std::array<std::size_t, 3> p = triple;
    std::sort(p.begin(), p.end());
    do {
      tensor[(p[0] * n + p[1]) * n + p[2]] = value;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  Int total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        total += a[i] * b[j] * c[k] * tensor[(i * n + j) * n + k];
  return total;
}

struct RationalEchelon {
  std::size_t rank = 0;
  Rat det = 0;
};

/// Plain Gaussian elimination over exact rationals; the reference for the
/// fraction-free integer elimination inside QuadricMatrix.
inline RationalEchelon rational_echelon(const QuadricMatrix& q) {
  const std::size_t n = q.dimension();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(q.at(i, j));

  RationalEchelon out;
  out.det = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != row) {
      std::swap(m[pivot], m[row]);
      out.det = -out.det;
    }
    out.det *= m[row][col];
    for (std::size_t r = row + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
  }
  out.rank = row;
  if (row < n) out.det = 0;
  return out;
}

/// Solves the divisor-sum system G_m = sum_{d|m} n_d d^3 by forward
/// substitution in increasing m; no Moebius function involved.
inline InstantonSeries invert_triangular(const GwSequence& sequence) {
  InstantonSeries out;
  for (Index m = 1; m <= sequence.length(); ++m) {
    Rat acc = Rat(sequence.at(m));
    for (Index d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      acc -= Rat(out.value(d)) * Rat(Int(d) * d * d);
    }
    const Rat n_m = acc / Rat(Int(m) * m * m);
    if (!is_integral(n_m)) throw InconsistencyError("triangular inversion hit a non-integer");
    out.set(m, numerator(n_m));
  }
  return out;
}

} // namespace cy3inv::testing
