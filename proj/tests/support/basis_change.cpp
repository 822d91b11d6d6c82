#include "basis_change.hpp"

#include <cy3inv/errors.hpp>

#include <utility>

namespace cy3inv::testing {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Exact inverse via Gauss-Jordan over rationals; the caller guarantees the
// input is unimodular, so every entry of the inverse must come out integral.
IntMatrix exact_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> work(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i][j] = Rat(m[i][j]);
    work[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("test support: matrix is singular");
    std::swap(work[pivot], work[col]);
    const Rat lead = work[col][col];
    for (auto& x : work[col]) x /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      const Rat factor = work[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) work[r][c] -= factor * work[col][c];
    }
  }
  IntMatrix out(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integral(work[i][n + j])) {
        throw Error("test support: inverse of a unimodular matrix must be integral");
      }
      out[i][j] = numerator(work[i][n + j]);
    }
  }
  return out;
}

std::vector<Int> column(const IntMatrix& m, std::size_t j) {
  std::vector<Int> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i][j];
  return out;
}

std::vector<Int> multiply(const IntMatrix& m, const std::vector<Int>& v) {
  std::vector<Int> out(m.size(), Int(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::vector<Int> multiply_transposed(const IntMatrix& m, const std::vector<Int>& v) {
  std::vector<Int> out(m.size(), Int(0));
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) out[j] += m[i][j] * v[i];
  return out;
}

} // namespace

BasisChange random_unimodular(Rng& rng, std::size_t rank, int elementary_steps) {
  IntMatrix p = identity(rank);
  for (int step = 0; step < elementary_steps && rank > 0; ++step) {
    const long choice = random_long(rng, 0, 9);
    const auto i = static_cast<std::size_t>(random_long(rng, 0, static_cast<long>(rank) - 1));
    auto j = static_cast<std::size_t>(random_long(rng, 0, static_cast<long>(rank) - 1));
    if (choice < 7 && rank > 1) {
      while (j == i) j = static_cast<std::size_t>(random_long(rng, 0, static_cast<long>(rank) - 1));
      Int c = random_int(rng, -3, 3);
      if (c == 0) c = 1;
      for (std::size_t col = 0; col < rank; ++col) p[j][col] += c * p[i][col];
    } else if (choice < 9 && rank > 1) {
      std::swap(p[i], p[j]);
    } else {
      for (std::size_t col = 0; col < rank; ++col) p[i][col] = -p[i][col];
    }
  }
  return BasisChange{p, exact_inverse(p)};
}

CubicForm transform_cubic(const CubicForm& cubic, const BasisChange& change) {
  const std::size_t n = change.rank();
  CubicForm out(n);
  std::vector<DivisorClass> images;
  images.reserve(n);
  for (std::size_t a = 0; a < n; ++a) images.emplace_back(column(change.forward, a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c)
        out.set(a, b, c, eval_cubic(cubic, images[a], images[b], images[c]));
  return out;
}

LinearForm transform_linear(const LinearForm& linear, const BasisChange& change) {
  return LinearForm(multiply_transposed(change.forward, linear.coeffs()));
}

DivisorClass transform_divisor(const DivisorClass& divisor, const BasisChange& change) {
  return DivisorClass(multiply(change.inverse, divisor.coords()));
}

CurveClass transform_curve(const CurveClass& curve, const BasisChange& change) {
  return CurveClass(multiply_transposed(change.forward, curve.coords()));
}

} // namespace cy3inv::testing
