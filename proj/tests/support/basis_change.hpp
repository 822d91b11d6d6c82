#pragma once

// Unimodular change of basis of the divisor lattice, used to check that
// classification and Hessian degeneracy are basis-independent.

#include "generators.hpp"

#include <cy3inv/lattice.hpp>

#include <cstddef>
#include <vector>

namespace cy3inv::testing {

using IntMatrix = std::vector<std::vector<Int>>;

/// P is unimodular (det +-1); inverse is its exact integer inverse.
/// Column a of P holds the old-basis coordinates of the new basis vector.
struct BasisChange {
  IntMatrix forward;
  IntMatrix inverse;

  std::size_t rank() const { return forward.size(); }
};

BasisChange random_unimodular(Rng& rng, std::size_t rank, int elementary_steps = 12);

/// mu'(e_a, e_b, e_c) = mu(P e_a, P e_b, P e_c).
CubicForm transform_cubic(const CubicForm& cubic, const BasisChange& change);

/// L'(e_a) = L(P e_a).
LinearForm transform_linear(const LinearForm& linear, const BasisChange& change);

/// Divisor coordinates transform by P^{-1}; pairings are preserved.
DivisorClass transform_divisor(const DivisorClass& divisor, const BasisChange& change);

/// Dual coordinates transform by P^T; pairings are preserved.
CurveClass transform_curve(const CurveClass& curve, const BasisChange& change);

} // namespace cy3inv::testing
