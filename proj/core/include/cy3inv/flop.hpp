#pragma once

#include "cy3inv/gw_series.hpp"
#include "cy3inv/lattice.hpp"

#include <vector>

namespace cy3inv {

/// The cubic and c2 forms carried across a flop.
struct FloppedForms {
  CubicForm cubic;
  LinearForm c2;

  bool operator==(const FloppedForms&) const = default;
};

/// Transforms both forms across the flop along the primitive class eta:
///
///   mu'(e_i,e_j,e_k) = mu(e_i,e_j,e_k) - eta_i eta_j eta_k * sum_d n_d d^3
///   c2'(e_i)         = c2(e_i) + 2 eta_i * sum_d n_d d
///
/// which by multilinearity gives, for every divisor D,
///   D'^3 = D^3 - (D.eta)^3 sum n_d d^3 and c2'.D = c2.D + 2 (D.eta) sum n_d d.
/// Flopping back is the same call with -eta (the exceptional class changes
/// sign under the inverse flop); there is no separate unflop.
FloppedForms flop(const CubicForm& cubic, const LinearForm& c2,
                  const CurveClass& eta, const InstantonSeries& instantons);

/// Specialization to disjoint (-1,-1)-curves: each curve contributes one
/// node in its numerical class, so this equals composing flop once per
/// distinct class with n_1 = multiplicity. An empty list returns the input
/// forms unchanged.
FloppedForms flop_nodes(const CubicForm& cubic, const LinearForm& c2,
                        const std::vector<CurveClass>& curves);

struct GwNumbers {
  Int n1;
  Int n2;

  bool operator==(const GwNumbers&) const = default;
};

/// Solves the elementary-transformation linear system
///   n1 + 8 n2 = -2 E^3,   n1 + 2 n2 = c2.E
/// exactly. Throws InconsistencyError when the solution is not integral,
/// i.e. the pair (E^3, c2.E) is not realizable by a Type III contraction.
GwNumbers solve_n1_n2(const Int& e_cubed, const Int& c2_dot_e);

} // namespace cy3inv
