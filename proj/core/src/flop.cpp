#include "cy3inv/flop.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace cy3inv {

FloppedForms flop(const CubicForm& cubic, const LinearForm& c2,
                  const CurveClass& eta, const InstantonSeries& instantons) {
  const std::size_t rank = cubic.rank();
  if (c2.rank() != rank || eta.rank() != rank) {
    throw DimensionError("flop: cubic, c2 and eta must share one rank");
  }
  if (eta.is_zero()) throw DomainError("flop: the flopping class eta must be nonzero");

  const SeriesSums sums = series_sums(instantons);
  FloppedForms out{cubic, c2};

  if (sums.cubic != 0) {
    for (std::size_t i = 0; i < rank; ++i) {
      if (eta[i] == 0) continue;
      for (std::size_t j = i; j < rank; ++j) {
        if (eta[j] == 0) continue;
        for (std::size_t k = j; k < rank; ++k) {
          if (eta[k] == 0) continue;
          out.cubic.add(i, j, k, -(eta[i] * eta[j] * eta[k] * sums.cubic));
        }
      }
    }
  }
  if (sums.linear != 0) {
    std::vector<Int> coeffs = c2.coeffs();
    for (std::size_t i = 0; i < rank; ++i) coeffs[i] += 2 * eta[i] * sums.linear;
    out.c2 = LinearForm(std::move(coeffs));
  }
  return out;
}

FloppedForms flop_nodes(const CubicForm& cubic, const LinearForm& c2,
                        const std::vector<CurveClass>& curves) {
  if (c2.rank() != cubic.rank()) {
    throw DimensionError("flop_nodes: cubic and c2 must share one rank");
  }
  // Group the nodes by numerical class; each contributes 1 to n_1 of its class.
  std::map<std::vector<Int>, Index> multiplicity;
  for (const auto& curve : curves) {
    if (curve.rank() != cubic.rank()) {
      throw DimensionError("flop_nodes: curve rank does not match the forms");
    }
    if (curve.is_zero()) throw DomainError("flop_nodes: node classes must be nonzero");
    ++multiplicity[curve.coords()];
  }

  FloppedForms out{cubic, c2};
  for (const auto& [coords, count] : multiplicity) {
    InstantonSeries nodes;
    nodes.set(1, Int(count));
    out = flop(out.cubic, out.c2, CurveClass(coords), nodes);
  }
  return out;
}

GwNumbers solve_n1_n2(const Int& e_cubed, const Int& c2_dot_e) {
  // n1 + 8 n2 = -2 E^3 and n1 + 2 n2 = c2.E  =>  6 n2 = -2 E^3 - c2.E.
  const Rat n2 = Rat(-2 * e_cubed - c2_dot_e) / 6;
  if (!is_integral(n2)) {
    std::ostringstream msg;
    msg << "(E^3, c2.E) = (" << e_cubed << ", " << c2_dot_e
        << ") is not realizable by a Type III contraction: n2 = " << n2;
    throw InconsistencyError(msg.str());
  }
  GwNumbers out;
  out.n2 = numerator(n2);
  out.n1 = c2_dot_e - 2 * out.n2;
  return out;
}

} // namespace cy3inv
