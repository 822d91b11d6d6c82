#include "cy3inv/type3.hpp"

#include <sstream>

namespace cy3inv {

namespace {

std::map<Index, Index> validated_fibre_map(const std::map<Index, Index>& in,
                                           Index min_index, const char* what) {
  std::map<Index, Index> out;
  for (const auto& [index, count] : in) {
    if (index < min_index) {
      std::ostringstream msg;
      msg << what << " singularity index " << index << " must be >= " << min_index;
      throw ValidationError(msg.str());
    }
    if (count < 0) {
      std::ostringstream msg;
      msg << what << " count for index " << index << " must be >= 0, got " << count;
      throw ValidationError(msg.str());
    }
    if (count > 0) out[index] = count;
  }
  return out;
}

struct FibreSums {
  Int line_pairs;   // S1 = sum a_r (r+1)
  Int double_lines; // S2 = sum b_s s
};

FibreSums fibre_sums(const ConicBundleData& data) {
  FibreSums out{Int(0), Int(0)};
  for (const auto& [r, count] : data.line_pairs()) out.line_pairs += Int(count) * (r + 1);
  for (const auto& [s, count] : data.double_lines()) out.double_lines += Int(count) * s;
  return out;
}

Type3Invariants irreducible_invariants(const ConicBundleData& data) {
  const FibreSums sums = fibre_sums(data);
  const Int genus(data.genus());
  Type3Invariants out;
  out.ke2 = 8 * (1 - genus) - sums.line_pairs - sums.double_lines;
  out.e3 = out.ke2;
  out.c2e = 4 * (genus - 1) + 2 * sums.line_pairs + 2 * sums.double_lines;
  out.n1 = 2 * sums.line_pairs + 2 * sums.double_lines;
  out.n2 = 2 * genus - 2;
  return out;
}

void assert_identities(const Type3Invariants& inv) {
  if (inv.e3 != inv.ke2 || inv.n1 + 8 * inv.n2 != -2 * inv.e3 ||
      inv.n1 + 2 * inv.n2 != inv.c2e) {
    throw InconsistencyError("internal: Type III invariant identities violated");
  }
}

} // namespace

ConicBundleData::ConicBundleData(ConicBundleVariant variant, Index genus,
                                 const std::map<Index, Index>& line_pairs,
                                 const std::map<Index, Index>& double_lines)
    : variant_(variant),
      genus_(genus),
      line_pairs_(validated_fibre_map(line_pairs, 0, "line-pair")),
      double_lines_(validated_fibre_map(double_lines, 2, "double-line")) {
  if (genus_ < 0) {
    std::ostringstream msg;
    msg << "genus must be >= 0, got " << genus_;
    throw ValidationError(msg.str());
  }
  const bool no_fibres = line_pairs_.empty() && double_lines_.empty();
  if (variant_ == ConicBundleVariant::EllipticQuasiRuled && (genus_ != 1 || !no_fibres)) {
    throw ValidationError(
        "elliptic quasi-ruled data requires genus 1 and no singular fibres");
  }
  if (variant_ == ConicBundleVariant::DelPezzo7 && (genus_ != 0 || !no_fibres)) {
    throw ValidationError(
        "degree-7 del Pezzo data requires genus 0 and no explicit fibre entries");
  }
}

ConicBundleData ConicBundleData::irreducible(Index genus,
                                             const std::map<Index, Index>& line_pairs,
                                             const std::map<Index, Index>& double_lines) {
  return ConicBundleData(ConicBundleVariant::Irreducible, genus, line_pairs, double_lines);
}

ConicBundleData ConicBundleData::elliptic_quasi_ruled() {
  return ConicBundleData(ConicBundleVariant::EllipticQuasiRuled, 1, {}, {});
}

ConicBundleData ConicBundleData::del_pezzo_7() {
  return ConicBundleData(ConicBundleVariant::DelPezzo7, 0, {}, {});
}

Type3Invariants invariants(const ConicBundleData& data) {
  Type3Invariants out;
  switch (data.variant()) {
    case ConicBundleVariant::EllipticQuasiRuled:
      // The divisor disappears under a generic deformation; every GW value
      // in a fibre class vanishes and the surface data is reported as zero.
      out = Type3Invariants{Int(0), Int(0), Int(0), Int(0), Int(0)};
      break;
    case ConicBundleVariant::DelPezzo7:
      // Smooth degree-7 reduction: a genus-0 conic bundle with exactly one
      // line-pair fibre whose meeting point is a smooth surface point (A_0).
      out = irreducible_invariants(ConicBundleData::irreducible(0, {{0, 1}}, {}));
      break;
    case ConicBundleVariant::Irreducible:
      out = irreducible_invariants(data);
      break;
  }
  assert_identities(out);
  return out;
}

Int fiber_contribution(const FiberKind& kind) {
  return std::visit(
      [](const auto& fibre) -> Int {
        using T = std::decay_t<decltype(fibre)>;
        if constexpr (std::is_same_v<T, LinePair>) {
          if (fibre.singularity < 0) {
            throw DomainError("line-pair singularity index must be >= 0");
          }
          return Int(2) * (fibre.singularity + 1);
        } else {
          if (fibre.singularity < 2) {
            throw DomainError("double-line singularity index must be >= 2");
          }
          return Int(2) * fibre.singularity;
        }
      },
      kind);
}

Int n1_from_fibers(const ConicBundleData& data) {
  if (data.variant() != ConicBundleVariant::Irreducible) {
    throw DomainError("per-fibre decomposition of n1 requires irreducible data");
  }
  Int total = 0;
  for (const auto& [r, count] : data.line_pairs())
    total += Int(count) * fiber_contribution(LinePair{r});
  for (const auto& [s, count] : data.double_lines())
    total += Int(count) * fiber_contribution(DoubleLine{s});
  return total;
}

} // namespace cy3inv
