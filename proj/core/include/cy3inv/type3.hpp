#pragma once

#include "cy3inv/errors.hpp"
#include "cy3inv/numeric.hpp"

#include <map>
#include <variant>

namespace cy3inv {

/// Shape of the generic fibre of the exceptional divisor E -> C.
/// The two reducible-generic-fibre cases that survive deformation are kept
/// as explicit variants; every other reducible case is expected to be
/// supplied as deformed Irreducible data.
enum class ConicBundleVariant {
  Irreducible,
  EllipticQuasiRuled, // genus 1, no singular fibres; all fibre-class GW values vanish
  DelPezzo7,          // genus 0; handled through its smooth degree-7 reduction
};

/// Singular-fibre bookkeeping for a Type III exceptional divisor: the genus
/// of the base curve C, a_r line-pair fibres carrying an A_r surface
/// singularity (r >= 0), and b_s double-line fibres carrying a D_s
/// singularity (s >= 2). Counts of zero are not stored.
class ConicBundleData {
public:
  ConicBundleData(ConicBundleVariant variant, Index genus,
                  const std::map<Index, Index>& line_pairs,
                  const std::map<Index, Index>& double_lines);

  static ConicBundleData irreducible(Index genus,
                                     const std::map<Index, Index>& line_pairs = {},
                                     const std::map<Index, Index>& double_lines = {});
  static ConicBundleData elliptic_quasi_ruled();
  static ConicBundleData del_pezzo_7();

  ConicBundleVariant variant() const { return variant_; }
  Index genus() const { return genus_; }
  const std::map<Index, Index>& line_pairs() const { return line_pairs_; }
  const std::map<Index, Index>& double_lines() const { return double_lines_; }

  bool operator==(const ConicBundleData&) const = default;

private:
  ConicBundleVariant variant_ = ConicBundleVariant::Irreducible;
  Index genus_ = 0;
  std::map<Index, Index> line_pairs_;
  std::map<Index, Index> double_lines_;
};

/// Invariants of the contraction. The identities e3 = ke2,
/// n1 + 8 n2 = -2 e3 and n1 + 2 n2 = c2e hold by construction and are
/// re-asserted after every computation.
struct Type3Invariants {
  Int ke2;
  Int e3;
  Int c2e;
  Int n1;
  Int n2;

  bool operator==(const Type3Invariants&) const = default;
};

/// All invariants from the fibre data. For Irreducible data with
/// S1 = sum a_r (r+1) and S2 = sum b_s s:
///   ke2 = e3 = 8(1-g) - S1 - S2
///   c2e = 4(g-1) + 2 S1 + 2 S2
///   n1  = 2 S1 + 2 S2
///   n2  = 2g - 2
/// EllipticQuasiRuled reports all zeros (every fibre-class GW value is
/// zero); DelPezzo7 runs the Irreducible path on its smooth degree-7
/// reduction (genus 0, one plain line-pair fibre), so its c2e = -2 is
/// derived from the invariant identities rather than quoted.
Type3Invariants invariants(const ConicBundleData& data);

/// A single singular fibre: line pair with A_r singularity (r >= 0) or
/// double line with D_s singularity (s >= 2).
struct LinePair {
  Index singularity; // r of A_r

  bool operator==(const LinePair&) const = default;
};
struct DoubleLine {
  Index singularity; // s of D_s

  bool operator==(const DoubleLine&) const = default;
};
using FiberKind = std::variant<LinePair, DoubleLine>;

/// Contribution of one singular fibre to n1: 2(r+1) for a line pair,
/// 2s for a double line.
Int fiber_contribution(const FiberKind& kind);

/// n1 as the sum of per-fibre contributions. Irreducible data only;
/// always equals invariants(data).n1.
Int n1_from_fibers(const ConicBundleData& data);

} // namespace cy3inv
