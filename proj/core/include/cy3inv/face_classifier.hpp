#pragma once

#include "cy3inv/gw_series.hpp"
#include "cy3inv/lattice.hpp"

#include <optional>
#include <string>

namespace cy3inv {

/// A codimension-one nef-cone face presented as data: the primitive curve
/// class vanishing on it, a user-supplied divisor class in its relative
/// interior, and optionally the attached instanton numbers.
struct ContractionFace {
  CurveClass eta;
  DivisorClass interior_divisor;
  std::optional<InstantonSeries> instantons;
  std::string label;

  bool operator==(const ContractionFace&) const = default;
};

enum class FaceKind { TypeI, TypeII, TypeIII0, Indeterminate };

const char* to_string(FaceKind kind);

struct FaceType {
  FaceKind kind = FaceKind::Indeterminate;
  std::string reason;

  bool operator==(const FaceType&) const = default;
};

/// Contraction-type discrimination for a face not contained in the cubic
/// cone. A degenerate Hessian quadric decides Type II before anything else
/// is consulted; otherwise the sign data of the instanton series decides:
/// any n_d < 0 marks Type III_0, an all-nonnegative nonempty series Type I,
/// and absent or empty data is reported Indeterminate, never guessed.
FaceType classify_face(const CubicForm& cubic, const ContractionFace& face);

/// Everything classify_face consulted, reported deterministically.
struct FaceSignature {
  std::size_t hessian_rank = 0;
  bool hessian_degenerate = false;
  Int cubic_value;                    // D^3 of the interior divisor
  std::size_t instanton_support = 0;  // 0 when the series is absent or empty
  std::optional<Int> min_instanton;
  std::string instanton_summary;      // "empty" or "support=.. min=.. max=.."
  FaceType classification;
};

FaceSignature face_signature(const CubicForm& cubic, const ContractionFace& face);

} // namespace cy3inv
