#include "cy3inv/face_classifier.hpp"

#include <sstream>

namespace cy3inv {

namespace {

void validate_face(const CubicForm& cubic, const ContractionFace& face) {
  if (face.eta.rank() != cubic.rank() || face.interior_divisor.rank() != cubic.rank()) {
    throw DimensionError("face classification: face data rank does not match the cubic form");
  }
  if (face.interior_divisor.is_zero()) {
    throw ValidationError("face interior divisor must be nonzero");
  }
  if (face.eta.is_zero()) throw ValidationError("face eta must be nonzero");
  if (!is_primitive(face.eta)) throw ValidationError("face eta is not primitive");
}

} // namespace

const char* to_string(FaceKind kind) {
  switch (kind) {
    case FaceKind::TypeI: return "TypeI";
    case FaceKind::TypeII: return "TypeII";
    case FaceKind::TypeIII0: return "TypeIII0";
    case FaceKind::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

FaceType classify_face(const CubicForm& cubic, const ContractionFace& face) {
  return face_signature(cubic, face).classification;
}

FaceSignature face_signature(const CubicForm& cubic, const ContractionFace& face) {
  validate_face(cubic, face);

  FaceSignature sig;
  sig.cubic_value = eval_cubic(cubic, face.interior_divisor, face.interior_divisor,
                               face.interior_divisor);
  if (sig.cubic_value == 0) {
    throw DomainError(
        "face interior divisor lies on the cubic cone (D^3 = 0); classification "
        "requires a divisor off the cone");
  }

  const QuadricMatrix quadric = hessian_quadric(cubic, face.interior_divisor);
  sig.hessian_rank = quadric.rank();
  sig.hessian_degenerate = sig.hessian_rank < quadric.dimension();

  const bool has_series = face.instantons.has_value() && !face.instantons->empty();
  if (has_series) {
    const InstantonSeries& series = *face.instantons;
    sig.instanton_support = series.values().size();
    sig.min_instanton = series.min_value();
    std::ostringstream summary;
    summary << "support=" << sig.instanton_support << " min=" << *series.min_value()
            << " max=" << *series.max_value();
    sig.instanton_summary = summary.str();
  } else {
    sig.instanton_summary = "empty";
  }

  // Type II first: a degenerate quadric decides regardless of instanton data.
  if (sig.hessian_degenerate) {
    std::ostringstream reason;
    reason << "Hessian quadric is degenerate (rank " << sig.hessian_rank << " < "
           << quadric.dimension() << ")";
    sig.classification = FaceType{FaceKind::TypeII, reason.str()};
    return sig;
  }
  if (!has_series) {
    sig.classification =
        FaceType{FaceKind::Indeterminate, "no instanton data attached to the face"};
    return sig;
  }
  if (*sig.min_instanton < 0) {
    // Name the smallest degree carrying a negative number.
    for (const auto& [d, n] : face.instantons->values()) {
      if (n < 0) {
        std::ostringstream reason;
        reason << "negative instanton number n_" << d << " = " << n;
        sig.classification = FaceType{FaceKind::TypeIII0, reason.str()};
        return sig;
      }
    }
  }
  sig.classification = FaceType{FaceKind::TypeI, "all instanton numbers nonnegative"};
  return sig;
}

} // namespace cy3inv
