#pragma once

#include "cy3inv/face_classifier.hpp"
#include "cy3inv/lattice.hpp"
#include "cy3inv/type3.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cy3inv {

/// A threefold presented by its topological data: the cubic cup-product
/// form (which carries the lattice rank), the c2 linear form, and a list
/// of nef-cone faces. All payloads are exact integers.
struct ThreefoldDocument {
  CubicForm cubic{0};
  LinearForm c2;
  std::vector<ContractionFace> faces;

  std::size_t rank() const { return cubic.rank(); }

  bool operator==(const ThreefoldDocument&) const = default;
};

/// Cross-field invariants: matching ranks, valid faces (nonzero interior
/// divisor, nonzero primitive eta). Throws ValidationError naming the
/// violated invariant.
void validate(const ThreefoldDocument& document);

/// Parses the UTF-8 JSON threefold schema. Rejects floats, oversized
/// integer literals, unsorted or duplicate cubic index triples, unknown
/// keys, and any face violating its invariants. Throws ParseError for
/// malformed text (with line/column) and ValidationError otherwise.
ThreefoldDocument parse_threefold(std::string_view text);

/// Canonical serialization: sorted keys, canonical entry order, two-space
/// indent, trailing newline. parse(serialize(x)) == x, and serialize is
/// idempotent on parsed documents.
std::string serialize_threefold(const ThreefoldDocument& document);

/// Parses the UTF-8 JSON conic-bundle schema (variant, genus, line_pairs,
/// double_lines) with the same strictness.
ConicBundleData parse_conic_bundle(std::string_view text);

std::string serialize_conic_bundle(const ConicBundleData& data);

const char* to_string(ConicBundleVariant variant);

} // namespace cy3inv
