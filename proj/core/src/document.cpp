#include "cy3inv/document.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <set>
#include <sstream>
#include <utility>

namespace cy3inv {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where.empty() ? what : where + ": " + what);
}

const json& require_key(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing required key \"") + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) fail(where, "unknown key \"" + key + "\"");
  }
}

// Exact integer extraction. Floats and literals outside the 64-bit range
// are rejected rather than silently rounded; internal arithmetic is
// unbounded, the file format is not.
Int to_int(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  fail(where, "expected an exact integer (floats and oversized literals are rejected)");
}

std::int64_t to_small_int(const json& v, const std::string& where) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    fail(where, "expected an integer");
  }
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > INT64_MAX) {
    fail(where, "integer out of range");
  }
  return v.get<std::int64_t>();
}

// The file format stores plain JSON integers, so serialized values must fit
// in 64 bits even though internal arithmetic is unbounded.
json int_to_json(const Int& v, const std::string& where) {
  if (v < INT64_MIN || v > INT64_MAX) {
    fail(where, "integer out of range for the file format (64-bit)");
  }
  return json(v.convert_to<std::int64_t>());
}

std::vector<Int> to_int_vector(const json& v, std::size_t expected_length,
                               const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of integers");
  if (v.size() != expected_length) {
    std::ostringstream msg;
    msg << "expected " << expected_length << " entries, got " << v.size();
    fail(where, msg.str());
  }
  std::vector<Int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::ostringstream entry;
    entry << where << "[" << i << "]";
    out.push_back(to_int(v[i], entry.str()));
  }
  return out;
}

// Map keys serialize as decimal strings; parse them back strictly so the
// round trip is exact ("01", "+1", "" and friends are rejected).
Index parse_index_key(const std::string& key, Index min_value, const std::string& where) {
  bool ok = !key.empty() && key.find_first_not_of("0123456789") == std::string::npos &&
            (key.size() == 1 || key[0] != '0');
  Index value = 0;
  if (ok) {
    try {
      value = std::stoll(key);
    } catch (const std::out_of_range&) {
      ok = false;
    }
  }
  if (!ok || value < min_value) {
    std::ostringstream msg;
    msg << "invalid key \"" << key << "\" (expected a decimal integer >= " << min_value
        << ")";
    fail(where, msg.str());
  }
  return value;
}

ContractionFace parse_face(const json& v, std::size_t rank, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object");
  reject_unknown_keys(v, {"eta", "interior_divisor", "instantons", "label"}, where);

  ContractionFace face;
  face.eta = CurveClass(to_int_vector(require_key(v, "eta", where), rank, where + ".eta"));
  face.interior_divisor = DivisorClass(to_int_vector(
      require_key(v, "interior_divisor", where), rank, where + ".interior_divisor"));
  if (const auto it = v.find("label"); it != v.end()) {
    if (!it->is_string()) fail(where, "label must be a string");
    face.label = it->get<std::string>();
  }
  if (const auto it = v.find("instantons"); it != v.end()) {
    if (!it->is_object()) fail(where, "instantons must be an object of degree -> count");
    InstantonSeries series;
    for (const auto& [key, value] : it->items()) {
      const Index d = parse_index_key(key, 1, where + ".instantons");
      series.set(d, to_int(value, where + ".instantons[\"" + key + "\"]"));
    }
    face.instantons = std::move(series);
  }

  if (face.eta.is_zero()) fail(where, "eta must be nonzero");
  if (!is_primitive(face.eta)) fail(where, "eta not primitive");
  if (face.interior_divisor.is_zero()) fail(where, "interior_divisor must be nonzero");
  return face;
}

json face_to_json(const ContractionFace& face) {
  json out;
  out["eta"] = json::array();
  for (const Int& x : face.eta.coords()) out["eta"].push_back(int_to_json(x, "eta"));
  out["interior_divisor"] = json::array();
  for (const Int& x : face.interior_divisor.coords())
    out["interior_divisor"].push_back(int_to_json(x, "interior_divisor"));
  out["label"] = face.label;
  if (face.instantons) {
    json map = json::object();
    for (const auto& [d, n] : face.instantons->values())
      map[std::to_string(d)] = int_to_json(n, "instantons");
    out["instantons"] = std::move(map);
  }
  return out;
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

} // namespace

void validate(const ThreefoldDocument& document) {
  const std::size_t rank = document.rank();
  if (rank == 0) throw ValidationError("document rank must be >= 1");
  if (document.c2.rank() != rank) {
    std::ostringstream msg;
    msg << "c2 has " << document.c2.rank() << " entries but rank is " << rank;
    throw ValidationError(msg.str());
  }
  for (std::size_t i = 0; i < document.faces.size(); ++i) {
    const ContractionFace& face = document.faces[i];
    std::ostringstream where;
    where << "faces[" << i << "]";
    if (face.eta.rank() != rank || face.interior_divisor.rank() != rank) {
      fail(where.str(), "rank does not match the document");
    }
    if (face.eta.is_zero()) fail(where.str(), "eta must be nonzero");
    if (!is_primitive(face.eta)) fail(where.str(), "eta not primitive");
    if (face.interior_divisor.is_zero()) fail(where.str(), "interior_divisor must be nonzero");
  }
}

ThreefoldDocument parse_threefold(std::string_view text) {
  const json root = parse_text(text);
  if (!root.is_object()) throw ValidationError("document root must be an object");
  reject_unknown_keys(root, {"rank", "cubic", "c2", "faces"}, "document");

  const std::int64_t rank_value = to_small_int(require_key(root, "rank", "document"), "rank");
  if (rank_value < 1) throw ValidationError("rank must be >= 1");
  const auto rank = static_cast<std::size_t>(rank_value);

  ThreefoldDocument doc;
  doc.cubic = CubicForm(rank);

  const json& cubic = require_key(root, "cubic", "document");
  if (!cubic.is_array()) throw ValidationError("cubic must be an array of {i,j,k,c} entries");
  std::set<IndexTriple> seen;
  for (std::size_t e = 0; e < cubic.size(); ++e) {
    std::ostringstream where;
    where << "cubic[" << e << "]";
    const json& entry = cubic[e];
    if (!entry.is_object()) fail(where.str(), "expected an object {i,j,k,c}");
    reject_unknown_keys(entry, {"i", "j", "k", "c"}, where.str());
    const std::int64_t i = to_small_int(require_key(entry, "i", where.str()), where.str() + ".i");
    const std::int64_t j = to_small_int(require_key(entry, "j", where.str()), where.str() + ".j");
    const std::int64_t k = to_small_int(require_key(entry, "k", where.str()), where.str() + ".k");
    if (i < 0 || j < 0 || k < 0 || i >= rank_value || j >= rank_value || k >= rank_value) {
      std::ostringstream msg;
      msg << "indices (" << i << "," << j << "," << k << ") out of range for rank " << rank;
      fail(where.str(), msg.str());
    }
    if (!(i <= j && j <= k)) {
      std::ostringstream msg;
      msg << "indices (" << i << "," << j << "," << k << ") are not sorted";
      fail(where.str(), msg.str());
    }
    const IndexTriple triple{static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                             static_cast<std::size_t>(k)};
    if (!seen.insert(triple).second) {
      std::ostringstream msg;
      msg << "duplicate index triple (" << i << "," << j << "," << k << ")";
      fail(where.str(), msg.str());
    }
    doc.cubic.set(triple[0], triple[1], triple[2],
                  to_int(require_key(entry, "c", where.str()), where.str() + ".c"));
  }

  doc.c2 = LinearForm(to_int_vector(require_key(root, "c2", "document"), rank, "c2"));

  if (const auto it = root.find("faces"); it != root.end()) {
    if (!it->is_array()) throw ValidationError("faces must be an array");
    for (std::size_t f = 0; f < it->size(); ++f) {
      std::ostringstream where;
      where << "faces[" << f << "]";
      doc.faces.push_back(parse_face((*it)[f], rank, where.str()));
    }
  }

  validate(doc);
  return doc;
}

std::string serialize_threefold(const ThreefoldDocument& document) {
  validate(document);
  json root;
  root["rank"] = document.rank();
  root["cubic"] = json::array();
  for (const auto& [triple, value] : document.cubic.coefficients()) {
    json entry;
    entry["i"] = triple[0];
    entry["j"] = triple[1];
    entry["k"] = triple[2];
    entry["c"] = int_to_json(value, "cubic");
    root["cubic"].push_back(std::move(entry));
  }
  root["c2"] = json::array();
  for (const Int& x : document.c2.coeffs()) root["c2"].push_back(int_to_json(x, "c2"));
  root["faces"] = json::array();
  for (const ContractionFace& face : document.faces) root["faces"].push_back(face_to_json(face));
  return root.dump(2) + "\n";
}

ConicBundleData parse_conic_bundle(std::string_view text) {
  const json root = parse_text(text);
  if (!root.is_object()) throw ValidationError("document root must be an object");
  reject_unknown_keys(root, {"variant", "genus", "line_pairs", "double_lines"}, "document");

  const json& variant_value = require_key(root, "variant", "document");
  if (!variant_value.is_string()) throw ValidationError("variant must be a string");
  const std::string variant_name = variant_value.get<std::string>();
  ConicBundleVariant variant;
  if (variant_name == "irreducible") {
    variant = ConicBundleVariant::Irreducible;
  } else if (variant_name == "elliptic_quasi_ruled") {
    variant = ConicBundleVariant::EllipticQuasiRuled;
  } else if (variant_name == "del_pezzo_7") {
    variant = ConicBundleVariant::DelPezzo7;
  } else {
    throw ValidationError("unknown variant \"" + variant_name +
                          "\" (expected irreducible, elliptic_quasi_ruled or del_pezzo_7)");
  }

  const Index genus = to_small_int(require_key(root, "genus", "document"), "genus");

  auto parse_fibre_map = [&root](const char* key, Index min_index) {
    std::map<Index, Index> out;
    const auto it = root.find(key);
    if (it == root.end()) return out;
    if (!it->is_object()) fail(key, "expected an object of index -> count");
    for (const auto& [k, v] : it->items()) {
      const Index index = parse_index_key(k, min_index, key);
      const Index count = to_small_int(v, std::string(key) + "[\"" + k + "\"]");
      if (count < 0) fail(key, "counts must be >= 0");
      out[index] = count;
    }
    return out;
  };

  // Semantic validation (variant constraints, count signs) lives in the ctor.
  return ConicBundleData(variant, genus, parse_fibre_map("line_pairs", 0),
                         parse_fibre_map("double_lines", 2));
}

std::string serialize_conic_bundle(const ConicBundleData& data) {
  json root;
  root["variant"] = to_string(data.variant());
  root["genus"] = data.genus();
  root["line_pairs"] = json::object();
  for (const auto& [r, count] : data.line_pairs()) root["line_pairs"][std::to_string(r)] = count;
  root["double_lines"] = json::object();
  for (const auto& [s, count] : data.double_lines())
    root["double_lines"][std::to_string(s)] = count;
  return root.dump(2) + "\n";
}

const char* to_string(ConicBundleVariant variant) {
  switch (variant) {
    case ConicBundleVariant::Irreducible: return "irreducible";
    case ConicBundleVariant::EllipticQuasiRuled: return "elliptic_quasi_ruled";
    case ConicBundleVariant::DelPezzo7: return "del_pezzo_7";
  }
  return "irreducible";
}

} // namespace cy3inv
