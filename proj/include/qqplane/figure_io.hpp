#pragma once

// JSON figure documents. Scalars travel as strings so big integers stay
// exact.
//
//   {"field": {"kind": "rational"} | {"kind": "prime", "p": "5"},
//    "quadrangle":    [["1","0","0"], ...4 point triples],
//    "quadrilateral": [["3","-1","-1"], ...4 line triples]}

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "qqplane/error.hpp"
#include "qqplane/harmonicity.hpp"
#include "qqplane/incidence.hpp"
#include "qqplane/scalar_field.hpp"

namespace qqplane {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "qq-plane/1";

struct FigureDocument {
  FieldSpec field;
  std::optional<CompleteQuadrangle> quadrangle;
  std::optional<CompleteQuadrilateral> quadrilateral;

  friend bool operator==(const FigureDocument&, const FigureDocument&) = default;
};

inline Json to_json(const FieldSpec& spec) {
  Json j;
  if (spec.is_prime_field()) {
    j["kind"] = "prime";
    j["p"] = std::to_string(spec.p);
  } else {
    j["kind"] = "rational";
  }
  return j;
}

inline Json to_json(const HomTriple& t) {
  return Json::array({t[0].to_string(), t[1].to_string(), t[2].to_string()});
}

template <std::size_t N>
Json to_json(const std::array<HomTriple, N>& ts) {
  Json j = Json::array();
  for (const auto& t : ts) j.push_back(to_json(t));
  return j;
}

inline Json to_json(const CompleteQuadrangle& q) { return to_json(q.vertices()); }
inline Json to_json(const CompleteQuadrilateral& s) { return to_json(s.sides()); }

inline Json to_json(const DiagonalTriangle& tri) {
  Json j;
  j["points"] = to_json(tri.points);
  j["lines"] = to_json(tri.lines);
  return j;
}

inline Json to_json(const QQPair& pair) {
  Json j;
  j["quadrangle"] = to_json(pair.quadrangle);
  j["quadrilateral"] = to_json(pair.quadrilateral);
  j["diagonal_triangle"] = to_json(pair.triangle);
  return j;
}

inline Json serialize_figure(const FigureDocument& doc) {
  Json j;
  j["field"] = to_json(doc.field);
  if (doc.quadrangle) j["quadrangle"] = to_json(*doc.quadrangle);
  if (doc.quadrilateral) j["quadrilateral"] = to_json(*doc.quadrilateral);
  return j;
}

namespace detail {

inline Error malformed(const std::string& path, const std::string& why) {
  return Error(Errc::MalformedJson, path + ": " + why);
}

/// Positive decimal modulus; anything numeric that is not a prime is NotPrime.
inline FieldSpec prime_spec(std::string_view text, const std::string& path) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw malformed(path, "modulus '" + std::string(text) + "' is not an integer");
  }
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  if (negative && digits != "0") throw Error(Errc::NotPrime, path + ": " + std::string(text) + " is not prime");
  if (digits.size() > 19) throw Error(Errc::NotPrime, path + ": modulus " + std::string(text) + " is out of range");
  const std::uint64_t p = std::stoull(std::string(digits));
  if (!is_prime_number(p)) throw Error(Errc::NotPrime, path + ": " + std::string(text) + " is not prime");
  return FieldSpec::prime(p);
}

inline FieldSpec parse_field(const Json& j, const std::string& path) {
  if (!j.is_object()) throw malformed(path, "field must be an object");
  const auto kind = j.find("kind");
  if (kind == j.end() || !kind->is_string()) throw malformed(path + "/kind", "missing or not a string");
  const std::string k = kind->get<std::string>();
  if (k == "rational") return FieldSpec::rationals();
  if (k != "prime") throw malformed(path + "/kind", "unknown field kind '" + k + "'");
  const auto p = j.find("p");
  if (p == j.end()) throw malformed(path + "/p", "prime field needs a modulus");
  if (p->is_string()) return prime_spec(p->get<std::string>(), path + "/p");
  if (p->is_number_integer()) return prime_spec(p->dump(), path + "/p");
  throw malformed(path + "/p", "modulus must be a string or integer");
}

inline HomTriple parse_triple(const Field& field, const Json& j, Role role, const std::string& path) {
  if (!j.is_array() || j.size() != 3) throw malformed(path, "expected an array of 3 scalar strings");
  RawTriple raw;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string at = path + "/" + std::to_string(i);
    if (!j[i].is_string()) throw Error(Errc::BadScalar, at + ": scalars must be JSON strings");
    try {
      raw[i] = field.parse(j[i].get<std::string>());
    } catch (const Error& e) {
      throw Error(e.code(), at + ": " + e.detail());
    }
  }
  try {
    return normalize(std::move(raw), role);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

inline std::array<HomTriple, 4> parse_four(const Field& field, const Json& j, Role role, const std::string& path) {
  if (!j.is_array() || j.size() != 4) throw malformed(path, "expected an array of 4 triples");
  return {parse_triple(field, j[0], role, path + "/0"), parse_triple(field, j[1], role, path + "/1"),
          parse_triple(field, j[2], role, path + "/2"), parse_triple(field, j[3], role, path + "/3")};
}

}  // namespace detail

/// Parses "rational" or "prime:<p>" (the --field flag form).
inline FieldSpec parse_field_flag(std::string_view text) {
  if (text == "rational") return FieldSpec::rationals();
  if (text.starts_with("prime:")) return detail::prime_spec(text.substr(6), "--field");
  throw detail::malformed("--field", "expected 'rational' or 'prime:<p>', got '" + std::string(text) + "'");
}

/// Validated figure document. `fallback_field` supplies the field when the
/// document has none; when both are given they must agree.
inline FigureDocument parse_figure(std::string_view text, std::optional<FieldSpec> fallback_field = std::nullopt) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::MalformedJson, e.what());
  }
  if (!j.is_object()) throw detail::malformed("/", "document must be an object");

  FigureDocument doc;
  if (const auto f = j.find("field"); f != j.end()) {
    doc.field = detail::parse_field(*f, "/field");
    if (fallback_field && !(*fallback_field == doc.field)) {
      throw Error(Errc::FieldMismatch, "document declares " + to_string(doc.field) + " but " +
                                           to_string(*fallback_field) + " was requested");
    }
  } else if (fallback_field) {
    doc.field = *fallback_field;
  } else {
    throw detail::malformed("/field", "missing field declaration");
  }
  const Field field(doc.field);

  for (const auto& [key, value] : j.items()) {
    if (key != "field" && key != "quadrangle" && key != "quadrilateral") {
      throw detail::malformed("/" + key, "unknown key");
    }
  }
  if (const auto q = j.find("quadrangle"); q != j.end()) {
    auto vertices = detail::parse_four(field, *q, Role::Point, "/quadrangle");
    if (!general_position4(vertices)) {
      throw Error(Errc::GeneralPositionViolation, "/quadrangle: three of the vertices are collinear or two coincide");
    }
    doc.quadrangle.emplace(std::move(vertices));
  }
  if (const auto s = j.find("quadrilateral"); s != j.end()) {
    auto sides = detail::parse_four(field, *s, Role::Line, "/quadrilateral");
    if (!general_position4(sides)) {
      throw Error(Errc::GeneralPositionViolation, "/quadrilateral: three of the sides are concurrent or two coincide");
    }
    doc.quadrilateral.emplace(std::move(sides));
  }
  return doc;
}

}  // namespace qqplane
