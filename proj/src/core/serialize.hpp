// JSON encoding of problems, polytopes, complexes and mirror results.

#ifndef TROPMIRROR_CORE_SERIALIZE_HPP
#define TROPMIRROR_CORE_SERIALIZE_HPP

#include "core/mirror.hpp"

#include "json.hpp"

#include <optional>

namespace tropmirror {

using Json = nlohmann::ordered_json;

/// An ideal in the Cox ring of a toric Fano variety, optionally with the
/// nef partition it comes from.
struct Problem {
  ToricData toric;
  MonomialIdeal ideal;
  std::optional<NefPartition> partition;
};

/// Accepts machine integers or decimal strings. Throws Schema.
Integer integer_from_json(const Json& j);
/// A number when it fits in 64 bits, a decimal string otherwise.
Json integer_to_json(const Integer& x);
Json rational_to_json(const Rational& x);

LatticeVector vector_from_json(const Json& j);
Json vector_to_json(const LatticeVector& v);
Json vector_to_json(const RationalVector& v);

/// {"toric": {"rays", "maxCones"} or {"fanoVertices"}, "ideal":
/// {"generators"}, "nefPartition"?}. Throws Schema, DimensionMismatch and
/// the errors of toric_from_fano.
Problem problem_from_json(const Json& j);
Json problem_to_json(const Problem& p);

Json polytope_to_json(const Polytope& p);
/// Maximal faces for complexes, minimal faces for co-complexes.
std::vector<std::size_t> printed_faces(const FaceComplex& c);
Json complex_to_json(const FaceComplex& c);
/// {"kind", "vertices", "faces"}: the complex or co-complex generated by the
/// given faces of conv(vertices). Throws Schema.
FaceComplex complex_from_json(const Json& j);

Json ideal_to_json(const MonomialIdeal& i);
Json sphere_report_to_json(const SphereReport& s);
Json mirror_result_to_json(const MirrorResult& r);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_SERIALIZE_HPP
