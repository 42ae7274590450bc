#include "core/serialize.hpp"

#include "core/errors.hpp"

#include <limits>

namespace tropmirror {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Schema, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::Schema, std::string(what) + " must be an array");
  return j;
}

std::vector<LatticeVector> matrix_from_json(const Json& j, const char* what) {
  std::vector<LatticeVector> out;
  for (const auto& row : array_of(j, what)) out.push_back(vector_from_json(row));
  if (!out.empty())
    for (const auto& row : out)
      if (row.size() != out.front().size())
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " rows have different lengths");
  return out;
}

std::vector<std::size_t> indices_from_json(const Json& j, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& x : array_of(j, what)) {
    Integer v = integer_from_json(x);
    if (v < 0) throw Error(ErrorCode::Schema, std::string(what) + " contains a negative index");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

const char* kind_name(FaceComplex::Kind k) { return k == FaceComplex::Kind::Complex ? "complex" : "cocomplex"; }

Json fvector_to_json(const FVector& f) {
  Json out = Json::array();
  for (auto x : f) out.push_back(x);
  return out;
}

Json monomial_list(const std::vector<Monomial>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(vector_to_json(m));
  return out;
}

}  // namespace

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::Schema, "\"" + j.get<std::string>() + "\" is not an integer");
    }
  }
  throw Error(ErrorCode::Schema, "expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return to_string(x);
}

Json rational_to_json(const Rational& x) {
  if (denominator(x) == 1) return integer_to_json(numerator(x));
  return to_string(x);
}

LatticeVector vector_from_json(const Json& j) {
  LatticeVector out;
  for (const auto& x : array_of(j, "vector")) out.push_back(integer_from_json(x));
  return out;
}

Json vector_to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Problem problem_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Schema, "input must be an object");
  const Json& toric = field(j, "toric");
  Problem p;
  if (toric.contains("fanoVertices")) {
    if (toric.contains("rays")) throw Error(ErrorCode::Schema, "give either fanoVertices or rays, not both");
    auto verts = matrix_from_json(toric.at("fanoVertices"), "fanoVertices");
    if (verts.empty()) throw Error(ErrorCode::Schema, "fanoVertices is empty");
    Polytope hull = convex_hull(verts, verts.front().size());
    if (hull.vertices().size() != verts.size())
      throw Error(ErrorCode::Schema, "fanoVertices contains points that are not vertices");
    p.toric = toric_from_fano(hull);
  } else {
    auto rays = matrix_from_json(field(toric, "rays"), "rays");
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& c : array_of(field(toric, "maxCones"), "maxCones")) cones.push_back(indices_from_json(c, "maxCones"));
    p.toric = toric_from_fan(rays, cones);
  }

  auto gens = matrix_from_json(field(field(j, "ideal"), "generators"), "generators");
  for (const auto& g : gens)
    if (g.size() != p.toric.num_rays())
      throw Error(ErrorCode::DimensionMismatch, "generator " + format_vector(g) + " does not have one exponent per ray");
  p.ideal = MonomialIdeal(p.toric.num_rays(), gens);

  if (j.contains("nefPartition")) {
    NefPartition blocks;
    for (const auto& b : array_of(j.at("nefPartition"), "nefPartition")) blocks.push_back(indices_from_json(b, "nefPartition"));
    for (const auto& b : blocks)
      for (std::size_t r : b)
        if (r >= p.toric.num_rays()) throw Error(ErrorCode::Schema, "nefPartition refers to ray " + std::to_string(r));
    p.partition = blocks;
  }
  return p;
}

Json problem_to_json(const Problem& p) {
  Json rays = Json::array();
  for (const auto& r : p.toric.rays()) rays.push_back(vector_to_json(r));
  Json out;
  out["toric"] = {{"fanoVertices", rays}};
  out["ideal"] = {{"generators", monomial_list(p.ideal.generators())}};
  if (p.partition) out["nefPartition"] = *p.partition;
  return out;
}

Json polytope_to_json(const Polytope& p) {
  Json out;
  out["ambientDim"] = p.ambient_dim();
  out["dim"] = p.dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(vector_to_json(v));
  out["vertices"] = verts;
  Json facets = Json::array();
  for (std::size_t i = 0; i < p.facets().size(); ++i)
    facets.push_back({{"normal", vector_to_json(p.facets()[i].normal)},
                      {"offset", rational_to_json(p.facets()[i].offset)},
                      {"vertices", p.facet_vertices()[i]}});
  out["facets"] = facets;
  out["fvector"] = fvector_to_json(fvector(face_lattice(p).faces(), p.ambient_dim()));
  return out;
}

std::vector<std::size_t> printed_faces(const FaceComplex& c) {
  if (c.kind() == FaceComplex::Kind::Complex) return c.maximal_ids();
  std::vector<std::size_t> out;
  for (std::size_t id : c.face_ids()) {
    bool minimal = true;
    for (std::size_t other : c.face_ids())
      if (other != id && c.lattice().is_subface(other, id)) minimal = false;
    if (minimal) out.push_back(id);
  }
  return out;
}

Json complex_to_json(const FaceComplex& c) {
  Json out;
  out["kind"] = kind_name(c.kind());
  Json verts = Json::array();
  for (const auto& v : c.polytope().vertices()) verts.push_back(vector_to_json(v));
  out["vertices"] = verts;
  Json faces = Json::array();
  int dim = -1;
  bool first = true;
  for (std::size_t id : printed_faces(c)) {
    const Face& f = c.lattice()[id];
    faces.push_back(f.vertices);
    dim = first ? f.dim : (c.kind() == FaceComplex::Kind::Complex ? std::max(dim, f.dim) : std::min(dim, f.dim));
    first = false;
  }
  out["dim"] = dim;
  out["faces"] = faces;
  out["fvector"] = fvector_to_json(c.fvector());
  return out;
}

FaceComplex complex_from_json(const Json& j) {
  std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind != "complex" && kind != "cocomplex") throw Error(ErrorCode::Schema, "kind must be \"complex\" or \"cocomplex\"");
  auto verts = matrix_from_json(field(j, "vertices"), "vertices");
  if (verts.empty()) throw Error(ErrorCode::Schema, "vertices is empty");
  Polytope p = convex_hull(verts, verts.front().size());
  if (p.vertices().size() != verts.size()) throw Error(ErrorCode::Schema, "vertices contains points that are not vertices");
  std::vector<std::vector<std::size_t>> faces;
  for (const auto& f : array_of(field(j, "faces"), "faces")) {
    faces.push_back(indices_from_json(f, "faces"));
    for (std::size_t v : faces.back())
      if (v >= verts.size()) throw Error(ErrorCode::Schema, "faces refers to vertex " + std::to_string(v));
  }
  try {
    return FaceComplex::generated_by(kind == "complex" ? FaceComplex::Kind::Complex : FaceComplex::Kind::CoComplex, p,
                                     faces);
  } catch (const Error& e) {
    throw Error(ErrorCode::Schema, e.detail());
  }
}

Json ideal_to_json(const MonomialIdeal& i) {
  Json out;
  out["nvars"] = i.nvars();
  out["generators"] = monomial_list(i.generators());
  return out;
}

Json sphere_report_to_json(const SphereReport& s) {
  return {{"dim", s.dim},
          {"euler", s.euler},
          {"eulerOk", s.euler_ok},
          {"pseudomanifold", s.pseudomanifold},
          {"connected", s.connected},
          {"linksConnected", s.links_connected},
          {"passed", s.passed},
          {"failures", s.failures}};
}

Json mirror_result_to_json(const MirrorResult& r) {
  Json out;
  out["strataComplex"] = complex_to_json(r.strata);
  out["nablaDual"] = polytope_to_json(r.nabla_dual);
  out["nabla"] = polytope_to_json(r.nabla);
  out["nablaReflexive"] = r.nabla_reflexive;
  Json cone = Json::array();
  for (const auto& a : r.cone.inequalities) cone.push_back(vector_to_json(a));
  out["groebnerCone"] = cone;
  out["dual"] = complex_to_json(r.tropical_dual);
  out["tropicalComplex"] = complex_to_json(r.tropical);
  out["mirrorIdeal"] = ideal_to_json(r.mirror_ideal);
  out["mirrorPartition"] = r.mirror_partition;
  Json xi = Json::array();
  for (const auto& a : r.xi) xi.push_back(vector_to_json(a));
  out["xi"] = xi;
  Json family = Json::array();
  for (const auto& g : r.family) {
    Json pert = Json::array();
    for (const auto& p : g.perturbations)
      pert.push_back({{"alpha", vector_to_json(p.alpha)},
                      {"coefficientSymbol", p.symbol},
                      {"imageMonomial", vector_to_json(p.image)}});
    family.push_back({{"baseMonomial", vector_to_json(g.base)},
                      {"multiplier", vector_to_json(g.multiplier)},
                      {"promotedMonomial", vector_to_json(g.promoted)},
                      {"promotion", g.promotion},
                      {"perturbations", pert}});
  }
  out["family"] = family;
  return out;
}

}  // namespace tropmirror
