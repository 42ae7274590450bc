#include "core/session.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tropmirror {

namespace {

std::string braces(const FVector& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + "}";
}

std::string dump(const Json& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

FaceComplex whole_polytope(const Polytope& p) {
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return FaceComplex::generated_by(FaceComplex::Kind::Complex, p, {all});
}

std::string vertex_lines(const Polytope& p, char letter) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    out << "  " << letter << i << " = " << format_vector(p.vertices()[i]) << "\n";
  return out.str();
}

std::string polynomial(const MirrorGenerator& g) {
  std::string out = format_monomial(g.promoted, "y");
  if (g.perturbations.empty()) return out;
  out += " + s*(";
  for (std::size_t i = 0; i < g.perturbations.size(); ++i)
    out += (i ? " + " : "") + g.perturbations[i].symbol + "*" + format_monomial(g.perturbations[i].image, "y");
  return out + ")";
}

FaceComplex tropdef(const Problem& p) {
  FaceComplex strata = strata_subcomplex(p.ideal, p.toric);
  Degeneration d = canonical_degeneration(p.partition ? *p.partition : [&] {
    auto inferred = partition_from_ideal(p.ideal);
    if (!inferred)
      throw Error(ErrorCode::InvalidNefPartition,
                  "ideal is not generated by products over the blocks of a partition of the rays");
    return *inferred;
  }(), p.toric);
  Polytope nabla_dual = nabla_dual_from_hull(pt1_basis(p.ideal, p.toric).alphas(), p.toric.dim());
  return tropical_faces_combinatorial(d, nabla_dual, strata).cocomplex;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"complex", "pt1", "tropdef", "dualize", "mirror"};
  return names;
}

std::string format_complex(const FaceComplex& c, char letter) {
  const bool co = c.kind() == FaceComplex::Kind::CoComplex;
  std::vector<std::vector<std::size_t>> printed;
  std::vector<int> dims;
  for (std::size_t id : printed_faces(c)) {
    printed.push_back(c.lattice()[id].vertices);
    dims.push_back(c.lattice()[id].dim);
  }
  // colexicographic, as in the session transcripts
  std::vector<std::size_t> order(printed.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(printed[a].rbegin(), printed[a].rend(), printed[b].rbegin(), printed[b].rend());
  });

  std::ostringstream out;
  const std::size_t ambient = c.polytope().ambient_dim();
  if (printed.empty()) {
    out << "void " << (co ? "co-complex" : "complex") << " embedded in dim " << ambient << "\n";
    out << "F-vector " << braces(c.fvector()) << "\n";
    return out.str();
  }
  int dim = co ? *std::min_element(dims.begin(), dims.end()) : *std::max_element(dims.begin(), dims.end());
  bool equidimensional = std::all_of(dims.begin(), dims.end(), [&](int d) { return d == dim; });
  bool simplicial = true;
  for (const Face& f : c.faces())
    if (f.dim >= 0 && f.vertices.size() != static_cast<std::size_t>(f.dim + 1)) simplicial = false;

  out << dim << ":";
  for (std::size_t i : order) {
    out << " {";
    for (std::size_t k = 0; k < printed[i].size(); ++k) out << (k ? " " : "") << letter << printed[i][k];
    out << "}";
  }
  out << "\n"
      << (co ? "co-complex" : "complex") << " of dim " << dim << " embedded in dim " << ambient
      << " (printing facets)\n"
      << (equidimensional ? "equidimensional" : "not equidimensional") << ", "
      << (simplicial ? "simplicial" : "non-simplicial") << ", F-vector " << braces(c.fvector()) << "\n";
  return out.str();
}

std::string run_command(const std::string& command, const Json& input, bool json_output, bool pretty) {
  if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
    throw Error(ErrorCode::Schema, "unknown command \"" + command + "\"");

  if (command == "dualize") {
    FaceComplex c = input.is_object() && input.contains("kind") ? complex_from_json(input)
                                                                : tropdef(problem_from_json(input));
    FaceComplex d = dualize(c);
    if (json_output) return dump(complex_to_json(d), pretty);
    return format_complex(d, 'v') + "vertices:\n" + vertex_lines(d.polytope(), 'v');
  }

  Problem p = problem_from_json(input);
  if (command == "complex") {
    FaceComplex c = ideal_to_complex(p.ideal, p.toric);
    if (json_output) return dump(complex_to_json(c), pretty);
    return format_complex(c, 'x');
  }
  if (command == "pt1") {
    PT1Basis basis = pt1_basis(p.ideal, p.toric);
    Polytope hull = nabla_dual_from_hull(basis.alphas(), p.toric.dim());
    if (json_output) {
      Json out = polytope_to_json(hull);
      out["directions"] = basis.directions.size();
      return dump(out, pretty);
    }
    return format_complex(whole_polytope(hull), 'y') + "directions: " + std::to_string(basis.directions.size()) +
           "\nvertices:\n" + vertex_lines(hull, 'y');
  }
  if (command == "tropdef") {
    FaceComplex c = tropdef(p);
    if (json_output) return dump(complex_to_json(c), pretty);
    return format_complex(c, 'y');
  }

  MirrorResult r = run_pipeline(p.ideal, p.toric, p.partition);
  if (json_output) return dump(mirror_result_to_json(r), pretty);
  std::ostringstream out;
  out << "tropical complex on nabla:\n" << format_complex(r.tropical, 'v');
  out << "nabla vertices" << (r.nabla_reflexive ? "" : " (nabla is not reflexive)") << ":\n" << vertex_lines(r.nabla, 'v');
  out << "mirror rays (vertices of nabla dual):\n" << vertex_lines(r.nabla_dual, 'y');
  out << "mirror ideal: " << r.mirror_ideal.to_string("y") << "\n";
  out << "xi:";
  for (const auto& a : r.xi) out << " " << format_vector(a);
  out << "\nfirst order mirror family (s^2 = 0):\n";
  for (const auto& g : r.family) out << "  " << polynomial(g) << "    [" << g.promotion << "]\n";
  return out.str();
}

}  // namespace tropmirror
