#include "core/acceptance.hpp"

#include "core/checks.hpp"
#include "core/errors.hpp"
#include "core/hom_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

namespace tropmirror {

namespace {

std::vector<LatticeVector> rows(std::initializer_list<std::initializer_list<long>> xs) {
  std::vector<LatticeVector> out;
  for (const auto& r : xs) {
    LatticeVector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return out;
}

Problem product_problem(std::vector<LatticeVector> fano, std::vector<LatticeVector> gens, NefPartition blocks) {
  Problem p;
  p.toric = toric_from_fano(convex_hull(fano, fano.front().size()));
  p.ideal = MonomialIdeal(p.toric.num_rays(), gens);
  p.partition = std::move(blocks);
  return p;
}

std::vector<LatticeVector> p4_rays() {
  return rows({{-1, -1, -1, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

// Vertex matrix columns of nabla in the K3 session.
std::vector<LatticeVector> k3_session_columns() {
  return rows({{1, 0, 0, 0},
               {0, 1, 0, 0},
               {1, 1, 0, 0},
               {0, 0, 1, 0},
               {1, 0, 1, 0},
               {-1, -1, -1, 0},
               {0, 0, 0, 1},
               {1, 0, 0, 1},
               {-1, -1, 0, -1},
               {-1, 0, -1, -1},
               {-1, -1, -1, -1}});
}

std::string braces(const FVector& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + "}";
}

FVector polytope_fvector(const Polytope& p) { return fvector(face_lattice(p).faces(), p.ambient_dim()); }

std::set<std::vector<std::size_t>> maximal_vertex_sets(const FaceComplex& c) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t id : c.maximal_ids()) out.insert(c.lattice()[id].vertices);
  return out;
}

// Collects failed conditions for a criterion.
class Checklist {
public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    std::string out;
    const auto& parts = failures_.empty() ? notes_ : failures_;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
    return failures_.empty() ? out : "failed: " + out;
  }

private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Case {
  std::string name;
  Problem problem;
  std::shared_ptr<MirrorResult> result;
  std::string error;
};

Case make_case(const std::string& name, Problem p) {
  Case c{name, std::move(p), nullptr, ""};
  try {
    c.result = std::make_shared<MirrorResult>(run_pipeline(c.problem.ideal, c.problem.toric, c.problem.partition));
  } catch (const Error& e) {
    c.error = e.what();
  }
  return c;
}

using CaseCheck = std::function<void(const Case&, Checklist&)>;

// Applies the check to every case, recording pipeline errors as failures.
CriterionResult over_cases(int id, const std::string& title, const std::vector<Case>& cases, const CaseCheck& check) {
  Checklist list;
  for (const auto& c : cases) {
    if (!c.result) {
      list.require(false, c.name + ": " + c.error);
      continue;
    }
    try {
      check(c, list);
    } catch (const Error& e) {
      list.require(false, c.name + ": " + e.what());
    }
  }
  return {id, title, list.passed(), list.detail()};
}

CriterionResult k3_session(const Case& k3) {
  return over_cases(1, "K3 golden session", {k3}, [](const Case& c, Checklist& list) {
    const MirrorResult& r = *c.result;
    FaceComplex complex = ideal_to_complex(c.problem.ideal, c.problem.toric);
    list.require(complex.fvector() == FVector{1, 5, 9, 6, 0, 0}, "F-vector of C is " + braces(complex.fvector()));
    list.require(maximal_vertex_sets(complex) ==
                     std::set<std::vector<std::size_t>>{{0, 2, 3}, {1, 2, 3}, {0, 2, 4}, {1, 2, 4}, {0, 3, 4}, {1, 3, 4}},
                 "facets of C differ");
    FVector nd = polytope_fvector(r.nabla_dual);
    list.require(nd == FVector{1, 10, 24, 25, 11, 1}, "F-vector of nabla dual is " + braces(nd));
    FVector co = r.tropical_dual.fvector();
    list.require(co == FVector{0, 0, 5, 9, 6, 1}, "co-complex F-vector is " + braces(co));
    FVector t = r.tropical.fvector();
    list.require(t == FVector{1, 6, 9, 5, 0, 0}, "F-vector of T is " + braces(t));

    auto columns = k3_session_columns();
    auto verts = r.nabla.lattice_vertices();
    list.require(std::set<LatticeVector>(verts.begin(), verts.end()) ==
                     std::set<LatticeVector>(columns.begin(), columns.end()),
                 "vertices of nabla differ from the session matrix");
    std::set<std::set<std::size_t>> facets;
    for (std::size_t id : r.tropical.maximal_ids()) {
      std::set<std::size_t> labels;
      for (std::size_t v : r.tropical.lattice()[id].vertices) {
        auto it = std::find(columns.begin(), columns.end(), verts[v]);
        labels.insert(static_cast<std::size_t>(it - columns.begin()));
      }
      facets.insert(labels);
    }
    list.require(facets == std::set<std::set<std::size_t>>{{2, 4, 7}, {2, 4, 8, 9}, {2, 5, 7, 9}, {4, 5, 7, 8}, {5, 8, 9}},
                 "facets of T differ from 247 2489 2579 4578 589");
    list.note("C " + braces(complex.fvector()) + ", nabla dual " + braces(nd) + ", co-complex " + braces(co) + ", T " +
              braces(t) + ", 11 vertices of nabla");
  });
}

CriterionResult hypersurface(const Case& quintic) {
  return over_cases(2, "Batyrev hypersurface specialization", {quintic}, [](const Case& c, Checklist& list) {
    const MirrorResult& r = *c.result;
    const Polytope& fano = r.toric.fano();
    list.require(r.nabla_dual.same_vertex_set(polar_dual(fano)), "nabla dual is not the anticanonical simplex");
    list.require(r.nabla.same_vertex_set(fano), "nabla is not the Fano simplex");
    FVector boundary = polytope_fvector(r.nabla);
    boundary.back() = 0;
    list.require(r.tropical.fvector() == boundary, "T is not the boundary of nabla");
    Monomial all(r.mirror_toric.num_rays(), Integer(1));
    list.require(r.mirror_ideal == MonomialIdeal(all.size(), {all}), "mirror ideal is " + r.mirror_ideal.to_string("y"));
    std::set<LatticeVector> support;
    for (const auto& g : r.family)
      for (const auto& p : g.perturbations) support.insert(p.alpha);
    std::set<LatticeVector> expected;
    for (const auto& x : lattice_points(fano))
      if (!fano.relative_interior_contains(to_rational(x))) expected.insert(x);
    list.require(support == expected, "family support differs from the boundary points of the Fano simplex");
    list.note("nabla dual = anticanonical simplex, nabla = Fano simplex, T = boundary " + braces(r.tropical.fvector()) +
              ", I0 mirror " + r.mirror_ideal.to_string("y") + ", " + std::to_string(support.size()) +
              " perturbations");
  });
}

CriterionResult reflexive_minkowski(const std::vector<Case>& cases) {
  return over_cases(3, "Reflexivity and Minkowski identities", cases, [](const Case& c, Checklist& list) {
    list.require(is_reflexive(c.result->nabla), c.name + ": nabla is not reflexive");
    list.require(delta_is_block_sum(*c.result), c.name + ": Delta is not the sum of the block polytopes");
    list.require(nabla_is_block_sum(*c.result), c.name + ": nabla is not the sum of the nabla_j");
    list.note(c.name + " ok");
  });
}

CriterionResult hv(const std::vector<Case>& cases) {
  return over_cases(4, "H and V forms of nabla agree", cases, [](const Case& c, Checklist& list) {
    list.require(nabla_forms_agree(*c.result), c.name + ": cone slice differs from the dual of the hull");
    list.note(c.name + " " + std::to_string(c.result->nabla.vertices().size()) + " vertices");
  });
}

CriterionResult dual_tests(const std::vector<Case>& cases) {
  return over_cases(5, "Combinatorial and prevariety tests agree", cases, [](const Case& c, Checklist& list) {
    const MirrorResult& r = *c.result;
    FaceComplex prevariety = tropical_faces_prevariety(r.degeneration, r.nabla, r.toric);
    list.require(same_faces(prevariety, r.combinatorial.cocomplex), c.name + ": face sets differ");
    list.note(c.name + " " + std::to_string(r.combinatorial.cocomplex.face_ids().size()) + " faces");
  });
}

CriterionResult mirror_map(const std::vector<Case>& cases) {
  return over_cases(6, "Mirror map bijection", cases, [](const Case& c, Checklist& list) {
    MirrorMapReport m = check_mirror_map(*c.result);
    list.require(m.injective, c.name + ": not injective");
    list.require(m.onto, c.name + ": not onto the strata complex");
    list.require(m.reverses_inclusion, c.name + ": inclusions not reversed");
    list.require(mirror_strata_match(*c.result), c.name + ": strata of the mirror ideal differ from T");
    list.note(c.name + " ok");
  });
}

CriterionResult round_trip(const Case& k3) {
  return over_cases(7, "Round trip involution", {k3}, [](const Case& c, Checklist& list) {
    const MirrorResult& r = *c.result;
    std::vector<Monomial> promoted;
    for (const auto& g : r.family) promoted.push_back(g.promoted);
    list.require(!r.mirror_partition.empty(), "mirror family does not come from a nef partition");
    if (r.mirror_partition.empty()) return;
    MirrorResult back =
        run_pipeline(MonomialIdeal(r.mirror_toric.num_rays(), promoted), r.mirror_toric, r.mirror_partition);
    list.require(back.mirror_toric.fano().same_vertex_set(r.toric.fano()), "mirror of the mirror is not Delta");

    // relabel the rays of the second mirror by the original ray order
    std::vector<std::size_t> to_original(back.mirror_toric.num_rays());
    bool relabelled = back.mirror_toric.num_rays() == r.toric.num_rays();
    for (std::size_t i = 0; i < to_original.size() && relabelled; ++i) {
      auto it = std::find(r.toric.rays().begin(), r.toric.rays().end(), back.mirror_toric.rays()[i]);
      relabelled = it != r.toric.rays().end();
      if (relabelled) to_original[i] = static_cast<std::size_t>(it - r.toric.rays().begin());
    }
    list.require(relabelled, "rays do not match");
    if (!relabelled) return;
    std::vector<Monomial> gens;
    for (const auto& g : back.mirror_ideal.generators()) {
      Monomial h(g.size(), Integer(0));
      for (std::size_t i = 0; i < g.size(); ++i) h[to_original[i]] = g[i];
      gens.push_back(h);
    }
    MonomialIdeal returned(r.toric.num_rays(), gens);
    list.require(returned == r.degeneration.i0, "ideal is " + returned.to_string("x"));
    auto alphas = r.pt1.alphas();
    list.require(std::set<LatticeVector>(back.xi.begin(), back.xi.end()) ==
                     std::set<LatticeVector>(alphas.begin(), alphas.end()),
                 "deformation support differs");
    list.note("Delta, " + returned.to_string("x") + " and " + std::to_string(back.xi.size()) + " deformation points");
  });
}

// Properties over random data.

IntegerMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntegerMatrix g = IntegerMatrix::identity(n);
  if (n < 2) return g;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int step = 0; step < 8; ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    g.add_row_multiple(a, b, Integer(rng() % 2 ? 1 : -1));
  }
  if (rng() % 2) g.swap_rows(0, n - 1);
  if (rng() % 2) g.negate_row(pick(rng));
  return g;
}

bool euler_holds(const Polytope& p) {
  FVector f = polytope_fvector(p);
  long sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += (i % 2 ? 1 : -1) * static_cast<long>(f[i]);
  return sum == 0;
}

std::vector<std::vector<LatticeVector>> curated_reflexive() {
  return {
      rows({{1, 0}, {0, 1}, {-1, -1}}),
      rows({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
      rows({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}}),
      rows({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}),
      rows({{1, 0}, {0, 1}, {-1, -2}}),
      rows({{-1, -1}, {2, -1}, {-1, 2}}),
      rows({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}),
      rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}),
      rows({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}),
      rows({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}}),
      rows({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}}),
      p4_rays(),
      rows({{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}}),
  };
}

CriterionResult properties(const std::vector<Case>& cases, std::uint64_t seed) {
  Checklist list;
  std::mt19937_64 rng(seed);
  std::size_t lattices = 0;

  // polar duality on transformed reflexive polytopes
  auto curated = curated_reflexive();
  for (int trial = 0; trial < 50; ++trial) {
    const auto& base = curated[rng() % curated.size()];
    const std::size_t n = base.front().size();
    IntegerMatrix g = random_unimodular(n, rng);
    std::vector<LatticeVector> moved;
    for (const auto& v : base) moved.push_back(g.apply(v));
    Polytope p = convex_hull(moved, n);
    std::string tag = "polytope " + std::to_string(trial);
    list.require(is_reflexive(p), tag + " is not reflexive");
    Polytope dual = polar_dual(p);
    if (!dual.integral()) continue;
    Polytope rebuilt = convex_hull(dual.lattice_vertices(), n);
    list.require(polar_dual(rebuilt).same_vertex_set(p), tag + ": dual of the dual differs");
    list.require(euler_holds(p) && euler_holds(rebuilt), tag + ": Euler relation fails");
    lattices += 2;
  }

  // hull soundness on random clouds
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::uniform_int_distribution<long> coord(-3, 3);
    std::vector<LatticeVector> cloud(6 + rng() % 10, LatticeVector(n));
    for (auto& x : cloud)
      for (auto& c : x) c = coord(rng);
    Polytope p = convex_hull(cloud, n);
    std::string tag = "cloud " + std::to_string(trial);
    for (const auto& x : cloud) list.require(p.contains(x), tag + ": input outside the hull");
    for (const auto& v : p.vertices())
      list.require(std::find(cloud.begin(), cloud.end(), to_integer(v)) != cloud.end(), tag + ": vertex not an input");
    list.require(euler_holds(p), tag + ": Euler relation fails");
    ++lattices;
  }

  for (const auto& c : cases)
    if (c.result) {
      list.require(euler_holds(c.result->nabla) && euler_holds(c.result->nabla_dual), c.name + ": Euler relation fails");
      lattices += 2;
    }

  // deformation basis against the brute-force oracle
  std::vector<ToricData> spaces{toric_from_fano(convex_hull(rows({{1, 0}, {0, 1}, {-1, -1}}), 2)),
                                toric_from_fano(convex_hull(rows({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), 2)),
                                toric_from_fano(convex_hull(p4_rays(), 4))};
  std::size_t ideals = 0, points = 0;
  for (int trial = 0; trial < 45; ++trial) {
    const ToricData& t = spaces[trial % spaces.size()];
    const std::size_t m = t.num_rays();
    std::vector<Monomial> gens;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t k = 0; k < count; ++k) {
      Monomial g(m, Integer(0));
      for (auto& e : g) e = rng() % 2;
      if (std::all_of(g.begin(), g.end(), [](const Integer& e) { return e == 0; })) g[rng() % m] = 1;
      gens.push_back(g);
    }
    MonomialIdeal i0(m, gens);
    std::string tag = i0.to_string("x");
    PT1Basis basis = pt1_basis(i0, t);
    std::map<LatticeVector, const DeformationDirection*> by_alpha;
    std::set<std::vector<std::optional<Monomial>>> images;
    for (const auto& d : basis.directions) {
      by_alpha[d.alpha] = &d;
      list.require(images.insert(d.images).second, tag + ": two directions with equal images");
    }
    for (const auto& alpha : candidate_points(i0, t)) {
      HomOracleSolution oracle = brute_force_hom(alpha, i0, t);
      auto it = by_alpha.find(alpha);
      list.require((it != by_alpha.end()) == oracle.all_ones_solves,
                   tag + ": basis and oracle disagree at " + format_vector(alpha));
      if (it != by_alpha.end()) list.require(it->second->moved() == oracle.live, tag + ": moved generators differ");
      ++points;
    }
    ++ideals;
  }

  list.note("50 reflexive polytopes, " + std::to_string(lattices) + " face lattices, " + std::to_string(ideals) +
            " ideals over " + std::to_string(points) + " candidate points, seed " + std::to_string(seed));
  return {8, "Property suites", list.passed(), list.detail()};
}

}  // namespace

Problem k3_problem() {
  return product_problem(p4_rays(), rows({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 1}}), {{0, 1}, {2, 3, 4}});
}

Problem quintic_problem() { return product_problem(p4_rays(), rows({{1, 1, 1, 1, 1}}), {{0, 1, 2, 3, 4}}); }

Problem elliptic_problem() { return product_problem(rows({{1, 0}, {0, 1}, {-1, -1}}), rows({{1, 1, 1}}), {{0, 1, 2}}); }

bool SuiteReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"k3", "quintic", "elliptic", "properties", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw Error(ErrorCode::Schema, "unknown suite \"" + name + "\"");
  SuiteReport report{name, seed, {}};

  std::vector<Case> cases;
  if (name == "k3" || name == "all") cases.push_back(make_case("K3", k3_problem()));
  if (name == "quintic" || name == "all") cases.push_back(make_case("quintic", quintic_problem()));
  if (name == "elliptic" || name == "all") cases.push_back(make_case("elliptic", elliptic_problem()));
  auto find = [&](const std::string& n) -> const Case* {
    for (const auto& c : cases)
      if (c.name == n) return &c;
    return nullptr;
  };

  if (const Case* k3 = find("K3")) report.criteria.push_back(k3_session(*k3));
  if (const Case* q = find("quintic")) report.criteria.push_back(hypersurface(*q));
  if (!cases.empty()) {
    report.criteria.push_back(reflexive_minkowski(cases));
    report.criteria.push_back(hv(cases));
    report.criteria.push_back(dual_tests(cases));
    report.criteria.push_back(mirror_map(cases));
  }
  if (const Case* k3 = find("K3")) report.criteria.push_back(round_trip(*k3));
  if (name == "properties" || name == "all") report.criteria.push_back(properties(cases, seed));
  return report;
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& c : r.criteria)
    out << (c.passed ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.title << ": " << c.detail << "\n";
  std::size_t passed = std::count_if(r.criteria.begin(), r.criteria.end(), [](const CriterionResult& c) { return c.passed; });
  out << "suite " << r.suite << ": " << passed << "/" << r.criteria.size() << " passed\n";
  return out.str();
}

Json report_to_json(const SuiteReport& r) {
  Json criteria = Json::array();
  for (const auto& c : r.criteria)
    criteria.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"criteria", criteria}};
}

}  // namespace tropmirror
