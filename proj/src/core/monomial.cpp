#include "core/monomial.hpp"

#include "core/errors.hpp"

#include <algorithm>

namespace tropmirror {

bool is_nonnegative(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](const Integer& e) { return e >= 0; });
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
  return out;
}

Monomial squarefree_product(std::size_t nvars, std::span<const std::size_t> vars) {
  Monomial m(nvars);
  for (std::size_t v : vars) m[v] = 1;
  return m;
}

std::vector<std::size_t> support(const Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) out.push_back(i);
  return out;
}

std::string format_monomial(const Monomial& m, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var + std::to_string(i);
    if (m[i] != 1) out += '^' + tropmirror::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw Error(ErrorCode::Schema, "generator has wrong number of exponents");
    if (!is_nonnegative(g)) throw Error(ErrorCode::Schema, "negative exponent in ideal generator");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
      redundant = j != i && divides(generators[j], generators[i]);
    if (!redundant) generators_.push_back(generators[i]);
  }
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }

MonomialIdeal MonomialIdeal::prime(std::size_t nvars, std::span<const std::size_t> vars) {
  std::vector<Monomial> gens;
  for (std::size_t v : vars) {
    Monomial m(nvars);
    m[v] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 &&
         std::all_of(generators_[0].begin(), generators_[0].end(), [](const Integer& e) { return e == 0; });
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : generators_)
    for (const auto& e : g)
      if (e > 1) return false;
  return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (!is_nonnegative(m)) return false;
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return divides(g, m); });
}

std::string MonomialIdeal::to_string(const std::string& var) const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(generators_[i], var);
  }
  return out + ">";
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::DimensionMismatch, "ideals live in different rings");
  std::vector<Monomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(lcm(f, g));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

}  // namespace tropmirror
