// Monomial ideals in the Cox ring, stored by minimal generators.

#ifndef TROPMIRROR_CORE_MONOMIAL_HPP
#define TROPMIRROR_CORE_MONOMIAL_HPP

#include "core/lattice.hpp"

#include <span>
#include <string>
#include <vector>

namespace tropmirror {

/// Exponent vector, one entry per ray. Negative entries only appear in
/// Laurent monomials, which never enter an ideal.
using Monomial = LatticeVector;

bool is_nonnegative(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial squarefree_product(std::size_t nvars, std::span<const std::size_t> vars);
/// Indices with positive exponent.
std::vector<std::size_t> support(const Monomial& m);
std::string format_monomial(const Monomial& m, const std::string& var);

class MonomialIdeal {
public:
  MonomialIdeal() = default;
  /// Minimalizes and sorts the generators. Throws Schema on negative or
  /// wrong-length exponents.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal unit(std::size_t nvars);
  static MonomialIdeal prime(std::size_t nvars, std::span<const std::size_t> vars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> generators_;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_MONOMIAL_HPP
