// Exact integer and rational linear algebra over Z^n and Q^n.
//
// Everything in the library is built on these scalars: there is no floating
// point anywhere in the core. Matrices are small (at most a few dozen rows),
// so the algorithms favour clarity over asymptotics.

#ifndef TROPMIRROR_CORE_LATTICE_HPP
#define TROPMIRROR_CORE_LATTICE_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropmirror {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// An element of N = Z^n or M = Hom(N, Z); the ambient rank is the size.
using LatticeVector = std::vector<Integer>;
/// A point of N_Q or M_Q. Entries are kept in lowest terms by the backend.
using RationalVector = std::vector<Rational>;

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  /// Every row must have length `cols`; `cols` is needed for the 0-row case.
  static IntegerMatrix from_rows(std::span<const LatticeVector> rows,
                                 std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  LatticeVector row(std::size_t r) const;
  LatticeVector col(std::size_t c) const;
  IntegerMatrix transpose() const;
  /// Submatrix made of the listed rows, in the given order.
  IntegerMatrix select_rows(std::span<const std::size_t> rows) const;

  LatticeVector apply(const LatticeVector& x) const;
  RationalVector apply(const RationalVector& x) const;
  Integer determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// left * original * right == diag(diagonal) padded with zeros.
/// Diagonal entries are non-negative and each divides its successor.
struct SmithDecomposition {
  IntegerMatrix left;
  IntegerMatrix right;
  std::vector<Integer> diagonal;  // length min(rows, cols)

  std::size_t rank() const;
  IntegerMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

/// Column-style Hermite form: original * transform == hermite, where hermite
/// is lower echelon with positive pivots and transform is unimodular.
struct HermiteDecomposition {
  IntegerMatrix hermite;
  IntegerMatrix transform;
  std::vector<std::size_t> pivot_rows;  // pivot row of column k, k < rank

  std::size_t rank() const { return pivot_rows.size(); }
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);
HermiteDecomposition column_hermite(const IntegerMatrix& m);

/// Columns form a saturated basis of {x in Z^cols : m x = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

/// Some integer x with m x = rhs, or nothing if no integer solution exists.
std::optional<LatticeVector> solve_integer(const IntegerMatrix& m,
                                           const LatticeVector& rhs);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(std::span<const RationalVector> vectors);

/// Rational solution of a square nonsingular system; nothing if singular.
std::optional<RationalVector> solve_rational(const IntegerMatrix& m,
                                             const RationalVector& rhs);

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

/// gcd of the absolute values of the entries (0 for the zero vector).
Integer content(const LatticeVector& v);
/// v divided by its content; the zero vector is returned unchanged.
LatticeVector primitive(const LatticeVector& v);

RationalVector to_rational(const LatticeVector& v);
bool is_integral(const RationalVector& v);
/// Requires is_integral(v).
LatticeVector to_integer(const RationalVector& v);
/// Smallest positive integer d with d * v integral.
Integer common_denominator(const RationalVector& v);

LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector subtract(const LatticeVector& a, const LatticeVector& b);
RationalVector add(const RationalVector& a, const RationalVector& b);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Decimal string; rationals as "p/q" (or "p" when integral).
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
/// Accepts "p", "-p" and "p/q".
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

std::string format_vector(const LatticeVector& v);
std::string format_vector(const RationalVector& v);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_LATTICE_HPP
