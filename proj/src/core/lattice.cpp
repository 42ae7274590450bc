#include "core/lattice.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace tropmirror {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotFano: return "NotFano";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NotCartier: return "NotCartier";
    case ErrorCode::NotEquidimensional: return "NotEquidimensional";
    case ErrorCode::UnboundedCandidatePolytope: return "UnboundedCandidatePolytope";
    case ErrorCode::InvalidNefPartition: return "InvalidNefPartition";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::UnboundedSlice: return "UnboundedSlice";
    case ErrorCode::SphereCheckFailed: return "SphereCheckFailed";
    case ErrorCode::NoCartierMultiple: return "NoCartierMultiple";
    case ErrorCode::NotFaceOfDelta: return "NotFaceOfDelta";
    case ErrorCode::FormsDisagree: return "FormsDisagree";
    case ErrorCode::TropicalTestsDisagree: return "TropicalTestsDisagree";
    case ErrorCode::DualityMismatch: return "DualityMismatch";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Schema:
    case ErrorCode::DimensionMismatch:
      return 2;
    case ErrorCode::NotFaceOfDelta:
    case ErrorCode::FormsDisagree:
    case ErrorCode::TropicalTestsDisagree:
    case ErrorCode::DualityMismatch:
      return 4;
    default:
      return 3;
  }
}

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const LatticeVector> rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "matrix row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LatticeVector IntegerMatrix::row(std::size_t r) const {
  return LatticeVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

LatticeVector IntegerMatrix::col(std::size_t c) const {
  LatticeVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::select_rows(std::span<const std::size_t> rows) const {
  IntegerMatrix s(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(rows[i], j);
  return s;
}

LatticeVector IntegerMatrix::apply(const LatticeVector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  LatticeVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RationalVector IntegerMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  RationalVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += Rational((*this)(i, j)) * x[j];
  return y;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  IntegerMatrix a = *this;
  const std::size_t n = rows_;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

// ---------------------------------------------------------------------------
// Normal forms

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

IntegerMatrix SmithDecomposition::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntegerMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

namespace {

// Truncated quotient; remainders then have the sign of the dividend, which is
// all the reduction loops below need.
Integer quotient(const Integer& a, const Integer& b) { return a / b; }

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntegerMatrix d = m;
  IntegerMatrix left = IntegerMatrix::identity(r);
  IntegerMatrix right = IntegerMatrix::identity(c);
  const std::size_t steps = std::min(r, c);

  for (std::size_t t = 0; t < steps; ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    auto place_min = [&]() -> bool {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second))))
            best = std::make_pair(i, j);
      if (!best) return false;
      d.swap_rows(t, best->first);
      left.swap_rows(t, best->first);
      d.swap_cols(t, best->second);
      right.swap_cols(t, best->second);
      return true;
    };
    if (!place_min()) break;

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = quotient(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = quotient(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A smaller remainder appeared in row/column t; bring it to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < r; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t; j < c; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) { bi = t; bj = j; }
        d.swap_rows(t, bi);
        left.swap_rows(t, bi);
        d.swap_cols(t, bj);
        right.swap_cols(t, bj);
        continue;
      }
      // Row and column are clean; enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(left), std::move(right), {}};
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = d(t, t);
  return out;
}

HermiteDecomposition column_hermite(const IntegerMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(c);
  std::vector<std::size_t> pivots;

  std::size_t col = 0;
  for (std::size_t i = 0; i < r && col < c; ++i) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = col; j < c; ++j)
        if (h(i, j) != 0 && (!best || abs(h(i, j)) < abs(h(i, *best)))) best = j;
      if (!best) break;
      h.swap_cols(col, *best);
      u.swap_cols(col, *best);
      bool clean = true;
      for (std::size_t j = col + 1; j < c; ++j) {
        if (h(i, j) == 0) continue;
        Integer q = quotient(h(i, j), h(i, col));
        h.add_col_multiple(j, col, -q);
        u.add_col_multiple(j, col, -q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (col < c && h(i, col) != 0) {
      if (h(i, col) < 0) {
        h.negate_col(col);
        u.negate_col(col);
      }
      // Reduce the entries left of the pivot into [0, pivot).
      for (std::size_t j = 0; j < col; ++j) {
        Integer q = h(i, j) / h(i, col);
        if (h(i, j) - q * h(i, col) < 0) q -= 1;
        h.add_col_multiple(j, col, -q);
        u.add_col_multiple(j, col, -q);
      }
      pivots.push_back(i);
      ++col;
    }
  }
  return HermiteDecomposition{std::move(h), std::move(u), std::move(pivots)};
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
  HermiteDecomposition hd = column_hermite(m);
  const std::size_t c = m.cols();
  IntegerMatrix k(c, c - hd.rank());
  for (std::size_t j = hd.rank(); j < c; ++j)
    for (std::size_t i = 0; i < c; ++i) k(i, j - hd.rank()) = hd.transform(i, j);
  return k;
}

std::optional<LatticeVector> solve_integer(const IntegerMatrix& m, const LatticeVector& rhs) {
  if (rhs.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side has wrong length");
  HermiteDecomposition hd = column_hermite(m);
  const std::size_t rank = hd.rank();
  LatticeVector y(m.cols());
  std::size_t next = 0;  // next pivot column to determine
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t k = 0; k < next; ++k) acc += hd.hermite(i, k) * y[k];
    if (next < rank && hd.pivot_rows[next] == i) {
      Integer diff = rhs[i] - acc;
      if (diff % hd.hermite(i, next) != 0) return std::nullopt;
      y[next] = diff / hd.hermite(i, next);
      ++next;
    } else if (acc != rhs[i]) {
      return std::nullopt;
    }
  }
  return hd.transform.apply(y);
}

std::size_t rank(const IntegerMatrix& m) { return column_hermite(m).rank(); }

std::size_t rank(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<RationalVector> a(vectors.begin(), vectors.end());
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < a.size(); ++j) {
    std::size_t p = r;
    while (p < a.size() && a[p][j] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][j] == 0) continue;
      Rational f = a[i][j] / a[r][j];
      for (std::size_t k = j; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

std::optional<RationalVector> solve_rational(const IntegerMatrix& m, const RationalVector& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "solve_rational expects a square system");
  std::vector<RationalVector> a(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n] = rhs[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    while (p < n && a[p][j] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[j]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || a[i][j] == 0) continue;
      Rational f = a[i][j] / a[j][j];
      for (std::size_t k = j; k <= n; ++k) a[i][k] -= f * a[j][k];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

// ---------------------------------------------------------------------------
// Vectors

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, abs(x));
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = content(v);
  if (g <= 1) return v;
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

RationalVector to_rational(const LatticeVector& v) {
  return RationalVector(v.begin(), v.end());
}

bool is_integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& q) { return denominator(q) == 1; });
}

LatticeVector to_integer(const RationalVector& v) {
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    assert(denominator(v[i]) == 1);
    out[i] = numerator(v[i]);
  }
  return out;
}

Integer common_denominator(const RationalVector& v) {
  Integer d = 1;
  for (const Rational& q : v) d = lcm(d, Integer(denominator(q)));
  return d;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum size mismatch");
  LatticeVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

LatticeVector subtract(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference size mismatch");
  LatticeVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
  return s;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum size mismatch");
  RationalVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

Integer floor_of(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return Integer(numerator(x)).str();
  return Integer(numerator(x)).str() + "/" + Integer(denominator(x)).str();
}

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::Schema, "empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw Error(ErrorCode::Schema, "malformed integer literal '" + text + "'");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::Schema, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string format_vector(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string format_vector(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

}  // namespace tropmirror
