#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gs/errors.hpp"
#include "gs/rational.hpp"

namespace gs {

// A coefficient ring is a small stateless-or-almost value (matrix size,
// float tolerance) that performs arithmetic on its `value_type`. Series hold
// one by value; two series are compatible only when their rings compare
// equal.
template <class R>
concept CoefficientRing =
    std::equality_comparable<R> &&
    requires(const R& r, const typename R::value_type& a, const Rational& q) {
      { r.zero() } -> std::same_as<typename R::value_type>;
      { r.one() } -> std::same_as<typename R::value_type>;
      { r.add(a, a) } -> std::same_as<typename R::value_type>;
      { r.sub(a, a) } -> std::same_as<typename R::value_type>;
      { r.mul(a, a) } -> std::same_as<typename R::value_type>;
      { r.neg(a) } -> std::same_as<typename R::value_type>;
      { r.is_zero(a) } -> std::same_as<bool>;
      { r.equal(a, a) } -> std::same_as<bool>;
      { r.try_invert(a) } -> std::same_as<typename R::value_type>;
      { r.from_rational(q) } -> std::same_as<typename R::value_type>;
      { r.exp_constant(a) } -> std::same_as<typename R::value_type>;
      { r.log_constant(a) } -> std::same_as<typename R::value_type>;
      { r.validate(a) };
      { r.name() } -> std::convertible_to<std::string>;
    };

// Rings with a total order compatible with multiplication: the sign of an
// element is defined.
template <class R>
concept OrderedRing = CoefficientRing<R> && requires(const R& r, const typename R::value_type& a) {
  { r.sign(a) } -> std::same_as<int>;
};

// Exact field Q. exp/log of constants are only available where the result is
// rational (exp(0) = 1, log(1) = 0).
struct RationalRing {
  using value_type = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  bool is_zero(const Rational& a) const { return a.is_zero(); }
  bool equal(const Rational& a, const Rational& b) const { return a == b; }
  Rational try_invert(const Rational& a) const { return a.inverse(); }
  Rational from_rational(const Rational& q) const { return q; }
  int sign(const Rational& a) const { return a.sign(); }
  void validate(const Rational&) const {}

  Rational exp_constant(const Rational& a) const {
    if (!a.is_zero()) {
      throw InexactScalar("exp(" + a.to_string() + ") is not rational");
    }
    return one();
  }
  Rational log_constant(const Rational& a) const {
    if (a.sign() <= 0) {
      throw DomainError("log requires a positive constant term, got " + a.to_string());
    }
    if (!a.is_one()) {
      throw InexactScalar("log(" + a.to_string() + ") is not rational");
    }
    return zero();
  }

  std::string name() const { return "rational"; }
  friend bool operator==(const RationalRing&, const RationalRing&) = default;
};

// IEEE double with absolute-tolerance equality. Non-finite values are
// rejected by validate().
struct Real64Ring {
  using value_type = double;

  double tolerance = 1e-12;

  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double add(double a, double b) const { return a + b; }
  double sub(double a, double b) const { return a - b; }
  double mul(double a, double b) const { return a * b; }
  double neg(double a) const { return -a; }
  bool is_zero(double a) const { return a == 0.0; }
  bool equal(double a, double b) const { return std::abs(a - b) <= tolerance; }
  double try_invert(double a) const {
    if (std::abs(a) <= tolerance) {
      throw NotAUnit("real scalar is numerically zero");
    }
    return 1.0 / a;
  }
  double from_rational(const Rational& q) const { return q.to_double(); }
  int sign(double a) const { return (a > 0) - (a < 0); }
  void validate(double a) const {
    if (!std::isfinite(a)) {
      throw DomainError("non-finite real coefficient");
    }
  }
  double exp_constant(double a) const { return std::exp(a); }
  double log_constant(double a) const {
    if (!(a > 0)) {
      throw DomainError("log requires a positive constant term");
    }
    return std::log(a);
  }

  std::string name() const { return "real64"; }
  friend bool operator==(const Real64Ring&, const Real64Ring&) = default;
};

// Square matrix stored row-major.
template <class T>
struct Matrix {
  std::size_t n = 0;
  std::vector<T> entries;

  const T& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  T& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

// Pivot threshold for deciding that a floating matrix is singular.
inline constexpr double kFloatPivotTolerance = 1e-12;

// The algebra of n x n matrices over an entry ring. Stand-in for an abstract
// (noncommutative) coefficient algebra.
template <CoefficientRing Entry>
struct MatrixRing {
  using entry_type = typename Entry::value_type;
  using value_type = Matrix<entry_type>;

  std::size_t dimension = 1;
  Entry entries{};

  MatrixRing() = default;
  explicit MatrixRing(std::size_t n, Entry e = {}) : dimension(n), entries(std::move(e)) {
    if (n == 0) {
      throw StructuralError("matrix dimension must be positive");
    }
  }

  value_type zero() const { return {dimension, std::vector<entry_type>(dimension * dimension, entries.zero())}; }
  value_type one() const { return scalar(entries.one()); }
  value_type scalar(const entry_type& c) const {
    value_type m = zero();
    for (std::size_t i = 0; i < dimension; ++i) m(i, i) = c;
    return m;
  }
  value_type from_rows(const std::vector<std::vector<entry_type>>& rows) const {
    if (rows.size() != dimension) throw StructuralError("row count does not match matrix dimension");
    value_type m = zero();
    for (std::size_t i = 0; i < dimension; ++i) {
      if (rows[i].size() != dimension) throw StructuralError("column count does not match matrix dimension");
      for (std::size_t j = 0; j < dimension; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  void validate(const value_type& a) const {
    if (a.n != dimension || a.entries.size() != dimension * dimension) {
      throw StructuralError("matrix of dimension " + std::to_string(a.n) + " used in " + name());
    }
    for (const auto& e : a.entries) entries.validate(e);
  }

  value_type add(const value_type& a, const value_type& b) const { return zip(a, b, [&](auto& x, auto& y) { return entries.add(x, y); }); }
  value_type sub(const value_type& a, const value_type& b) const { return zip(a, b, [&](auto& x, auto& y) { return entries.sub(x, y); }); }
  value_type neg(const value_type& a) const {
    validate_shape(a);
    value_type r = a;
    for (auto& e : r.entries) e = entries.neg(e);
    return r;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    validate_shape(a);
    validate_shape(b);
    value_type r = zero();
    for (std::size_t i = 0; i < dimension; ++i) {
      for (std::size_t k = 0; k < dimension; ++k) {
        const auto& aik = a(i, k);
        if (entries.is_zero(aik)) continue;
        for (std::size_t j = 0; j < dimension; ++j) {
          r(i, j) = entries.add(r(i, j), entries.mul(aik, b(k, j)));
        }
      }
    }
    return r;
  }
  bool is_zero(const value_type& a) const {
    for (const auto& e : a.entries)
      if (!entries.is_zero(e)) return false;
    return true;
  }
  bool equal(const value_type& a, const value_type& b) const {
    validate_shape(a);
    validate_shape(b);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      if (!entries.equal(a.entries[i], b.entries[i])) return false;
    return true;
  }
  value_type from_rational(const Rational& q) const { return scalar(entries.from_rational(q)); }

  // Gauss-Jordan elimination. Exact for rational entries; for floating entries
  // a pivot below kFloatPivotTolerance means singular.
  value_type try_invert(const value_type& a) const {
    validate_shape(a);
    const std::size_t n = dimension;
    value_type work = a;
    value_type inv = one();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = n;
      if constexpr (std::is_floating_point_v<entry_type>) {
        double best = kFloatPivotTolerance;
        for (std::size_t r = col; r < n; ++r) {
          if (std::abs(work(r, col)) > best) {
            best = std::abs(work(r, col));
            pivot = r;
          }
        }
      } else {
        for (std::size_t r = col; r < n; ++r) {
          if (!entries.is_zero(work(r, col))) {
            pivot = r;
            break;
          }
        }
      }
      if (pivot == n) {
        throw NotAUnit("singular matrix");
      }
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(work(pivot, j), work(col, j));
          std::swap(inv(pivot, j), inv(col, j));
        }
      }
      const entry_type scale = entries.try_invert(work(col, col));
      for (std::size_t j = 0; j < n; ++j) {
        work(col, j) = entries.mul(scale, work(col, j));
        inv(col, j) = entries.mul(scale, inv(col, j));
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || entries.is_zero(work(r, col))) continue;
        const entry_type f = work(r, col);
        for (std::size_t j = 0; j < n; ++j) {
          work(r, j) = entries.sub(work(r, j), entries.mul(f, work(col, j)));
          inv(r, j) = entries.sub(inv(r, j), entries.mul(f, inv(col, j)));
        }
      }
    }
    return inv;
  }

  // Only the trivially exact cases: exp(0) = I and log(I) = 0.
  value_type exp_constant(const value_type& a) const {
    if (!is_zero(a)) throw InexactScalar("exp of a nonzero matrix constant term is not supported");
    return one();
  }
  value_type log_constant(const value_type& a) const {
    if (!equal(a, one())) throw InexactScalar("log of a non-identity matrix constant term is not supported");
    return zero();
  }

  std::string name() const { return "matrix/" + entries.name() + "/" + std::to_string(dimension); }
  friend bool operator==(const MatrixRing&, const MatrixRing&) = default;

private:
  void validate_shape(const value_type& a) const {
    if (a.n != dimension || a.entries.size() != dimension * dimension) {
      throw StructuralError("matrix of dimension " + std::to_string(a.n) + " used in " + name());
    }
  }
  template <class F>
  value_type zip(const value_type& a, const value_type& b, F f) const {
    validate_shape(a);
    validate_shape(b);
    value_type r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = f(a.entries[i], b.entries[i]);
    return r;
  }
};

using RationalMatrixRing = MatrixRing<RationalRing>;
using RealMatrixRing = MatrixRing<Real64Ring>;

static_assert(OrderedRing<RationalRing>);
static_assert(OrderedRing<Real64Ring>);
static_assert(CoefficientRing<RationalMatrixRing>);
static_assert(!OrderedRing<RationalMatrixRing>);

} // namespace gs
