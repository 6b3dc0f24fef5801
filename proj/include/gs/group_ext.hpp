#pragma once

#include <cstddef>
#include <utility>

#include "gs/calculus.hpp"
#include "gs/series.hpp"

namespace gs {

enum class Sign { plus, minus };

inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }

// The connected component of a unit: the sign of its constant term. Only
// defined over ordered scalar rings.
template <GradedCategory C, CoefficientRing R>
Sign component_sign(const Series<C, R>& u) {
  if constexpr (OrderedRing<R>) {
    auto [lambda, tail] = detail::split_constant(u);
    const int s = u.ring().sign(lambda);
    if (s == 0) throw NotAUnit("constant term is zero");
    return s > 0 ? Sign::plus : Sign::minus;
  } else {
    throw DomainError("component sign needs an ordered scalar ring, not " + u.ring().name());
  }
}

// A series with invertible constant term.
template <GradedCategory C, CoefficientRing R>
class UnitElement {
public:
  explicit UnitElement(Series<C, R> s) : series_(std::move(s)) {
    if (!is_unit(series_)) throw NotAUnit("constant term is not invertible");
  }

  const Series<C, R>& series() const { return series_; }
  UnitElement inverse() const { return UnitElement(invert(series_), Trusted{}); }

  friend UnitElement operator*(const UnitElement& a, const UnitElement& b) {
    return UnitElement(a.series_ * b.series_, Trusted{});
  }
  friend bool operator==(const UnitElement& a, const UnitElement& b) { return a.series_ == b.series_; }

private:
  struct Trusted {};
  UnitElement(Series<C, R> s, Trusted) : series_(std::move(s)) {}

  Series<C, R> series_;
};

// g0 + tail with g0 a unit of the coefficient algebra and val(tail) >= 1:
// the extension of the units of A by the group 1 + (positive-order series).
// With C = NatCategory the tail is sum_{k>=1} h^k a_k.
template <GradedCategory C, CoefficientRing R>
class ExtendedElement {
public:
  using coeff_type = typename R::value_type;

  ExtendedElement(coeff_type g0, Series<C, R> tail) : g0_(std::move(g0)), tail_(std::move(tail)) {
    tail_.ring().validate(g0_);
    (void)tail_.ring().try_invert(g0_);
    if (valuation(tail_) < Valuation(1)) {
      throw ValuationError("extension tail must have valuation >= 1");
    }
  }

  static ExtendedElement identity(C cat, R ring, std::size_t truncation) {
    auto one = ring.one();
    return ExtendedElement(std::move(one), Series<C, R>(std::move(cat), std::move(ring), truncation));
  }

  // Splits a series with invertible constant term into (g0, tail).
  static ExtendedElement from_series(const Series<C, R>& s) {
    auto [g0, tail] = detail::split_constant(s);
    return ExtendedElement(std::move(g0), std::move(tail));
  }

  const coeff_type& g0() const { return g0_; }
  const Series<C, R>& tail() const { return tail_; }

  Series<C, R> to_series() const {
    auto s = Series<C, R>::constant(tail_.category(), tail_.ring(), tail_.truncation(), g0_);
    return s += tail_;
  }

  // Member of the kernel of the projection: g0 == 1.
  bool in_kernel() const { return tail_.ring().equal(g0_, tail_.ring().one()); }

  friend bool operator==(const ExtendedElement& a, const ExtendedElement& b) {
    return a.tail_.ring().equal(a.g0_, b.g0_) && a.tail_ == b.tail_;
  }

private:
  coeff_type g0_;
  Series<C, R> tail_;
};

template <GradedCategory C, CoefficientRing R>
ExtendedElement<C, R> ext_mul(const ExtendedElement<C, R>& p, const ExtendedElement<C, R>& q) {
  return ExtendedElement<C, R>::from_series(p.to_series() * q.to_series());
}

template <GradedCategory C, CoefficientRing R>
ExtendedElement<C, R> ext_inv(const ExtendedElement<C, R>& p) {
  return ExtendedElement<C, R>::from_series(invert(p.to_series()));
}

// The projection onto the units of A.
template <GradedCategory C, CoefficientRing R>
typename R::value_type projection(const ExtendedElement<C, R>& p) {
  return p.g0();
}

} // namespace gs
