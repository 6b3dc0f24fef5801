#pragma once

#include <cstddef>

#include "gs/series.hpp"

namespace gs {

namespace detail {

// Splits a = lambda + t with lambda the coefficient of the unit index and
// val(t) >= 1. Rejects order-0 mass on any other neutral.
template <GradedCategory C, CoefficientRing R>
std::pair<typename R::value_type, Series<C, R>> split_constant(const Series<C, R>& a) {
  const auto unit = a.category().unit();
  Series<C, R> tail(a.category(), a.ring(), a.truncation());
  for (const auto& [i, c] : a.terms()) {
    if (i == unit) continue;
    if (a.category().ord(i) == 0) {
      throw DomainError("order-0 part is not carried by the unit index");
    }
    tail.insert(i, c);
  }
  return {a.constant_term(), std::move(tail)};
}

} // namespace detail

// A series is a unit iff its constant term is a unit of the coefficient ring.
template <GradedCategory C, CoefficientRing R>
bool is_unit(const Series<C, R>& a) {
  try {
    auto [lambda, tail] = detail::split_constant(a);
    (void)a.ring().try_invert(lambda);
    return true;
  } catch (const NotAUnit&) {
    return false;
  } catch (const DomainError&) {
    return false;
  }
}

template <GradedCategory C, CoefficientRing R>
Series<C, R> power(const Series<C, R>& a, std::size_t k) {
  auto r = Series<C, R>::one(a.category(), a.ring(), a.truncation());
  for (std::size_t i = 0; i < k; ++i) r *= a;
  return r;
}

// (lambda + t)^-1 = (sum_k (-lambda^-1 t)^k) lambda^-1, which is finite
// because val(t) >= 1. For commuting lambda this is lambda^-1 sum_k (-1)^k
// (lambda^-1 t)^k. Throws NotAUnit when lambda is not invertible.
template <GradedCategory C, CoefficientRing R>
Series<C, R> invert(const Series<C, R>& a) {
  auto [lambda, tail] = detail::split_constant(a);
  const auto lambda_inv = a.ring().try_invert(lambda);
  const auto s = tail.scaled_left(lambda_inv);
  const auto one = Series<C, R>::one(a.category(), a.ring(), a.truncation());
  // Horner: r <- 1 - s r, N times.
  auto r = one;
  for (std::size_t k = 0; k < a.truncation(); ++k) r = one - s * r;
  return r.scaled_right(lambda_inv);
}

// exp(lambda + u) = exp(lambda) sum_{k<=N} u^k / k!. Exact rings only accept
// lambda = 0.
template <GradedCategory C, CoefficientRing R>
Series<C, R> exp(const Series<C, R>& a) {
  auto [lambda, u] = detail::split_constant(a);
  const auto scale0 = a.ring().exp_constant(lambda);
  const auto one = Series<C, R>::one(a.category(), a.ring(), a.truncation());
  auto r = one;
  for (std::size_t k = a.truncation(); k >= 1; --k) {
    r = one + scale(Rational(1, static_cast<long>(k)), u * r);
  }
  return r.scaled_left(scale0);
}

// log(lambda + u) = log(lambda) + sum_{k<=N} (-1)^{k+1}/k (u/lambda)^k.
// Requires lambda > 0; exact rings only accept lambda = 1.
template <GradedCategory C, CoefficientRing R>
Series<C, R> log(const Series<C, R>& a) {
  auto [lambda, u] = detail::split_constant(a);
  const auto log0 = a.ring().log_constant(lambda);
  const auto w = u.scaled_left(a.ring().try_invert(lambda));
  const std::size_t n = a.truncation();
  auto coeff = [](std::size_t k) { return Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k)); };
  auto r = Series<C, R>::constant(a.category(), a.ring(), n, a.ring().from_rational(coeff(std::max<std::size_t>(n, 1))));
  for (std::size_t k = n; k-- > 1;) {
    r = Series<C, R>::constant(a.category(), a.ring(), n, a.ring().from_rational(coeff(k))) + w * r;
  }
  return Series<C, R>::constant(a.category(), a.ring(), n, log0) + w * r;
}

// log(exp(u) exp(v)); both arguments need valuation >= 1.
template <GradedCategory C, CoefficientRing R>
Series<C, R> bch(const Series<C, R>& u, const Series<C, R>& v) {
  u.require_compatible(v);
  if (valuation(u) < Valuation(1) || valuation(v) < Valuation(1)) {
    throw DomainError("BCH needs arguments of valuation >= 1");
  }
  return log(exp(u) * exp(v));
}

// d(a, b) = 2^-val(a - b), with d(a, a) = 0.
template <GradedCategory C, CoefficientRing R>
Rational ultrametric_dist(const Series<C, R>& a, const Series<C, R>& b) {
  const auto v = valuation(a - b);
  if (v.is_infinite()) return Rational(0);
  return pow2_neg(v.value());
}

} // namespace gs
