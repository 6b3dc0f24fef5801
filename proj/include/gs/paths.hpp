#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "gs/calculus.hpp"
#include "gs/series.hpp"

namespace gs {

// t -> sum_j c_j t^j with series coefficients. The time variable is formal, so
// differentiation and integration are exact. Trailing zero coefficients are
// trimmed; the zero path has no coefficients.
template <GradedCategory C, CoefficientRing R>
class PolyPath {
public:
  using series_type = Series<C, R>;

  // The zero path with the structure (category, ring, truncation) of `shape`.
  explicit PolyPath(const series_type& shape)
      : zero_(shape.category(), shape.ring(), shape.truncation()) {}

  PolyPath(const series_type& shape, std::vector<series_type> coefficients) : PolyPath(shape) {
    for (const auto& c : coefficients) zero_.require_compatible(c);
    coeffs_ = std::move(coefficients);
    trim();
  }

  static PolyPath constant(const series_type& c) { return PolyPath(c, {c}); }

  const series_type& zero_series() const { return zero_; }
  const std::vector<series_type>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree in t; 0 for the zero path.
  std::size_t t_degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  const series_type& coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : zero_; }

  series_type evaluate(const Rational& t) const {
    // Horner in t.
    series_type r = zero_;
    for (std::size_t j = coeffs_.size(); j-- > 0;) r = scale(t, r) + coeffs_[j];
    return r;
  }

  friend PolyPath operator+(const PolyPath& a, const PolyPath& b) {
    a.zero_.require_compatible(b.zero_);
    std::vector<series_type> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coefficient(j) + b.coefficient(j);
    return PolyPath(a.zero_, std::move(out));
  }
  friend PolyPath operator-(const PolyPath& a, const PolyPath& b) {
    a.zero_.require_compatible(b.zero_);
    std::vector<series_type> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coefficient(j) - b.coefficient(j);
    return PolyPath(a.zero_, std::move(out));
  }
  friend PolyPath operator*(const PolyPath& a, const PolyPath& b) {
    a.zero_.require_compatible(b.zero_);
    if (a.is_zero() || b.is_zero()) return PolyPath(a.zero_);
    std::vector<series_type> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return PolyPath(a.zero_, std::move(out));
  }
  friend bool operator==(const PolyPath& a, const PolyPath& b) {
    if (!a.zero_.compatible(b.zero_)) return false;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t j = 0; j < n; ++j)
      if (!(a.coefficient(j) == b.coefficient(j))) return false;
    return true;
  }

  // Applies f to every coefficient.
  template <class F>
  PolyPath map(F f) const {
    std::vector<series_type> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return PolyPath(zero_, std::move(out));
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  series_type zero_;
  std::vector<series_type> coeffs_;
};

template <GradedCategory C, CoefficientRing R>
PolyPath<C, R> differentiate(const PolyPath<C, R>& p) {
  std::vector<Series<C, R>> out;
  for (std::size_t j = 1; j < p.coefficients().size(); ++j) {
    out.push_back(scale(Rational(static_cast<long>(j)), p.coefficients()[j]));
  }
  return PolyPath<C, R>(p.zero_series(), std::move(out));
}

// The antiderivative vanishing at t = 0.
template <GradedCategory C, CoefficientRing R>
PolyPath<C, R> integrate_from_zero(const PolyPath<C, R>& p) {
  std::vector<Series<C, R>> out{p.zero_series()};
  for (std::size_t j = 0; j < p.coefficients().size(); ++j) {
    out.push_back(scale(Rational(1, static_cast<long>(j + 1)), p.coefficients()[j]));
  }
  return PolyPath<C, R>(p.zero_series(), std::move(out));
}

// t -> p(t + s).
template <GradedCategory C, CoefficientRing R>
PolyPath<C, R> shift(const PolyPath<C, R>& p, const Rational& s) {
  const auto& c = p.coefficients();
  std::vector<Series<C, R>> out(c.size(), p.zero_series());
  // (t + s)^j = sum_i binom(j, i) s^(j-i) t^i
  for (std::size_t j = 0; j < c.size(); ++j) {
    Rational s_pow(1);
    for (std::size_t i = j + 1; i-- > 0;) {
      out[i] += scale(binomial(static_cast<unsigned>(j), static_cast<unsigned>(i)) * s_pow, c[j]);
      s_pow *= s;
    }
  }
  return PolyPath<C, R>(p.zero_series(), std::move(out));
}

// Keeps the series-order-n part of every coefficient.
template <GradedCategory C, CoefficientRing R>
PolyPath<C, R> component(const PolyPath<C, R>& p, std::size_t n) {
  return p.map([n](const Series<C, R>& s) { return component(s, n); });
}

template <GradedCategory C, CoefficientRing R>
Valuation valuation(const PolyPath<C, R>& p) {
  Valuation v = Valuation::infinity();
  for (const auto& c : p.coefficients()) v = std::min(v, valuation(c));
  return v;
}

// Inverse of a path whose order-0 part is a constant unit (independent of t).
template <GradedCategory C, CoefficientRing R>
PolyPath<C, R> invert(const PolyPath<C, R>& g) {
  using S = Series<C, R>;
  const auto& zero = g.zero_series();
  const S g0 = g.coefficient(0);
  auto [lambda, tail0] = detail::split_constant(g0);
  for (std::size_t j = 1; j < g.coefficients().size(); ++j) {
    if (!component(g.coefficients()[j], 0).is_zero()) {
      throw DomainError("path inverse needs a time-independent constant term");
    }
  }
  const auto lambda_inv = zero.ring().try_invert(lambda);
  const auto one = PolyPath<C, R>::constant(S::one(zero.category(), zero.ring(), zero.truncation()));
  const auto s = g.map([&](const S& c) { return c.scaled_left(lambda_inv); }) - one;
  auto r = one;
  for (std::size_t k = 0; k < zero.truncation(); ++k) r = one - s * r;
  return r.map([&](const S& c) { return c.scaled_right(lambda_inv); });
}

namespace detail {

template <GradedCategory C, CoefficientRing R>
void require_positive_valuation(const PolyPath<C, R>& v) {
  for (const auto& c : v.coefficients()) {
    if (valuation(c) < Valuation(1)) {
      throw ValuationError("logarithmic equation needs val(v) >= 1 at every time coefficient");
    }
  }
}

} // namespace detail

// Solves dg/dt = g v with g(0) = 1, i.e. g^-1 dg = v, degree by degree in the
// series grading: since val(v) >= 1, [g v]_k only involves g_0 .. g_{k-1}, and
// g_k = integral_0^t [g v]_k.
template <GradedCategory C, CoefficientRing R>
PolyPath<C, R> solve_log_ode(const PolyPath<C, R>& v) {
  using S = Series<C, R>;
  detail::require_positive_valuation(v);
  const auto& zero = v.zero_series();
  auto g = PolyPath<C, R>::constant(S::one(zero.category(), zero.ring(), zero.truncation()));
  for (std::size_t k = 1; k <= zero.truncation(); ++k) {
    g = g + integrate_from_zero(component(g * v, k));
  }
  return g;
}

// Same equation by Picard iteration g <- 1 + integral_0^t g v. Each round fixes
// one more series order, so the iteration is stationary after N + 1 rounds.
template <GradedCategory C, CoefficientRing R>
PolyPath<C, R> solve_log_ode_picard(const PolyPath<C, R>& v) {
  using S = Series<C, R>;
  detail::require_positive_valuation(v);
  const auto& zero = v.zero_series();
  const auto one = PolyPath<C, R>::constant(S::one(zero.category(), zero.ring(), zero.truncation()));
  auto g = one;
  for (std::size_t round = 0; round <= zero.truncation() + 1; ++round) {
    auto next = one + integrate_from_zero(g * v);
    if (next == g) return g;
    g = std::move(next);
  }
  throw DomainError("Picard iteration failed to become stationary");
}

} // namespace gs
