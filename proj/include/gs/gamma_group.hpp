#pragma once

#include <cstddef>
#include <memory>
#include <utility>

#include "gs/calculus.hpp"
#include "gs/cobordism.hpp"
#include "gs/paths.hpp"
#include "gs/series.hpp"

namespace gs {

template <CoefficientRing R>
using GammaSeries = Series<GammaCategory, R>;

// The group 1 + (series over a validated family without its neutral), with
// coefficients in R, truncated at a length no larger than the family's bound.
template <CoefficientRing R>
class GammaSeriesGroup {
public:
  GammaSeriesGroup(std::shared_ptr<const GammaFamily> family, R ring, std::size_t truncation)
      : category_(std::move(family)), ring_(std::move(ring)), truncation_(truncation) {
    if (truncation_ > category_.family().length_bound()) {
      throw StructuralError("truncation exceeds the family's certified length bound");
    }
  }

  const GammaCategory& category() const { return category_; }
  const R& ring() const { return ring_; }
  std::size_t truncation() const { return truncation_; }

  GammaSeries<R> zero() const { return GammaSeries<R>(category_, ring_, truncation_); }
  GammaSeries<R> identity() const { return GammaSeries<R>::one(category_, ring_, truncation_); }
  GammaSeries<R> monomial(const CobordismIndex& i, const typename R::value_type& c) const {
    return GammaSeries<R>::monomial(category_, ring_, truncation_, i, c);
  }

  // Group members have constant term exactly 1.
  bool is_member(const GammaSeries<R>& a) const {
    return a.compatible(identity()) && ring_.equal(a.constant_term(), ring_.one());
  }

  GammaSeries<R> mul(const GammaSeries<R>& a, const GammaSeries<R>& b) const { return require(a) * require(b); }
  GammaSeries<R> inverse(const GammaSeries<R>& a) const { return invert(require(a)); }
  // exp maps the positive-length part onto the group; log is its inverse.
  GammaSeries<R> exp(const GammaSeries<R>& u) const { return gs::exp(u); }
  GammaSeries<R> log(const GammaSeries<R>& a) const { return gs::log(require(a)); }
  PolyPath<GammaCategory, R> solve(const PolyPath<GammaCategory, R>& v) const { return solve_log_ode(v); }

private:
  const GammaSeries<R>& require(const GammaSeries<R>& a) const {
    if (!is_member(a)) throw NotAUnit("series is not in 1 + (positive-length part)");
    return a;
  }

  GammaCategory category_;
  R ring_;
  std::size_t truncation_;
};

} // namespace gs
