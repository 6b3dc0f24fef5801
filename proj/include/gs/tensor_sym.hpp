#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "gs/calculus.hpp"
#include "gs/graded_index.hpp"
#include "gs/series.hpp"

namespace gs {

template <CoefficientRing R>
using TensorSeries = Series<WordCategory, R>;

// Truncated tensor power-series algebra over a d-dimensional space with basis
// letters 0..d-1.
template <CoefficientRing R>
class TensorAlgebra {
public:
  TensorAlgebra(std::size_t letters, std::size_t truncation, R ring = {})
      : category_(letters), ring_(std::move(ring)), truncation_(truncation) {}

  const WordCategory& category() const { return category_; }
  const R& ring() const { return ring_; }
  std::size_t letters() const { return category_.alphabet_size(); }
  std::size_t truncation() const { return truncation_; }

  TensorSeries<R> zero() const { return TensorSeries<R>(category_, ring_, truncation_); }
  TensorSeries<R> one() const { return TensorSeries<R>::one(category_, ring_, truncation_); }
  TensorSeries<R> constant(const typename R::value_type& c) const {
    return TensorSeries<R>::constant(category_, ring_, truncation_, c);
  }
  TensorSeries<R> letter(Letter l) const { return word(Word{l}); }
  TensorSeries<R> word(const Word& w, const typename R::value_type& c) const {
    return TensorSeries<R>::monomial(category_, ring_, truncation_, w, c);
  }
  TensorSeries<R> word(const Word& w) const { return word(w, ring_.one()); }

private:
  WordCategory category_;
  R ring_;
  std::size_t truncation_;
};

// Distinct rearrangements of a word, shared per letter multiset. Thread-safe.
class OrbitCache {
public:
  // All distinct permutations of w's letters, in lexicographic order.
  std::shared_ptr<const std::vector<Word>> orbit(const Word& w);

  static OrbitCache& global();

private:
  std::mutex mutex_;
  std::map<Word, std::shared_ptr<const std::vector<Word>>> cache_;
};

// sym_n(w) = (1/n!) sum over sigma of w permuted by sigma. Each distinct
// rearrangement occurs (n! / |orbit|) times in that sum, so the result puts
// weight 1/|orbit| on every rearrangement.
template <CoefficientRing R>
TensorSeries<R> symmetrize(const TensorSeries<R>& a) {
  TensorSeries<R> r(a.category(), a.ring(), a.truncation());
  for (const auto& [w, c] : a.terms()) {
    if (w.size() <= 1) {
      r.insert(w, c);
      continue;
    }
    const auto orbit = OrbitCache::global().orbit(w);
    const auto weighted = a.ring().mul(a.ring().from_rational(Rational(1, static_cast<long>(orbit->size()))), c);
    for (const auto& v : *orbit) r.insert(v, weighted);
  }
  return r;
}

// An element of the symmetric algebra, represented inside the tensor algebra
// as a series fixed by every sym_n.
template <CoefficientRing R>
class SymmetricSeries {
public:
  // Throws DomainError unless symmetrize(a) == a.
  explicit SymmetricSeries(TensorSeries<R> a) : series_(std::move(a)) {
    if (!(symmetrize(series_) == series_)) {
      throw DomainError("series is not symmetric");
    }
  }

  // sym(a), the projection onto symmetric tensors.
  static SymmetricSeries project(const TensorSeries<R>& a) { return SymmetricSeries(symmetrize(a), Trusted{}); }

  const TensorSeries<R>& series() const { return series_; }

  friend SymmetricSeries operator+(const SymmetricSeries& a, const SymmetricSeries& b) {
    return {a.series_ + b.series_, Trusted{}};
  }
  friend SymmetricSeries operator-(const SymmetricSeries& a, const SymmetricSeries& b) {
    return {a.series_ - b.series_, Trusted{}};
  }
  SymmetricSeries scaled(const typename R::value_type& c) const { return {series_.scaled_left(c), Trusted{}}; }

  friend bool operator==(const SymmetricSeries& a, const SymmetricSeries& b) { return a.series_ == b.series_; }

private:
  struct Trusted {};
  SymmetricSeries(TensorSeries<R> a, Trusted) : series_(std::move(a)) {}

  TensorSeries<R> series_;
};

template <CoefficientRing R>
SymmetricSeries<R> sym(const TensorSeries<R>& a) {
  return SymmetricSeries<R>::project(a);
}

// The inclusion of symmetric series back into the tensor algebra.
template <CoefficientRing R>
TensorSeries<R> section(const SymmetricSeries<R>& a) {
  return a.series();
}

// a (.) b = sym(a (x) b).
template <CoefficientRing R>
SymmetricSeries<R> odot(const SymmetricSeries<R>& a, const SymmetricSeries<R>& b) {
  return sym(a.series() * b.series());
}

template <CoefficientRing R>
SymmetricSeries<R> sym_exp(const SymmetricSeries<R>& a) {
  auto [lambda, u_raw] = detail::split_constant(a.series());
  const auto& ring = a.series().ring();
  const auto scale0 = ring.exp_constant(lambda);
  const SymmetricSeries<R> u(std::move(u_raw));
  const auto one = sym(TensorSeries<R>::one(a.series().category(), ring, a.series().truncation()));
  auto r = one;
  for (std::size_t k = a.series().truncation(); k >= 1; --k) {
    r = one + odot(u, r).scaled(ring.from_rational(Rational(1, static_cast<long>(k))));
  }
  return r.scaled(scale0);
}

template <CoefficientRing R>
SymmetricSeries<R> sym_log(const SymmetricSeries<R>& a) {
  auto [lambda, u_raw] = detail::split_constant(a.series());
  const auto& ring = a.series().ring();
  const auto& cat = a.series().category();
  const std::size_t n = a.series().truncation();
  const auto log0 = ring.log_constant(lambda);
  const SymmetricSeries<R> w(u_raw.scaled_left(ring.try_invert(lambda)));
  auto constant = [&](const typename R::value_type& c) { return sym(TensorSeries<R>::constant(cat, ring, n, c)); };
  auto coeff = [&](std::size_t k) {
    return ring.from_rational(Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k)));
  };
  auto r = constant(coeff(std::max<std::size_t>(n, 1)));
  for (std::size_t k = n; k-- > 1;) r = constant(coeff(k)) + odot(w, r);
  return constant(log0) + odot(w, r);
}

// Membership in the algebra kernel of sym.
template <CoefficientRing R>
bool kernel_member(const TensorSeries<R>& a) {
  return symmetrize(a).is_zero();
}

// Membership in the unit-group kernel K = {u : sym(u) = 1}.
template <CoefficientRing R>
bool unit_kernel_member(const TensorSeries<R>& u) {
  return symmetrize(u) == TensorSeries<R>::one(u.category(), u.ring(), u.truncation());
}

} // namespace gs
