#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gs/errors.hpp"
#include "gs/graded_index.hpp"
#include "gs/parallel.hpp"
#include "gs/rings.hpp"

namespace gs {

// Least order carrying a nonzero coefficient; +infinity for the zero series.
class Valuation {
public:
  Valuation() = default; // +infinity
  explicit Valuation(std::size_t v) : value_(v) {}

  static Valuation infinity() { return {}; }

  bool is_infinite() const { return !value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw DomainError("valuation of the zero series is infinite");
    return *value_;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }

private:
  std::optional<std::size_t> value_;
};

// Largest order carrying a nonzero coefficient; -infinity for the zero series.
class Degree {
public:
  Degree() = default; // -infinity
  explicit Degree(std::size_t v) : value_(v) {}

  bool is_minus_infinity() const { return !value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw DomainError("degree of the zero series is -infinity");
    return *value_;
  }

  friend bool operator==(const Degree&, const Degree&) = default;

private:
  std::optional<std::size_t> value_;
};

// A formal series sum_i a_i truncated at order N over a graded index
// category, with coefficients in a ring. Only nonzero coefficients are
// stored, in the category's canonical index order.
template <GradedCategory C, CoefficientRing R>
class Series {
public:
  using category_type = C;
  using ring_type = R;
  using index_type = typename C::index_type;
  using coeff_type = typename R::value_type;
  using term_map = std::map<index_type, coeff_type>;

  Series(C category, R ring, std::size_t truncation)
      : category_(std::move(category)), ring_(std::move(ring)), truncation_(truncation) {}

  static Series constant(C category, R ring, std::size_t truncation, const coeff_type& c) {
    Series s(std::move(category), std::move(ring), truncation);
    s.insert(s.category_.unit(), c);
    return s;
  }
  static Series one(C category, R ring, std::size_t truncation) {
    Series s(std::move(category), std::move(ring), truncation);
    s.insert(s.category_.unit(), s.ring_.one());
    return s;
  }
  static Series monomial(C category, R ring, std::size_t truncation, const index_type& i, const coeff_type& c) {
    Series s(std::move(category), std::move(ring), truncation);
    s.insert(i, c);
    return s;
  }

  const C& category() const { return category_; }
  const R& ring() const { return ring_; }
  std::size_t truncation() const { return truncation_; }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  coeff_type coefficient(const index_type& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? ring_.zero() : it->second;
  }
  coeff_type constant_term() const { return coefficient(category_.unit()); }

  // Accumulates c at index i. Terms above the truncation order are dropped
  // (projection onto the truncated quotient); indices outside the category
  // are rejected.
  Series& insert(const index_type& i, const coeff_type& c) {
    ring_.validate(c);
    if (!category_.contains(i)) {
      throw StructuralError("index does not belong to the " + category_.name() + " category");
    }
    if (category_.ord(i) > truncation_) return *this;
    accumulate(terms_, i, c);
    return *this;
  }

  // Same series viewed at another truncation order: lowering drops terms,
  // raising keeps the stored terms.
  Series with_truncation(std::size_t n) const {
    Series s(category_, ring_, n);
    for (const auto& [i, c] : terms_) {
      if (category_.ord(i) <= n) s.terms_.emplace(i, c);
    }
    return s;
  }

  bool compatible(const Series& o) const {
    return truncation_ == o.truncation_ && category_ == o.category_ && ring_ == o.ring_;
  }
  void require_compatible(const Series& o) const {
    if (!compatible(o)) {
      throw StructuralError("series differ in category, ring or truncation");
    }
  }

  Series& operator+=(const Series& o) {
    require_compatible(o);
    for (const auto& [i, c] : o.terms_) accumulate(terms_, i, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_compatible(o);
    for (const auto& [i, c] : o.terms_) accumulate(terms_, i, ring_.neg(c));
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a) {
    Series r(a.category_, a.ring_, a.truncation_);
    for (const auto& [i, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), i, a.ring_.neg(c));
    return r;
  }

  // lambda * a (coefficients multiplied on the left).
  Series scaled_left(const coeff_type& lambda) const {
    ring_.validate(lambda);
    Series r(category_, ring_, truncation_);
    for (const auto& [i, c] : terms_) accumulate(r.terms_, i, ring_.mul(lambda, c));
    return r;
  }
  // a * lambda (coefficients multiplied on the right).
  Series scaled_right(const coeff_type& lambda) const {
    ring_.validate(lambda);
    Series r(category_, ring_, truncation_);
    for (const auto& [i, c] : terms_) accumulate(r.terms_, i, ring_.mul(c, lambda));
    return r;
  }

  // (ab)_k = sum over i * j = k of a_i b_j; incomposable pairs contribute
  // nothing. Work is split by output order, each order accumulated by one
  // task in canonical (i, j) order, so the result is independent of the
  // worker count.
  friend Series operator*(const Series& a, const Series& b) {
    a.require_compatible(b);
    const std::size_t n_max = a.truncation_;
    const C& cat = a.category_;
    const R& ring = a.ring_;

    std::vector<std::vector<const typename term_map::value_type*>> b_by_ord(n_max + 1);
    for (const auto& t : b.terms_) b_by_ord[cat.ord(t.first)].push_back(&t);

    std::vector<term_map> by_order(n_max + 1);
    parallel_for(n_max + 1, [&](std::size_t n) {
      term_map& acc = by_order[n];
      for (const auto& [i, ai] : a.terms_) {
        const std::size_t oi = cat.ord(i);
        if (oi > n) break;
        for (const auto* bj : b_by_ord[n - oi]) {
          auto k = cat.compose(i, bj->first);
          if (!k) continue;
          accumulate_with(ring, acc, *k, ring.mul(ai, bj->second));
        }
      }
    });

    Series r(cat, ring, n_max);
    for (auto& part : by_order) {
      for (auto& t : part) {
        if (cat.ord(t.first) > n_max) continue;
        r.accumulate(r.terms_, t.first, t.second);
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  // Coefficientwise equality through the ring's equality (exact or
  // tolerance-based). Structurally different series are never equal.
  friend bool operator==(const Series& a, const Series& b) {
    if (!a.compatible(b)) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    const auto zero = a.ring_.zero();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        if (!a.ring_.equal(ia->second, zero)) return false;
        ++ia;
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        if (!a.ring_.equal(zero, ib->second)) return false;
        ++ib;
      } else {
        if (!a.ring_.equal(ia->second, ib->second)) return false;
        ++ia;
        ++ib;
      }
    }
    return true;
  }

private:
  void accumulate(term_map& m, const index_type& i, const coeff_type& c) const { accumulate_with(ring_, m, i, c); }

  static void accumulate_with(const R& ring, term_map& m, const index_type& i, const coeff_type& c) {
    if (ring.is_zero(c)) return;
    auto [it, inserted] = m.try_emplace(i, c);
    if (!inserted) {
      it->second = ring.add(it->second, c);
      if (ring.is_zero(it->second)) m.erase(it);
    }
  }

  C category_;
  R ring_;
  std::size_t truncation_ = 0;
  term_map terms_;
};

template <GradedCategory C, CoefficientRing R>
Series<C, R> scalar_mul(const typename R::value_type& lambda, const Series<C, R>& a) {
  return a.scaled_left(lambda);
}

// Series with rational scalar q (embedded through the ring).
template <GradedCategory C, CoefficientRing R>
Series<C, R> scale(const Rational& q, const Series<C, R>& a) {
  return a.scaled_left(a.ring().from_rational(q));
}

// [a]_n: the terms of order exactly n.
template <GradedCategory C, CoefficientRing R>
Series<C, R> component(const Series<C, R>& a, std::size_t n) {
  if (n > a.truncation()) {
    throw StructuralError("component order exceeds the truncation");
  }
  Series<C, R> r(a.category(), a.ring(), a.truncation());
  for (const auto& [i, c] : a.terms()) {
    if (a.category().ord(i) == n) r.insert(i, c);
  }
  return r;
}

template <GradedCategory C, CoefficientRing R>
Valuation valuation(const Series<C, R>& a) {
  if (a.is_zero()) return Valuation::infinity();
  // Canonical order puts the lowest order first.
  return Valuation(a.category().ord(a.terms().begin()->first));
}

template <GradedCategory C, CoefficientRing R>
Degree degree(const Series<C, R>& a) {
  if (a.is_zero()) return Degree{};
  return Degree(a.category().ord(a.terms().rbegin()->first));
}

// Literal convolution through the category's decompositions: for every index
// k up to the truncation, (ab)_k = sum over decompositions(k) of a_i b_j.
// Enumerates all indices, so it is only meant for small categories and for
// cross-checking operator*.
template <GradedCategory C, CoefficientRing R>
Series<C, R> mul_by_decompositions(const Series<C, R>& a, const Series<C, R>& b) {
  a.require_compatible(b);
  const auto& cat = a.category();
  const auto& ring = a.ring();
  Series<C, R> r(cat, ring, a.truncation());
  for (const auto& k : cat.elements_up_to(a.truncation())) {
    auto sum = ring.zero();
    for (const auto& [i, j] : cat.decompositions(k, a.truncation())) {
      sum = ring.add(sum, ring.mul(a.coefficient(i), b.coefficient(j)));
    }
    r.insert(k, sum);
  }
  return r;
}

// Total number of (k, i, j) factorizations up to order n; the work bound of a
// dense product.
template <GradedCategory C>
std::size_t decomposition_count(const C& cat, std::size_t n) {
  std::size_t total = 0;
  for (const auto& k : cat.elements_up_to(n)) total += cat.decompositions(k, n).size();
  return total;
}

} // namespace gs
