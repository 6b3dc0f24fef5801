#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gs/gamma_group.hpp"
#include "gs/tensor_sym.hpp"

namespace gs::testing {

// Seed from GS_SEED when set, otherwise a fixed default.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("GS_SEED")) return std::stoull(s);
  return 20240601;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(seed());
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Small rationals: numerator in [-5, 5], denominator in [1, 4].
inline Rational random_rational() { return Rational(uniform(-5, 5), uniform(1, 4)); }

inline Rational random_nonzero_rational() {
  for (;;) {
    Rational q = random_rational();
    if (!q.is_zero()) return q;
  }
}

// Random sparse series over d letters: each word of order in [min_ord,
// max_ord] is present with probability `density`.
inline TensorSeries<RationalRing> random_series(const TensorAlgebra<RationalRing>& alg, std::size_t min_ord,
                                                std::size_t max_ord, double density = 0.4) {
  auto s = alg.zero();
  std::bernoulli_distribution keep(density);
  for (const auto& w : alg.category().elements_up_to(std::min(max_ord, alg.truncation()))) {
    if (w.size() < min_ord) continue;
    if (keep(rng())) s.insert(w, random_rational());
  }
  return s;
}

inline TensorSeries<RationalRing> random_unit(const TensorAlgebra<RationalRing>& alg) {
  return alg.constant(random_nonzero_rational()) + random_series(alg, 1, alg.truncation());
}

inline Matrix<Rational> random_matrix(const RationalMatrixRing& ring) {
  auto m = ring.zero();
  for (auto& e : m.entries) e = Rational(uniform(-3, 3));
  return m;
}

inline Matrix<Rational> random_invertible_matrix(const RationalMatrixRing& ring) {
  for (;;) {
    auto m = random_matrix(ring);
    try {
      (void)ring.try_invert(m);
      return m;
    } catch (const NotAUnit&) {
    }
  }
}

// Rank of a family of series viewed as coefficient vectors over Q.
inline std::size_t rank(const std::vector<TensorSeries<RationalRing>>& rows, const std::vector<Word>& basis) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    auto& row = m.emplace_back();
    for (const auto& w : basis) row.push_back(r.coefficient(w));
  }
  std::size_t rk = 0;
  for (std::size_t col = 0; col < basis.size() && rk < m.size(); ++col) {
    std::size_t piv = rk;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rk]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rk || m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[rk][col];
      for (std::size_t c = 0; c < basis.size(); ++c) m[r][c] -= f * m[rk][c];
    }
    ++rk;
  }
  return rk;
}

// Interval-like generator: alpha = beta = {a}, so it composes with itself.
inline CobordismIndex interval_generator() { return CobordismIndex(Cobordism(1, {"I"}, {"a"}, {"a"}), 1); }

} // namespace gs::testing
