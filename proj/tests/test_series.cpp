#include <doctest.h>

#include <cmath>

#include "gs/calculus.hpp"
#include "gs/parallel.hpp"
#include "gs/tensor_sym.hpp"
#include "support.hpp"

using namespace gs;
using gs::testing::random_series;
using gs::testing::random_unit;

namespace {

using TS = TensorSeries<RationalRing>;

const Letter X = 0, Y = 1, Z = 2;

// Lie bracket in the tensor algebra.
TS bracket(const TS& a, const TS& b) { return a * b - b * a; }

} // namespace

TEST_CASE("addition and scalar multiplication") {
  TensorAlgebra<RationalRing> alg(2, 4);
  const auto x = alg.letter(X), y = alg.letter(Y);
  const auto a = alg.one() + x;
  CHECK(a + alg.zero() == a);
  CHECK((a + scalar_mul(Rational(-1), a)).is_zero());
  CHECK((a + (alg.one() + y)) == alg.constant(Rational(2)) + x + y);
  CHECK((a + scalar_mul(Rational(-1), a)).terms().empty());
}

TEST_CASE("structural mismatch is rejected") {
  TensorAlgebra<RationalRing> a2(2, 4), a3(3, 4), b2(2, 5);
  CHECK_THROWS_AS(a2.one() + a3.one(), StructuralError);
  CHECK_THROWS_AS(a2.one() * b2.one(), StructuralError);
  CHECK_FALSE(a2.one() == b2.one());
  CHECK_THROWS_AS(a2.word(Word{2}), StructuralError);
}

TEST_CASE("products in the free algebra") {
  TensorAlgebra<RationalRing> alg(2, 6);
  const auto x = alg.letter(X), y = alg.letter(Y);
  CHECK(x * y == alg.word(Word{X, Y}));
  CHECK_FALSE(x * y == y * x);

  // Oracle: the alternating geometric series written down term by term.
  auto geometric = alg.zero();
  for (std::size_t k = 0; k <= 6; ++k) {
    geometric.insert(Word(std::vector<Letter>(k, X)), Rational(k % 2 == 0 ? 1 : -1));
  }
  CHECK((alg.one() + x) * geometric == alg.one());
  CHECK(geometric * (alg.one() + x) == alg.one());
}

TEST_CASE("operator* agrees with the decomposition formula") {
  TensorAlgebra<RationalRing> alg(2, 5);
  for (int k = 0; k < 30; ++k) {
    const auto a = random_series(alg, 0, 5), b = random_series(alg, 0, 5);
    REQUIRE(a * b == mul_by_decompositions(a, b));
  }
}

TEST_CASE("terms above the truncation are dropped") {
  TensorAlgebra<RationalRing> alg(2, 2);
  const auto x = alg.letter(X);
  CHECK((x * x * x).is_zero());
  auto s = alg.zero();
  s.insert(Word{X, X, X}, Rational(1));
  CHECK(s.is_zero());
}

TEST_CASE("components") {
  TensorAlgebra<RationalRing> alg(2, 4);
  const auto x = alg.letter(X), xy = alg.word(Word{X, Y});
  const auto lambda = alg.constant(Rational(3));
  CHECK(component(lambda + x, 0) == lambda);
  CHECK(component(xy + x, 2) == xy);
  CHECK_THROWS_AS(component(x, 5), StructuralError);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_series(alg, 0, 4);
    auto sum = alg.zero();
    for (std::size_t n = 0; n <= 4; ++n) {
      REQUIRE(component(component(a, n), n) == component(a, n));
      sum += component(a, n);
    }
    REQUIRE(sum == a);
  }
}

TEST_CASE("valuation and degree") {
  TensorAlgebra<RationalRing> alg(2, 6);
  const auto x = alg.letter(X), xy = alg.word(Word{X, Y});
  CHECK(valuation(x + xy) == Valuation(1));
  CHECK(degree(x + xy) == Degree(2));
  CHECK(valuation(alg.zero()).is_infinite());
  CHECK(degree(alg.zero()).is_minus_infinity());
  CHECK(Valuation(100) < Valuation::infinity());

  // The free algebra over a field has no zero divisors.
  for (int k = 0; k < 200; ++k) {
    const auto a = random_series(alg, static_cast<std::size_t>(gs::testing::uniform(0, 3)), 6);
    const auto b = random_series(alg, static_cast<std::size_t>(gs::testing::uniform(0, 3)), 6);
    if (a.is_zero() || b.is_zero()) continue;
    const auto va = valuation(a).value(), vb = valuation(b).value();
    REQUIRE(valuation(a + b) >= std::min(valuation(a), valuation(b)));
    if (va + vb <= 6) REQUIRE(valuation(a * b) == Valuation(va + vb));
  }
}

TEST_CASE("inversion") {
  TensorAlgebra<RationalRing> alg(2, 6);
  const auto x = alg.letter(X);
  CHECK(invert(alg.one()) == alg.one());

  // Oracle: sum_k (-1)^k x^k and (1/2) sum_k (-x/2)^k.
  auto inv1 = alg.zero(), inv2 = alg.zero();
  Rational p(1, 2);
  for (std::size_t k = 0; k <= 6; ++k) {
    const Word w(std::vector<Letter>(k, X));
    inv1.insert(w, Rational(k % 2 == 0 ? 1 : -1));
    inv2.insert(w, p);
    p *= Rational(-1, 2);
  }
  CHECK(invert(alg.one() + x) == inv1);
  CHECK(invert(alg.constant(Rational(2)) + x) == inv2);
  CHECK(invert(alg.constant(Rational(2)) + x).coefficient(Word{X}) == Rational(-1, 4));
  CHECK(invert(alg.constant(Rational(2)) + x).coefficient(Word{X, X}) == Rational(1, 8));

  for (int k = 0; k < 200; ++k) {
    const auto u = random_unit(alg);
    const auto v = invert(u);
    REQUIRE(u * v == alg.one());
    REQUIRE(v * u == alg.one());
  }
  CHECK_THROWS_AS(invert(x), NotAUnit);
  CHECK_THROWS_AS(invert(alg.zero()), NotAUnit);
  CHECK_FALSE(is_unit(x + alg.word(Word{X, Y})));
  CHECK(is_unit(alg.constant(Rational(-3)) + x));
}

TEST_CASE("truncation towers refine compatibly") {
  TensorAlgebra<RationalRing> hi(2, 7), lo(2, 4);
  for (int k = 0; k < 20; ++k) {
    const auto u = random_unit(hi);
    REQUIRE(invert(u).with_truncation(4) == invert(u.with_truncation(4)));
    const auto a = random_series(hi, 1, 7);
    REQUIRE(exp(a).with_truncation(4) == exp(a.with_truncation(4)));
  }
  (void)lo;
}

TEST_CASE("exp and log") {
  TensorAlgebra<RationalRing> alg(2, 6);
  const auto x = alg.letter(X), y = alg.letter(Y);
  CHECK(exp(alg.zero()) == alg.one());

  auto expected = alg.zero();
  for (std::size_t k = 0; k <= 6; ++k) expected.insert(Word(std::vector<Letter>(k, X)), factorial(static_cast<unsigned>(k)).inverse());
  CHECK(exp(x) == expected);

  const auto u = x + y * x;
  CHECK(log(exp(u)) == u);
  CHECK(exp(log(alg.one() + u)) == alg.one() + u);

  CHECK_THROWS_AS(exp(alg.constant(Rational(1)) + x), InexactScalar);
  CHECK_THROWS_AS(log(alg.constant(Rational(2)) + x), InexactScalar);
  CHECK_THROWS_AS(log(alg.constant(Rational(-1)) + x), DomainError);
  CHECK_THROWS_AS(log(x), DomainError);

  for (int k = 0; k < 30; ++k) {
    const auto v = random_series(alg, 1, 6);
    REQUIRE(log(exp(v)) == v);
    REQUIRE(exp(log(alg.one() + v)) == alg.one() + v);
  }
}

TEST_CASE("exp and log over doubles accept general constants") {
  TensorAlgebra<Real64Ring> alg(2, 5);
  const auto x = alg.letter(X);
  const auto e = exp(alg.constant(1.0) + x);
  CHECK(std::abs(e.constant_term() - std::exp(1.0)) < 1e-12);
  CHECK(std::abs(e.coefficient(Word{X, X}) - std::exp(1.0) / 2) < 1e-12);
  const auto a = alg.constant(2.5) + x + alg.word(Word{Y, X}, 0.25);
  CHECK(exp(log(a)) == a);
  CHECK_THROWS_AS(log(alg.constant(-2.0) + x), DomainError);
}

TEST_CASE("BCH") {
  TensorAlgebra<RationalRing> alg2(2, 2);
  const auto x = alg2.letter(X), y = alg2.letter(Y);
  // Truncated expansion by hand: exp(x)exp(y) = 1 + w, w = x + y + x²/2 + xy + y²/2,
  // log(1 + w) = w - w²/2 with w² = (x + y)² at order 2.
  const auto w = x + y + scale(Rational(1, 2), x * x) + x * y + scale(Rational(1, 2), y * y);
  const auto oracle = w - scale(Rational(1, 2), (x + y) * (x + y));
  CHECK(oracle == x + y + scale(Rational(1, 2), x * y - y * x));
  CHECK(bch(x, y) == oracle);

  TensorAlgebra<RationalRing> alg(3, 5);
  for (int k = 0; k < 20; ++k) {
    const auto u = random_series(alg, 1, 5);
    REQUIRE(bch(u, alg.zero()) == u);
    REQUIRE(bch(alg.zero(), u) == u);
    REQUIRE(bch(u, -u).is_zero());
    REQUIRE(exp(bch(u, alg.letter(Z))) == exp(u) * exp(alg.letter(Z)));
  }
  CHECK_THROWS_AS(bch(alg.one(), alg.letter(X)), DomainError);
}

TEST_CASE("BCH matches the classical bracket expansion to degree 4") {
  TensorAlgebra<RationalRing> alg(2, 4);
  const auto x = alg.letter(X), y = alg.letter(Y);
  const auto xy = bracket(x, y);
  const auto classical = x + y + scale(Rational(1, 2), xy) + scale(Rational(1, 12), bracket(x, xy)) -
                         scale(Rational(1, 12), bracket(y, xy)) - scale(Rational(1, 24), bracket(y, bracket(x, xy)));
  CHECK(bch(x, y) == classical);
}

TEST_CASE("BCH is associative") {
  TensorAlgebra<RationalRing> alg(2, 5);
  for (int k = 0; k < 10; ++k) {
    const auto u = random_series(alg, 1, 3), v = random_series(alg, 1, 3), w = random_series(alg, 1, 3);
    REQUIRE(bch(u, bch(v, w)) == bch(bch(u, v), w));
  }
}

TEST_CASE("ultrametric distance") {
  TensorAlgebra<RationalRing> alg(2, 6);
  const auto x = alg.letter(X);
  const auto a = random_series(alg, 0, 6);
  CHECK(ultrametric_dist(a, a) == Rational(0));
  CHECK(ultrametric_dist(alg.one(), alg.one() + x) == Rational(1, 2));
  CHECK(ultrametric_dist(alg.one(), alg.one() + x * x * x) == Rational(1, 8));
  for (int k = 0; k < 500; ++k) {
    const auto p = random_series(alg, 0, 6, 0.2), q = random_series(alg, 0, 6, 0.2), r = random_series(alg, 0, 6, 0.2);
    REQUIRE(ultrametric_dist(p, r) <= std::max(ultrametric_dist(p, q), ultrametric_dist(q, r)));
    REQUIRE(ultrametric_dist(p, q) == ultrametric_dist(q, p));
  }
}

TEST_CASE("parallel products are bit-identical to sequential ones") {
  TensorAlgebra<Real64Ring> alg(2, 8);
  auto a = alg.zero(), b = alg.zero();
  for (const auto& w : alg.category().elements_up_to(8)) {
    a.insert(w, 1.0 / static_cast<double>(gs::testing::uniform(1, 97)));
    b.insert(w, static_cast<double>(gs::testing::uniform(-50, 50)) / 7.0);
  }
  set_thread_count(1);
  const auto seq = a * b;
  for (unsigned threads : {2u, 3u, 8u}) {
    set_thread_count(threads);
    const auto par = a * b;
    set_thread_count(1);
    REQUIRE(par.size() == seq.size());
    auto it = par.terms().begin();
    for (const auto& [w, c] : seq.terms()) {
      REQUIRE(it->first == w);
      REQUIRE(it->second == c); // exact, not within tolerance
      ++it;
    }
  }
}

TEST_CASE("matrix-coefficient series invert on both sides") {
  RationalMatrixRing ring(2);
  NatCategory nat;
  using S = Series<NatCategory, RationalMatrixRing>;
  for (int k = 0; k < 20; ++k) {
    S a(nat, ring, 4);
    a.insert({0}, gs::testing::random_invertible_matrix(ring));
    for (std::size_t n = 1; n <= 4; ++n) a.insert({n}, gs::testing::random_matrix(ring));
    const auto inv = invert(a);
    REQUIRE(a * inv == S::one(nat, ring, 4));
    REQUIRE(inv * a == S::one(nat, ring, 4));
  }
}

TEST_CASE("decomposition count bounds the dense product work") {
  WordCategory c(2);
  // sum over words of length n <= N of (n + 1) factorizations.
  std::size_t expected = 0;
  for (std::size_t n = 0, words = 1; n <= 6; ++n, words *= 2) expected += words * (n + 1);
  CHECK(decomposition_count(c, 6) == expected);
}
