#include <doctest.h>

#include "gs/io.hpp"
#include "support.hpp"

using namespace gs;
using gs::testing::random_series;

namespace {
const Letter X = 0, Y = 1;
}

TEST_CASE("series document layout") {
  TensorAlgebra<RationalRing> alg(2, 3);
  const auto s = alg.word(Word{Y, X}, Rational(-1, 2)) + alg.letter(X) + alg.constant(Rational(2));
  const json doc = series_to_json(s);
  CHECK(doc.dump() ==
        R"({"category":"word","letters":2,"ring":"rational","terms":[{"coeff":"2","index":[]},)"
        R"({"coeff":"1","index":[0]},{"coeff":"-1/2","index":[1,0]}],"truncation":3})");
}

TEST_CASE("series documents round-trip") {
  TensorAlgebra<RationalRing> alg(3, 4);
  for (int k = 0; k < 50; ++k) {
    const auto s = random_series(alg, 0, 4);
    const json doc = series_to_json(s);
    REQUIRE(series_from_json(json::parse(doc.dump()), word_category_from_json(doc), RationalRing{}) == s);
  }
  TensorAlgebra<Real64Ring> ralg(2, 3);
  const auto r = ralg.letter(X) + ralg.constant(0.1);
  CHECK(series_from_json(series_to_json(r), WordCategory(2), Real64Ring{}) == r);
}

TEST_CASE("series documents are validated") {
  const WordCategory c(2);
  const RationalRing q;
  auto doc = json::parse(R"({"category":"word","letters":2,"ring":"rational","truncation":2,"terms":[]})");
  CHECK(series_from_json(doc, c, q).is_zero());

  auto bad = doc;
  bad["terms"] = json::parse(R"([{"index":[0,1,0],"coeff":"1"}])");
  CHECK_THROWS_AS(series_from_json(bad, c, q), ParseError);
  bad["terms"] = json::parse(R"([{"index":[2],"coeff":"1"}])");
  CHECK_THROWS_AS(series_from_json(bad, c, q), ParseError);
  bad["terms"] = json::parse(R"([{"index":[0],"coeff":"1"},{"index":[0],"coeff":"2"}])");
  CHECK_THROWS_AS(series_from_json(bad, c, q), ParseError);
  bad["terms"] = json::parse(R"([{"index":[0],"coeff":"1/0"}])");
  CHECK_THROWS_AS(series_from_json(bad, c, q), ParseError);
  bad = doc;
  bad["ring"] = "real64";
  CHECK_THROWS_AS(series_from_json(bad, c, q), ParseError);
  bad = doc;
  bad["category"] = "nat";
  CHECK_THROWS_AS(series_from_json(bad, c, q), ParseError);
  bad = doc;
  bad.erase("truncation");
  CHECK_THROWS_AS(series_from_json(bad, c, q), ParseError);

  // Integer coefficients are accepted and normalized on output.
  auto ints = doc;
  ints["terms"] = json::parse(R"([{"index":[1],"coeff":3},{"index":[0],"coeff":"4/2"}])");
  const auto s = series_from_json(ints, c, q);
  CHECK(series_to_json(s)["terms"].dump() == R"([{"coeff":"2","index":[0]},{"coeff":"3","index":[1]}])");
}

TEST_CASE("symmetric flag is checked on load") {
  TensorAlgebra<RationalRing> alg(2, 3);
  const auto s = sym(alg.word(Word{X, Y}));
  const json doc = symmetric_to_json(s);
  CHECK(doc["symmetric"] == true);
  CHECK(symmetric_from_json(doc, WordCategory(2), RationalRing{}) == s);
  json forged = series_to_json(alg.word(Word{X, Y}));
  forged["symmetric"] = true;
  CHECK_THROWS_AS(symmetric_from_json(forged, WordCategory(2), RationalRing{}), ParseError);
}

TEST_CASE("matrix coefficients and extended elements") {
  RationalMatrixRing ring(2);
  const auto m = ring.from_rows({{Rational(1), Rational(1, 2)}, {Rational(0), Rational(-3)}});
  CHECK(CoeffCodec<RationalMatrixRing>::encode(ring, m).dump() == R"([["1","1/2"],["0","-3"]])");
  CHECK(CoeffCodec<RationalMatrixRing>::decode(ring, json::parse(R"([["1","1/2"],["0","-3"]])")) == m);
  CHECK_THROWS_AS(CoeffCodec<RationalMatrixRing>::decode(ring, json::parse(R"([["1"]])")), StructuralError);

  Series<NatCategory, RationalMatrixRing> tail(NatCategory{}, ring, 3);
  tail.insert({2}, m);
  const ExtendedElement<NatCategory, RationalMatrixRing> e(m, tail);
  const json doc = extended_to_json(e);
  CHECK(doc["tail"]["ring"] == "matrix/rational/2");
  CHECK(doc["tail"]["terms"][0]["index"] == 2);
  CHECK(extended_from_json(doc, NatCategory{}, ring) == e);
}

TEST_CASE("paths and cobordisms") {
  TensorAlgebra<RationalRing> alg(2, 3);
  const PolyPath<WordCategory, RationalRing> p(alg.zero(), {alg.letter(X), alg.zero(), alg.letter(Y)});
  const json doc = path_to_json(p);
  CHECK(doc.size() == 3);
  CHECK(path_from_json(doc, alg.zero()) == p);

  const CobordismIndex i(Cobordism(2, {"M"}, {"b", "a"}, {"c"}), 3);
  const json j = cobordism_index_to_json(i);
  CHECK(j.dump() == R"({"alpha":["a","b"],"beta":["c"],"body":["M"],"dim":2,"length":3})");
  CHECK(cobordism_index_from_json(j) == i);
  CHECK(cobordism_index_from_json(json::parse(R"({"length":0})")).is_neutral());
  CHECK_THROWS_AS(cobordism_index_from_json(json::parse(R"({"length":0,"dim":1})")), ParseError);
  CHECK_THROWS_AS(cobordism_from_json(json::parse(R"({"dim":0})")), ParseError);

  const auto req = gamma_request_from_json(json::parse(
      R"({"generators":[{"dim":1,"alpha":["a"],"beta":["a"],"body":["I"],"length":1}],"length_bound":3,"strict":true})"));
  CHECK(req.generators.size() == 1);
  CHECK(req.options.length_bound == 3);
  CHECK(req.options.strict);
}

TEST_CASE("pretty printing") {
  TensorAlgebra<RationalRing> alg(2, 3);
  const auto s = alg.constant(Rational(1)) + alg.letter(X) + alg.word(Word{X, Y}, Rational(-1, 2));
  CHECK(pretty(s) == "1 + x - 1/2·x⊗y");
  CHECK(pretty(alg.zero()) == "0");
  CHECK(pretty(-alg.letter(Y)) == "-y");
  Series<NatCategory, RationalRing> h(NatCategory{}, RationalRing{}, 3);
  h.insert({2}, Rational(3));
  CHECK(pretty(h) == "3·h^2");
}
