#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gs/cobordism.hpp"
#include "gs/group_ext.hpp"
#include "gs/paths.hpp"
#include "gs/series.hpp"
#include "gs/tensor_sym.hpp"

namespace gs {

using nlohmann::json;

json rational_to_json(const Rational& q);
// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const json& j);

json cobordism_to_json(const Cobordism& m);
Cobordism cobordism_from_json(const json& j);

json cobordism_index_to_json(const CobordismIndex& i);
CobordismIndex cobordism_index_from_json(const json& j);

// {"generators": [index, ...], "length_bound": L, "strict": bool, "budget": n}
struct GammaRequest {
  std::vector<CobordismIndex> generators;
  GammaOptions options;
};
GammaRequest gamma_request_from_json(const json& j);
json gamma_report_to_json(const GammaValidation& v, const GammaOptions& options);

// Coefficient encodings: rationals as "p/q" strings, reals as numbers,
// matrices as row-major nested arrays.
template <CoefficientRing R>
struct CoeffCodec;

template <>
struct CoeffCodec<RationalRing> {
  static json encode(const RationalRing&, const Rational& q) { return rational_to_json(q); }
  static Rational decode(const RationalRing&, const json& j) { return rational_from_json(j); }
};

template <>
struct CoeffCodec<Real64Ring> {
  static json encode(const Real64Ring&, double x) { return x; }
  static double decode(const Real64Ring& r, const json& j) {
    if (!j.is_number()) throw ParseError("real64 coefficient must be a number");
    const double x = j.get<double>();
    r.validate(x);
    return x;
  }
};

template <CoefficientRing E>
struct CoeffCodec<MatrixRing<E>> {
  static json encode(const MatrixRing<E>& r, const typename MatrixRing<E>::value_type& m) {
    r.validate(m);
    json rows = json::array();
    for (std::size_t i = 0; i < m.n; ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < m.n; ++k) row.push_back(CoeffCodec<E>::encode(r.entries, m(i, k)));
      rows.push_back(std::move(row));
    }
    return rows;
  }
  static typename MatrixRing<E>::value_type decode(const MatrixRing<E>& r, const json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<typename E::value_type>> rows;
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError("matrix row must be an array");
      auto& out = rows.emplace_back();
      for (const auto& e : row) out.push_back(CoeffCodec<E>::decode(r.entries, e));
    }
    return r.from_rows(rows);
  }
};

// Index encodings: naturals as integers, words as arrays of 0-based letters,
// cobordism indices as objects.
template <GradedCategory C>
struct IndexCodec;

template <>
struct IndexCodec<NatCategory> {
  static json encode(const NatCategory&, NatIndex i) { return i.n; }
  static NatIndex decode(const NatCategory&, const json& j);
};

template <>
struct IndexCodec<WordCategory> {
  static json encode(const WordCategory&, const Word& w) { return w.letters; }
  static Word decode(const WordCategory& c, const json& j);
};

template <>
struct IndexCodec<GammaCategory> {
  static json encode(const GammaCategory&, const CobordismIndex& i) { return cobordism_index_to_json(i); }
  static CobordismIndex decode(const GammaCategory&, const json& j) { return cobordism_index_from_json(j); }
};

json category_header(const NatCategory& c);
json category_header(const WordCategory& c);
json category_header(const GammaCategory& c);

// Series document:
// {"category": ..., "ring": ..., "truncation": N,
//  "terms": [{"index": ..., "coeff": ...}, ...]} with terms in canonical
// index order. Word series also carry "letters": d.
template <GradedCategory C, CoefficientRing R>
json series_to_json(const Series<C, R>& s) {
  json doc = category_header(s.category());
  doc["ring"] = s.ring().name();
  doc["truncation"] = s.truncation();
  json terms = json::array();
  for (const auto& [i, c] : s.terms()) {
    terms.push_back({{"index", IndexCodec<C>::encode(s.category(), i)},
                     {"coeff", CoeffCodec<R>::encode(s.ring(), c)}});
  }
  doc["terms"] = std::move(terms);
  return doc;
}

namespace detail {
void check_header(const json& doc, const std::string& category, const std::string& ring);
std::size_t json_size(const json& j, const char* what);
} // namespace detail

// Loads a series document into the given category and ring. Rejects
// unknown categories or rings, duplicate indices, indices outside the
// category and indices above the truncation.
template <GradedCategory C, CoefficientRing R>
Series<C, R> series_from_json(const json& doc, const C& category, const R& ring) {
  detail::check_header(doc, category.name(), ring.name());
  const std::size_t n = detail::json_size(doc.at("truncation"), "truncation");
  Series<C, R> s(category, ring, n);
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw ParseError("series document needs a terms array");
  std::set<typename C::index_type> seen;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("index") || !t.contains("coeff")) {
      throw ParseError("each term needs an index and a coeff");
    }
    auto i = IndexCodec<C>::decode(category, t["index"]);
    if (!category.contains(i)) throw ParseError("term index outside the category");
    if (category.ord(i) > n) throw ParseError("term index above the truncation order");
    if (!seen.insert(i).second) throw ParseError("duplicate term index");
    s.insert(i, CoeffCodec<R>::decode(ring, t["coeff"]));
  }
  return s;
}

// The word category declared by a document ("letters" field).
WordCategory word_category_from_json(const json& doc);

// Symmetric series serialize like series, plus "symmetric": true.
template <CoefficientRing R>
json symmetric_to_json(const SymmetricSeries<R>& s) {
  json doc = series_to_json(s.series());
  doc["symmetric"] = true;
  return doc;
}

// A document flagged "symmetric" is checked to be fixed by symmetrization.
template <CoefficientRing R>
SymmetricSeries<R> symmetric_from_json(const json& doc, const WordCategory& c, const R& ring) {
  if (!doc.value("symmetric", false)) throw ParseError("document is not flagged symmetric");
  try {
    return SymmetricSeries<R>(series_from_json(doc, c, ring));
  } catch (const DomainError&) {
    throw ParseError("document flagged symmetric is not symmetric");
  }
}

// Paths: an array of series documents indexed by the power of t. `shape`
// supplies the structure of the (possibly empty) path.
template <GradedCategory C, CoefficientRing R>
json path_to_json(const PolyPath<C, R>& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(series_to_json(c));
  return arr;
}

template <GradedCategory C, CoefficientRing R>
PolyPath<C, R> path_from_json(const json& arr, const Series<C, R>& shape) {
  if (!arr.is_array()) throw ParseError("path document must be an array of series");
  std::vector<Series<C, R>> coeffs;
  for (const auto& doc : arr) {
    auto s = series_from_json(doc, shape.category(), shape.ring());
    if (!s.compatible(shape)) throw ParseError("path coefficients differ in truncation");
    coeffs.push_back(std::move(s));
  }
  return PolyPath<C, R>(shape, std::move(coeffs));
}

template <GradedCategory C, CoefficientRing R>
json extended_to_json(const ExtendedElement<C, R>& p) {
  return {{"g0", CoeffCodec<R>::encode(p.tail().ring(), p.g0())}, {"tail", series_to_json(p.tail())}};
}

template <GradedCategory C, CoefficientRing R>
ExtendedElement<C, R> extended_from_json(const json& doc, const C& category, const R& ring) {
  if (!doc.is_object() || !doc.contains("g0") || !doc.contains("tail")) {
    throw ParseError("extended element needs g0 and tail");
  }
  return ExtendedElement<C, R>(CoeffCodec<R>::decode(ring, doc["g0"]), series_from_json(doc["tail"], category, ring));
}

// Text form of a document: series documents print one term per line, arrays
// of documents one element after another, anything else indented JSON.
// Deterministic for a given document.
std::string format_document(const json& doc);

// Human-readable rendering, e.g. "1 + x - 1/2·x⊗y".
std::string pretty_coeff(const Rational& q);
std::string pretty_coeff(double x);
std::string pretty_index(const NatCategory& c, const NatIndex& i);
std::string pretty_index(const WordCategory& c, const Word& w);
std::string pretty_index(const GammaCategory& c, const CobordismIndex& i);

template <GradedCategory C, CoefficientRing R>
  requires std::same_as<R, RationalRing> || std::same_as<R, Real64Ring>
std::string pretty(const Series<C, R>& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : s.terms()) {
    std::string coeff = pretty_coeff(c);
    const bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string idx = pretty_index(s.category(), i);
    if (idx.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += idx;
    } else {
      out += coeff + "·" + idx;
    }
  }
  return out;
}

} // namespace gs
