#include "gs/io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace gs {

json rational_to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

namespace {

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (e.is_string()) {
      out.push_back(e.get<std::string>());
    } else if (e.is_number_integer()) {
      out.push_back(std::to_string(e.get<long long>()));
    } else {
      throw ParseError(std::string(what) + " entries must be strings or integers");
    }
  }
  return out;
}

} // namespace

namespace detail {

void check_header(const json& doc, const std::string& category, const std::string& ring) {
  if (!doc.is_object()) throw ParseError("series document must be an object");
  if (doc.value("category", std::string{}) != category) {
    throw ParseError("expected category '" + category + "'");
  }
  if (doc.value("ring", std::string{}) != ring) {
    throw ParseError("expected ring '" + ring + "'");
  }
  if (!doc.contains("truncation")) throw ParseError("series document needs a truncation");
}

std::size_t json_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

} // namespace detail

json cobordism_to_json(const Cobordism& m) {
  return {{"dim", m.dim}, {"alpha", m.alpha}, {"beta", m.beta}, {"body", m.body}};
}

Cobordism cobordism_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("cobordism must be an object");
  const std::size_t dim = detail::json_size(j.value("dim", json(1)), "dim");
  try {
    return Cobordism(dim, string_list(j.value("body", json::array()), "body"),
                     string_list(j.value("alpha", json::array()), "alpha"),
                     string_list(j.value("beta", json::array()), "beta"));
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

json cobordism_index_to_json(const CobordismIndex& i) {
  if (i.is_neutral()) return {{"length", 0}};
  json j = cobordism_to_json(i.manifold());
  j["length"] = i.length();
  return j;
}

CobordismIndex cobordism_index_from_json(const json& j) {
  if (!j.is_object() || !j.contains("length")) throw ParseError("cobordism index needs a length");
  const std::size_t length = detail::json_size(j["length"], "length");
  if (length == 0) {
    if (j.contains("dim") || j.contains("body") || j.contains("alpha") || j.contains("beta")) {
      throw ParseError("only the neutral index has length 0");
    }
    return CobordismIndex::neutral();
  }
  return CobordismIndex(cobordism_from_json(j), length);
}

GammaRequest gamma_request_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw ParseError("gamma document needs a generators array");
  }
  GammaRequest req;
  for (const auto& g : j["generators"]) req.generators.push_back(cobordism_index_from_json(g));
  if (j.contains("length_bound")) req.options.length_bound = detail::json_size(j["length_bound"], "length_bound");
  if (j.contains("budget")) req.options.element_budget = detail::json_size(j["budget"], "budget");
  if (j.contains("strict")) {
    if (!j["strict"].is_boolean()) throw ParseError("strict must be a boolean");
    req.options.strict = j["strict"].get<bool>();
  }
  return req;
}

json gamma_report_to_json(const GammaValidation& v, const GammaOptions& options) {
  json doc;
  doc["status"] = v.ok() ? "ok" : "violations";
  doc["length_bound"] = options.length_bound;
  doc["strict"] = options.strict;
  doc["escapes_bound"] = v.escapes_bound;
  doc["violations"] = v.violations;
  if (v.family) {
    json elements = json::array();
    for (const auto& e : v.family->elements()) {
      elements.push_back({{"index", cobordism_index_to_json(e)},
                          {"factorizations", v.family->decompositions(e).size()}});
    }
    doc["elements"] = std::move(elements);
  }
  return doc;
}

json category_header(const NatCategory& c) { return {{"category", c.name()}}; }

json category_header(const WordCategory& c) {
  return {{"category", c.name()}, {"letters", c.alphabet_size()}};
}

json category_header(const GammaCategory& c) {
  return {{"category", c.name()}, {"length_bound", c.family().length_bound()}};
}

NatIndex IndexCodec<NatCategory>::decode(const NatCategory&, const json& j) {
  return NatIndex{detail::json_size(j, "nat index")};
}

Word IndexCodec<WordCategory>::decode(const WordCategory& c, const json& j) {
  if (!j.is_array()) throw ParseError("word index must be an array of letters");
  Word w;
  for (const auto& l : j) {
    const std::size_t letter = detail::json_size(l, "letter");
    if (letter >= c.alphabet_size()) throw ParseError("letter outside the alphabet");
    w.letters.push_back(static_cast<Letter>(letter));
  }
  return w;
}

WordCategory word_category_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("letters")) throw ParseError("word series document needs letters");
  const std::size_t d = detail::json_size(doc["letters"], "letters");
  if (d == 0) throw ParseError("letters must be positive");
  return WordCategory(d);
}

namespace {

void format_into(const json& doc, std::string& out, const std::string& indent) {
  if (doc.is_object() && doc.contains("terms") && doc["terms"].is_array()) {
    json header = doc;
    header.erase("terms");
    std::string head = header.dump();
    head.pop_back(); // closing brace
    out += indent + head + (header.empty() ? "" : ",") + "\"terms\":[";
    const auto& terms = doc["terms"];
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out += "\n" + indent + "  " + terms[i].dump() + (i + 1 < terms.size() ? "," : "");
    }
    out += (terms.empty() ? "" : "\n" + indent) + "]}";
    return;
  }
  if (doc.is_array() && !doc.empty() && doc.front().is_object() && doc.front().contains("terms")) {
    out += indent + "[\n";
    for (std::size_t i = 0; i < doc.size(); ++i) {
      format_into(doc[i], out, indent + "  ");
      out += i + 1 < doc.size() ? ",\n" : "\n";
    }
    out += indent + "]";
    return;
  }
  out += indent + doc.dump(2);
}

} // namespace

std::string format_document(const json& doc) {
  std::string out;
  format_into(doc, out, "");
  return out + "\n";
}

std::string pretty_coeff(const Rational& q) { return q.to_string(); }

std::string pretty_coeff(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string pretty_index(const NatCategory&, const NatIndex& i) {
  if (i.n == 0) return "";
  if (i.n == 1) return "h";
  return "h^" + std::to_string(i.n);
}

std::string pretty_index(const WordCategory& c, const Word& w) {
  static constexpr const char* kNames[] = {"x", "y", "z", "w"};
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "⊗";
    const Letter l = w.letters[k];
    out += c.alphabet_size() <= 4 ? std::string(kNames[l]) : "e" + std::to_string(l + 1);
  }
  return out;
}

std::string pretty_index(const GammaCategory&, const CobordismIndex& i) {
  if (i.is_neutral()) return "";
  std::string body;
  for (const auto& b : i.manifold().body) body += (body.empty() ? "" : "*") + b;
  return (i.length() == 1 ? std::string("q") : "q^" + std::to_string(i.length())) + "[" + body + "]";
}

} // namespace gs
