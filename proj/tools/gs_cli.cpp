// gs: command-line front end for the truncated-series engine.
//
// Every subcommand reads and writes the JSON documents of gs/io.hpp.
// Exit codes: 0 success, 1 domain error (not a unit, inexact scalar, ...),
// 2 usage error (bad flags or malformed input).

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gs/calculus.hpp"
#include "gs/cobordism.hpp"
#include "gs/io.hpp"
#include "gs/parallel.hpp"
#include "gs/paths.hpp"
#include "gs/tensor_sym.hpp"

namespace {

using namespace gs;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t degree = 0;
  bool degree_set = false;
  std::size_t letters = 2;
  std::string ring = "rational";
  bool pretty = false;
  std::string in;
  std::string out;
  unsigned threads = 1;
};

json read_input(const Options& opt) {
  std::string text;
  if (opt.in.empty() || opt.in == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(opt.in);
    if (!f) throw UsageError("cannot open " + opt.in);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON input: ") + e.what());
  }
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw UsageError("cannot write " + opt.out);
  f << text;
}

std::string render_json(const json& doc) { return format_document(doc); }

template <class S>
std::string render_series(const Options& opt, const S& s) {
  return opt.pretty ? pretty(s) + "\n" : render_json(series_to_json(s));
}

// Calls fn with the series held by a document, for the nat and word
// categories over the rational and real64 rings. --degree re-truncates.
template <class F>
std::string with_series(const Options& opt, const json& doc, F fn) {
  if (!doc.is_object()) throw ParseError("series document must be an object");
  const std::string category = doc.value("category", std::string{});
  const std::string ring = doc.value("ring", std::string{});
  auto dispatch = [&](const auto& cat) -> std::string {
    auto run = [&](const auto& r) {
      auto s = series_from_json(doc, cat, r);
      if (opt.degree_set) s = s.with_truncation(opt.degree);
      return fn(s);
    };
    if (ring == "rational") return run(RationalRing{});
    if (ring == "real64") return run(Real64Ring{});
    throw ParseError("unsupported ring '" + ring + "'");
  };
  if (category == "word") return dispatch(word_category_from_json(doc));
  if (category == "nat") return dispatch(NatCategory{});
  throw ParseError("unsupported category '" + category + "'");
}

std::string cmd_bch(const Options& opt) {
  if (!opt.degree_set || opt.degree < 1) throw UsageError("bch needs --degree >= 1");
  if (opt.letters < 2) throw UsageError("bch needs --letters >= 2");
  auto run = [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    TensorAlgebra<R> alg(opt.letters, opt.degree, ring);
    return render_series(opt, bch(alg.letter(0), alg.letter(1)));
  };
  if (opt.ring == "rational") return run(RationalRing{});
  if (opt.ring == "real64") return run(Real64Ring{});
  throw UsageError("unknown ring '" + opt.ring + "'");
}

std::string cmd_sym(const Options& opt, const json& doc) {
  if (doc.value("category", std::string{}) != "word") throw ParseError("sym needs a word series");
  return with_series(opt, doc, [&](const auto& s) -> std::string {
    if constexpr (std::is_same_v<std::decay_t<decltype(s.category())>, WordCategory>) {
      const auto r = sym(s);
      return opt.pretty ? pretty(r.series()) + "\n" : render_json(symmetric_to_json(r));
    } else {
      throw ParseError("sym needs a word series");
    }
  });
}

std::string cmd_ode(const Options& opt, const json& doc) {
  if (!doc.is_array() || doc.empty()) throw ParseError("ode needs a non-empty array of series documents");
  Options as_stored = opt;
  as_stored.degree_set = false;
  return with_series(as_stored, doc.front(), [&](const auto& head) -> std::string {
    using S = std::decay_t<decltype(head)>;
    auto v = path_from_json(doc, head);
    if (opt.degree_set) {
      std::vector<S> coeffs;
      for (const auto& c : v.coefficients()) coeffs.push_back(c.with_truncation(opt.degree));
      v = PolyPath<typename S::category_type, typename S::ring_type>(head.with_truncation(opt.degree), coeffs);
    }
    const auto g = solve_log_ode(v);
    if (opt.pretty) {
      std::string out;
      for (std::size_t j = 0; j < g.coefficients().size(); ++j) {
        out += "t^" + std::to_string(j) + ": " + pretty(g.coefficients()[j]) + "\n";
      }
      return out;
    }
    return render_json(path_to_json(g));
  });
}

std::string cmd_cobordism_validate(const Options& opt, const json& doc, int& status) {
  const GammaRequest req = gamma_request_from_json(doc);
  const GammaValidation v = validate_gamma(req.generators, req.options);
  status = v.ok() ? kOk : kDomainError;
  if (!opt.pretty) return render_json(gamma_report_to_json(v, req.options));
  std::ostringstream os;
  if (v.ok()) {
    os << "stable, finite decompositions up to L=" << req.options.length_bound << " ("
       << v.family->elements().size() << " elements)\n";
    for (const auto& e : v.family->elements()) {
      os << "  length " << e.length() << "  " << cobordism_index_to_json(e).dump() << "  factorizations "
         << v.family->decompositions(e).size() << "\n";
    }
  } else {
    os << "violations:\n";
    for (const auto& msg : v.violations) os << "  " << msg << "\n";
  }
  return os.str();
}

void add_common(CLI::App* sub, Options& opt, bool with_input) {
  sub->add_option("-N,--degree", opt.degree, "Truncation order")->check(CLI::NonNegativeNumber);
  sub->add_option("-d,--letters", opt.letters, "Alphabet size");
  sub->add_option("--ring", opt.ring, "Coefficient ring")->check(CLI::IsMember({"rational", "real64"}));
  sub->add_flag("--pretty", opt.pretty, "Human-readable output");
  sub->add_option("--out", opt.out, "Output file (default stdout)");
  sub->add_option("--threads", opt.threads, "Worker threads for products")->check(CLI::PositiveNumber);
  if (with_input) sub->add_option("--in", opt.in, "Input file (default stdin)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"gs: truncated formal series engine"};
  app.require_subcommand(1);
  Options opt;

  auto* bch_cmd = app.add_subcommand("bch", "BCH(x1, x2) = log(exp(x1) exp(x2)) to order N");
  add_common(bch_cmd, opt, false);
  auto* invert_cmd = app.add_subcommand("invert", "Inverse of a unit series");
  add_common(invert_cmd, opt, true);
  auto* exp_cmd = app.add_subcommand("exp", "Exponential of a series");
  add_common(exp_cmd, opt, true);
  auto* log_cmd = app.add_subcommand("log", "Logarithm of a series");
  add_common(log_cmd, opt, true);
  auto* sym_cmd = app.add_subcommand("sym", "Symmetrization of a word series");
  add_common(sym_cmd, opt, true);
  auto* ode_cmd = app.add_subcommand("ode", "Solve g^-1 dg/dt = v, g(0) = 1 for a polynomial path v");
  add_common(ode_cmd, opt, true);
  auto* cob_cmd = app.add_subcommand("cobordism-validate", "Closure and finiteness check of a generator family");
  add_common(cob_cmd, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--degree") > 0) opt.degree_set = true;
  }

  try {
    set_thread_count(opt.threads);
    int status = kOk;
    std::string out;
    if (bch_cmd->parsed()) {
      out = cmd_bch(opt);
    } else if (invert_cmd->parsed()) {
      out = with_series(opt, read_input(opt), [&](const auto& s) { return render_series(opt, invert(s)); });
    } else if (exp_cmd->parsed()) {
      out = with_series(opt, read_input(opt), [&](const auto& s) { return render_series(opt, gs::exp(s)); });
    } else if (log_cmd->parsed()) {
      out = with_series(opt, read_input(opt), [&](const auto& s) { return render_series(opt, gs::log(s)); });
    } else if (sym_cmd->parsed()) {
      out = cmd_sym(opt, read_input(opt));
    } else if (ode_cmd->parsed()) {
      out = cmd_ode(opt, read_input(opt));
    } else if (cob_cmd->parsed()) {
      out = cmd_cobordism_validate(opt, read_input(opt), status);
    }
    write_output(opt, out);
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsageError;
  } catch (const gs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
}
