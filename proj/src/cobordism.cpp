#include "gs/cobordism.hpp"

#include <algorithm>

namespace gs {

Cobordism::Cobordism(std::size_t d, std::vector<std::string> b, std::vector<BoundaryLabel> a,
                     std::vector<BoundaryLabel> f)
    : dim(d), body(std::move(b)), alpha(std::move(a)), beta(std::move(f)) {
  if (dim == 0) {
    throw StructuralError("cobordism dimension must be at least 1");
  }
  std::sort(alpha.begin(), alpha.end());
  std::sort(beta.begin(), beta.end());
}

std::optional<Cobordism> compose_cobordism(const Cobordism& m, const Cobordism& m2) {
  if (m.dim != m2.dim || m.alpha.empty() || m.alpha != m2.beta) {
    return std::nullopt;
  }
  Cobordism out;
  out.dim = m.dim;
  out.alpha = m2.alpha;
  out.beta = m.beta;
  out.body = m2.body;
  out.body.insert(out.body.end(), m.body.begin(), m.body.end());
  return out;
}

CobordismIndex::CobordismIndex(Cobordism m, std::size_t length) : manifold_(std::move(m)), length_(length) {
  if (length == 0) {
    throw StructuralError("a non-neutral cobordism index needs length >= 1");
  }
}

const Cobordism& CobordismIndex::manifold() const {
  if (!manifold_) {
    throw StructuralError("the neutral index has no manifold");
  }
  return *manifold_;
}

std::strong_ordering operator<=>(const CobordismIndex& a, const CobordismIndex& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  if (a.is_neutral() || b.is_neutral()) {
    return b.is_neutral() <=> a.is_neutral();
  }
  const Cobordism& x = *a.manifold_;
  const Cobordism& y = *b.manifold_;
  if (auto c = x.dim <=> y.dim; c != 0) return c;
  if (auto c = x.body <=> y.body; c != 0) return c;
  if (auto c = x.alpha <=> y.alpha; c != 0) return c;
  return x.beta <=> y.beta;
}

std::optional<CobordismIndex> compose_index(const CobordismIndex& a, const CobordismIndex& b) {
  if (a.is_neutral()) return b;
  if (b.is_neutral()) return a;
  auto m = compose_cobordism(a.manifold(), b.manifold());
  if (!m) return std::nullopt;
  return CobordismIndex(std::move(*m), a.length() + b.length());
}

std::vector<std::pair<CobordismIndex, CobordismIndex>> GammaFamily::decompositions(const CobordismIndex& k) const {
  if (k.length() > length_bound_) {
    throw InfiniteDecomposition("index of length " + std::to_string(k.length()) +
                                " lies beyond the certified bound " + std::to_string(length_bound_));
  }
  std::vector<std::pair<CobordismIndex, CobordismIndex>> out;
  if (!contains(k)) return out;
  for (const auto& a : elements_) {
    if (a.length() > k.length()) break;
    for (std::size_t pos : by_length_[k.length() - a.length()]) {
      const auto& b = elements_[pos];
      auto c = compose_index(a, b);
      if (c && *c == k) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<CobordismIndex> GammaFamily::elements_up_to(std::size_t n) const {
  if (n > length_bound_) {
    throw InfiniteDecomposition("cannot enumerate beyond the certified length bound");
  }
  std::vector<CobordismIndex> out;
  for (const auto& e : elements_) {
    if (e.length() > n) break;
    out.push_back(e);
  }
  return out;
}

GammaValidation validate_gamma(const std::vector<CobordismIndex>& generators, const GammaOptions& options) {
  GammaValidation result;
  const std::size_t bound = options.length_bound;

  std::set<CobordismIndex> closure{CobordismIndex::neutral()};
  std::vector<CobordismIndex> gens;
  for (const auto& g : generators) {
    if (g.is_neutral()) continue;
    if (g.length() > bound) {
      result.violations.push_back("generator of length " + std::to_string(g.length()) +
                                  " exceeds the length bound " + std::to_string(bound));
      continue;
    }
    gens.push_back(g);
    closure.insert(g);
  }

  auto check_budget = [&] {
    if (closure.size() > options.element_budget) {
      throw ClosureExplosion("closure exceeds the budget of " + std::to_string(options.element_budget) +
                             " elements");
    }
  };
  check_budget();

  // Semi-naive saturation: only products involving a fresh element can be new.
  std::vector<CobordismIndex> all(closure.begin(), closure.end());
  std::vector<CobordismIndex> fresh = all;
  while (!fresh.empty()) {
    std::set<CobordismIndex> found;
    auto consider = [&](const CobordismIndex& a, const CobordismIndex& b) {
      if (a.is_neutral() || b.is_neutral()) return;
      auto c = compose_index(a, b);
      if (!c) return;
      if (c->length() > bound) {
        result.escapes_bound = true;
        return;
      }
      if (!closure.count(*c)) found.insert(std::move(*c));
    };
    for (const auto& a : fresh) {
      for (const auto& b : all) {
        consider(a, b);
        consider(b, a);
      }
    }
    for (const auto& c : found) {
      closure.insert(c);
      check_budget();
    }
    fresh.assign(found.begin(), found.end());
    all.insert(all.end(), fresh.begin(), fresh.end());
  }

  if (options.strict && result.escapes_bound) {
    result.violations.push_back("closure is not finite: products leave the length bound " +
                                std::to_string(bound));
  }
  if (!result.ok()) return result;

  auto family = std::make_shared<GammaFamily>();
  family->length_bound_ = bound;
  family->generators_ = gens;
  family->elements_.assign(closure.begin(), closure.end());
  family->lookup_ = std::move(closure);
  family->by_length_.assign(bound + 1, {});
  for (std::size_t i = 0; i < family->elements_.size(); ++i) {
    family->by_length_[family->elements_[i].length()].push_back(i);
  }
  result.family = std::move(family);
  return result;
}

GammaCategory::GammaCategory(std::shared_ptr<const GammaFamily> family) : family_(std::move(family)) {
  if (!family_) {
    throw StructuralError("gamma category needs a validated family");
  }
}

std::vector<std::pair<CobordismIndex, CobordismIndex>> GammaCategory::decompositions(const CobordismIndex& k,
                                                                                     std::size_t max_ord) const {
  if (k.length() > max_ord) {
    throw StructuralError("index order exceeds the enumeration bound");
  }
  return family_->decompositions(k);
}

} // namespace gs
