#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gs/graded_index.hpp"

namespace gs {

using BoundaryLabel = std::string;

// Symbolic compact oriented manifold whose boundary is split into an
// initial part `alpha` and a final part `beta`. Boundary parts are label
// multisets (stored sorted); two boundary parts are "diffeomorphic" iff their
// label multisets agree. `body` records the pieces glued so far, so distinct
// gluings stay distinct.
struct Cobordism {
  std::size_t dim = 1;
  std::vector<std::string> body;
  std::vector<BoundaryLabel> alpha;
  std::vector<BoundaryLabel> beta;

  Cobordism() = default;
  Cobordism(std::size_t dim, std::vector<std::string> body, std::vector<BoundaryLabel> alpha,
            std::vector<BoundaryLabel> beta);

  friend bool operator==(const Cobordism&, const Cobordism&) = default;
  friend auto operator<=>(const Cobordism&, const Cobordism&) = default;
};

// M * M2: glue the final part of M2 onto the initial part of M. Defined iff
// both have the same dimension and alpha(M) == beta(M2) is nonempty; then
// alpha(M*M2) = alpha(M2), beta(M*M2) = beta(M).
std::optional<Cobordism> compose_cobordism(const Cobordism& m, const Cobordism& m2);

// Either the neutral (empty, 0) or a pair (M, p) with length p >= 1.
class CobordismIndex {
public:
  CobordismIndex() = default; // neutral
  CobordismIndex(Cobordism m, std::size_t length);

  static CobordismIndex neutral() { return {}; }

  bool is_neutral() const { return !manifold_.has_value(); }
  std::size_t length() const { return length_; }
  const Cobordism& manifold() const; // precondition: !is_neutral()

  friend bool operator==(const CobordismIndex&, const CobordismIndex&) = default;
  friend std::strong_ordering operator<=>(const CobordismIndex& a, const CobordismIndex& b);

private:
  std::optional<Cobordism> manifold_;
  std::size_t length_ = 0;
};

// (M, p) * (M2, q) = (M * M2, p + q); the neutral composes with everything.
std::optional<CobordismIndex> compose_index(const CobordismIndex& a, const CobordismIndex& b);

struct GammaOptions {
  std::size_t length_bound = 4;
  std::size_t element_budget = 100000;
  // Also require that no composition of closure elements escapes the length
  // bound, i.e. the family is finite outright (and not only per index).
  bool strict = false;
};

class GammaFamily;

struct GammaValidation {
  std::shared_ptr<const GammaFamily> family; // null when violations is nonempty
  std::vector<std::string> violations;
  bool escapes_bound = false; // some closure product has length > bound

  bool ok() const { return violations.empty(); }
};

// Computes the closure of `generators` up to `options.length_bound`. Throws
// ClosureExplosion if the closure outgrows `options.element_budget`.
GammaValidation validate_gamma(const std::vector<CobordismIndex>& generators, const GammaOptions& options);

// The *-closure of a generator set, cut at a length bound, with every index
// certified to have finitely many ordered factorizations.
class GammaFamily {
public:
  std::size_t length_bound() const { return length_bound_; }
  const std::vector<CobordismIndex>& elements() const { return elements_; }
  const std::vector<CobordismIndex>& generators() const { return generators_; }
  bool contains(const CobordismIndex& i) const { return lookup_.count(i) != 0; }

  // All ordered pairs (a, b) of family elements with a * b == k, sorted by a.
  // Throws InfiniteDecomposition when k lies beyond the certified length bound.
  std::vector<std::pair<CobordismIndex, CobordismIndex>> decompositions(const CobordismIndex& k) const;

  // Family elements of length <= n (n must not exceed the length bound).
  std::vector<CobordismIndex> elements_up_to(std::size_t n) const;

private:
  friend GammaValidation validate_gamma(const std::vector<CobordismIndex>&, const GammaOptions&);

  std::size_t length_bound_ = 0;
  std::vector<CobordismIndex> generators_;
  std::vector<CobordismIndex> elements_;           // canonical order
  std::set<CobordismIndex> lookup_;
  std::vector<std::vector<std::size_t>> by_length_; // positions in elements_
};

// Graded-category handle over a validated family; cheap to copy. Two handles
// are equal iff they refer to the same family object.
class GammaCategory {
public:
  using index_type = CobordismIndex;

  GammaCategory() = default;
  explicit GammaCategory(std::shared_ptr<const GammaFamily> family);

  const GammaFamily& family() const { return *family_; }

  std::optional<CobordismIndex> compose(const CobordismIndex& a, const CobordismIndex& b) const {
    return compose_index(a, b);
  }
  std::size_t ord(const CobordismIndex& i) const { return i.length(); }
  CobordismIndex unit() const { return CobordismIndex::neutral(); }
  std::vector<CobordismIndex> neutrals() const { return {CobordismIndex::neutral()}; }
  bool contains(const CobordismIndex& i) const { return family_->contains(i); }
  std::vector<std::pair<CobordismIndex, CobordismIndex>> decompositions(const CobordismIndex& k,
                                                                         std::size_t max_ord) const;
  std::vector<CobordismIndex> elements_up_to(std::size_t n) const { return family_->elements_up_to(n); }
  std::string name() const { return "gamma"; }

  friend bool operator==(const GammaCategory& a, const GammaCategory& b) { return a.family_ == b.family_; }

private:
  std::shared_ptr<const GammaFamily> family_;
};

static_assert(GradedCategory<GammaCategory>);

} // namespace gs
