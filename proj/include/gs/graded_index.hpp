#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gs/errors.hpp"

namespace gs {

// An N-graded small category of indices, given by its morphisms only:
// a partial associative composition with neutral elements and an additive
// grading `ord`. Index values carry a total order whose first key is `ord`;
// that order is the canonical iteration and serialization order.
//
// `unit()` is the neutral that carries the constant term of a series.
// `decompositions(k, max_ord)` lists every (i, j) with compose(i, j) == k,
// sorted by i. `elements_up_to(n)` enumerates all indices of order <= n.
template <class C>
concept GradedCategory =
    std::equality_comparable<C> && std::totally_ordered<typename C::index_type> &&
    requires(const C& c, const typename C::index_type& i, std::size_t n) {
      { c.compose(i, i) } -> std::same_as<std::optional<typename C::index_type>>;
      { c.ord(i) } -> std::same_as<std::size_t>;
      { c.unit() } -> std::same_as<typename C::index_type>;
      { c.neutrals() } -> std::same_as<std::vector<typename C::index_type>>;
      { c.contains(i) } -> std::same_as<bool>;
      { c.decompositions(i, n) } -> std::same_as<std::vector<std::pair<typename C::index_type, typename C::index_type>>>;
      { c.elements_up_to(n) } -> std::same_as<std::vector<typename C::index_type>>;
      { c.name() } -> std::convertible_to<std::string>;
    };

struct NatIndex {
  std::size_t n = 0;
  friend auto operator<=>(const NatIndex&, const NatIndex&) = default;
};

// (N, +): powers of a single formal variable.
struct NatCategory {
  using index_type = NatIndex;

  std::optional<NatIndex> compose(NatIndex a, NatIndex b) const { return NatIndex{a.n + b.n}; }
  std::size_t ord(NatIndex a) const { return a.n; }
  NatIndex unit() const { return {0}; }
  std::vector<NatIndex> neutrals() const { return {NatIndex{0}}; }
  bool contains(NatIndex) const { return true; }
  std::vector<std::pair<NatIndex, NatIndex>> decompositions(NatIndex k, std::size_t max_ord) const;
  std::vector<NatIndex> elements_up_to(std::size_t n) const;
  std::string name() const { return "nat"; }

  friend bool operator==(const NatCategory&, const NatCategory&) = default;
};

using Letter = std::uint32_t;

// A word over the letters 0..d-1. Ordered by length, then lexicographically.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> l) : letters(l) {}
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    return a.letters <=> b.letters;
  }
};

// The free monoid on d letters under concatenation; indexes the
// homogeneous components of the tensor algebra over a d-dimensional space.
class WordCategory {
public:
  using index_type = Word;

  WordCategory() = default;
  explicit WordCategory(std::size_t alphabet_size);

  std::size_t alphabet_size() const { return alphabet_size_; }

  std::optional<Word> compose(const Word& a, const Word& b) const;
  std::size_t ord(const Word& w) const { return w.size(); }
  Word unit() const { return {}; }
  std::vector<Word> neutrals() const { return {Word{}}; }
  bool contains(const Word& w) const;
  std::vector<std::pair<Word, Word>> decompositions(const Word& k, std::size_t max_ord) const;
  std::vector<Word> elements_up_to(std::size_t n) const;
  std::string name() const { return "word"; }

  friend bool operator==(const WordCategory&, const WordCategory&) = default;

private:
  std::size_t alphabet_size_ = 1;
};

static_assert(GradedCategory<NatCategory>);
static_assert(GradedCategory<WordCategory>);

} // namespace gs
