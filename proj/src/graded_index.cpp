#include "gs/graded_index.hpp"

namespace gs {

std::vector<std::pair<NatIndex, NatIndex>> NatCategory::decompositions(NatIndex k, std::size_t max_ord) const {
  if (k.n > max_ord) {
    throw StructuralError("index order exceeds the enumeration bound");
  }
  std::vector<std::pair<NatIndex, NatIndex>> out;
  out.reserve(k.n + 1);
  for (std::size_t i = 0; i <= k.n; ++i) out.push_back({NatIndex{i}, NatIndex{k.n - i}});
  return out;
}

std::vector<NatIndex> NatCategory::elements_up_to(std::size_t n) const {
  std::vector<NatIndex> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back({i});
  return out;
}

WordCategory::WordCategory(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size == 0) {
    throw StructuralError("alphabet must have at least one letter");
  }
}

std::optional<Word> WordCategory::compose(const Word& a, const Word& b) const {
  Word w;
  w.letters.reserve(a.size() + b.size());
  w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

bool WordCategory::contains(const Word& w) const {
  for (Letter l : w.letters)
    if (l >= alphabet_size_) return false;
  return true;
}

std::vector<std::pair<Word, Word>> WordCategory::decompositions(const Word& k, std::size_t max_ord) const {
  if (k.size() > max_ord) {
    throw StructuralError("index order exceeds the enumeration bound");
  }
  std::vector<std::pair<Word, Word>> out;
  out.reserve(k.size() + 1);
  for (std::size_t cut = 0; cut <= k.size(); ++cut) {
    Word left(std::vector<Letter>(k.letters.begin(), k.letters.begin() + static_cast<std::ptrdiff_t>(cut)));
    Word right(std::vector<Letter>(k.letters.begin() + static_cast<std::ptrdiff_t>(cut), k.letters.end()));
    out.emplace_back(std::move(left), std::move(right));
  }
  return out;
}

std::vector<Word> WordCategory::elements_up_to(std::size_t n) const {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter l = 0; l < alphabet_size_; ++l) {
        Word w = out[i];
        w.letters.push_back(l);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

} // namespace gs
