#include "gs/tensor_sym.hpp"

namespace gs {

std::shared_ptr<const std::vector<Word>> OrbitCache::orbit(const Word& w) {
  Word key = w;
  std::sort(key.letters.begin(), key.letters.end());
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto words = std::make_shared<std::vector<Word>>();
  Word current = key;
  do {
    words->push_back(current);
  } while (std::next_permutation(current.letters.begin(), current.letters.end()));
  cache_.emplace(std::move(key), words);
  return words;
}

OrbitCache& OrbitCache::global() {
  static OrbitCache cache;
  return cache;
}

} // namespace gs
