#include "mzv/word.hpp"

#include "mzv/errors.hpp"

#include <numeric>

namespace mzv {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int k : parts_)
    if (k < 1) throw std::invalid_argument("composition parts must be >= 1");
}

int Composition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Word word_from_composition(const Composition& c) {
  Word w;
  for (int k : c.parts()) w = concat(w, Word::z(k));
  return w;
}

Composition composition_from_word(const Word& w) {
  if (!w.in_h1() || w.empty())
    throw NotInH1("word '" + w.letters() + "' has no composition form (must be nonempty and end in y)");
  std::vector<int> parts;
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ++run;
    if (w.at(i) == Letter::y) {
      parts.push_back(run);
      run = 0;
    }
  }
  return Composition(std::move(parts));
}

}  // namespace mzv
