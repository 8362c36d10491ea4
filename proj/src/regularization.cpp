#include "mzv/regularization.hpp"

#include "mzv/errors.hpp"

#include <stdexcept>
#include <utility>

namespace mzv {

// For every kind, y ∘ (y^{m-1} u) = m · y^m u + (words with a leading-y run
// shorter than m). So the longest-run word in the state can be traded for a
// depth-one-lower word one T-level up plus strictly smaller corrections:
// repeat until no word starts with y and the levels are the coefficients.
// Termination: each step removes a maximal-run word and introduces only
// words of smaller run, so the multiset of runs drops in lexicographic
// (run-histogram) order.
Decomposition decompose(const NcPoly& p, ProductKind kind) {
  require_h1(p, "decompose");
  std::vector<NcPoly> levels{p};
  const Word y = Word::letter(Letter::y);

  for (;;) {
    std::size_t best_level = 0, best_run = 0;
    Word best_word;
    Rational best_coeff;
    for (std::size_t i = 0; i < levels.size(); ++i)
      for (const auto& [w, c] : levels[i].terms()) {
        const std::size_t run = w.leading_y_run();
        if (run > best_run) {
          best_run = run;
          best_level = i;
          best_word = w;
          best_coeff = c;
        }
      }
    if (best_run == 0) break;

    const auto m = static_cast<long>(best_run);
    const Word v = best_word.drop_front(1);
    NcPoly correction = product_words(kind, y, v);
    correction.add_term(best_word, Rational(-m));
    for (const auto& [w, c] : correction.terms())
      if (w.leading_y_run() >= best_run)
        throw std::logic_error("elimination did not shorten the leading-y run");

    const Rational scale = best_coeff / m;
    levels[best_level].add_term(best_word, -best_coeff);
    add_scaled(levels[best_level], correction, -scale);
    if (levels.size() <= best_level + 1) levels.resize(best_level + 2);
    levels[best_level + 1].add_term(v, scale);
  }

  while (levels.size() > 1 && levels.back().is_zero()) levels.pop_back();
  return Decomposition{kind, std::move(levels)};
}

NcPoly recompose(const Decomposition& d) {
  const NcPoly y = NcPoly::from_word(Word::letter(Letter::y));
  NcPoly ypow = NcPoly::unit();
  NcPoly out;
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
    if (i > 0) ypow = product(d.kind, ypow, y);
    if (d.coeffs[i].is_zero()) continue;
    require_h0(d.coeffs[i], "recompose coefficient");
    out += product(d.kind, d.coeffs[i], ypow);
  }
  return out;
}

}  // namespace mzv
