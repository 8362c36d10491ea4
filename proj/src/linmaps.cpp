#include "mzv/linmaps.hpp"

#include "mzv/errors.hpp"

namespace mzv {

NcPoly apply_substitution(const LetterSubstitution& s, const NcPoly& p) {
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    NcPoly img = NcPoly::unit();
    for (std::size_t i = 0; i < w.size(); ++i)
      img = img * (w.at(i) == Letter::x ? s.image_of_x : s.image_of_y);
    add_scaled(out, img, c);
  }
  return out;
}

const LetterSubstitution& subst_y_to_x_plus_y() {
  static const LetterSubstitution s{
      NcPoly::from_word(Word::letter(Letter::x)),
      NcPoly::from_word(Word::letter(Letter::x)) + NcPoly::from_word(Word::letter(Letter::y))};
  return s;
}

const LetterSubstitution& subst_y_to_y_minus_x() {
  static const LetterSubstitution s{
      NcPoly::from_word(Word::letter(Letter::x)),
      NcPoly::from_word(Word::letter(Letter::y)) - NcPoly::from_word(Word::letter(Letter::x))};
  return s;
}

namespace {

// Both basis changes have the same shape: substitute in the prefix, keep the
// final y. Only the substitution differs.
NcPoly change_basis(const NcPoly& p, const LetterSubstitution& s, std::string_view context) {
  require_h1(p, context);
  const NcPoly y = NcPoly::from_word(Word::letter(Letter::y));
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) {
      out.add_term(w, c);
      continue;
    }
    NcPoly img = apply_substitution(s, NcPoly::from_word(w.drop_back()));
    add_scaled(out, img * y, c);
  }
  return out;
}

}  // namespace

NcPoly to_strict_basis(const NcPoly& p) {
  return change_basis(p, subst_y_to_x_plus_y(), "to_strict_basis");
}

NcPoly to_nonstrict_basis(const NcPoly& p) {
  return change_basis(p, subst_y_to_y_minus_x(), "to_nonstrict_basis");
}

}  // namespace mzv
