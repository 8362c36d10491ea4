#pragma once

#include "mzv/ncpoly.hpp"

namespace mzv {

/// A ring endomorphism of the word ring given by its action on the two
/// letters, applied letterwise and extended linearly. General enough for
/// any substitution, though the library only ships the two it needs.
struct LetterSubstitution {
  NcPoly image_of_x;
  NcPoly image_of_y;
};

NcPoly apply_substitution(const LetterSubstitution& s, const NcPoly& p);

/// x -> x, y -> x + y. Unipotent (identity plus weight-preserving,
/// depth-lowering part), hence invertible.
const LetterSubstitution& subst_y_to_x_plus_y();

/// x -> x, y -> y - x; the inverse of subst_y_to_x_plus_y.
const LetterSubstitution& subst_y_to_y_minus_x();

/// The change of basis on Q + Hy that expands a non-strict-sum symbol into
/// strict-sum symbols: F y -> (y -> x+y applied to F) y on words, linearly
/// extended, with the unit fixed. Restricts to Q + xHy. Throws NotInH1.
NcPoly to_strict_basis(const NcPoly& p);

/// Its inverse, contracting strict-sum symbols into non-strict ones:
/// F y -> (y -> y-x applied to F) y.
NcPoly to_nonstrict_basis(const NcPoly& p);

}  // namespace mzv
