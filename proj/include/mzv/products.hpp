#pragma once

#include "mzv/ncpoly.hpp"

#include <string_view>

namespace mzv {

/// The four bilinear products.
///
///   harmonic     quasi-shuffle product of the strict nested sums; defined
///                on Q + Hy.
///   shuffle      interleaving product of iterated-integral words; defined
///                on all of H.
///   n_harmonic   the non-strict variant of harmonic: the merge term enters
///                with a minus sign. Defined on Q + Hy.
///   n_shuffle    the non-strict variant of shuffle: two boundary correction
///                terms with the first letter swapped are subtracted.
///
/// All four are commutative and associative, preserve weight, and restrict
/// to Q + xHy; the empty word is the unit of each.
enum class ProductKind { harmonic, shuffle, n_harmonic, n_shuffle };

std::string_view to_string(ProductKind k);

/// The harmonic pair is only defined on Q + Hy.
inline bool requires_h1(ProductKind k) {
  return k == ProductKind::harmonic || k == ProductKind::n_harmonic;
}

/// True for the products adapted to non-strict sums.
inline bool is_nonstrict(ProductKind k) {
  return k == ProductKind::n_harmonic || k == ProductKind::n_shuffle;
}

/// Product of two single words. Memoized per thread, since the bilinear
/// expansion of polynomial operands revisits the same word pairs heavily.
NcPoly product_words(ProductKind kind, const Word& a, const Word& b);

/// Bilinear extension to polynomials. Throws NotInH1 if a harmonic-kind
/// operand has a word ending in x.
NcPoly product(ProductKind kind, const NcPoly& p, const NcPoly& q);

inline NcPoly harmonic(const NcPoly& p, const NcPoly& q) {
  return product(ProductKind::harmonic, p, q);
}
inline NcPoly shuffle(const NcPoly& p, const NcPoly& q) {
  return product(ProductKind::shuffle, p, q);
}
inline NcPoly n_harmonic(const NcPoly& p, const NcPoly& q) {
  return product(ProductKind::n_harmonic, p, q);
}
inline NcPoly n_shuffle(const NcPoly& p, const NcPoly& q) {
  return product(ProductKind::n_shuffle, p, q);
}

}  // namespace mzv
