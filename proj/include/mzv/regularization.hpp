#pragma once

#include "mzv/products.hpp"

#include <vector>

namespace mzv {

/// p = sum_i  coeffs[i] (kind-product) y^(kind-power i),  coeffs[i] in Q + xHy.
///
/// Every element of Q + Hy has exactly one such expansion for each of the
/// four products; it is how divergent symbols acquire polynomial-in-T
/// regularized values.
struct Decomposition {
  ProductKind kind;
  std::vector<NcPoly> coeffs;  // index = power of y; at least one entry

  std::size_t degree() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) d = i;
    return d;
  }
};

/// Computes the expansion by triangular elimination on the leading-y run.
/// Throws NotInH1 when p has a word ending in x. Exact; degree is bounded
/// by the longest leading-y run in p.
Decomposition decompose(const NcPoly& p, ProductKind kind);

/// Multiplies the expansion back out. Throws NotInH0 if some coefficient
/// strays outside Q + xHy. Exact inverse of decompose.
NcPoly recompose(const Decomposition& d);

}  // namespace mzv
