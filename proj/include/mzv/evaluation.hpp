#pragma once

#include "mzv/ncpoly.hpp"
#include "mzv/regularization.hpp"

#include <vector>

namespace mzv {

inline constexpr long default_eval_limit = 1'000'000;

/// A truncated-sum approximation together with a rigorous bound on the
/// truncation error: |true value - approx| <= tail_bound (the bound also
/// absorbs floating-point accumulation, see the comment in evaluation.cpp).
struct NumericValue {
  double approx = 0.0;
  double tail_bound = 0.0;
  long terms_used = 0;
};

/// Coefficients of the regularized value as a polynomial in the divergence
/// marker T: value = sum_i coefficients[i] T^i.
struct RegValue {
  std::vector<NumericValue> coefficients;
};

/// Strict nested sum over m1 > m2 > ... > mn >= 1 with m1 <= limit.
/// Throws Divergent when k1 = 1, std::invalid_argument when limit < depth.
NumericValue eval_mzv(const Composition& c, long limit = default_eval_limit);

/// Non-strict variant (indices m1 >= m2 >= ... >= mn >= 1), computed by
/// expanding through the strict basis. Same error conditions.
NumericValue eval_nmzv(const Composition& c, long limit = default_eval_limit);

/// Linear extension of eval_mzv to Q + xHy. The unit contributes exactly 1.
/// Words in (Q + Hy) \ (Q + xHy) throw Divergent, anything else NotInH0.
/// Summation order over terms is the canonical word order, so results are
/// bit-for-bit reproducible.
NumericValue eval_strict(const NcPoly& p, long limit = default_eval_limit);

/// Linear extension of eval_nmzv (the strict evaluation composed with
/// to_strict_basis).
NumericValue eval_nonstrict(const NcPoly& p, long limit = default_eval_limit);

/// Regularized evaluation: decompose p under `kind`, then evaluate each
/// Q + xHy coefficient with the matching (strict for harmonic/shuffle,
/// non-strict for the n_ variants) evaluation. For p in Q + xHy the result
/// has degree 0 and coefficient equal to the plain value.
RegValue eval_regularized(const NcPoly& p, ProductKind kind, long limit = default_eval_limit);

}  // namespace mzv
