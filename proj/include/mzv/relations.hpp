#pragma once

#include "mzv/evaluation.hpp"
#include "mzv/ncpoly.hpp"

#include <string>
#include <vector>

namespace mzv {

/// The relation families this library can generate and check.
///
/// The *_mzv families assert that a strict evaluation vanishes, the *_nmzv
/// ones that a non-strict evaluation vanishes, and y_nshuffle_expansion is a
/// purely symbolic identity (its check needs no numerics at all).
enum class RelationFamily {
  finite_double_shuffle_mzv,    // Z(a * b - a sh b) = 0, both args admissible
  finite_double_shuffle_nmzv,   // non-strict products / non-strict evaluation
  extended_double_shuffle_mzv,  // every T-coefficient of the regularized
  extended_double_shuffle_nmzv, //   (a * b - a sh b) vanishes; only b admissible
  hoffman_mzv,                  // sum of raises = sum of splits
  hoffman_nmzv,                 // weighted raises = sum of splits
  y_nshuffle_expansion,         // closed form for y (n-shuffle) z-word
};

std::string_view to_string(RelationFamily f);
bool is_nonstrict(RelationFamily f);

/// Which product's expansion an extended-double-shuffle instance is read
/// through. Both give valid relations; the harmonic side is the usual
/// statement.
enum class RegSide { harmonic, shuffle };

/// One concrete relation. For most families `elements` has a single entry
/// that should evaluate to 0; for the extended families entry i is the
/// coefficient of T^i, each of which should evaluate to 0; for the symbolic
/// family the single entry is the closed form itself, checked against the
/// recursive product.
struct RelationInstance {
  RelationFamily family;
  std::vector<Composition> parameters;
  RegSide side = RegSide::harmonic;  // meaningful for the extended families
  std::vector<NcPoly> elements;
  std::string description;
};

/// Z((a harmonic b) - (a shuffle b)) = 0 and its non-strict twin.
/// Both compositions must be admissible.
RelationInstance finite_double_shuffle(const Composition& a, const Composition& b,
                                       bool nonstrict);

/// The regularized extension: a may be any composition (k1 = 1 allowed);
/// b must be admissible. The T-coefficients of the chosen-side expansion of
/// (a harmonic b) - (a shuffle b) all evaluate to 0. When a is admissible
/// too, the expansion has degree 0 and the single element coincides with the
/// finite_double_shuffle element.
RelationInstance extended_double_shuffle(const Composition& a, const Composition& b,
                                         bool nonstrict, RegSide side = RegSide::harmonic);

/// Sum over raising one index by 1 equals the sum over all splits
/// k_i -> (k_i - j, j + 1); the non-strict version weights each raise by
/// (k_i - 1, plus 1 more on the last index). Requires admissible input.
RelationInstance hoffman(const Composition& c, bool nonstrict);

/// Closed form of y (n-shuffle) z_{k1}...z_{kn}: inserting a 1 into every
/// gap, plus every split, minus weighted raises. Valid for any composition.
NcPoly y_nshuffle_closed_form(const Composition& c);

/// The symbolic identity instance carrying the closed form.
RelationInstance y_nshuffle_identity(const Composition& c);

struct VerifyCheck {
  std::size_t t_power = 0;
  double approx = 0.0;
  double tail_bound = 0.0;
  bool pass = false;
};

struct VerifyReport {
  bool pass = false;
  bool exact = false;  // true when the check was symbolic, no numerics
  long limit = 0;
  double tol = 0.0;
  std::vector<VerifyCheck> checks;  // empty for exact checks
};

/// Numerically (or symbolically, for the exact family) confirms an instance:
/// every element must satisfy |approx| <= tail_bound + tol under the
/// family's evaluation. Exceptions from evaluation propagate.
VerifyReport verify(const RelationInstance& r, long limit = default_eval_limit,
                    double tol = 1e-3);

/// Negative-control helper: returns a copy with `bump` added to the first
/// element, which should make verify fail for any honest instance.
RelationInstance perturbed(const RelationInstance& r, const NcPoly& bump);

}  // namespace mzv
