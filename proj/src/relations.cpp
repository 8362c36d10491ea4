#include "mzv/relations.hpp"

#include "mzv/errors.hpp"
#include "mzv/expr_io.hpp"
#include "mzv/products.hpp"

#include <cmath>
#include <cstdlib>

namespace mzv {

namespace {

NcPoly word_poly(const std::vector<int>& parts) {
  return NcPoly::from_word(word_from_composition(Composition(parts)));
}

std::vector<int> raised(std::vector<int> ks, std::size_t i) {
  ks[i] += 1;
  return ks;
}

// Replace k_i by the pair (k_i - j, j + 1); defined for 0 <= j <= k_i - 2.
std::vector<int> split(const std::vector<int>& ks, std::size_t i, int j) {
  std::vector<int> out;
  out.reserve(ks.size() + 1);
  out.insert(out.end(), ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(ks[i] - j);
  out.push_back(j + 1);
  out.insert(out.end(), ks.begin() + static_cast<std::ptrdiff_t>(i) + 1, ks.end());
  return out;
}

// Insert a new index 1 after position i (i = 0 puts it in front).
std::vector<int> inserted_one(const std::vector<int>& ks, std::size_t i) {
  std::vector<int> out;
  out.reserve(ks.size() + 1);
  out.insert(out.end(), ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(1);
  out.insert(out.end(), ks.begin() + static_cast<std::ptrdiff_t>(i), ks.end());
  return out;
}

NcPoly split_side(const std::vector<int>& ks) {
  NcPoly s;
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (int j = 0; j + 2 <= ks[i]; ++j) s += word_poly(split(ks, i, j));
  return s;
}

void require_admissible(const Composition& c, const char* which) {
  if (!c.admissible())
    throw NotAdmissible(std::string(which) + " composition (" + c.str() + ") must have k1 >= 2");
}

const char* eval_name(bool nonstrict) { return nonstrict ? "Zn" : "Z"; }

}  // namespace

std::string_view to_string(RelationFamily f) {
  switch (f) {
    case RelationFamily::finite_double_shuffle_mzv: return "fds";
    case RelationFamily::finite_double_shuffle_nmzv: return "nfds";
    case RelationFamily::extended_double_shuffle_mzv: return "eds";
    case RelationFamily::extended_double_shuffle_nmzv: return "neds";
    case RelationFamily::hoffman_mzv: return "hoffman";
    case RelationFamily::hoffman_nmzv: return "nhoffman";
    case RelationFamily::y_nshuffle_expansion: return "lemma32";
  }
  return "?";
}

bool is_nonstrict(RelationFamily f) {
  return f == RelationFamily::finite_double_shuffle_nmzv ||
         f == RelationFamily::extended_double_shuffle_nmzv ||
         f == RelationFamily::hoffman_nmzv;
}

RelationInstance finite_double_shuffle(const Composition& a, const Composition& b,
                                       bool nonstrict) {
  require_admissible(a, "first");
  require_admissible(b, "second");
  const NcPoly pa = word_poly(a.parts()), pb = word_poly(b.parts());
  const ProductKind hk = nonstrict ? ProductKind::n_harmonic : ProductKind::harmonic;
  const ProductKind sk = nonstrict ? ProductKind::n_shuffle : ProductKind::shuffle;
  RelationInstance r;
  r.family = nonstrict ? RelationFamily::finite_double_shuffle_nmzv
                       : RelationFamily::finite_double_shuffle_mzv;
  r.parameters = {a, b};
  r.elements = {product(hk, pa, pb) - product(sk, pa, pb)};
  r.description = std::string(eval_name(nonstrict)) + "[ z(" + a.str() + ") " +
                  (nonstrict ? "*n" : "*") + " z(" + b.str() + ") - z(" + a.str() + ") " +
                  (nonstrict ? "shn" : "sh") + " z(" + b.str() + ") ] = 0";
  return r;
}

RelationInstance extended_double_shuffle(const Composition& a, const Composition& b,
                                         bool nonstrict, RegSide side) {
  require_admissible(b, "second");
  const NcPoly pa = word_poly(a.parts()), pb = word_poly(b.parts());
  const ProductKind hk = nonstrict ? ProductKind::n_harmonic : ProductKind::harmonic;
  const ProductKind sk = nonstrict ? ProductKind::n_shuffle : ProductKind::shuffle;
  const NcPoly combo = product(hk, pa, pb) - product(sk, pa, pb);
  const ProductKind reg_kind = side == RegSide::harmonic ? hk : sk;
  RelationInstance r;
  r.family = nonstrict ? RelationFamily::extended_double_shuffle_nmzv
                       : RelationFamily::extended_double_shuffle_mzv;
  r.parameters = {a, b};
  r.side = side;
  r.elements = decompose(combo, reg_kind).coeffs;
  r.description = std::string("every T-coefficient of the ") +
                  (side == RegSide::harmonic ? "harmonic" : "shuffle") + "-side expansion of z(" +
                  a.str() + ") " + (nonstrict ? "*n" : "*") + " z(" + b.str() + ") - z(" +
                  a.str() + ") " + (nonstrict ? "shn" : "sh") + " z(" + b.str() +
                  ") vanishes under " + eval_name(nonstrict);
  return r;
}

RelationInstance hoffman(const Composition& c, bool nonstrict) {
  require_admissible(c, "the");
  const auto& ks = c.parts();
  const std::size_t n = ks.size();
  NcPoly raise_part;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational weight = nonstrict ? Rational(ks[i] - 1 + (i + 1 == n ? 1 : 0)) : Rational(1);
    add_scaled(raise_part, word_poly(raised(ks, i)), weight);
  }
  const NcPoly split_part = split_side(ks);
  RelationInstance r;
  r.family = nonstrict ? RelationFamily::hoffman_nmzv : RelationFamily::hoffman_mzv;
  r.parameters = {c};
  r.elements = {raise_part - split_part};
  r.description = std::string(eval_name(nonstrict)) + ": " + format_expr(raise_part) + " = " +
                  format_expr(split_part);
  return r;
}

NcPoly y_nshuffle_closed_form(const Composition& c) {
  const auto& ks = c.parts();
  const std::size_t n = ks.size();
  NcPoly out;
  for (std::size_t i = 0; i <= n; ++i) out += word_poly(inserted_one(ks, i));
  out += split_side(ks);
  for (std::size_t i = 0; i < n; ++i)
    add_scaled(out, word_poly(raised(ks, i)), Rational(-(ks[i] + (i + 1 == n ? 1 : 0))));
  return out;
}

RelationInstance y_nshuffle_identity(const Composition& c) {
  RelationInstance r;
  r.family = RelationFamily::y_nshuffle_expansion;
  r.parameters = {c};
  r.elements = {y_nshuffle_closed_form(c)};
  r.description = "y shn z(" + c.str() + ") = " + format_expr(r.elements[0]);
  return r;
}

VerifyReport verify(const RelationInstance& r, long limit, double tol) {
  VerifyReport rep;
  rep.limit = limit;
  rep.tol = tol;
  if (r.family == RelationFamily::y_nshuffle_expansion) {
    rep.exact = true;
    const NcPoly direct =
        product(ProductKind::n_shuffle, NcPoly::from_word(Word::letter(Letter::y)),
                word_poly(r.parameters.at(0).parts()));
    rep.pass = r.elements.size() == 1 && r.elements[0] == direct;
    return rep;
  }
  const bool nonstrict = is_nonstrict(r.family);
  rep.pass = true;
  for (std::size_t i = 0; i < r.elements.size(); ++i) {
    const NumericValue v =
        nonstrict ? eval_nonstrict(r.elements[i], limit) : eval_strict(r.elements[i], limit);
    VerifyCheck chk{i, v.approx, v.tail_bound, std::abs(v.approx) <= v.tail_bound + tol};
    rep.pass = rep.pass && chk.pass;
    rep.checks.push_back(chk);
  }
  return rep;
}

RelationInstance perturbed(const RelationInstance& r, const NcPoly& bump) {
  RelationInstance out = r;
  if (out.elements.empty()) out.elements.emplace_back();
  out.elements[0] += bump;
  return out;
}

}  // namespace mzv
