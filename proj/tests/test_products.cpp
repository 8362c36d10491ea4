#include "mzv/errors.hpp"
#include "mzv/expr_io.hpp"
#include "mzv/linmaps.hpp"
#include "mzv/products.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mzv;

namespace {
NcPoly zp(std::initializer_list<int> ks) {
  return NcPoly::from_word(word_from_composition(Composition(ks)));
}
NcPoly wp(const char* s) { return NcPoly::from_word(Word::from_letters(s)); }
const std::initializer_list<ProductKind> all_kinds = {
    ProductKind::harmonic, ProductKind::shuffle, ProductKind::n_harmonic,
    ProductKind::n_shuffle};
}  // namespace

TEST_SUITE("products") {

TEST_CASE("unit laws") {
  oracle::Rng rng(11);
  for (ProductKind k : all_kinds)
    for (int t = 0; t < 20; ++t) {
      NcPoly p = requires_h1(k) ? rng.h1_poly(3, 6) : rng.any_poly(3, 6);
      CHECK(product(k, NcPoly::unit(), p) == p);
      CHECK(product(k, p, NcPoly::unit()) == p);
      CHECK(product(k, NcPoly{}, p).is_zero());
    }
}

TEST_CASE("harmonic product, frozen values") {
  // z2 * z3: interleave both ways plus the merged index
  CHECK(harmonic(zp({2}), zp({3})) == zp({2, 3}) + zp({3, 2}) + zp({5}));
  // oracle-derived: z1 * z21 = z121 + 2 z211 + z31 + z22
  CHECK(harmonic(zp({1}), zp({2, 1})) ==
        zp({1, 2, 1}) + zp({2, 1, 1}) * Rational(2) + zp({3, 1}) + zp({2, 2}));
  CHECK(harmonic(zp({2}), zp({2})) == zp({2, 2}) * Rational(2) + zp({4}));
}

TEST_CASE("n-harmonic product, frozen values") {
  // same interleavings, merged index signed
  CHECK(n_harmonic(zp({2}), zp({2})) == zp({2, 2}) * Rational(2) - zp({4}));
  CHECK(n_harmonic(zp({2}), zp({3})) == zp({2, 3}) + zp({3, 2}) - zp({5}));
  CHECK(n_harmonic(zp({1}), zp({2, 1})) ==
        zp({1, 2, 1}) + zp({2, 1, 1}) * Rational(2) - zp({3, 1}) - zp({2, 2}));
}

TEST_CASE("shuffle product, frozen values") {
  CHECK(shuffle(wp("y"), wp("y")) == wp("yy") * Rational(2));
  // all three interleavings of xy with y: coefficient 2 sits on xyy
  CHECK(shuffle(wp("xy"), wp("y")) == wp("xyy") * Rational(2) + wp("yxy"));
  CHECK(shuffle(zp({2}), zp({2})) == zp({2, 2}) * Rational(2) + zp({3, 1}) * Rational(4));
  CHECK(shuffle(wp("x"), wp("y")) == wp("xy") + wp("yx"));
}

TEST_CASE("n-shuffle product, frozen values") {
  CHECK(n_shuffle(wp("y"), wp("y")) == wp("yy") * Rational(2) - wp("xy") * Rational(2));
  CHECK(n_shuffle(wp("y"), wp("xy")) ==
        wp("yxy") + wp("xyy") * Rational(2) - wp("xxy") * Rational(3));
  CHECK(n_shuffle(zp({2}), zp({2})) ==
        zp({2, 2}) * Rational(2) + zp({3, 1}) * Rational(4) - zp({4}) * Rational(6));
  // expansion of y (n-shuffle) z2, rendered in canonical order
  CHECK(n_shuffle(zp({1}), zp({2})) ==
        zp({1, 2}) + zp({2, 1}) * Rational(2) - zp({3}) * Rational(3));
  CHECK(format_expr(n_shuffle(zp({1}), zp({2}))) == "-3*z(3) + 2*z(2,1) + z(1,2)");
}

TEST_CASE("harmonic kinds match the surjection-enumeration oracle") {
  oracle::Rng rng(2101);
  for (int t = 0; t < 200; ++t) {
    Word a = rng.h1_word(7), b = rng.h1_word(7);
    CHECK(product_words(ProductKind::harmonic, a, b) == oracle::stuffle(a, b, false));
    CHECK(product_words(ProductKind::n_harmonic, a, b) == oracle::stuffle(a, b, true));
  }
}

TEST_CASE("shuffle matches the interleaving-enumeration oracle") {
  oracle::Rng rng(2102);
  for (int t = 0; t < 200; ++t) {
    Word a = rng.word(0, 7), b = rng.word(0, 7);
    CHECK(product_words(ProductKind::shuffle, a, b) == oracle::interleave(a, b));
  }
}

TEST_CASE("n-shuffle agrees with conjugation by the basis change") {
  // independent route: map both factors to the strict basis, shuffle by
  // enumeration, map back
  oracle::Rng rng(2103);
  for (int t = 0; t < 100; ++t) {
    Word a = rng.h1_word(6), b = rng.h1_word(6);
    NcPoly via_conj = to_nonstrict_basis(
        shuffle(to_strict_basis(NcPoly::from_word(a)), to_strict_basis(NcPoly::from_word(b))));
    CHECK(product_words(ProductKind::n_shuffle, a, b) == via_conj);
  }
}

TEST_CASE("shuffle coefficients of two x-powers count binomially") {
  // x^3 sh x^4 = C(7,3) x^7
  Word x3 = Word::from_letters("xxx"), x4 = Word::from_letters("xxxx");
  NcPoly r = product_words(ProductKind::shuffle, x3, x4);
  CHECK(r.term_count() == 1);
  CHECK(r.coeff(Word::from_letters("xxxxxxx")) == 35);
}

TEST_CASE("commutativity and associativity, randomized") {
  oracle::Rng rng(314);
  for (ProductKind k : all_kinds) {
    for (int t = 0; t < 60; ++t) {
      NcPoly a = requires_h1(k) ? rng.h1_poly(2, 5) : rng.any_poly(2, 5);
      NcPoly b = requires_h1(k) ? rng.h1_poly(2, 5) : rng.any_poly(2, 5);
      NcPoly c = requires_h1(k) ? rng.h1_poly(2, 4) : rng.any_poly(2, 4);
      CHECK(product(k, a, b) == product(k, b, a));
      CHECK(product(k, product(k, a, b), c) == product(k, a, product(k, b, c)));
    }
  }
}

TEST_CASE("bilinearity, randomized") {
  oracle::Rng rng(315);
  for (ProductKind k : all_kinds)
    for (int t = 0; t < 40; ++t) {
      NcPoly a = requires_h1(k) ? rng.h1_poly(3, 5) : rng.any_poly(3, 5);
      NcPoly b = requires_h1(k) ? rng.h1_poly(3, 5) : rng.any_poly(3, 5);
      NcPoly c = requires_h1(k) ? rng.h1_poly(3, 5) : rng.any_poly(3, 5);
      Rational q = rng.coefficient();
      CHECK(product(k, a + b * q, c) == product(k, a, c) + product(k, b, c) * q);
    }
}

TEST_CASE("weight homogeneity and subring closure") {
  oracle::Rng rng(316);
  for (ProductKind k : all_kinds)
    for (int t = 0; t < 50; ++t) {
      Word a = requires_h1(k) ? rng.h1_word(6) : rng.word(1, 6);
      Word b = requires_h1(k) ? rng.h1_word(6) : rng.word(1, 6);
      NcPoly r = product_words(k, a, b);
      CHECK(weight_grade(r) == std::set<std::size_t>{a.weight() + b.weight()});
      if (a.in_h1() && b.in_h1()) CHECK(in_h1(r));
      if (a.in_h0() && b.in_h0()) CHECK(in_h0(r));
    }
}

TEST_CASE("harmonic kinds reject operands outside Q + Hy") {
  CHECK_THROWS_AS(harmonic(wp("yx"), zp({2})), NotInH1);
  CHECK_THROWS_AS(n_harmonic(zp({2}), wp("x")), NotInH1);
  CHECK_THROWS_AS(product_words(ProductKind::harmonic, Word::from_letters("yx"),
                                Word::from_letters("y")),
                  NotInH1);
  CHECK_NOTHROW(shuffle(wp("yx"), wp("x")));
  CHECK_NOTHROW(n_shuffle(wp("yx"), wp("x")));
}

}  // TEST_SUITE
