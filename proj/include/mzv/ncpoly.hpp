#pragma once

#include "mzv/rational.hpp"
#include "mzv/word.hpp"

#include <map>
#include <set>
#include <string_view>

namespace mzv {

/// Finite Q-linear combination of words, the working element type of the
/// whole library. Storage is canonical: terms live in a map ordered by
/// WordOrder and zero coefficients are erased on the spot, so structural
/// equality is mathematical equality and iteration order is reproducible.
class NcPoly {
public:
  using Terms = std::map<Word, Rational, WordOrder>;

  NcPoly() = default;

  static NcPoly unit() { return from_word(Word{}); }
  static NcPoly from_word(const Word& w, const Rational& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of w, zero when absent.
  Rational coeff(const Word& w) const;

  /// Adds c * w, erasing the term if the sum cancels.
  void add_term(const Word& w, const Rational& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  friend NcPoly operator-(NcPoly a);

  /// Concatenation product of the word ring, extended bilinearly. This is
  /// the plain noncommutative multiplication, not one of the four
  /// quasi-shuffle products (those live in products.hpp).
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

private:
  Terms terms_;
};

/// r += c * p, without materializing an intermediate.
void add_scaled(NcPoly& r, const NcPoly& p, const Rational& c);

/// w concatenated onto every term of p (used by the product recursions).
NcPoly left_concat(const Word& w, const NcPoly& p);

/// Smallest of the nested subrings Q + xHy ⊂ Q + Hy ⊂ H containing a given
/// element.
enum class SubringTag { h0, h1, h };
std::string_view to_string(SubringTag t);

bool in_h1(const NcPoly& p);
bool in_h0(const NcPoly& p);
SubringTag membership(const NcPoly& p);

/// Throw NotInH1 / NotInH0 naming the offending word; `context` says which
/// operand or operation complained.
void require_h1(const NcPoly& p, std::string_view context);
void require_h0(const NcPoly& p, std::string_view context);

/// Weights (resp. depths) of the words present; empty for the zero
/// polynomial. Singleton iff the element is homogeneous.
std::set<std::size_t> weight_grade(const NcPoly& p);
std::set<std::size_t> depth_grade(const NcPoly& p);

/// Largest weight among stored words; 0 for the zero polynomial.
std::size_t max_weight(const NcPoly& p);

}  // namespace mzv
