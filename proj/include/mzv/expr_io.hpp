#pragma once

#include "mzv/ncpoly.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace mzv {

/// How single words are rendered. `compositions` prints any word of Q + Hy
/// as z(k1,...,kn) and falls back to w(letters) otherwise; `letters` prints
/// w(letters) always. The unit word is "1" in both styles.
enum class FormatStyle { compositions, letters };

/// Parses the expression language used everywhere text enters the library:
///
///   expr     := term (('+'|'-') term)*
///   term     := [rational '*'] atom
///   atom     := 'z' '(' int (',' int)* ')' | 'w' '(' [xy]+ ')' | '1'
///   rational := int ['/' posint]
///
/// Whitespace between tokens is ignored. "0" is accepted for the zero
/// polynomial (it is what format_expr prints for one). Violations throw
/// ParseError carrying the byte offset.
NcPoly parse_expr(std::string_view text);

std::string format_word(const Word& w, FormatStyle style = FormatStyle::compositions);

/// Canonical text form: terms in the canonical word order, " + "/" - "
/// separators, coefficients of magnitude 1 suppressed. parse_expr is a left
/// inverse of this for every polynomial.
std::string format_expr(const NcPoly& p, FormatStyle style = FormatStyle::compositions);

/// {"terms": [{"coeff": "p/q", "word": "xyy"}, ...]} in canonical order;
/// the unit word serializes as "".
nlohmann::ordered_json poly_to_json(const NcPoly& p);

/// Inverse of poly_to_json; tolerates unsorted/duplicated terms (they are
/// re-canonicalized) but rejects malformed coefficients or letters.
NcPoly poly_from_json(const nlohmann::json& j);

}  // namespace mzv
