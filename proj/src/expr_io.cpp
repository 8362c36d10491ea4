#include "mzv/expr_io.hpp"

#include "mzv/errors.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace mzv {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Recursive-descent reader over a string_view; `i` is the byte offset
/// reported in ParseError.
struct Reader {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(pos, msg);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool at_end() const { return i >= s.size(); }
  char peek() const { return s[i]; }

  void expect(char c) {
    skip_ws();
    if (at_end() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }

  Integer read_digits() {
    if (at_end() || !is_digit(s[i])) fail("expected digits");
    Integer v = 0;
    while (!at_end() && is_digit(s[i])) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  }

  /// Bounded variant for z-indices, where anything past the word capacity is
  /// nonsense regardless of sign.
  int read_small_int(const char* what) {
    skip_ws();
    std::size_t pos = i;
    bool neg = false;
    if (!at_end() && s[i] == '-') {
      neg = true;
      ++i;
    }
    Integer v = read_digits();
    if (neg) v = -v;
    if (v < 1) fail_at(pos, std::string(what) + " must be >= 1");
    if (v > static_cast<int>(Word::capacity))
      fail_at(pos, std::string(what) + " exceeds the 64-letter capacity");
    return v.convert_to<int>();
  }

  Word read_z_atom() {
    std::size_t pos = i;
    ++i;  // 'z'
    expect('(');
    std::vector<int> parts{read_small_int("z index")};
    for (;;) {
      skip_ws();
      if (!at_end() && s[i] == ',') {
        ++i;
        parts.push_back(read_small_int("z index"));
      } else {
        break;
      }
    }
    expect(')');
    try {
      return word_from_composition(Composition(std::move(parts)));
    } catch (const std::length_error&) {
      fail_at(pos, "word exceeds 64 letters");
    }
  }

  Word read_w_atom() {
    ++i;  // 'w'
    expect('(');
    skip_ws();
    std::size_t pos = i;
    std::string letters;
    while (!at_end() && (s[i] == 'x' || s[i] == 'y')) {
      letters += s[i];
      ++i;
    }
    if (letters.empty()) fail("expected letters 'x'/'y'");
    if (letters.size() > Word::capacity) fail_at(pos, "word exceeds 64 letters");
    expect(')');
    return Word::from_letters(letters);
  }

  Word read_atom() {
    skip_ws();
    if (at_end()) fail("expected an atom");
    switch (peek()) {
      case 'z': return read_z_atom();
      case 'w': return read_w_atom();
      case '1': ++i; return Word{};
      default: fail("expected 'z(...)', 'w(...)' or '1'");
    }
  }

  /// term := [rational '*'] atom, plus the bare-'1' (and bare-'0')
  /// disambiguation: digits not followed by '*' must be exactly those atoms.
  std::pair<Rational, Word> read_term() {
    skip_ws();
    if (at_end()) fail("expected a term");
    char c = peek();
    if (c == 'z' || c == 'w') return {Rational(1), read_atom()};
    if (c != '-' && !is_digit(c)) fail("expected a term (coefficient, 'z(...)', 'w(...)' or '1')");

    bool neg = false;
    if (c == '-') {
      ++i;
      if (at_end() || !is_digit(peek())) fail("expected digits after '-'");
      neg = true;
    }
    Integer num = read_digits();
    Integer den = 1;
    bool has_slash = false;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++i;
      skip_ws();
      std::size_t pos = i;
      den = read_digits();
      if (den.is_zero()) fail_at(pos, "denominator must be positive");
      has_slash = true;
      skip_ws();
    }
    if (!at_end() && peek() == '*') {
      ++i;
      Word w = read_atom();
      Rational r(num, den);
      return {neg ? Rational(-r) : r, w};
    }
    if (!neg && !has_slash && num == 1) return {Rational(1), Word{}};
    if (!neg && !has_slash && num.is_zero()) return {Rational(0), Word{}};
    fail("expected '*' after coefficient");
  }

  NcPoly read_expr() {
    NcPoly p;
    skip_ws();
    if (at_end()) fail("empty expression");
    {
      auto [c, w] = read_term();
      p.add_term(w, c);
    }
    for (;;) {
      skip_ws();
      if (at_end()) break;
      int sign;
      if (peek() == '+') {
        sign = 1;
      } else if (peek() == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-' between terms");
      }
      ++i;
      auto [c, w] = read_term();
      p.add_term(w, sign < 0 ? Rational(-c) : c);
    }
    return p;
  }
};

}  // namespace

NcPoly parse_expr(std::string_view text) {
  Reader r{text};
  return r.read_expr();
}

std::string format_word(const Word& w, FormatStyle style) {
  if (w.empty()) return "1";
  if (style == FormatStyle::compositions && w.in_h1())
    return "z(" + composition_from_word(w).str() + ")";
  return "w(" + w.letters() + ")";
}

std::string format_expr(const NcPoly& p, FormatStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (mag == 1 && !neg)
        out += format_word(w, style);
      else
        out += to_string(c) + "*" + format_word(w, style);
      first = false;
      continue;
    }
    out += neg ? " - " : " + ";
    if (mag == 1)
      out += format_word(w, style);
    else
      out += to_string(mag) + "*" + format_word(w, style);
  }
  return out;
}

Rational rational_from_string(const std::string& s) {
  std::size_t i = 0;
  auto bad = [&]() -> Rational { throw ParseError(i, "malformed rational '" + s + "'"); };
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i == num_start) return bad();
  Integer num(s.substr(0, i));
  Integer den = 1;
  if (i < s.size()) {
    if (s[i] != '/') return bad();
    ++i;
    std::size_t den_start = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    if (i == den_start || i != s.size()) return bad();
    den = Integer(s.substr(den_start));
    if (den.is_zero()) throw ParseError(den_start, "denominator must be positive");
  }
  return Rational(num, den);
}

nlohmann::ordered_json poly_to_json(const NcPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : p.terms())
    terms.push_back({{"coeff", to_string(c)}, {"word", w.letters()}});
  return nlohmann::ordered_json{{"terms", std::move(terms)}};
}

NcPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError(0, "expected an object with a 'terms' array");
  NcPoly p;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("word") ||
        !t["coeff"].is_string() || !t["word"].is_string())
      throw ParseError(0, "each term needs string fields 'coeff' and 'word'");
    Word w;
    try {
      w = Word::from_letters(t["word"].get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(0, e.what());
    }
    p.add_term(w, rational_from_string(t["coeff"].get<std::string>()));
  }
  return p;
}

}  // namespace mzv
