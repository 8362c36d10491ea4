#include "mzv/ncpoly.hpp"

#include "mzv/errors.hpp"

namespace mzv {

NcPoly NcPoly::from_word(const Word& w, const Rational& coeff) {
  NcPoly p;
  p.add_term(w, coeff);
  return p;
}

Rational NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NcPoly operator-(NcPoly a) {
  for (auto& [w, v] : a.terms_) v = -v;
  return a;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

void add_scaled(NcPoly& r, const NcPoly& p, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : p.terms()) r.add_term(w, v * c);
}

NcPoly left_concat(const Word& w, const NcPoly& p) {
  NcPoly r;
  for (const auto& [u, c] : p.terms()) r.add_term(concat(w, u), c);
  return r;
}

std::string_view to_string(SubringTag t) {
  switch (t) {
    case SubringTag::h0: return "H0";
    case SubringTag::h1: return "H1";
    case SubringTag::h: return "H";
  }
  return "?";
}

bool in_h1(const NcPoly& p) {
  for (const auto& [w, c] : p.terms())
    if (!w.in_h1()) return false;
  return true;
}

bool in_h0(const NcPoly& p) {
  for (const auto& [w, c] : p.terms())
    if (!w.in_h0()) return false;
  return true;
}

SubringTag membership(const NcPoly& p) {
  bool h0 = true, h1 = true;
  for (const auto& [w, c] : p.terms()) {
    h0 = h0 && w.in_h0();
    h1 = h1 && w.in_h1();
    if (!h1) break;
  }
  return h0 ? SubringTag::h0 : h1 ? SubringTag::h1 : SubringTag::h;
}

void require_h1(const NcPoly& p, std::string_view context) {
  for (const auto& [w, c] : p.terms())
    if (!w.in_h1())
      throw NotInH1(std::string(context) + ": word '" + w.letters() + "' ends in x, outside Q + Hy");
}

void require_h0(const NcPoly& p, std::string_view context) {
  for (const auto& [w, c] : p.terms())
    if (!w.in_h0())
      throw NotInH0(std::string(context) + ": word '" + w.letters() + "' is outside Q + xHy");
}

std::set<std::size_t> weight_grade(const NcPoly& p) {
  std::set<std::size_t> s;
  for (const auto& [w, c] : p.terms()) s.insert(w.weight());
  return s;
}

std::set<std::size_t> depth_grade(const NcPoly& p) {
  std::set<std::size_t> s;
  for (const auto& [w, c] : p.terms()) s.insert(w.depth());
  return s;
}

std::size_t max_weight(const NcPoly& p) {
  return p.is_zero() ? 0 : p.terms().rbegin()->first.weight();
}

}  // namespace mzv
