#include "mzv/products.hpp"

#include "mzv/errors.hpp"

#include <cstdint>
#include <unordered_map>

namespace mzv {

namespace {

struct PairKey {
  std::uint64_t abits, bbits;
  std::uint32_t alen, blen;
  std::uint8_t kind;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::uint64_t h = k.abits * 0x9e3779b97f4a7c15ull;
    h ^= k.bbits + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= (std::uint64_t{k.alen} << 33) ^ (std::uint64_t{k.blen} << 17) ^ k.kind;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// One memo per thread: lock-free, and different threads working on disjoint
// inputs don't thrash each other's tables.
thread_local std::unordered_map<PairKey, NcPoly, PairKeyHash> g_memo;

NcPoly compute(ProductKind kind, const Word& a, const Word& b);

// Returned references are only read before the next memo access (inserts can
// rehash); every call site below consumes the result immediately.
const NcPoly& memoized(ProductKind kind, const Word& a, const Word& b) {
  PairKey key{a.bits(), b.bits(), static_cast<std::uint32_t>(a.size()),
              static_cast<std::uint32_t>(b.size()), static_cast<std::uint8_t>(kind)};
  if (auto it = g_memo.find(key); it != g_memo.end()) return it->second;
  NcPoly r = compute(kind, a, b);
  return g_memo.emplace(std::move(key), std::move(r)).first->second;
}

NcPoly compute(ProductKind kind, const Word& a, const Word& b) {
  if (a.empty()) return NcPoly::from_word(b);
  if (b.empty()) return NcPoly::from_word(a);

  NcPoly r;
  if (requires_h1(kind)) {
    // a = z_k a', b = z_l b'; recurse on the three ways the outermost
    // summation indices can relate, the merged one signed by the kind.
    auto [k, at] = a.split_leading_z();
    auto [l, bt] = b.split_leading_z();
    r += left_concat(Word::z(k), memoized(kind, at, b));
    r += left_concat(Word::z(l), memoized(kind, a, bt));
    NcPoly merged = left_concat(Word::z(k + l), memoized(kind, at, bt));
    if (kind == ProductKind::n_harmonic)
      r -= merged;
    else
      r += merged;
  } else {
    // a = u1 a', b = u2 b'; interleave on the first letter. The non-strict
    // variant subtracts a swapped-letter boundary term whenever an operand
    // is a single letter.
    const Letter u1 = a.front(), u2 = b.front();
    const Word at = a.drop_front(1), bt = b.drop_front(1);
    r += left_concat(Word::letter(u1), memoized(kind, at, b));
    r += left_concat(Word::letter(u2), memoized(kind, a, bt));
    if (kind == ProductKind::n_shuffle) {
      if (at.empty()) r.add_term(concat(Word::letter(swap_xy(u1)), b), -1);
      if (bt.empty()) r.add_term(concat(Word::letter(swap_xy(u2)), a), -1);
    }
  }
  return r;
}

}  // namespace

std::string_view to_string(ProductKind k) {
  switch (k) {
    case ProductKind::harmonic: return "harmonic";
    case ProductKind::shuffle: return "shuffle";
    case ProductKind::n_harmonic: return "n_harmonic";
    case ProductKind::n_shuffle: return "n_shuffle";
  }
  return "?";
}

NcPoly product_words(ProductKind kind, const Word& a, const Word& b) {
  if (requires_h1(kind)) {
    if (!a.in_h1()) require_h1(NcPoly::from_word(a), "left operand of a harmonic-kind product");
    if (!b.in_h1()) require_h1(NcPoly::from_word(b), "right operand of a harmonic-kind product");
  }
  return memoized(kind, a, b);
}

NcPoly product(ProductKind kind, const NcPoly& p, const NcPoly& q) {
  if (requires_h1(kind)) {
    require_h1(p, "left operand of a harmonic-kind product");
    require_h1(q, "right operand of a harmonic-kind product");
  }
  NcPoly r;
  for (const auto& [wa, ca] : p.terms())
    for (const auto& [wb, cb] : q.terms()) {
      const NcPoly& t = memoized(kind, wa, wb);
      add_scaled(r, t, ca * cb);
    }
  return r;
}

}  // namespace mzv
