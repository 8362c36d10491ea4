#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mzv {

enum class Letter : std::uint8_t { x = 0, y = 1 };

inline char to_char(Letter u) { return u == Letter::x ? 'x' : 'y'; }
inline Letter swap_xy(Letter u) { return u == Letter::x ? Letter::y : Letter::x; }

/// Word over the alphabet {x, y}, packed one bit per letter: bit i holds the
/// i-th letter from the left, with x = 0 and y = 1. The empty word is the
/// unit of the word ring. Weight = length, depth = number of y's.
///
/// Capacity is 64 letters, which is far beyond anything the evaluation or
/// relation machinery can digest anyway; operations that would exceed it
/// throw std::length_error rather than silently truncating.
class Word {
public:
  static constexpr std::size_t capacity = 64;

  constexpr Word() = default;

  static Word from_letters(std::string_view s) {
    check_size(s.size());
    Word w;
    for (char c : s) {
      if (c != 'x' && c != 'y') throw std::invalid_argument("word letters must be 'x' or 'y'");
      w = w.append(c == 'x' ? Letter::x : Letter::y);
    }
    return w;
  }

  /// x^(k-1) y, the generator word for a single index k >= 1.
  static Word z(int k) {
    if (k < 1) throw std::invalid_argument("index must be >= 1");
    check_size(static_cast<std::size_t>(k));
    Word w;
    w.len_ = static_cast<std::uint32_t>(k);
    w.bits_ = std::uint64_t{1} << (k - 1);
    return w;
  }

  static Word letter(Letter u) {
    Word w;
    w.len_ = 1;
    w.bits_ = (u == Letter::y) ? 1u : 0u;
    return w;
  }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  std::size_t weight() const { return len_; }
  std::size_t depth() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  Letter at(std::size_t i) const { return static_cast<Letter>((bits_ >> i) & 1u); }
  Letter front() const { return at(0); }
  Letter back() const { return at(len_ - 1); }

  Word append(Letter u) const {
    check_size(len_ + std::size_t{1});
    Word w;
    w.len_ = len_ + 1;
    w.bits_ = bits_ | (std::uint64_t{u == Letter::y} << len_);
    return w;
  }

  Word prepend(Letter u) const {
    check_size(len_ + std::size_t{1});
    Word w;
    w.len_ = len_ + 1;
    w.bits_ = (bits_ << 1) | std::uint64_t{u == Letter::y};
    return w;
  }

  friend Word concat(const Word& a, const Word& b) {
    if (a.len_ == 0) return b;
    if (b.len_ == 0) return a;
    check_size(a.len_ + std::size_t{b.len_});
    Word w;
    w.len_ = a.len_ + b.len_;
    w.bits_ = a.bits_ | (b.bits_ << a.len_);  // a.len_ <= 63 here
    return w;
  }

  /// First n letters.
  Word prefix(std::size_t n) const {
    if (n > len_) throw std::out_of_range("prefix longer than word");
    Word w;
    w.len_ = static_cast<std::uint32_t>(n);
    w.bits_ = bits_ & low_mask(n);
    return w;
  }

  Word drop_front(std::size_t n) const {
    if (n > len_) throw std::out_of_range("cannot drop more letters than the word has");
    if (n == len_) return Word{};
    Word w;
    w.len_ = len_ - static_cast<std::uint32_t>(n);
    w.bits_ = bits_ >> n;  // n < len_ <= 64
    return w;
  }

  Word drop_back(std::size_t n = 1) const { return prefix(len_ - n); }

  bool in_h1() const { return len_ == 0 || back() == Letter::y; }
  bool in_h0() const { return len_ == 0 || (front() == Letter::x && back() == Letter::y); }

  /// Number of consecutive y's at the front; the elimination variable of the
  /// regularization algorithm.
  std::size_t leading_y_run() const {
    return static_cast<std::size_t>(std::countr_one(bits_));  // high bits are 0 by invariant
  }

  /// Splits a nonempty word of Q + Hy as z_k * rest. Callers guarantee the
  /// word ends in y (so it contains a y and the split exists).
  std::pair<int, Word> split_leading_z() const {
    std::size_t j = static_cast<std::size_t>(std::countr_zero(bits_));
    return {static_cast<int>(j) + 1, drop_front(j + 1)};
  }

  std::string letters() const {
    std::string s(len_, 'x');
    for (std::size_t i = 0; i < len_; ++i)
      if (at(i) == Letter::y) s[i] = 'y';
    return s;
  }

  std::uint64_t bits() const { return bits_; }

  friend bool operator==(const Word&, const Word&) = default;

private:
  static void check_size(std::size_t n) {
    if (n > capacity) throw std::length_error("word exceeds 64 letters");
  }
  static std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  std::uint64_t bits_ = 0;
  std::uint32_t len_ = 0;
};

/// The graded order every container and printer uses: weight first, then
/// depth, then left-to-right lexicographic with x < y. Total and canonical,
/// so iteration order (hence all output) is deterministic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    // the first differing position decides; b has y there iff a < b
    return (b.bits() >> std::countr_zero(d)) & 1u;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::uint64_t h = (w.bits() + w.size()) * 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

/// Index tuple (k_1, ..., k_n) with every part >= 1; the subscript view of
/// the word x^{k_1 - 1} y x^{k_2 - 1} y ... x^{k_n - 1} y. "Admissible"
/// (k_1 >= 2) is exactly the condition for the associated nested sums,
/// strict or not, to converge.
class Composition {
public:
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t depth() const { return parts_.size(); }
  int weight() const;
  bool admissible() const { return parts_.front() >= 2; }

  /// "2,1" — the form the CLI accepts for --comp.
  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
};

Word word_from_composition(const Composition& c);

/// Inverse of word_from_composition; throws NotInH1 for the unit word or any
/// word ending in x.
Composition composition_from_word(const Word& w);

}  // namespace mzv
