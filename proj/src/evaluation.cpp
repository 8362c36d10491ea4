#include "mzv/evaluation.hpp"

#include "mzv/errors.hpp"
#include "mzv/linmaps.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace mzv {

namespace {

double pow_inv(double inv_m, int k) {
  double r = 1.0, b = inv_m;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

// Truncation tail of a depth-n strict sum with leading exponent k = k1 >= 2,
// cut at m1 <= N. Crude but rigorous domination: the number of choices for
// m2 > ... > mn below m1 is at most (number of compositions-free count)
// m1^{n-1}/(n-1)! with each factor m_j^{-k_j} <= 1, refined to the standard
//
//   sum_{m > N} m^{-k} (1 + ln m)^{n-1}  <=  I(N, k, n-1) [+ peak term]
//
// where the (1 + ln m)^{n-1} majorizes the inner harmonic-type sums
// (each inner index contributes at most 1 + ln m1 since k_j >= 1), and
//
//   I(N, k, j) = ∫_N^∞ t^{-k} (1 + ln t)^j dt
//              = N^{1-k} (1+ln N)^j / (k-1) + j/(k-1) · I(N, k, j-1)
//
// by integration by parts. The integral bounds the sum only where the
// integrand is decreasing; it peaks at t* = exp(j/k - 1) < e, so for any
// real cutoff (N >= 1) at most one extra max-term f(t*) is needed, and for
// N >= 2 none — kept anyway, it costs nothing and closes the edge case.
double tail_integral(long limit, int k, int j) {
  const double n = static_cast<double>(limit);
  const double a = std::pow(n, 1.0 - k) / (k - 1);
  const double u = 1.0 + std::log(n);
  double acc = a;  // I(N, k, 0)
  double upow = 1.0;
  for (int t = 1; t <= j; ++t) {
    upow *= u;
    acc = a * upow + t * acc / (k - 1);
  }
  const double peak = std::exp(static_cast<double>(j) / k - 1.0);
  if (n < peak)
    acc += std::pow(peak, -static_cast<double>(k)) * std::pow(1.0 + std::log(peak), j);
  return acc;
}

// Floating-point pad: the partial sums are <= zeta(2)^depth in magnitude and
// accumulate <= a few ulps per added term, so relative error stays well under
// 1e-12 per million terms. Widening the reported bound by this factor keeps
// |true - approx| <= tail_bound an honest inequality for doubles, not just
// for reals.
double padded(double bound, long limit) { return bound * (1.0 + 1e-12 * static_cast<double>(limit)); }

struct EvalKey {
  std::uint64_t bits;
  std::uint32_t len;
  long limit;
  friend bool operator==(const EvalKey&, const EvalKey&) = default;
};

struct EvalKeyHash {
  std::size_t operator()(const EvalKey& k) const {
    std::uint64_t h = (k.bits + 0x9e3779b97f4a7c15ull) * 0xbf58476d1ce4e5b9ull;
    h ^= (std::uint64_t{k.len} << 32) ^ static_cast<std::uint64_t>(k.limit);
    h = (h ^ (h >> 29)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

thread_local std::unordered_map<EvalKey, NumericValue, EvalKeyHash> g_eval_memo;

NumericValue eval_admissible(const Composition& c, long limit) {
  const auto& ks = c.parts();
  const int n = static_cast<int>(ks.size());
  // One sweep of m = 1..limit over the suffix partial sums:
  //   suffix[j] after step m holds sum over m >= m_j > ... > m_n >= 1.
  // Ascending j uses suffix[j+1] from step m-1, which is exactly the strict
  // inequality m_j = m > m_{j+1}.
  std::vector<double> suffix(static_cast<std::size_t>(n) + 2, 0.0);
  suffix[n + 1] = 1.0;
  for (long m = 1; m <= limit; ++m) {
    const double inv = 1.0 / static_cast<double>(m);
    for (int j = 1; j <= n; ++j) suffix[j] += pow_inv(inv, ks[j - 1]) * suffix[j + 1];
  }
  NumericValue out;
  out.approx = suffix[1];
  out.tail_bound = padded(tail_integral(limit, ks[0], n - 1), limit);
  out.terms_used = limit;
  return out;
}

const NumericValue& eval_word_cached(const Word& w, long limit) {
  EvalKey key{w.bits(), static_cast<std::uint32_t>(w.size()), limit};
  if (auto it = g_eval_memo.find(key); it != g_eval_memo.end()) return it->second;
  NumericValue v = eval_admissible(composition_from_word(w), limit);
  return g_eval_memo.emplace(key, v).first->second;
}

void check_limit(const Composition& c, long limit) {
  if (limit < static_cast<long>(c.depth()))
    throw std::invalid_argument("limit must be at least the depth of the composition");
}

}  // namespace

NumericValue eval_mzv(const Composition& c, long limit) {
  if (!c.admissible()) throw Divergent("divergent: k1 must be >= 2");
  check_limit(c, limit);
  return eval_admissible(c, limit);
}

NumericValue eval_strict(const NcPoly& p, long limit) {
  NumericValue out;
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) {
      out.approx += to_double(c);
      continue;
    }
    if (!w.in_h0()) {
      if (w.in_h1())
        throw Divergent("divergent: k1 must be >= 2 (word '" + w.letters() + "')");
      throw NotInH0("eval: word '" + w.letters() + "' is outside Q + xHy");
    }
    if (limit < static_cast<long>(w.depth()))
      throw std::invalid_argument("limit must be at least the depth of every word");
    const NumericValue& v = eval_word_cached(w, limit);
    const double cd = to_double(c);
    out.approx += cd * v.approx;
    out.tail_bound += std::abs(cd) * v.tail_bound;
    out.terms_used = limit;
  }
  return out;
}

NumericValue eval_nmzv(const Composition& c, long limit) {
  if (!c.admissible()) throw Divergent("divergent: k1 must be >= 2");
  check_limit(c, limit);
  return eval_strict(to_strict_basis(NcPoly::from_word(word_from_composition(c))), limit);
}

NumericValue eval_nonstrict(const NcPoly& p, long limit) {
  // Validate against p itself so error messages cite the caller's words,
  // then push through the basis change (which cannot leave Q + xHy).
  for (const auto& [w, c] : p.terms()) {
    if (w.empty() || w.in_h0()) continue;
    if (w.in_h1()) throw Divergent("divergent: k1 must be >= 2 (word '" + w.letters() + "')");
    throw NotInH0("eval: word '" + w.letters() + "' is outside Q + xHy");
  }
  return eval_strict(to_strict_basis(p), limit);
}

RegValue eval_regularized(const NcPoly& p, ProductKind kind, long limit) {
  const Decomposition d = decompose(p, kind);
  RegValue out;
  out.coefficients.reserve(d.coeffs.size());
  for (const NcPoly& c : d.coeffs)
    out.coefficients.push_back(is_nonstrict(kind) ? eval_nonstrict(c, limit)
                                                  : eval_strict(c, limit));
  return out;
}

}  // namespace mzv
