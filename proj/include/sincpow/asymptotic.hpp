#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "series.hpp"

namespace sincpow {

// Table of the bivariate expansion coefficients b_{k,l}. Non-zero mass lives
// on ceil(k/2) <= l <= k-1 only, and exactly those keys are stored (a stored
// value may still be zero once the part-size cap truncates a composition).
struct BTable {
  int truncation_order;  // largest admissible part size
  int k_max;
  std::map<std::pair<int, int>, Rational> entries;

  bool contains(int k, int l) const {
    return entries.count({k, l}) != 0;
  }
  const Rational& at(int k, int l) const {
    auto it = entries.find({k, l});
    if (it == entries.end())
      throw std::out_of_range("BTable::at: (k,l) outside stored support");
    return it->second;
  }
};

// Coefficients of exp(E) where E(t,m) = sum_{kap=2}^{K} a_{2 kap} 3^kap t^kap
// m^(kap-1), taken from the log(sin x / x) series. Each E term is a monomial
// in m, so the standard exp recurrence in t splits per m-degree:
//   g[k][l] = (1/k) sum_kap kap * e_kap * g[k-kap][l-kap+1].
inline BTable b_coefficients(const SeriesCoeffs& logsinc, int K, int k_max) {
  if (K < 2) throw std::invalid_argument("b_coefficients: truncation order must be >= 2");
  if (k_max < 2) throw std::invalid_argument("b_coefficients: k_max must be >= 2");
  int kap_hi = std::min(K, k_max);
  if (logsinc.degree_bound < 2 * kap_hi)
    throw std::invalid_argument("b_coefficients: series not computed far enough");

  std::vector<Rational> e(static_cast<std::size_t>(kap_hi) + 1);
  for (int kap = 2; kap <= kap_hi; ++kap)
    e[kap] = logsinc.at(2 * kap) * make_rational(pow_int(Int(3), kap), Int(1));

  int l_max = k_max - 1;
  std::vector<std::vector<Rational>> g(
      static_cast<std::size_t>(k_max) + 1,
      std::vector<Rational>(static_cast<std::size_t>(l_max) + 1));
  g[0][0] = 1;
  for (int k = 1; k <= k_max; ++k)
    for (int l = 0; l <= l_max; ++l) {
      Rational acc;
      for (int kap = 2; kap <= std::min(kap_hi, k); ++kap) {
        int lp = l - (kap - 1);
        if (lp < 0) continue;
        acc += Rational(kap) * e[kap] * g[k - kap][lp];
      }
      g[k][l] = acc / k;
    }

  BTable t{K, k_max, {}};
  for (int k = 2; k <= k_max; ++k)
    for (int l = (k + 1) / 2; l <= k - 1; ++l)
      t.entries[{k, l}] = g[k][l];
  return t;
}

inline BTable b_coefficients(int K, int k_max) {
  return b_coefficients(series_log_sinc(2 * std::min(K, k_max)), K, k_max);
}

// sqrt(3 pi / (2n)) * sum_{l=0}^{order} c[l] n^(-l); c[0] = 1.
struct AsymptoticExpansion {
  int order;
  std::vector<Rational> c;
};

// c_l = sum_{k=l+1}^{2l} b_{k,l} (2k-1)!!. The default part-size cap
// max(2L, 4) already admits every composition that can contribute through
// order L, so raising it further cannot change the result.
inline AsymptoticExpansion asymptotic_coefficients(int L, int K) {
  if (L < 1) throw std::invalid_argument("asymptotic_coefficients: order must be >= 1");
  BTable bt = b_coefficients(K, 2 * L);
  AsymptoticExpansion ex{L, std::vector<Rational>(static_cast<std::size_t>(L) + 1)};
  ex.c[0] = 1;
  for (int l = 1; l <= L; ++l) {
    Rational acc;
    for (int k = l + 1; k <= 2 * l; ++k)
      acc += bt.at(k, l) * make_rational(double_factorial(2 * k - 1), Int(1));
    ex.c[static_cast<std::size_t>(l)] = acc;
  }
  return ex;
}

inline AsymptoticExpansion asymptotic_coefficients(int L) {
  return asymptotic_coefficients(L, std::max(2 * L, 4));
}

// Exact rational value of sum_{l=0}^{order} c_l n^(-l).
inline Rational expansion_partial_sum(const AsymptoticExpansion& ex, unsigned long n) {
  if (n == 0) throw std::invalid_argument("expansion_partial_sum: n must be >= 1");
  Rational acc;
  Rational inv_n = make_rational(Int(1), Int(n));
  for (int l = ex.order; l >= 0; --l)
    acc = acc * inv_n + ex.c[static_cast<std::size_t>(l)];
  return acc;
}

// Floating image of the order-L approximation at n. The coefficient sum is
// exact; only the sqrt prefactor and one final product round.
inline BigFloat asympt_eval(unsigned long n, const AsymptoticExpansion& ex,
                            mpfr_prec_t prec) {
  if (n == 0) throw std::invalid_argument("asympt_eval: n must be >= 1");
  if (prec < 64) throw std::invalid_argument("asympt_eval: precision must be >= 64");
  Rational s = expansion_partial_sum(ex, n);
  BigFloat w = BigFloat::pi(prec + 64) * make_rational(Int(3), Int(2) * Int(n));
  return round_to(sqrt(w) * s, prec);
}

inline BigFloat asympt_eval(unsigned long n, int L, mpfr_prec_t prec) {
  return asympt_eval(n, asymptotic_coefficients(L), prec);
}

}  // namespace sincpow
