#pragma once

#include <stdexcept>
#include <vector>

#include "exact_integral.hpp"
#include "rational.hpp"

namespace sincpow {

enum class Relation { less, equal, greater };

// Comparison of the central binomial expression with the reciprocal of the
// normalized integral. Both sides are rational once the common factor pi is
// cancelled, so every verdict is exact:
//   lhs = 2^(1-n) n C(n-1, floor((n-1)/2)),  rhs = 1 / (2 r(n)).
struct Verdict {
  unsigned long n;
  Rational lhs, rhs;
  Relation relation;
};

inline Verdict schneider_check(unsigned long n) {
  if (n == 0) throw std::invalid_argument("schneider_check: n must be >= 1");
  Rational lhs = make_rational(
      Int(n) * binomial(static_cast<long>(n - 1), static_cast<long>((n - 1) / 2)),
      pow2(n - 1));
  Rational r = exact_sinc_integral(n).r;
  Rational rhs = make_rational(r.get_den(), Int(2) * r.get_num());
  int c = cmp(lhs, rhs);
  Relation rel = c < 0 ? Relation::less : (c == 0 ? Relation::equal : Relation::greater);
  return Verdict{n, lhs, rhs, rel};
}

// Scan 1..n_max. Only verdicts that are not strict "greater" are returned;
// min_ratio_from20 tracks min(lhs/rhs) over n >= 20 as a margin witness.
struct ScanResult {
  unsigned long n_max;
  std::vector<Verdict> non_greater;
  Rational min_ratio_from20;
  unsigned long min_ratio_n = 0;
};

inline ScanResult schneider_scan(unsigned long n_max) {
  if (n_max == 0) throw std::invalid_argument("schneider_scan: n_max must be >= 1");
  ScanResult res;
  res.n_max = n_max;
  for (unsigned long n = 1; n <= n_max; ++n) {
    Verdict v = schneider_check(n);
    if (v.relation != Relation::greater) res.non_greater.push_back(v);
    if (n >= 20) {
      Rational ratio = v.lhs / v.rhs;
      if (res.min_ratio_n == 0 || ratio < res.min_ratio_from20) {
        res.min_ratio_from20 = ratio;
        res.min_ratio_n = n;
      }
    }
  }
  return res;
}

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::equal: return "=";
    default: return ">";
  }
}

}  // namespace sincpow
