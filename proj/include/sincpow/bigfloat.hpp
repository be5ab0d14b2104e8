#pragma once

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "rational.hpp"

namespace sincpow {

// RAII wrapper over mpfr_t. Every value carries its own mantissa precision in
// bits; binary operations round once to the wider of the two operand
// precisions, always to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, check_prec(prec));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(double x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat of_int(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat of_uint(unsigned long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
  }
  // Correctly rounded p/q.
  static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& b) {
    if (b.prec() > prec()) mpfr_prec_round(v_, b.prec(), MPFR_RNDN);
    mpfr_add(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& b) {
    if (b.prec() > prec()) mpfr_prec_round(v_, b.prec(), MPFR_RNDN);
    mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& b) {
    if (b.prec() > prec()) mpfr_prec_round(v_, b.prec(), MPFR_RNDN);
    mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }

  friend BigFloat operator*(const BigFloat& a, unsigned long u) {
    BigFloat r(a.prec());
    mpfr_mul_ui(r.v_, a.v_, u, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, unsigned long u) {
    BigFloat r(a.prec());
    mpfr_div_ui(r.v_, a.v_, u, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const Rational& q) {
    BigFloat r(a.prec());
    mpfr_mul_q(r.v_, a.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }

  // Decimal rendering with the requested number of significant digits.
  std::string to_string(std::size_t digits = 20) const {
    if (is_nan()) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    if (digits < 2) digits = 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sgn;
    if (!mant.empty() && mant[0] == '-') {
      sgn = "-";
      mant.erase(0, 1);
    }
    long dec_exp = static_cast<long>(e) - 1;  // value = 0.mant * 10^e
    auto strip = [](std::string t) {
      if (t.find('.') == std::string::npos) return t;
      while (!t.empty() && t.back() == '0') t.pop_back();
      if (!t.empty() && t.back() == '.') t.pop_back();
      return t;
    };
    std::string out;
    if (dec_exp >= -4 && dec_exp < static_cast<long>(digits) + 6) {
      if (dec_exp >= 0) {
        std::size_t ip = static_cast<std::size_t>(dec_exp) + 1;
        while (mant.size() < ip) mant += '0';
        out = mant.substr(0, ip);
        std::string fp = mant.substr(ip);
        if (!fp.empty()) out += "." + fp;
      } else {
        out = "0." + std::string(static_cast<std::size_t>(-dec_exp - 1), '0') + mant;
      }
      out = strip(out);
    } else {
      out = mant.substr(0, 1);
      if (mant.size() > 1) out += "." + mant.substr(1);
      out = strip(out) + "e" + std::to_string(dec_exp);
    }
    return sgn + out;
  }

 private:
  static mpfr_prec_t check_prec(mpfr_prec_t p) {
    if (p < MPFR_PREC_MIN || p > 1 << 24)
      throw std::invalid_argument("BigFloat: precision out of range");
    return p;
  }
  static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
  }
  mpfr_t v_;
};

inline BigFloat abs(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat exp(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat log(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat sin(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat cos(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat sinh(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sinh(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat cosh(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(y.prec(), x.prec()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat pow_si(const BigFloat& a, long e) {
  BigFloat r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}
inline BigFloat ldexp2(const BigFloat& a, long e) {
  BigFloat r(a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}
inline BigFloat round_to(const BigFloat& a, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline const BigFloat& max(const BigFloat& a, const BigFloat& b) {
  return a < b ? b : a;
}

// r * pi, evaluated with 64 guard bits then rounded once to `prec`.
// Precisions below 64 bits are refused so the guard always dominates the
// final rounding step.
inline BigFloat to_float(const Rational& r, mpfr_prec_t prec) {
  if (prec < 64) throw std::invalid_argument("to_float: precision must be >= 64");
  BigFloat wide = BigFloat::pi(prec + 64);
  mpfr_mul_q(wide.raw(), wide.raw(), r.get_mpq_t(), MPFR_RNDN);
  return round_to(wide, prec);
}

}  // namespace sincpow
