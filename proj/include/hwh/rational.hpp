#ifndef HWH_RATIONAL_HPP
#define HWH_RATIONAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace hwh {

// All weight and threshold arithmetic is exact; Rational is the only number
// type a verdict may depend on, except where an exponent is irrational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Throws on malformed input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// 256-bit MPFR value (roughly 77 significant decimal digits), used only for
// f(v)^alpha with non-integer alpha. Comparisons against exact thresholds go
// through the inconclusive band handled by callers.
class HighFloat {
 public:
  static constexpr mpfr_prec_t kBits = 256;

  HighFloat() { mpfr_init2(x_, kBits); mpfr_set_zero(x_, 1); }
  HighFloat(const HighFloat& o) { mpfr_init2(x_, kBits); mpfr_set(x_, o.x_, MPFR_RNDN); }
  HighFloat(HighFloat&& o) noexcept { mpfr_init2(x_, kBits); mpfr_swap(x_, o.x_); }
  HighFloat& operator=(const HighFloat& o) {
    if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDN);
    return *this;
  }
  HighFloat& operator=(HighFloat&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
  }
  ~HighFloat() { mpfr_clear(x_); }

  static HighFloat from(const Rational& q) {
    HighFloat h;
    mpfr_set_q(h.x_, q.get_mpq_t(), MPFR_RNDN);
    return h;
  }
  static HighFloat from_double(double d) {
    HighFloat h;
    mpfr_set_d(h.x_, d, MPFR_RNDN);
    return h;
  }

  HighFloat pow(const HighFloat& e) const {
    HighFloat r;
    mpfr_pow(r.x_, x_, e.x_, MPFR_RNDN);
    return r;
  }
  HighFloat& operator+=(const HighFloat& o) {
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }
  HighFloat operator+(const HighFloat& o) const {
    HighFloat r(*this);
    r += o;
    return r;
  }
  HighFloat operator-(const HighFloat& o) const {
    HighFloat r;
    mpfr_sub(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
  }
  HighFloat operator*(const HighFloat& o) const {
    HighFloat r;
    mpfr_mul(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
  }

  int cmp(const HighFloat& o) const { return mpfr_cmp(x_, o.x_); }
  int cmp(const Rational& q) const { return mpfr_cmp_q(x_, q.get_mpq_t()); }
  int cmp(double d) const { return mpfr_cmp_d(x_, d); }
  bool operator<(const HighFloat& o) const { return cmp(o) < 0; }
  bool operator>(const HighFloat& o) const { return cmp(o) > 0; }

  HighFloat abs() const {
    HighFloat r;
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  std::string str(int digits = 30) const;

 private:
  mpfr_t x_;
};

}  // namespace hwh

#endif
