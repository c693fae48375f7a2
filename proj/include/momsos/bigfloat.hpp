#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

namespace momsos {

/// Arbitrary-precision binary floating point number backed by MPFR.
///
/// Every value carries its own precision (mantissa bits). Binary operations
/// round once, to the larger of the two operand precisions, so mixing
/// precisions never silently truncates the wider operand.
class BigFloat {
 public:
  static constexpr long kDefaultPrec = 256;

  BigFloat() : BigFloat(0L, kDefaultPrec) {}
  explicit BigFloat(long value, long prec = kDefaultPrec) {
    mpfr_init2(v_, check_prec(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  explicit BigFloat(double value, long prec = kDefaultPrec) {
    mpfr_init2(v_, check_prec(prec));
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.precision());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  /// Parses a decimal string (scientific notation allowed) at `prec` bits.
  static BigFloat from_str(std::string_view s, long prec = kDefaultPrec);
  static BigFloat pi(long prec = kDefaultPrec);
  /// Euler's number e.
  static BigFloat euler(long prec = kDefaultPrec);
  /// 2^exp at the given precision (exact).
  static BigFloat pow2(long exp, long prec = kDefaultPrec);

  long precision() const { return mpfr_get_prec(v_); }
  /// Value rounded to a (possibly different) working precision.
  BigFloat with_precision(long prec) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_finite() const { return mpfr_number_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Shortest decimal string that round-trips at this precision.
  std::string to_string() const;
  /// Fixed-point decimal with `digits` fractional digits (for CSV output).
  std::string to_fixed(int digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator/(const BigFloat& a, long b);
  friend BigFloat operator+(const BigFloat& a, long b);
  friend BigFloat operator-(const BigFloat& a, long b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend int cmp(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b); }

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat log(const BigFloat& a);
  friend BigFloat sin(const BigFloat& a);
  friend BigFloat atan(const BigFloat& a);
  /// a^n for integer n >= 0, at a's precision.
  friend BigFloat pow_ui(const BigFloat& a, unsigned long n);
  friend BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }
  friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

  /// Raw handle for interop (exact conversion to/from rationals).
  const mpfr_t& raw() const { return v_; }
  mpfr_t& raw() { return v_; }

 private:
  struct uninit_t {};
  BigFloat(long prec, uninit_t) { mpfr_init2(v_, check_prec(prec)); }
  static long check_prec(long prec);

  mpfr_t v_;
};

}  // namespace momsos
