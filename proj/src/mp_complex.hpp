#pragma once

#include <algorithm>
#include <climits>
#include <complex>

#include <mpfr.h>

namespace akor::detail {

/// Owning MPFR value with a fixed precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MpReal(mpfr_prec_t prec, double value) : MpReal(prec) { mpfr_set_d(v_, value, MPFR_RNDN); }
  MpReal(const MpReal& other) : MpReal(mpfr_get_prec(other.v_)) { mpfr_set(v_, other.v_, MPFR_RNDN); }
  MpReal& operator=(const MpReal& other) {
    if (this != &other) mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

/// Complex number as a pair of MpReal, with just the arithmetic the
/// fractional-exponential series needs.
class MpComplex {
 public:
  explicit MpComplex(mpfr_prec_t prec) : re_(prec), im_(prec), t1_(prec), t2_(prec) {}
  MpComplex(mpfr_prec_t prec, std::complex<double> z) : MpComplex(prec) {
    mpfr_set_d(re_.get(), z.real(), MPFR_RNDN);
    mpfr_set_d(im_.get(), z.imag(), MPFR_RNDN);
  }

  MpReal& re() noexcept { return re_; }
  MpReal& im() noexcept { return im_; }
  const MpReal& re() const noexcept { return re_; }
  const MpReal& im() const noexcept { return im_; }

  void set(const MpComplex& o) {
    mpfr_set(re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_set(im_.get(), o.im_.get(), MPFR_RNDN);
  }
  void set_one() {
    mpfr_set_ui(re_.get(), 1, MPFR_RNDN);
    mpfr_set_zero(im_.get(), 1);
  }
  void set_zero() {
    mpfr_set_zero(re_.get(), 1);
    mpfr_set_zero(im_.get(), 1);
  }

  /// this *= o
  void mul(const MpComplex& o) {
    mpfr_mul(t1_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_sub(t1_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), re_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_fma(im_.get(), im_.get(), o.re_.get(), t2_.get(), MPFR_RNDN);
    mpfr_set(re_.get(), t1_.get(), MPFR_RNDN);
  }
  /// this *= r
  void mul(const MpReal& r) {
    mpfr_mul(re_.get(), re_.get(), r.get(), MPFR_RNDN);
    mpfr_mul(im_.get(), im_.get(), r.get(), MPFR_RNDN);
  }
  void mul_si(long n) {
    mpfr_mul_si(re_.get(), re_.get(), n, MPFR_RNDN);
    mpfr_mul_si(im_.get(), im_.get(), n, MPFR_RNDN);
  }
  void div_si(long n) {
    mpfr_div_si(re_.get(), re_.get(), n, MPFR_RNDN);
    mpfr_div_si(im_.get(), im_.get(), n, MPFR_RNDN);
  }
  void add(const MpComplex& o) {
    mpfr_add(re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_add(im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  }

  bool is_zero() const noexcept { return mpfr_zero_p(re_.get()) && mpfr_zero_p(im_.get()); }

  /// Binary exponent of max(|re|, |im|); a lower bound on log2|z| within one bit.
  long log2_magnitude() const noexcept {
    long e = LONG_MIN;
    if (!mpfr_zero_p(re_.get())) e = mpfr_get_exp(re_.get());
    if (!mpfr_zero_p(im_.get())) e = std::max<long>(e, mpfr_get_exp(im_.get()));
    return e;
  }

  std::complex<double> to_complex() const noexcept { return {re_.to_double(), im_.to_double()}; }

 private:
  MpReal re_;
  MpReal im_;
  MpReal t1_;
  MpReal t2_;
};

}  // namespace akor::detail
