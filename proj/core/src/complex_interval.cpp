#include "thue/complex_interval.hpp"

namespace thue {

Box operator+(const Box& a, const Box& b) { return Box(a.re + b.re, a.im + b.im); }
Box operator-(const Box& a, const Box& b) { return Box(a.re - b.re, a.im - b.im); }
Box operator-(const Box& a) { return Box(-a.re, -a.im); }

Box operator*(const Box& a, const Box& b) {
  return Box(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Box operator/(const Box& a, const Box& b) {
  Interval den = modulus_sq(b);
  if (den.contains_zero()) throw undecided_error{"complex division by box containing zero"};
  Box num = a * b.conj();
  return Box(num.re / den, num.im / den);
}

Interval modulus_sq(const Box& a) { return sqr(a.re) + sqr(a.im); }
Interval modulus(const Box& a) { return sqrt(modulus_sq(a)); }

namespace {

// atan2 over the four corners with directed rounding.
Interval corner_arg(const Box& a) {
  Interval r;
  mpfr_t t;
  mpfr_init2(t, working_precision());
  mpfr_srcptr xs[2] = {a.re.lo(), a.re.hi()};
  mpfr_srcptr ys[2] = {a.im.lo(), a.im.hi()};
  bool first = true;
  for (mpfr_srcptr y : ys)
    for (mpfr_srcptr x : xs) {
      mpfr_atan2(t, y, x, MPFR_RNDD);
      if (first)
        mpfr_set(r.mlo(), t, MPFR_RNDD);
      else
        mpfr_min(r.mlo(), r.lo(), t, MPFR_RNDD);
      mpfr_atan2(t, y, x, MPFR_RNDU);
      if (first)
        mpfr_set(r.mhi(), t, MPFR_RNDU);
      else
        mpfr_max(r.mhi(), r.hi(), t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

}  // namespace

Interval arg_principal(const Box& a) {
  if (a.contains_zero()) throw undecided_error{"argument of box containing zero"};
  // The branch cut is the closed negative real axis.
  bool touches_cut = mpfr_sgn(a.re.lo()) < 0 && a.im.contains_zero();
  if (touches_cut) throw undecided_error{"argument of box touching the branch cut"};
  return corner_arg(a);
}

Interval abs_log_principal(const Box& a) {
  Interval logmod = log(modulus(a));
  Interval theta;
  if (mpfr_sgn(a.re.hi()) < 0 && a.im.contains_zero()) {
    // Straddling the cut in the left half-plane: |arg| runs from the corner
    // minimum up to pi (pi is attained on the cut itself).
    Interval r;
    mpfr_t t;
    mpfr_init2(t, working_precision());
    mpfr_srcptr xs[2] = {a.re.lo(), a.re.hi()};
    mpfr_srcptr ys[2] = {a.im.lo(), a.im.hi()};
    bool first = true;
    for (mpfr_srcptr y : ys)
      for (mpfr_srcptr x : xs) {
        // round toward zero so |t| lower-bounds the true |atan2|
        mpfr_atan2(t, y, x, MPFR_RNDZ);
        mpfr_abs(t, t, MPFR_RNDZ);
        if (first)
          mpfr_set(r.mlo(), t, MPFR_RNDD);
        else
          mpfr_min(r.mlo(), r.lo(), t, MPFR_RNDD);
        first = false;
      }
    mpfr_clear(t);
    mpfr_const_pi(r.mhi(), MPFR_RNDU);
    theta = r;
  } else {
    theta = abs(arg_principal(a));
  }
  return sqrt(sqr(logmod) + sqr(theta));
}

Box hull(const Box& a, const Box& b) { return Box(hull(a.re, b.re), hull(a.im, b.im)); }

}  // namespace thue
