#include "thue/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace thue {

namespace {
thread_local mpfr_prec_t g_prec = 256;
}  // namespace

mpfr_prec_t working_precision() { return g_prec; }
void set_working_precision(mpfr_prec_t bits) { g_prec = std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN); }

void Interval::init(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval() {
  init(working_precision());
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v) {
  init(working_precision());
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Int& v) {
  init(working_precision());
  mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const Rat& v) {
  init(working_precision());
  mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  init(std::max(mpfr_get_prec(o.lo_), mpfr_get_prec(o.hi_)));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  // Steal the mpfr payloads; leave o valid.
  std::memcpy(&lo_[0], &o.lo_[0], sizeof(mpfr_t));
  std::memcpy(&hi_[0], &o.hi_[0], sizeof(mpfr_t));
  mpfr_init2(o.lo_, MPFR_PREC_MIN);
  mpfr_init2(o.hi_, MPFR_PREC_MIN);
  mpfr_set_zero(o.lo_, 1);
  mpfr_set_zero(o.hi_, 1);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  mpfr_prec_t p = std::max(mpfr_get_prec(o.lo_), mpfr_get_prec(o.hi_));
  mpfr_set_prec(lo_, p);
  mpfr_set_prec(hi_, p);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this == &o) return *this;
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval make_interval_raw(mpfr_srcptr lo, mpfr_srcptr hi) {
  Interval r;
  mpfr_set_prec(r.lo_, mpfr_get_prec(lo));
  mpfr_set_prec(r.hi_, mpfr_get_prec(hi));
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::from_endpoints_exact(double lo, double hi) {
  Interval r;
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::from_rats(const Rat& lo, const Rat& hi) {
  Interval r;
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi() {
  Interval r;
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::e() {
  Interval r;
  mpfr_set_si(r.lo_, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_set_si(r.hi_, 1, MPFR_RNDN);
  mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::ln2() {
  Interval r;
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains(const Rat& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const {
  return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool Interval::overlaps(const Interval& o) const {
  return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

std::optional<int> Interval::certain_sign() const {
  if (is_positive()) return 1;
  if (is_negative()) return -1;
  if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
  return std::nullopt;
}

double Interval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, mpfr_get_prec(lo_));
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

double Interval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

static Rat mpfr_to_rat(mpfr_srcptr x) {
  if (!mpfr_number_p(x)) fail(ErrCode::NonConvergence, "non-finite interval endpoint");
  if (mpfr_zero_p(x)) return Rat(0);
  mpz_class num;
  mpfr_exp_t e = mpfr_get_z_2exp(num.get_mpz_t(), x);
  Rat r(num);
  if (e >= 0) {
    mpz_class two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(e));
    r *= Rat(two_e);
  } else {
    mpz_class two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    r /= Rat(two_e);
  }
  return r;
}

Rat Interval::lo_rat() const { return mpfr_to_rat(lo_); }
Rat Interval::hi_rat() const { return mpfr_to_rat(hi_); }
Rat Interval::mid_rat() const { return (lo_rat() + hi_rat()) / 2; }

bool Interval::rel_width_below(double eps) const {
  mpfr_t w, m;
  mpfr_init2(w, 64);
  mpfr_init2(m, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_abs(m, lo_, MPFR_RNDD);
  mpfr_t hm;
  mpfr_init2(hm, 64);
  mpfr_abs(hm, hi_, MPFR_RNDD);
  mpfr_max(m, m, hm, MPFR_RNDD);
  if (mpfr_cmp_ui(m, 1) < 0) mpfr_set_ui(m, 1, MPFR_RNDN);
  mpfr_mul_d(m, m, eps, MPFR_RNDD);
  bool ok = mpfr_cmp(w, m) <= 0;
  mpfr_clear(w);
  mpfr_clear(m);
  mpfr_clear(hm);
  return ok;
}

bool Interval::abs_width_below(double eps) const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  bool ok = mpfr_cmp_d(w, eps) <= 0;
  mpfr_clear(w);
  return ok;
}

std::optional<Int> Interval::floor_unique() const {
  mpfr_t fl, fh;
  mpfr_init2(fl, mpfr_get_prec(lo_));
  mpfr_init2(fh, mpfr_get_prec(hi_));
  mpfr_floor(fl, lo_);
  mpfr_floor(fh, hi_);
  std::optional<Int> out;
  if (mpfr_cmp(fl, fh) == 0) {
    Int z;
    mpfr_get_z(z.get_mpz_t(), fl, MPFR_RNDN);
    out = z;
  }
  mpfr_clear(fl);
  mpfr_clear(fh);
  return out;
}

static std::string mpfr_str(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*R*g", digits, rnd, x) < 0) return "?";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Interval::str(int digits) const {
  return "[" + mpfr_str(lo_, digits, MPFR_RNDD) + ", " + mpfr_str(hi_, digits, MPFR_RNDU) + "]";
}

std::string Interval::decimal(int digits) const {
  mpfr_t m, w;
  mpfr_init2(m, mpfr_get_prec(lo_));
  mpfr_init2(w, 64);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  // print only digits the enclosure certifies: about log10(|mid| / width)
  int certified = digits;
  if (!mpfr_zero_p(w) && !mpfr_zero_p(m)) {
    mpfr_t q;
    mpfr_init2(q, 64);
    mpfr_abs(q, m, MPFR_RNDD);
    mpfr_div(q, q, w, MPFR_RNDD);
    mpfr_log10(q, q, MPFR_RNDD);
    long lg = mpfr_get_si(q, MPFR_RNDD);
    certified = static_cast<int>(std::max(1L, std::min<long>(digits, lg)));
    mpfr_clear(q);
  }
  std::string out = mpfr_str(m, certified, MPFR_RNDN);
  mpfr_clear(m);
  mpfr_clear(w);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.mlo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.mhi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.mlo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.mhi(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r;
  mpfr_neg(r.mlo(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.mhi(), a.lo(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_t t;
  mpfr_init2(t, working_precision());
  mpfr_ptr lo = r.mlo(), hi = r.mhi();
  // lo = min of the four products rounded down
  mpfr_mul(lo, a.lo(), b.lo(), MPFR_RNDD);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  // hi = max of the four products rounded up
  mpfr_mul(hi, a.lo(), b.lo(), MPFR_RNDU);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw undecided_error{"division by interval containing zero"};
  Interval r;
  mpfr_t t;
  mpfr_init2(t, working_precision());
  mpfr_ptr lo = r.mlo(), hi = r.mhi();
  mpfr_div(lo, a.lo(), b.lo(), MPFR_RNDD);
  mpfr_div(t, a.lo(), b.hi(), MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_div(t, a.hi(), b.lo(), MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_div(t, a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_div(hi, a.lo(), b.lo(), MPFR_RNDU);
  mpfr_div(t, a.lo(), b.hi(), MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_div(t, a.hi(), b.lo(), MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_div(t, a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval abs(const Interval& a) {
  Interval r;
  mpfr_ptr lo = r.mlo(), hi = r.mhi();
  if (a.is_positive()) {
    mpfr_set(lo, a.lo(), MPFR_RNDD);
    mpfr_set(hi, a.hi(), MPFR_RNDU);
  } else if (a.is_negative()) {
    mpfr_neg(lo, a.hi(), MPFR_RNDD);
    mpfr_neg(hi, a.lo(), MPFR_RNDU);
  } else {
    mpfr_set_zero(lo, 1);
    mpfr_t t;
    mpfr_init2(t, working_precision());
    mpfr_neg(t, a.lo(), MPFR_RNDU);
    mpfr_max(hi, t, a.hi(), MPFR_RNDU);
    mpfr_clear(t);
  }
  return r;
}

Interval sqr(const Interval& a) {
  Interval r = abs(a);
  Interval out;
  mpfr_sqr(out.mlo(), r.lo(), MPFR_RNDD);
  mpfr_sqr(out.mhi(), r.hi(), MPFR_RNDU);
  return out;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.hi()) < 0) throw undecided_error{"sqrt of negative interval"};
  Interval r;
  mpfr_ptr lo = r.mlo(), hi = r.mhi();
  if (mpfr_sgn(a.lo()) <= 0)
    mpfr_set_zero(lo, 1);
  else
    mpfr_sqrt(lo, a.lo(), MPFR_RNDD);
  mpfr_sqrt(hi, a.hi(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (!a.is_positive()) throw undecided_error{"log of interval touching (-inf, 0]"};
  Interval r;
  mpfr_log(r.mlo(), a.lo(), MPFR_RNDD);
  mpfr_log(r.mhi(), a.hi(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& a) {
  Interval r;
  mpfr_exp(r.mlo(), a.lo(), MPFR_RNDD);
  mpfr_exp(r.mhi(), a.hi(), MPFR_RNDU);
  return r;
}

Interval pow(const Interval& base, const Interval& expo) {
  std::optional<int> sg = expo.certain_sign();
  if (sg && *sg == 0) return Interval(1);
  return exp(expo * log(base));
}

Interval pow(const Interval& base, const Rat& expo) {
  if (expo.get_den() == 1 && expo.get_num().fits_slong_p())
    return pow_si(base, expo.get_num().get_si());
  return pow(base, Interval(expo));
}

Interval pow_si(const Interval& base, long e) {
  if (e == 0) return Interval(1);
  if (e < 0) return Interval(1) / pow_si(base, -e);
  if (base.is_positive()) {
    Interval r;
    mpfr_pow_si(r.mlo(), base.lo(), e, MPFR_RNDD);
    mpfr_pow_si(r.mhi(), base.hi(), e, MPFR_RNDU);
    return r;
  }
  if (e % 2 == 0) {
    Interval s = sqr(base);
    return pow_si(s, e / 2);
  }
  // odd power, monotone on all of R
  Interval r;
  mpfr_pow_si(r.mlo(), base.lo(), e, MPFR_RNDD);
  mpfr_pow_si(r.mhi(), base.hi(), e, MPFR_RNDU);
  return r;
}

Interval atan(const Interval& a) {
  Interval r;
  mpfr_atan(r.mlo(), a.lo(), MPFR_RNDD);
  mpfr_atan(r.mhi(), a.hi(), MPFR_RNDU);
  return r;
}

Interval root_ui(const Interval& a, unsigned long k) {
  if (mpfr_sgn(a.hi()) < 0) throw undecided_error{"root of negative interval"};
  Interval r;
  mpfr_ptr lo = r.mlo(), hi = r.mhi();
  if (mpfr_sgn(a.lo()) <= 0)
    mpfr_set_zero(lo, 1);
  else
    mpfr_rootn_ui(lo, a.lo(), k, MPFR_RNDD);
  mpfr_rootn_ui(hi, a.hi(), k, MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.mlo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.mhi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.mlo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.mhi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(r.mlo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.mhi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.overlaps(b)) fail(ErrCode::InvalidArgument, "intersecting disjoint intervals");
  Interval r;
  mpfr_max(r.mlo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.mhi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_cmp(a.hi(), b.lo()) < 0; }
bool certainly_greater(const Interval& a, const Interval& b) { return mpfr_cmp(a.lo(), b.hi()) > 0; }

bool less_certain(const Interval& a, const Interval& b) {
  if (certainly_less(a, b)) return true;
  if (certainly_greater(a, b)) return false;
  throw undecided_error{"order of overlapping intervals"};
}

bool less_eq_certain_vs_rat(const Interval& a, const Rat& q) {
  if (mpfr_cmp_q(a.hi(), q.get_mpq_t()) <= 0) return true;
  if (mpfr_cmp_q(a.lo(), q.get_mpq_t()) > 0) return false;
  throw undecided_error{"interval straddles rational threshold"};
}

bool less_certain_vs_rat(const Interval& a, const Rat& q) {
  if (mpfr_cmp_q(a.hi(), q.get_mpq_t()) < 0) return true;
  if (mpfr_cmp_q(a.lo(), q.get_mpq_t()) >= 0) return false;
  throw undecided_error{"interval straddles rational threshold"};
}

bool greater_eq_certain_vs_rat(const Interval& a, const Rat& q) {
  if (mpfr_cmp_q(a.lo(), q.get_mpq_t()) >= 0) return true;
  if (mpfr_cmp_q(a.hi(), q.get_mpq_t()) < 0) return false;
  throw undecided_error{"interval straddles rational threshold"};
}

}  // namespace thue
