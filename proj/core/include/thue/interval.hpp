#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "thue/integers.hpp"

namespace thue {

// Thread-local working precision for newly produced interval endpoints.
mpfr_prec_t working_precision();
void set_working_precision(mpfr_prec_t bits);

class PrecisionGuard {
 public:
  explicit PrecisionGuard(mpfr_prec_t bits) : saved_(working_precision()) {
    set_working_precision(bits);
  }
  ~PrecisionGuard() { set_working_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mpfr_prec_t saved_;
};

// Thrown when a certified decision cannot be made at the current working
// precision; callers escalate via with_escalation().
struct undecided_error {
  const char* what;
};

// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
// outward, so the result encloses the exact image of the operands.
class Interval {
 public:
  Interval();  // [0, 0]
  Interval(long v);
  explicit Interval(const Int& v);
  explicit Interval(const Rat& v);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_endpoints_exact(double lo, double hi);
  static Interval from_rats(const Rat& lo, const Rat& hi);
  static Interval pi();
  static Interval e();
  static Interval ln2();

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  // Mutable endpoint access for the arithmetic kernel; keep lo <= hi.
  mpfr_ptr mlo() { return lo_; }
  mpfr_ptr mhi() { return hi_; }

  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0
  bool contains(const Rat& q) const;
  bool contains(const Interval& o) const;  // o subset of *this
  bool overlaps(const Interval& o) const;

  // Certified sign of every point of the interval; nullopt if it straddles 0.
  std::optional<int> certain_sign() const;

  double mid_double() const;
  double width_double() const;
  Rat lo_rat() const;
  Rat hi_rat() const;
  Rat mid_rat() const;

  // width <= eps * max(1, |mid|), with eps given as 2^-bits shorthand below
  bool rel_width_below(double eps) const;
  bool abs_width_below(double eps) const;

  // Unique integer floor of all points, if determined.
  std::optional<Int> floor_unique() const;

  std::string str(int digits = 17) const;      // "[lo, hi]" debugging form
  std::string decimal(int digits = 17) const;  // midpoint decimal, shortest honest form

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }
  Interval& operator/=(const Interval& b) { return *this = *this / b; }

 private:
  mpfr_t lo_, hi_;
  void init(mpfr_prec_t prec);
  friend Interval make_interval_raw(mpfr_srcptr lo, mpfr_srcptr hi);
};

Interval abs(const Interval& a);
Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);  // requires hi >= 0; negative lo clamped to 0
Interval log(const Interval& a);   // requires lo > 0
Interval exp(const Interval& a);
Interval pow(const Interval& base, const Interval& expo);  // base.lo > 0
Interval pow(const Interval& base, const Rat& expo);
Interval pow_si(const Interval& base, long e);
Interval atan(const Interval& a);
Interval root_ui(const Interval& a, unsigned long k);  // k-th root, a >= 0
Interval hull(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);  // fails if disjoint

// Certified comparisons. The *_certain forms throw undecided_error when the
// intervals overlap.
bool certainly_less(const Interval& a, const Interval& b);     // a.hi < b.lo
bool certainly_greater(const Interval& a, const Interval& b);  // a.lo > b.hi
bool less_certain(const Interval& a, const Interval& b);
bool less_eq_certain_vs_rat(const Interval& a, const Rat& q);  // a <= q, certified
bool less_certain_vs_rat(const Interval& a, const Rat& q);
bool greater_eq_certain_vs_rat(const Interval& a, const Rat& q);

// Retry fn at doubling precision until it stops throwing undecided_error.
template <class Fn>
auto with_escalation(Fn&& fn, mpfr_prec_t start = 0, mpfr_prec_t max_bits = 1 << 15)
    -> decltype(fn()) {
  mpfr_prec_t p = start ? start : working_precision();
  for (;;) {
    PrecisionGuard guard(p);
    try {
      return fn();
    } catch (const undecided_error& e) {
      if (p * 2 > max_bits)
        fail(ErrCode::NonConvergence, std::string("precision budget exhausted: ") + e.what);
      p *= 2;
    }
  }
}

}  // namespace thue
