#pragma once

#include "thue/interval.hpp"

namespace thue {

// Axis-aligned rectangle enclosure of a complex number.
struct Box {
  Interval re, im;

  Box() = default;
  Box(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  explicit Box(const Rat& r) : re(r), im(0L) {}

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool is_real_line() const { return im.certain_sign() == std::optional<int>(0); }
  bool overlaps(const Box& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  bool contains(const Box& o) const { return re.contains(o.re) && im.contains(o.im); }

  Box conj() const { return Box(re, -im); }
  double diam_double() const { return re.width_double() + im.width_double(); }
};

Box operator+(const Box& a, const Box& b);
Box operator-(const Box& a, const Box& b);
Box operator*(const Box& a, const Box& b);
Box operator/(const Box& a, const Box& b);  // b must exclude 0
Box operator-(const Box& a);

Interval modulus(const Box& a);
Interval modulus_sq(const Box& a);

// Principal argument in (-pi, pi]; requires the box to avoid 0 and the
// closed negative real axis. Throws undecided_error otherwise.
Interval arg_principal(const Box& a);

// |log z| for the principal branch: sqrt(log^2 |z| + arg^2 z).
Interval abs_log_principal(const Box& a);

Box hull(const Box& a, const Box& b);

}  // namespace thue
