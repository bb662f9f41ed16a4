#pragma once

#include <optional>
#include <vector>

#include "thue/complex_interval.hpp"
#include "thue/forms.hpp"
#include "thue/polynomial.hpp"

namespace thue {

struct RootEnclosure {
  Box box;
  bool is_real = false;
  int conj = 0;  // index of the conjugate partner; itself for real roots
};

// Certified disjoint enclosures of the roots of f(X) = F(X, 1).
// Ordering: real roots ascending, then conjugate pairs by real part with the
// upper-half member first.
class RootSystem {
 public:
  // Requires a0 != 0 and D != 0 (squarefree f). tol bounds each enclosure's
  // diameter, absolute.
  static RootSystem solve(const BinaryForm& F, double tol = 1e-20);

  const BinaryForm& form() const { return F_; }
  int n() const { return F_.deg(); }
  int q() const { return q_; }
  int real_count() const { return n() - 2 * q_; }
  const std::vector<RootEnclosure>& roots() const { return roots_; }
  const Box& root_box(int k) const { return roots_[static_cast<size_t>(k)].box; }
  bool is_real_root(int k) const { return roots_[static_cast<size_t>(k)].is_real; }
  int conj_index(int k) const { return roots_[static_cast<size_t>(k)].conj; }

  // |f'(alpha_k)| from the current enclosures.
  Interval fprime_abs(int k) const;
  // |x - alpha_k y| from the current enclosures.
  Interval linear_factor_abs(int k, const Int& x, const Int& y) const;

  // Tighten every enclosure to diameter <= tol.
  void refine(double tol);
  double current_tol() const { return tol_; }

 private:
  BinaryForm F_{std::vector<Int>{1, 0}};
  Poly f_, fp_;
  int q_ = 0;
  double tol_ = 1;
  std::vector<RootEnclosure> roots_;
  std::vector<RealRoot> real_data_;  // bisection state, parallel to real prefix

  void rebuild_boxes();
  friend struct RootRefiner;
};

// sqrt(3) * (n+1)^-n * M^(1-n): certified lower bound on pairwise root
// distances.
Interval separation_bound(int n, const Interval& mahler);
// Half of the above: floor for |Im| of any non-real root.
Interval imag_lower_bound(int n, const Interval& mahler);

// (2^-(n-1)^2 |D| / M^(2n-2),  n(n+1)/2 * H * max(1,|alpha_k|)^(n-1)).
// The lower bound is only valid for irreducible f; pass irreducible=false to
// get the upper bound with a vacuous lower bound of 0.
std::pair<Interval, Interval> derivative_bounds(const RootSystem& rs, const Interval& mahler,
                                                const Int& D, int k, bool irreducible = true);

struct MahlerMeasure {
  Interval value;
  std::optional<Int> exact;  // set when M(F) is a certified integer

  Interval as_interval() const {
    if (exact) return Interval(*exact);
    return value;
  }
};

// Certified Mahler measure |a0| * prod max(1, |alpha_i|), relative width of
// the enclosure at most rel_tol. The root system is refined as needed.
MahlerMeasure mahler_measure(RootSystem& rs, double rel_tol = 1e-12);

// Convenience entry that builds the root system internally.
MahlerMeasure mahler_measure(const BinaryForm& F, double rel_tol = 1e-12);

// Aggregate invariants of a form. Construction verifies the Mahler floor
// (|D|/n^n)^(1/(2n-2)) against the enclosure's upper endpoint and, for
// primitive irreducible forms, the height sandwich
// binom(n, n/2)^-1 H <= M <= (n+1)^(1/2) H.
struct FormInvariants {
  Int D;
  MahlerMeasure mahler;
  Int H;
  Irreducibility irreducibility = Irreducibility::Unknown;
  int q = 0;
};

FormInvariants compute_invariants(const BinaryForm& F, double mahler_rel_tol = 1e-12);

}  // namespace thue
