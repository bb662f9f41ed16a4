#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thue/forms.hpp"
#include "thue/roots.hpp"
#include "thue/solver.hpp"

namespace thue {

enum class Applicability { Yes, No, Boundary };
const char* applicability_name(Applicability a);

// Shared inputs of the bound evaluators.
struct BoundContext {
  int n = 0;
  Int D;
  Int m;
  Rat epsilon;
  std::optional<int> q;  // non-real half-count, when root data is available
  MahlerMeasure M;
  Int H;
  Int a0;
  Int content;
  Irreducibility irred = Irreducibility::Unknown;
};

BoundContext make_context(const BinaryForm& F, const Int& m, const Rat& epsilon,
                          RootSystem* rs = nullptr);

// --- m-thresholds ----------------------------------------------------------
// |D|^(1/(4(n-1)) - eps) / (3.5^(n/2) n^(n/(4(n-1)))); eps in (0, 1/(4(n-1))).
Interval m_threshold_ineq(const BoundContext& ctx);
// |D|^(1/(2(n-1)) - eps) / (3.5^(n/2) n^(n/(2(n-1)))); eps in (0, 1/(2(n-1))).
Interval m_threshold_eq(const BoundContext& ctx);
// No-epsilon medium-cap threshold |D|^(1/(2(n-1))) / ((7/2)^n n^(n/(2(n-1)))).
Interval medium_cap_threshold(int n, const Int& D);
// Small-cap threshold for the equation: (7/2)^n denominator variant.
Interval small_cap_eq_threshold(const BoundContext& ctx);
// Large-cap threshold for the equation: (2/7)^n (|D|/n^n)^(1/(2(n-1))).
Interval large_eq_threshold(int n, const Int& D);

// m <= threshold (or strict <) with certified directionality.
Applicability qualifies(const Interval& threshold, const Int& m, bool strict = false);

// --- count bounds (exact rationals) ---------------------------------------
Rat bound_ineq(int n, const Rat& eps, std::optional<int> q = std::nullopt);
Rat bound_eq(int n, const Rat& eps, std::optional<int> q = std::nullopt);
Rat bound_reducible(int n, const Rat& eps);

// --- prime-parameter bounds -------------------------------------------------
struct PrimeBound {
  Int prime;      // least prime >= cutoff
  Interval cutoff;
  Rat per_form;   // 9n + 4/(n-1)
  Rat total;      // (prime + 1) * per_form
};
PrimeBound prime_bound_ineq(int n, const Int& m);
PrimeBound prime_bound_eq(int n, const Int& m);

// --- large-solution bound ---------------------------------------------------
// (2^(n/(n-2)) n^((2n-1)/(2n-4)) m^(1/(n-2)) M)^(1 + 1/(n-1)).
Interval large_threshold(const BoundContext& ctx);
struct LargeBound {
  long value;          // min applicable branch
  long branch_11n;     // n >= 3
  std::optional<long> branch_9n;  // n >= 5
};
LargeBound bound_large(int n);

// --- small-solution caps ----------------------------------------------------
struct SmallCaps {
  Rat ineq_cap;  // (n-q)(1 + 1/(2(n-1) eps))
  Rat eq_cap;    // (n-q)(1 + 1/((n-1) eps))
  Applicability ineq_threshold_met;
  Applicability eq_threshold_met;
};
SmallCaps small_count_caps(const BoundContext& ctx);

// --- medium-solution machinery ----------------------------------------------
std::pair<Interval, Interval> medium_window(const MahlerMeasure& M, int n);
std::optional<std::pair<Int, Int>> medium_window_exact(const MahlerMeasure& M, int n);
// (n+1) m^(1/n) 2^((n-1)^2/n) M^(3-3/n) / (sqrt(3) |D|)^(1/n).
Interval nonreal_y_cap(const BoundContext& ctx);
// 2^(n^2/2) M^n.
Interval reducible_y_cap(const BoundContext& ctx);
// (3 + 2 log|D|) / log 3 >= n.
bool degree_disc_check(int n, const Int& D);

// --- comparison bounds from the literature ----------------------------------
struct ComparisonRow {
  std::string name;
  Applicability applicable;
  std::string condition;
  std::string bound_text;  // symbolic constants stay symbolic
  std::optional<Rat> bound_value;
};
std::vector<ComparisonRow> comparison_bounds(const BoundContext& ctx, const Rat& gyory_a = Rat(1, 2),
                                             const Rat& stewart_eps = Rat(1));

// --- linear forms in logarithms ----------------------------------------------
struct MatveevParams {
  int N = 0;
  int chi = 1;
  Interval C;   // C(N, chi)
  Interval C0;
  Interval W0;
};
MatveevParams matveev_constants(int N, int chi, int d, const Interval& B);
// log |L| > -C(N) C0 W0 d^2 Omega.
Interval matveev_lower_log(const MatveevParams& p, int d, const Interval& Omega);

struct SUnitBounds {
  int d1 = 0, s = 0, t = 0;
  Interval Delta;     // (2/pi)^q |D_K|^(1/2)
  Interval RS_upper;  // S-regulator upper bound
  Interval c4, c5, deltaK;
};
SUnitBounds sunit_bounds(int d1, int s, int t, const Int& P, const Int& DK_abs, int r2);

struct GapConstants {
  Interval A_three;  // triple variant: C/4 with the (n-1)-bracket
  Interval A_four;   // quadruple variant: C/(8 sqrt 2) with the n-bracket
  Interval K;
  std::optional<Interval> K1;  // (n sqrt(n) K)^(e/(e-1)), only when K > 0
};
GapConstants gap_constants(const BoundContext& ctx, int s, const Interval& C);

// 2 log 2 + (4/sqrt(n)) phi_norm + 4 log m.
Interval height_quotient_bound(int n, const Interval& phi_norm, const Int& m);

// --- consolidated report -----------------------------------------------------
struct BoundEntry {
  std::string id;
  Applicability applicable = Applicability::No;
  std::string reason;
  std::string threshold;  // rendered interval or empty
  std::string bound;
  std::optional<Int> bound_floor;
  std::vector<std::string> notes;
};

struct BoundReport {
  std::string form;
  int n = 0;
  Int D;
  Int m;
  Rat epsilon;
  std::vector<BoundEntry> entries;
};

BoundReport evaluate_bounds(const BoundContext& ctx, const BinaryForm& F);

}  // namespace thue
