#pragma once

#include <vector>

#include "thue/complex_interval.hpp"
#include "thue/integers.hpp"
#include "thue/interval.hpp"

namespace thue {

// Dense univariate integer polynomial; p[i] is the coefficient of X^i.
using Poly = std::vector<Int>;

int degree(const Poly& p);  // -1 for the zero polynomial
void trim(Poly& p);
bool is_zero(const Poly& p);
Int leading(const Poly& p);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Int& c);
Poly poly_neg(const Poly& a);
Poly derivative(const Poly& p);
Poly reciprocal(const Poly& p);  // X^deg * p(1/X)

Int content(const Poly& p);  // nonnegative; 0 for zero polynomial
Poly primitive_part(const Poly& p);

Int eval_int(const Poly& p, const Int& x);
// q^deg(p) * p(num/den) for den > 0: integer with the sign of p(num/den).
Int eval_scaled(const Poly& p, const Int& num, const Int& den);
int sign_at(const Poly& p, const Rat& x);
Interval eval_interval(const Poly& p, const Interval& x);
Box eval_box(const Poly& p, const Box& x);

Poly taylor_shift(const Poly& p, const Int& k);  // p(X + k)

// Exact polynomial division; fails if b does not divide a over Q.
Poly poly_divexact(const Poly& a, const Poly& b);

// Resultant via the subresultant PRS (exact, fraction-free).
Int resultant(const Poly& a, const Poly& b);

// Primitive gcd over Z (result primitive with positive leading coefficient).
Poly gcd_poly(const Poly& a, const Poly& b);

bool is_squarefree(const Poly& p);
Poly squarefree_part(const Poly& p);  // p / gcd(p, p'), primitive

// Power-of-two integer B such that all real roots lie in (-B, B).
Int root_bound_pow2(const Poly& p);

struct RealRoot {
  Rat lo, hi;  // lo <= root <= hi; lo == hi iff exact
  bool exact = false;
};

// Isolating intervals for all distinct real roots of a squarefree polynomial,
// sorted increasingly. Endpoints are dyadic and are never roots unless exact.
std::vector<RealRoot> isolate_real_roots(const Poly& p);

// Shrink an isolating interval by exact bisection until hi - lo <= width.
void refine_real_root(const Poly& p, RealRoot& r, const Rat& width);

// Number of sign changes of the Sturm chain difference: distinct real roots
// in the open interval (a, b); a and b must not be roots.
int count_real_roots_between(const Poly& p, const Rat& a, const Rat& b);

}  // namespace thue
