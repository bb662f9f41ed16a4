#include "thue/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "thue/errors.hpp"

namespace thue {

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return degree(p) < 0; }

Int leading(const Poly& p) {
  int d = degree(p);
  return d < 0 ? Int(0) : p[d];
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const Int& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Poly poly_neg(const Poly& a) {
  Poly r = a;
  for (auto& x : r) x = -x;
  return r;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = Int(static_cast<long>(i)) * p[i];
  trim(r);
  return r;
}

Poly reciprocal(const Poly& p) {
  int d = degree(p);
  if (d < 0) return {};
  Poly r(p.begin(), p.begin() + d + 1);
  std::reverse(r.begin(), r.end());
  trim(r);
  return r;
}

Int content(const Poly& p) {
  Int g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

Poly primitive_part(const Poly& p) {
  Int c = content(p);
  if (c == 0 || c == 1) return p;
  Poly r = p;
  for (auto& x : r) x /= c;
  return r;
}

Int eval_int(const Poly& p, const Int& x) {
  Int acc = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

Int eval_scaled(const Poly& p, const Int& num, const Int& den) {
  int d = degree(p);
  if (d < 0) return 0;
  Int acc = p[d];
  for (int i = d - 1; i >= 0; --i) acc = acc * num + p[i] * pow_int(den, d - i);
  return acc;
}

int sign_at(const Poly& p, const Rat& x) {
  Rat r = x;
  r.canonicalize();
  Int v = eval_scaled(p, r.get_num(), r.get_den());
  return sgn(v);
}

Interval eval_interval(const Poly& p, const Interval& x) {
  Interval acc(0L);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + Interval(p[i]);
  return acc;
}

Box eval_box(const Poly& p, const Box& x) {
  Box acc;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    acc = acc * x;
    acc.re += Interval(p[i]);
  }
  return acc;
}

Poly taylor_shift(const Poly& p, const Int& k) {
  Poly r = p;
  int n = static_cast<int>(r.size());
  for (int i = 0; i < n - 1; ++i)
    for (int j = n - 2; j >= i; --j) r[j] += k * r[j + 1];
  return r;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  int da = degree(a), db = degree(b);
  if (db < 0) fail(ErrCode::InvalidArgument, "division by zero polynomial");
  if (da < 0) return {};
  if (da < db) fail(ErrCode::InvalidArgument, "inexact polynomial division");
  // Work over Q, verify the quotient is the exact one.
  std::vector<Rat> rem(a.size());
  for (size_t i = 0; i < a.size(); ++i) rem[i] = Rat(a[i]);
  Rat lc(b[db]);
  std::vector<Rat> q(da - db + 1);
  for (int i = da - db; i >= 0; --i) {
    Rat c = rem[i + db] / lc;
    q[i] = c;
    if (c != 0)
      for (int j = 0; j <= db; ++j) rem[i + j] -= c * Rat(b[j]);
  }
  for (const auto& r : rem)
    if (r != 0) fail(ErrCode::InvalidArgument, "inexact polynomial division");
  Poly out(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    Rat c = q[i];
    c.canonicalize();
    if (c.get_den() != 1) fail(ErrCode::InvalidArgument, "non-integral polynomial quotient");
    out[i] = c.get_num();
  }
  trim(out);
  return out;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, deg r < deg b.
Poly prem(Poly a, const Poly& b) {
  int db = degree(b);
  Int lc = b[db];
  int e = degree(a) - db + 1;
  while (degree(a) >= db) {
    int da = degree(a);
    Int c = a[da];
    for (auto& x : a) x *= lc;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    trim(a);
    --e;
  }
  // degree drops may skip scalings; make the total factor exactly lc^(delta+1)
  if (e > 0) {
    Int f = pow_int(lc, e);
    for (auto& x : a) x *= f;
  }
  return a;
}

}  // namespace

Int resultant(const Poly& a_in, const Poly& b_in) {
  Poly A = a_in, B = b_in;
  trim(A);
  trim(B);
  if (is_zero(A) || is_zero(B)) return 0;
  int da = degree(A), db = degree(B);
  int sign = 1;
  if (da < db) {
    std::swap(A, B);
    std::swap(da, db);
    if ((da % 2) && (db % 2)) sign = -sign;
  }
  if (db == 0) {
    Int r = pow_int(B[0], da);
    return sign > 0 ? r : -r;
  }
  Int ca = content(A), cb = content(B);
  A = primitive_part(A);
  B = primitive_part(B);
  Int t = pow_int(ca, db) * pow_int(cb, da);
  Int g = 1, h = 1;
  for (;;) {
    da = degree(A);
    db = degree(B);
    int delta = da - db;
    if ((da % 2) && (db % 2)) sign = -sign;
    Poly R = prem(A, B);
    if (is_zero(R)) {
      if (db == 0) {
        // B is a nonzero constant: finish below
      } else {
        return 0;  // common factor of positive degree
      }
    }
    A = B;
    B = R;
    // divide by g*h^delta (exact by subresultant theory)
    Int div = g * pow_int(h, delta);
    for (auto& x : B) {
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), div.get_mpz_t());
      if (r != 0) fail(ErrCode::InvalidArgument, "subresultant division not exact");
      x = q;
    }
    g = leading(A);
    // h = g^delta * h^(1-delta), kept as an exact integer
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      Int num = pow_int(g, delta);
      Int den = pow_int(h, delta - 1);
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (r != 0) fail(ErrCode::InvalidArgument, "subresultant h-update not exact");
      h = q;
    }
    if (degree(B) <= 0) {
      if (is_zero(B)) return 0;
      // res = sign * t * lc(B)^(deg A) / h^(deg A - 1)
      int dA = degree(A);
      Int num = pow_int(B[0], dA);
      Int den = pow_int(h, dA - 1);
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (r != 0) fail(ErrCode::InvalidArgument, "subresultant finish not exact");
      Int res = t * q;
      return sign > 0 ? res : -res;
    }
  }
}

Poly gcd_poly(const Poly& a_in, const Poly& b_in) {
  Poly A = primitive_part(a_in), B = primitive_part(b_in);
  trim(A);
  trim(B);
  if (is_zero(A)) return B;
  if (is_zero(B)) return A;
  if (degree(A) < degree(B)) std::swap(A, B);
  while (!is_zero(B)) {
    Poly R = prem(A, B);
    A = B;
    B = primitive_part(R);
  }
  A = primitive_part(A);
  if (leading(A) < 0) A = poly_neg(A);
  return A;
}

bool is_squarefree(const Poly& p) {
  if (degree(p) <= 1) return true;
  return degree(gcd_poly(p, derivative(p))) == 0;
}

Poly squarefree_part(const Poly& p) {
  if (degree(p) <= 1) return primitive_part(p);
  Poly g = gcd_poly(p, derivative(p));
  if (degree(g) == 0) return primitive_part(p);
  return primitive_part(poly_divexact(primitive_part(p), g));
}

Int root_bound_pow2(const Poly& p) {
  int d = degree(p);
  if (d <= 0) return 1;
  // Cauchy: all roots |x| < 1 + max|a_i| / |lead|
  Int m = 0;
  for (int i = 0; i < d; ++i) m = std::max(m, Int(abs(p[i])));
  Int lead = abs(p[d]);
  Int bound = 1 + (m + lead - 1) / lead;  // >= 1 + max/lead
  Int b = 1;
  while (b < bound + 1) b *= 2;
  return b;
}

namespace {

// Sign-preserving Sturm chain: each element is a positive-scalar multiple of
// the corresponding rational-remainder chain element.
std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(primitive_part(p));
  Poly d = derivative(p);
  if (is_zero(d)) return chain;
  chain.push_back(primitive_part(d));
  for (;;) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain[chain.size() - 1];
    int delta = degree(a) - degree(b);
    Poly r = prem(a, b);
    if (is_zero(r)) break;
    // prem multiplies a by lc(b)^(delta+1); if that factor is negative the
    // remainder sign is flipped relative to the true remainder.
    bool flipped = (leading(b) < 0) && ((delta + 1) % 2 == 1);
    Poly next = primitive_part(r);
    // Sturm requires the negated remainder.
    if (!flipped) next = poly_neg(next);
    chain.push_back(next);
    if (degree(chain.back()) == 0) break;
  }
  return chain;
}

int sign_variations_at(const std::vector<Poly>& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

struct FoundRationalRoot {
  Rat value;
};

struct Isolator {
  const Poly& f;
  std::vector<Poly> chain;
  std::vector<RealRoot> out;

  explicit Isolator(const Poly& p) : f(p), chain(sturm_chain(p)) {}

  int count(const Rat& a, const Rat& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
  }

  // A dyadic bisection point strictly inside (a, b); throws if it is a root
  // so the caller can deflate and restart.
  Rat nonroot_mid(const Rat& a, const Rat& b) {
    Rat m = (a + b) / 2;
    if (sign_at(f, m) != 0) return m;
    throw FoundRationalRoot{m};
  }

  void isolate(const Rat& a, const Rat& b) {
    int c = count(a, b);
    if (c <= 0) return;
    if (c == 1) {
      out.push_back(RealRoot{a, b, false});
      return;
    }
    Rat m = nonroot_mid(a, b);
    isolate(a, m);
    isolate(m, b);
  }
};

}  // namespace

std::vector<RealRoot> isolate_real_roots(const Poly& p_in) {
  // Distinct real roots only: work with the squarefree part.
  Poly p = squarefree_part(p_in);
  if (degree(p) <= 0) return {};
  std::vector<RealRoot> exact;
  std::vector<RealRoot> intervals;
  for (;;) {
    if (degree(p) <= 0) {
      intervals.clear();
      break;
    }
    Int b = root_bound_pow2(p);
    Isolator iso(p);
    try {
      iso.isolate(Rat(-b), Rat(b));
    } catch (const FoundRationalRoot& hit) {
      Rat v = hit.value;
      v.canonicalize();
      exact.push_back(RealRoot{v, v, true});
      Poly lin = {-v.get_num(), Int(v.get_den())};  // den*X - num
      p = poly_divexact(p, lin);
      continue;  // restart isolation on the deflated polynomial
    }
    intervals = std::move(iso.out);
    // Shrink any interval that still touches an already-extracted exact root
    // (endpoints included: later refinement runs against the full
    // polynomial, so its roots must be strictly outside).
    for (auto& r : intervals) {
      for (const auto& e : exact) {
        while (!r.exact && r.lo <= e.lo && e.lo <= r.hi) {
          Rat m = (r.lo + r.hi) / 2;
          int sm = sign_at(p, m);
          if (sm == 0) {
            r = RealRoot{m, m, true};
            break;
          }
          if (sm == sign_at(p, r.lo))
            r.lo = m;
          else
            r.hi = m;
        }
      }
    }
    break;
  }
  std::vector<RealRoot> all = std::move(exact);
  all.insert(all.end(), intervals.begin(), intervals.end());
  std::sort(all.begin(), all.end(),
            [](const RealRoot& x, const RealRoot& y) { return x.lo + x.hi < y.lo + y.hi; });
  return all;
}

void refine_real_root(const Poly& p, RealRoot& r, const Rat& width) {
  if (r.exact) return;
  int slo = sign_at(p, r.lo);
  int shi = sign_at(p, r.hi);
  if (slo == 0) {
    r = RealRoot{r.lo, r.lo, true};
    return;
  }
  if (shi == 0) {
    r = RealRoot{r.hi, r.hi, true};
    return;
  }
  if (slo == shi)
    fail(ErrCode::InvalidArgument, "refine_real_root: interval endpoints have equal sign");
  while (r.hi - r.lo > width) {
    Rat m = (r.lo + r.hi) / 2;
    int sm = sign_at(p, m);
    if (sm == 0) {
      r = RealRoot{m, m, true};
      return;
    }
    if (sm == slo)
      r.lo = m;
    else
      r.hi = m;
  }
}

int count_real_roots_between(const Poly& p, const Rat& a, const Rat& b) {
  auto chain = sturm_chain(squarefree_part(p));
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

}  // namespace thue
