#include "thue/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "thue/errors.hpp"

namespace thue {

namespace {

// Durand-Kerner in double precision on scaled coefficients; good enough as a
// starting sketch, never trusted for certified results.
std::vector<std::complex<double>> dk_approximations(const Poly& f) {
  int n = degree(f);
  double maxmag = 0;
  for (const auto& c : f) {
    double m = std::abs(mpz_get_d(Int(abs(c)).get_mpz_t()));
    maxmag = std::max(maxmag, m);
  }
  std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    c[static_cast<size_t>(i)] = mpz_get_d(f[static_cast<size_t>(i)].get_mpz_t()) / maxmag;
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  // starting points on a slightly irrational spiral
  for (int i = 0; i < n; ++i)
    z[static_cast<size_t>(i)] = std::polar(0.4 + 0.9 * i / n + 0.5, 0.9 + 2.0 * M_PI * i / n);
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + c[static_cast<size_t>(i)];
    return acc;
  };
  auto evald = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 1; --i)
      acc = acc * x + c[static_cast<size_t>(i)] * static_cast<double>(i);
    return acc;
  };
  for (int iter = 0; iter < 600; ++iter) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> den = c[static_cast<size_t>(n)];
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
      if (std::abs(den) == 0) continue;
      std::complex<double> delta = eval(z[static_cast<size_t>(i)]) / den;
      z[static_cast<size_t>(i)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  // Newton polish helps clustered pairs before certification.
  for (auto& zi : z)
    for (int s = 0; s < 4; ++s) {
      std::complex<double> d = evald(zi);
      if (std::abs(d) == 0) break;
      zi -= eval(zi) / d;
    }
  return z;
}

Box point_box(double re, double im) {
  return Box(Interval::from_endpoints_exact(re, re), Interval::from_endpoints_exact(im, im));
}

Box widen(const Box& b, double delta) {
  Interval d = Interval::from_endpoints_exact(-delta, delta);
  return Box(b.re + d, b.im + d);
}

Box mid_box(const Box& b) {
  Interval re = Interval::from_rats(b.re.mid_rat(), b.re.mid_rat());
  Interval im = Interval::from_rats(b.im.mid_rat(), b.im.mid_rat());
  return Box(re, im);
}

// Krawczyk test: returns the contracted box when B certifiably contains a
// unique simple root, nullopt otherwise.
std::optional<Box> krawczyk_step(const Poly& f, const Poly& fp, const Box& B) {
  Box m = mid_box(B);
  Box fm = eval_box(f, m);
  Box fpm = eval_box(fp, m);
  Interval den = modulus_sq(fpm);
  if (den.contains_zero()) return std::nullopt;
  Box c = fpm.conj();
  c = Box(c.re / den, c.im / den);  // approximate inverse of f'(mid)
  c = mid_box(c);
  Box fpB = eval_box(fp, B);
  Box one(Interval(1L), Interval(0L));
  Box K = m - c * fm + (one - c * fpB) * (B - m);
  // K(B) strictly inside B certifies a unique simple root in B.
  if (mpfr_cmp(K.re.lo(), B.re.lo()) > 0 && mpfr_cmp(K.re.hi(), B.re.hi()) < 0 &&
      mpfr_cmp(K.im.lo(), B.im.lo()) > 0 && mpfr_cmp(K.im.hi(), B.im.hi()) < 0) {
    return K;
  }
  return std::nullopt;
}

mpfr_prec_t precision_for_tol(double tol) {
  double bits = -std::log2(std::max(tol, 1e-300)) * 2 + 96;
  return static_cast<mpfr_prec_t>(std::max(128.0, bits));
}

}  // namespace

void RootSystem::rebuild_boxes() {
  // real prefix from the dyadic bisection data
  for (size_t i = 0; i < real_data_.size(); ++i) {
    const RealRoot& r = real_data_[i];
    roots_[i].box = Box(Interval::from_rats(r.lo, r.hi), Interval(0L));
    roots_[i].is_real = true;
    roots_[i].conj = static_cast<int>(i);
  }
}

RootSystem RootSystem::solve(const BinaryForm& F, double tol) {
  if (F.a0() == 0)
    fail(ErrCode::ZeroLeadingCoefficient, "root solving needs a0 != 0 (apply a shift first)");
  Poly f = F.univariate();
  if (!is_squarefree(f)) fail(ErrCode::RepeatedRoot, "form has a repeated root (D = 0)");

  RootSystem rs;
  rs.F_ = F;
  rs.f_ = f;
  rs.fp_ = derivative(f);
  rs.tol_ = tol;

  const int n = F.deg();
  PrecisionGuard guard(precision_for_tol(tol));

  // Certified real roots by Sturm isolation + bisection.
  rs.real_data_ = isolate_real_roots(f);
  const int r1 = static_cast<int>(rs.real_data_.size());
  if ((n - r1) % 2 != 0) fail(ErrCode::NonConvergence, "real root count parity mismatch");
  rs.q_ = (n - r1) / 2;

  Rat width = Rat(1);
  while (width.get_d() > tol) width /= 16;
  for (auto& r : rs.real_data_) refine_real_root(f, r, width);

  rs.roots_.resize(static_cast<size_t>(n));
  rs.rebuild_boxes();

  // Non-real roots: sketch, then certify upper-half boxes by Krawczyk.
  if (rs.q_ > 0) {
    auto sketch = dk_approximations(f);
    std::vector<std::complex<double>> upper;
    for (auto z : sketch)
      if (z.imag() > 0) upper.push_back(z);
    std::sort(upper.begin(), upper.end(), [](auto a, auto b) { return a.imag() > b.imag(); });
    if (static_cast<int>(upper.size()) < rs.q_)
      fail(ErrCode::NonConvergence, "floating-point sketch lost a conjugate pair");
    upper.resize(static_cast<size_t>(rs.q_));
    std::sort(upper.begin(), upper.end(), [](auto a, auto b) {
      return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });

    std::vector<Box> certified;
    for (auto z : upper) {
      std::optional<Box> got;
      for (double delta = 1e-12; delta < 1e-1; delta *= 32) {
        Box B = widen(point_box(z.real(), z.imag()), delta);
        auto K = krawczyk_step(rs.f_, rs.fp_, B);
        if (K) {
          got = K;
          break;
        }
      }
      if (!got) fail(ErrCode::NonConvergence, "could not certify a complex root enclosure");
      certified.push_back(*got);
    }
    // contract to tol
    for (auto& B : certified) {
      int iters = 0;
      while (B.diam_double() > tol && iters++ < 200) {
        auto K = krawczyk_step(rs.f_, rs.fp_, B);
        if (!K) break;
        B = *K;
      }
      if (B.diam_double() > tol)
        fail(ErrCode::NonConvergence, "complex enclosure refinement stalled");
    }
    // disjointness among certified boxes and against mirrored copies
    for (size_t i = 0; i < certified.size(); ++i)
      for (size_t j = i + 1; j < certified.size(); ++j)
        if (certified[i].overlaps(certified[j]))
          fail(ErrCode::NonConvergence, "complex enclosures overlap");
    for (const auto& B : certified)
      if (!B.im.is_positive())
        fail(ErrCode::NonConvergence, "upper-half enclosure touches the real axis");

    for (int i = 0; i < rs.q_; ++i) {
      const Box& B = certified[static_cast<size_t>(i)];
      int base = r1 + 2 * i;
      rs.roots_[static_cast<size_t>(base)] = RootEnclosure{B, false, base + 1};
      rs.roots_[static_cast<size_t>(base + 1)] = RootEnclosure{B.conj(), false, base};
    }
  }
  return rs;
}

void RootSystem::refine(double tol) {
  if (tol >= tol_) return;
  PrecisionGuard guard(precision_for_tol(tol));
  Rat width = Rat(1);
  while (width.get_d() > tol) width /= 16;
  for (auto& r : real_data_) refine_real_root(f_, r, width);
  rebuild_boxes();
  for (int i = real_count(); i < n(); i += 2) {
    Box B = roots_[static_cast<size_t>(i)].box;
    int iters = 0;
    while (B.diam_double() > tol && iters++ < 400) {
      auto K = krawczyk_step(f_, fp_, B);
      if (!K) {
        // re-widen slightly at higher precision and retry once
        B = widen(B, B.diam_double());
        K = krawczyk_step(f_, fp_, B);
        if (!K) fail(ErrCode::NonConvergence, "complex enclosure refinement stalled");
      }
      B = *K;
    }
    if (B.diam_double() > tol) fail(ErrCode::NonConvergence, "complex enclosure refinement stalled");
    roots_[static_cast<size_t>(i)].box = B;
    roots_[static_cast<size_t>(i + 1)].box = B.conj();
  }
  tol_ = tol;
}

Interval RootSystem::fprime_abs(int k) const {
  PrecisionGuard guard(precision_for_tol(tol_));
  return modulus(eval_box(fp_, root_box(k)));
}

Interval RootSystem::linear_factor_abs(int k, const Int& x, const Int& y) const {
  PrecisionGuard guard(precision_for_tol(tol_));
  Box xy(Interval(x) - Interval(y) * root_box(k).re, -(Interval(y) * root_box(k).im));
  return modulus(xy);
}

Interval separation_bound(int n, const Interval& mahler) {
  Interval s3 = sqrt(Interval(3L));
  Interval denom = pow_si(Interval(static_cast<long>(n) + 1), n) * pow_si(mahler, n - 1);
  return s3 / denom;
}

Interval imag_lower_bound(int n, const Interval& mahler) {
  return separation_bound(n, mahler) / Interval(2L);
}

std::pair<Interval, Interval> derivative_bounds(const RootSystem& rs, const Interval& mahler,
                                                const Int& D, int k, bool irreducible) {
  const int n = rs.n();
  Interval upper = Interval(Int(static_cast<long>(n) * (n + 1))) / Interval(2L) *
                   Interval(rs.form().naive_height()) *
                   pow_si(max(Interval(1L), modulus(rs.root_box(k))), n - 1);
  if (!irreducible) return {Interval(0L), upper};
  long e = static_cast<long>(n - 1) * (n - 1);
  Interval lower = Interval(Int(abs(D))) / pow_si(Interval(2L), e) / pow_si(mahler, 2 * n - 2);
  return {lower, upper};
}

}  // namespace thue
