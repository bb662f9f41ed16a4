#include "thue/forms.hpp"

#include <sstream>

#include "thue/errors.hpp"

namespace thue {

BinaryForm::BinaryForm(std::vector<Int> coeffs) : a_(std::move(coeffs)) {
  if (a_.size() < 2) fail(ErrCode::DegreeTooSmall, "a binary form needs degree >= 1");
  n_ = static_cast<int>(a_.size()) - 1;
  bool all_zero = true;
  for (const auto& c : a_)
    if (c != 0) all_zero = false;
  if (all_zero) fail(ErrCode::InvalidArgument, "the zero form is not allowed");
}

Int BinaryForm::content() const {
  Int g = 0;
  for (const auto& c : a_) g = gcd(g, c);
  return g;
}

BinaryForm BinaryForm::primitive() const {
  Int c = content();
  if (c <= 1) return *this;
  std::vector<Int> out = a_;
  for (auto& x : out) x /= c;
  return BinaryForm(std::move(out));
}

Int BinaryForm::evaluate(const Int& x, const Int& y) const {
  // Horner in x with explicit powers of y.
  Int acc = a_[0];
  Int ypow = 1;
  for (int i = 1; i <= n_; ++i) {
    ypow *= y;
    acc = acc * x + a_[static_cast<size_t>(i)] * ypow;
  }
  return acc;
}

Int BinaryForm::naive_height() const {
  Int h = 0;
  for (const auto& c : a_) h = std::max(h, Int(abs(c)));
  return h;
}

Poly BinaryForm::univariate() const {
  Poly f(static_cast<size_t>(n_) + 1);
  for (int i = 0; i <= n_; ++i) f[static_cast<size_t>(n_ - i)] = a_[static_cast<size_t>(i)];
  trim(f);
  return f;
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= n_; ++i) {
    const Int& c = a_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Int ac = abs(c);
    if (!first)
      os << (c > 0 ? " + " : " - ");
    else if (c < 0)
      os << "-";
    first = false;
    int px = n_ - i, py = i;
    bool coeff_one = (ac == 1) && (px + py > 0);
    if (!coeff_one) os << ac.get_str();
    if (px > 0) {
      if (!coeff_one) os << "*";
      os << "x";
      if (px > 1) os << "^" << px;
    }
    if (py > 0) {
      if (px > 0 || !coeff_one) os << "*";
      os << "y";
      if (py > 1) os << "^" << py;
    }
  }
  if (first) os << "0";
  return os.str();
}

BinaryForm gl2_apply(const BinaryForm& F, const IntMatrix2& A) {
  int n = F.deg();
  std::vector<Int> out(static_cast<size_t>(n) + 1, Int(0));
  // (a x + b y)^(n-i) expanded once per i, times (c x + d y)^i.
  for (int i = 0; i <= n; ++i) {
    if (F.coeff(i) == 0) continue;
    // coefficients of (a x + b y)^(n-i)
    std::vector<Int> p1(static_cast<size_t>(n - i) + 1);
    for (int k = 0; k <= n - i; ++k)
      p1[static_cast<size_t>(k)] = binomial(static_cast<unsigned long>(n - i),
                                            static_cast<unsigned long>(k)) *
                                   pow_int(A.a, static_cast<unsigned long>(n - i - k)) *
                                   pow_int(A.b, static_cast<unsigned long>(k));
    std::vector<Int> p2(static_cast<size_t>(i) + 1);
    for (int k = 0; k <= i; ++k)
      p2[static_cast<size_t>(k)] = binomial(static_cast<unsigned long>(i),
                                            static_cast<unsigned long>(k)) *
                                   pow_int(A.c, static_cast<unsigned long>(i - k)) *
                                   pow_int(A.d, static_cast<unsigned long>(k));
    for (int u = 0; u <= n - i; ++u)
      for (int v = 0; v <= i; ++v)
        out[static_cast<size_t>(u + v)] += F.coeff(i) * p1[static_cast<size_t>(u)] * p2[static_cast<size_t>(v)];
  }
  return BinaryForm(std::move(out));
}

long normalizing_shift(const BinaryForm& F) {
  if (F.a0() != 0) return 0;
  for (long k = 1; k <= F.deg() + 1; ++k) {
    BinaryForm G = gl2_apply(F, IntMatrix2{1, 0, Int(k), 1});
    if (G.a0() != 0) return k;
  }
  fail(ErrCode::InvalidArgument, "no unimodular shift restores the leading coefficient");
}

Int discriminant(const BinaryForm& F_in) {
  if (F_in.deg() < 2) fail(ErrCode::DegreeTooSmall, "discriminant needs degree >= 2");
  BinaryForm F = F_in;
  if (F.a0() == 0) {
    long k = normalizing_shift(F);
    F = gl2_apply(F, IntMatrix2{1, 0, Int(k), 1});  // det 1, discriminant unchanged
  }
  int n = F.deg();
  Poly f = F.univariate();
  Poly fp = derivative(f);
  Int res = resultant(f, fp);
  // disc(f) = (-1)^(n(n-1)/2) Res(f, f') / a0
  Int d = res / F.a0();
  if (((static_cast<long>(n) * (n - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

std::vector<IntMatrix2> covering_matrices(const Int& p) {
  if (!is_prime(p)) fail(ErrCode::NotPrime, "covering family needs a prime p");
  std::vector<IntMatrix2> out;
  out.push_back(IntMatrix2{p, 0, 0, 1});
  for (Int j = 1; j <= p; ++j) out.push_back(IntMatrix2{0, -1, p, j});
  return out;
}

}  // namespace thue
