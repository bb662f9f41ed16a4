#pragma once

// Test-only oracles, independent of the library's solution paths.

#include <random>
#include <vector>

#include "thue/forms.hpp"
#include "thue/solver.hpp"

namespace thue::oracle {

// Exhaustive double loop. If |F(x,y)| <= m and |x| > B*y + m^(1/n) where B
// bounds every root modulus, then |a0| (|x|-B y)^n > m, impossible; so the
// box |x| <= B*ymax + m + 1 is exhaustive for primitive solutions.
inline std::vector<std::pair<Int, Int>> naive_enumerate(const BinaryForm& F, const Int& m,
                                                        const Int& y_max, bool equation,
                                                        bool exclude_zero) {
  std::vector<std::pair<Int, Int>> out;
  Int B = 2;
  {
    Poly f = F.univariate();
    if (degree(f) >= 1) B = root_bound_pow2(f);
  }
  auto admit = [&](const Int& v) {
    if (equation) return abs(v) == m;
    if (exclude_zero && v == 0) return false;
    return abs(v) <= m;
  };
  if (admit(F.evaluate(1, 0))) out.emplace_back(1, 0);
  for (Int y = 1; y <= y_max; ++y) {
    Int X = B * y + m + 1;
    for (Int x = -X; x <= X; ++x) {
      if (gcd(x, y) != 1) continue;
      if (admit(F.evaluate(x, y))) out.emplace_back(x, y);
    }
  }
  return out;
}

// Resultant of f and g via Bareiss fraction-free elimination of the
// Sylvester matrix; exact and entirely unrelated to the PRS code path.
inline Int sylvester_resultant(const Poly& f, const Poly& g) {
  int df = degree(f), dg = degree(g);
  if (df < 0 || dg < 0) return 0;
  if (df == 0) return pow_int(f[0], static_cast<unsigned long>(dg));
  if (dg == 0) return pow_int(g[0], static_cast<unsigned long>(df));
  int n = df + dg;
  std::vector<std::vector<Int>> a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k) a[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = f[static_cast<size_t>(df - k)];
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k)
      a[static_cast<size_t>(dg + r)][static_cast<size_t>(r + k)] = g[static_cast<size_t>(dg - k)];
  // Bareiss
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                  a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;  // exact by Bareiss
      }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  Int det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign > 0 ? det : -det;
}

// Discriminant through the Sylvester oracle.
inline Int discriminant_oracle(const BinaryForm& F) {
  Poly f = F.univariate();
  Int res = sylvester_resultant(f, derivative(f));
  Int d = res / F.a0();
  int n = F.deg();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  long pick(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen);
  }
};

inline BinaryForm random_form(Rng& rng, int n, long coeff_cap, bool nonzero_lead = true) {
  for (;;) {
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    for (auto& x : c) x = Int(rng.pick(-coeff_cap, coeff_cap));
    if (nonzero_lead && c[0] == 0) continue;
    bool all0 = true;
    for (const auto& x : c)
      if (x != 0) all0 = false;
    if (all0) continue;
    return BinaryForm(std::move(c));
  }
}

inline IntMatrix2 random_matrix(Rng& rng, long cap) {
  return IntMatrix2{Int(rng.pick(-cap, cap)), Int(rng.pick(-cap, cap)), Int(rng.pick(-cap, cap)),
                    Int(rng.pick(-cap, cap))};
}

inline IntMatrix2 random_unimodular(Rng& rng, int steps = 8) {
  // random product of elementary shears and the swap
  IntMatrix2 A = IntMatrix2::identity();
  for (int i = 0; i < steps; ++i) {
    long k = rng.pick(-3, 3);
    IntMatrix2 S = (i % 2 == 0) ? IntMatrix2{1, Int(k), 0, 1} : IntMatrix2{1, 0, Int(k), 1};
    IntMatrix2 B;
    B.a = A.a * S.a + A.b * S.c;
    B.b = A.a * S.b + A.b * S.d;
    B.c = A.c * S.a + A.d * S.c;
    B.d = A.c * S.b + A.d * S.d;
    A = B;
  }
  return A;
}

}  // namespace thue::oracle
