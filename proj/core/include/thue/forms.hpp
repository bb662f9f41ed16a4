#pragma once

#include <string>
#include <vector>

#include "thue/integers.hpp"
#include "thue/polynomial.hpp"

namespace thue {

// F(x, y) = a0 x^n + a1 x^(n-1) y + ... + an y^n with integer coefficients.
class BinaryForm {
 public:
  BinaryForm(std::vector<Int> coeffs);

  int deg() const { return n_; }
  const std::vector<Int>& coeffs() const { return a_; }
  const Int& coeff(int i) const { return a_[static_cast<size_t>(i)]; }
  const Int& a0() const { return a_.front(); }
  const Int& an() const { return a_.back(); }

  Int content() const;
  BinaryForm primitive() const;  // content divided out, sign of a-lead kept

  Int evaluate(const Int& x, const Int& y) const;
  Int naive_height() const;

  // f(X) = F(X, 1), highest coefficient first in our storage order.
  Poly univariate() const;  // coefficient of X^i at index i

  bool operator==(const BinaryForm& o) const { return a_ == o.a_; }

  std::string str() const;  // "a0*x^n + ..." display form

 private:
  std::vector<Int> a_;
  int n_;
};

struct IntMatrix2 {
  Int a, b, c, d;

  Int det() const { return a * d - b * c; }
  bool unimodular() const {
    Int t = det();
    return t == 1 || t == -1;
  }
  static IntMatrix2 identity() { return {1, 0, 0, 1}; }
};

// Coefficients of F(ax+by, cx+dy) by exact expansion.
BinaryForm gl2_apply(const BinaryForm& F, const IntMatrix2& A);

// Exact discriminant; a0 = 0 handled through a unimodular shift x -> x + k*y
// (the discriminant is invariant under it). Requires degree >= 2 and not the
// zero form.
Int discriminant(const BinaryForm& F);

// A0 = [[p,0],[0,1]] and Aj = [[0,-1],[p,j]], j = 1..p; the p+1 sublattices
// Aj Z^2 cover Z^2.
std::vector<IntMatrix2> covering_matrices(const Int& p);

// Smallest k >= 0 such that F(x + k*y, y) has a nonzero leading coefficient.
long normalizing_shift(const BinaryForm& F);

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityReport {
  Irreducibility verdict = Irreducibility::Unknown;
  std::string evidence;  // modular degree patterns / divisor witnesses
};

// Irreducibility over Q of F (equivalently of f = F(X,1) when a0 != 0).
// Certified for deg <= max_certified_degree via a bounded divisor search;
// beyond that, modular evidence only (verdict may be Unknown).
IrreducibilityReport is_irreducible(const BinaryForm& F, int max_certified_degree = 8);

// --- text format ---------------------------------------------------------
// Accepted everywhere: "a0,a1,...,an" or a polynomial string made of
// c*x^i*y^j terms joined by +/-; both parse to the identical BinaryForm.
BinaryForm parse_form(const std::string& text);

}  // namespace thue
