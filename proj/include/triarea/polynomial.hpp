#pragma once

#include <utility>
#include <vector>

#include "triarea/rat.hpp"

namespace triarea {

// Dense univariate polynomial with rational coefficients, ascending powers.
// The zero polynomial has an empty coefficient vector.
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
  static Poly constant(const Rat& v) { return Poly({v}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rat& lead() const { return c.back(); }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Rat(0);
  }

  Rat eval(const Rat& x) const;

  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);
Poly operator-(const Poly& a);

Poly derivative(const Poly& p);

// Euclidean division over the rationals: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd (gcd of the zero polynomial and p is monic-scaled p).
Poly poly_gcd(Poly a, Poly b);

// p divided by gcd(p, p'): same real roots, all simple.
Poly squarefree_part(const Poly& p);

// Sturm chain of a polynomial; counts real roots exactly.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  // Number of distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rat& lo, const Rat& hi) const;
  int count_all_roots() const;

 private:
  int variations_at(const Rat& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;

  std::vector<Poly> seq_;
};

// Upper bound B with all real roots of p in (-B, B).
Rat root_bound(const Poly& p);

// Isolating intervals for the real roots of a squarefree polynomial, in
// increasing order. An interval is either a collapsed exact rational root
// [r, r] (when bisection lands on it) or an open interval with one sign
// change and no root at either endpoint.
std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p);

// A real algebraic number: a root of a squarefree polynomial pinned down by
// an isolating interval. Supports exact sign evaluation of any polynomial at
// the number.
class AlgebraicNum {
 public:
  AlgebraicNum(Poly p, Rat lo, Rat hi);

  bool is_rational() const { return lo_ == hi_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }

  // Halves the isolating interval.
  void refine();

  // Exact sign of q at this number: -1, 0, or +1.
  int sign_of(const Poly& q);

  double to_double();

 private:
  Poly p_;
  Rat lo_, hi_;
};

}  // namespace triarea
