#include "triarea/polynomial.hpp"

#include <algorithm>

namespace triarea {

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& a) {
  std::vector<Rat> r(a.c);
  for (Rat& v : r) v *= s;
  return Poly(std::move(r));
}

Poly operator-(const Poly& a) { return Rat(-1) * a; }

Poly derivative(const Poly& p) {
  if (p.c.size() <= 1) return Poly();
  std::vector<Rat> r(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * p.c[i];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Err::invariant_violated, "polynomial division by zero");
  Poly r = a;
  if (r.degree() < b.degree()) return {Poly(), r};
  std::vector<Rat> q(r.degree() - b.degree() + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rat f = r.lead() / b.lead();
    q[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] -= f * b.c[i];
    r.normalize();
  }
  return {Poly(std::move(q)), r};
}

namespace {

Poly make_monic(Poly p) {
  if (p.is_zero()) return p;
  Rat inv = Rat(1) / p.lead();
  for (Rat& v : p.c) v *= inv;
  return p;
}

// Rescale by a positive rational so the coefficients become coprime integers.
// Positive scaling keeps every sign, so remainder sequences stay valid while
// coefficient growth stays polynomial instead of exploding.
Poly make_primitive(Poly p) {
  if (p.is_zero()) return p;
  mpz_class scale = 1;
  for (const Rat& v : p.c) scale = lcm(scale, v.den());
  mpz_class g = 0;
  std::vector<mpz_class> nums;
  nums.reserve(p.c.size());
  for (const Rat& v : p.c) {
    mpz_class n = v.num() * (scale / v.den());
    g = gcd(g, n);
    nums.push_back(std::move(n));
  }
  for (size_t i = 0; i < p.c.size(); ++i) p.c[i] = Rat(mpz_class(nums[i] / g));
  return p;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  a = make_primitive(std::move(a));
  b = make_primitive(std::move(b));
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = make_primitive(std::move(r));
  }
  return make_monic(std::move(a));
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 1) return p;
  Poly g = poly_gcd(p, derivative(p));
  if (g.degree() == 0) return p;
  auto [q, r] = divmod(p, g);
  if (!r.is_zero()) fail(Err::invariant_violated, "squarefree division not exact");
  return q;
}

SturmChain::SturmChain(const Poly& p) {
  seq_.push_back(make_primitive(p));
  if (p.degree() >= 1) {
    seq_.push_back(make_primitive(derivative(p)));
    while (!seq_.back().is_zero() && seq_.back().degree() >= 1) {
      Poly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
      if (r.is_zero()) break;
      // Flip the sign and rescale by a positive factor: the sign pattern is
      // all that matters, and stripping content keeps coefficients small.
      seq_.push_back(make_primitive(-r));
    }
  }
}

namespace {

int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const Poly& p : seq_) signs.push_back(p.eval(x).sign());
  return count_sign_changes(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const Poly& p : seq_) signs.push_back(p.is_zero() ? 0 : p.lead().sign());
  return count_sign_changes(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const Poly& p : seq_) {
    if (p.is_zero()) {
      signs.push_back(0);
    } else {
      int s = p.lead().sign();
      signs.push_back(p.degree() % 2 == 0 ? s : -s);
    }
  }
  return count_sign_changes(signs);
}

int SturmChain::count_roots(const Rat& lo, const Rat& hi) const {
  if (!(lo < hi)) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all_roots() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

Rat root_bound(const Poly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat mx(0);
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, abs(p.c[i]));
  return Rat(1) + mx / abs(p.lead());
}

std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.degree() < 1) return out;
  SturmChain chain(p);
  int total = chain.count_all_roots();
  if (total == 0) return out;

  // Grow a dyadic bracket until it holds every root; the Cauchy bound can be
  // astronomically loose for big coefficients, this stays near the roots.
  Rat bound(1);
  while (chain.count_roots(-bound, bound) < total) bound *= Rat(2);

  // Work queue of (lo, hi] intervals with a known root count.
  struct Item {
    Rat lo, hi;
    int count;
  };
  std::vector<Item> stack;
  stack.push_back({-bound, bound, total});

  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 1) {
      // One root in (lo, hi]; lo is never a root here, so either hi is the
      // root itself or the open interval brackets it with a sign change.
      if (p.eval(it.hi).is_zero())
        out.push_back({it.hi, it.hi});
      else
        out.push_back({it.lo, it.hi});
      continue;
    }
    Rat mid = (it.lo + it.hi) / Rat(2);
    if (p.eval(mid).is_zero()) {
      out.push_back({mid, mid});
      // Carve out a punctured neighbourhood of mid that contains no other
      // root, then recurse on the two outer pieces.
      Rat eps = (it.hi - it.lo) / Rat(1024);
      Rat lo2 = mid - eps, hi2 = mid + eps;
      while (p.eval(lo2).is_zero() || p.eval(hi2).is_zero() ||
             chain.count_roots(lo2, hi2) != 1) {
        lo2 = (lo2 + mid) / Rat(2);
        hi2 = (mid + hi2) / Rat(2);
      }
      int left = chain.count_roots(it.lo, lo2);
      int right = chain.count_roots(hi2, it.hi);
      if (left > 0) stack.push_back({it.lo, lo2, left});
      if (right > 0) stack.push_back({hi2, it.hi, right});
      continue;
    }
    int left = chain.count_roots(it.lo, mid);
    int right = it.count - left;
    if (left > 0) stack.push_back({it.lo, mid, left});
    if (right > 0) stack.push_back({mid, it.hi, right});
  }

  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

AlgebraicNum::AlgebraicNum(Poly p, Rat lo, Rat hi) : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) fail(Err::invariant_violated, "inverted isolating interval");
  if (lo_ == hi_) {
    if (!p_.eval(lo_).is_zero())
      fail(Err::invariant_violated, "collapsed interval is not a root");
  } else {
    if (p_.eval(lo_).is_zero() || p_.eval(hi_).is_zero())
      fail(Err::invariant_violated, "isolating interval has a root endpoint");
    if (p_.eval(lo_).sign() == p_.eval(hi_).sign())
      fail(Err::invariant_violated, "isolating interval without sign change");
  }
}

void AlgebraicNum::refine() {
  if (is_rational()) return;
  Rat mid = (lo_ + hi_) / Rat(2);
  Rat v = p_.eval(mid);
  if (v.is_zero()) {
    lo_ = mid;
    hi_ = mid;
    return;
  }
  if (v.sign() == p_.eval(lo_).sign())
    lo_ = mid;
  else
    hi_ = mid;
}

int AlgebraicNum::sign_of(const Poly& q) {
  if (q.is_zero()) return 0;
  if (is_rational()) return q.eval(lo_).sign();
  Poly g = poly_gcd(p_, q);
  if (g.degree() >= 1) {
    // q vanishes at this number iff the shared factor has a root here.
    if (g.eval(lo_).sign() * g.eval(hi_).sign() < 0) return 0;
  }
  SturmChain qc(squarefree_part(q));
  while (qc.count_roots(lo_, hi_) != 0) {
    refine();
    if (is_rational()) return q.eval(lo_).sign();
  }
  Rat mid = (lo_ + hi_) / Rat(2);
  int s = q.eval(mid).sign();
  if (s == 0) fail(Err::invariant_violated, "sign evaluation hit an uncounted root");
  return s;
}

double AlgebraicNum::to_double() {
  Rat tol(1L, 1152921504606846976L);  // 2^-60
  while (!is_rational() && hi_ - lo_ > tol) refine();
  return ((lo_ + hi_) / Rat(2)).to_double();
}

}  // namespace triarea
