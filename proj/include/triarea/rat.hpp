#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triarea/errors.hpp"

namespace triarea {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. All geometry in this library runs on this type; doubles only
// appear in reporting.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long long n) : v_(static_cast<long>(n)) {
    static_assert(sizeof(long) == sizeof(long long));
  }
  Rat(int num, int den) : Rat(static_cast<long>(num), static_cast<long>(den)) {}
  Rat(long long num, long long den) : Rat(static_cast<long>(num), static_cast<long>(den)) {}
  Rat(long num, long den) {
    if (den == 0) fail(Err::parse_error, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpz_class& n) : v_(n) {}
  explicit Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(Err::parse_error, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p", "p/q", optional leading '-' or '+' on either part.
  static Rat from_string(std::string_view s);

  std::string to_string() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_), raw_tag{}); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_), raw_tag{}); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_), raw_tag{}); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) fail(Err::invariant_violated, "rational division by zero");
    return Rat(mpq_class(a.v_ / b.v_), raw_tag{});
  }
  Rat operator-() const { return Rat(mpq_class(-v_), raw_tag{}); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rat abs(const Rat& a) { return Rat(mpq_class(::abs(a.v_)), raw_tag{}); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.to_string(); }

  const mpq_class& value() const { return v_; }

 private:
  struct raw_tag {};
  // Arithmetic on canonical mpq values stays canonical, so skip canonicalize.
  Rat(mpq_class v, raw_tag) : v_(std::move(v)) {}

  mpq_class v_;
};

inline Rat sq(const Rat& a) { return a * a; }

inline Rat Rat::from_string(std::string_view s) {
  auto bad = [&]() -> Rat {
    fail(Err::parse_error, "malformed rational: '" + std::string(s) + "'");
  };
  auto parse_int = [&](std::string_view t) -> mpz_class {
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
      if (t.size() == 1) bad();
    }
    size_t start = (!t.empty() && (t.front() == '+' || t.front() == '-')) ? 1 : 0;
    if (t.size() == start) bad();
    for (size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') bad();
    std::string cleaned(t);
    if (cleaned.front() == '+') cleaned.erase(0, 1);
    return mpz_class(cleaned, 10);
  };
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  mpz_class num = parse_int(s.substr(0, slash));
  mpz_class den = parse_int(s.substr(slash + 1));
  if (den == 0) bad();
  return Rat(num, den);
}

// Scales a rational vector in place to coprime integers whose first nonzero
// entry is positive. Returns false (vector untouched) when all entries are
// zero.
inline bool canonicalize_ratio(std::span<Rat> v) {
  bool all_zero = true;
  for (const Rat& r : v)
    if (!r.is_zero()) { all_zero = false; break; }
  if (all_zero) return false;

  mpz_class scale = 1;
  for (const Rat& r : v) scale = lcm(scale, r.den());
  mpz_class g = 0;
  std::vector<mpz_class> nums;
  nums.reserve(v.size());
  for (const Rat& r : v) {
    mpz_class n = r.num() * (scale / r.den());
    g = gcd(g, n);
    nums.push_back(std::move(n));
  }
  int lead = 0;
  for (const mpz_class& n : nums) {
    if (n != 0) { lead = sgn(n); break; }
  }
  if (lead < 0) g = -g;
  for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(mpz_class(nums[i] / g));
  return true;
}

}  // namespace triarea
