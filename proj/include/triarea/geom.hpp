#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "triarea/rat.hpp"

namespace triarea {

struct Point2 {
  Rat x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::strong_ordering operator<=>(const Point2&, const Point2&) = default;
};
using Vec2 = Point2;

inline Vec2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
inline Vec2 operator+(const Point2& p, const Vec2& q) { return {p.x + q.x, p.y + q.y}; }
inline Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
inline Rat dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }
inline Rat cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline Rat norm_sq(const Vec2& v) { return dot(v, v); }

struct Point3 {
  Rat x, y, z;
  friend bool operator==(const Point3&, const Point3&) = default;
  friend std::strong_ordering operator<=>(const Point3&, const Point3&) = default;
};
using Vec3 = Point3;

inline Vec3 operator-(const Point3& p, const Point3& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
inline Vec3 operator+(const Point3& p, const Vec3& q) { return {p.x + q.x, p.y + q.y, p.z + q.z}; }
inline Vec3 operator*(const Rat& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Rat dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }
inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}
inline Rat norm_sq(const Vec3& v) { return dot(v, v); }
inline bool is_zero(const Vec3& v) { return v.x.is_zero() && v.y.is_zero() && v.z.is_zero(); }
inline bool is_zero(const Vec2& v) { return v.x.is_zero() && v.y.is_zero(); }

inline std::string to_string(const Point2& p) { return p.x.to_string() + " " + p.y.to_string(); }
inline std::string to_string(const Point3& p) {
  return p.x.to_string() + " " + p.y.to_string() + " " + p.z.to_string();
}

// Line a*x + b*y + c = 0 with (a,b) != (0,0). Stored canonically: a, b, c are
// coprime integers and the first nonzero of (a,b) is positive.
struct Line2 {
  Rat a, b, c;

  static Line2 make(Rat a, Rat b, Rat c);
  static Line2 through(const Point2& p, const Point2& q);
  static Line2 point_dir(const Point2& p, const Vec2& d);

  Rat eval(const Point2& p) const { return a * p.x + b * p.y + c; }
  bool contains(const Point2& p) const { return eval(p).is_zero(); }
  Vec2 direction() const { return {b, -a}; }

  friend bool operator==(const Line2&, const Line2&) = default;
  friend std::strong_ordering operator<=>(const Line2&, const Line2&) = default;
};

bool parallel(const Line2& l, const Line2& m);
std::optional<Point2> intersect(const Line2& l, const Line2& m);

// Segment with endpoints stored in lexicographic order, so equal segments
// compare equal regardless of construction order.
struct Segment2 {
  Point2 a, b;
  static Segment2 make(const Point2& p, const Point2& q);
  friend bool operator==(const Segment2&, const Segment2&) = default;
  friend std::strong_ordering operator<=>(const Segment2&, const Segment2&) = default;
};

struct Segment3 {
  Point3 a, b;
  static Segment3 make(const Point3& p, const Point3& q);
  friend bool operator==(const Segment3&, const Segment3&) = default;
  friend std::strong_ordering operator<=>(const Segment3&, const Segment3&) = default;
};

// Line in space through p0 with direction dir. Canonical form: dir is a
// primitive integer vector with positive first nonzero entry, and p0 is the
// foot of the perpendicular from the origin, so coincident lines compare
// equal.
struct Line3 {
  Point3 p0;
  Vec3 dir;

  static Line3 through(const Point3& p, const Point3& q);
  static Line3 point_dir(const Point3& p, const Vec3& d);

  bool contains(const Point3& p) const { return is_zero(cross(p - p0, dir)); }

  friend bool operator==(const Line3&, const Line3&) = default;
  friend std::strong_ordering operator<=>(const Line3&, const Line3&) = default;
};

}  // namespace triarea
