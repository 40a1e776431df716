#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <optional>

#include "doctest.h"
#include "test_util.hpp"
#include "triarea/kernel.hpp"

using namespace triarea;

namespace {

template <class F>
std::optional<Err> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("rational parse and canonical form") {
  CHECK(Rat::from_string("6/8") == Rat(3, 4));
  CHECK(Rat::from_string("-3/6") == Rat(-1, 2));
  CHECK(Rat::from_string("+4/+6") == Rat(2, 3));
  CHECK(Rat::from_string("1/-2") == Rat(-1, 2));
  CHECK(Rat::from_string("7") == Rat(7));
  CHECK(Rat::from_string("-0") == Rat(0));

  CHECK(Rat(3, 4).to_string() == "3/4");
  CHECK(Rat(-3, 4).to_string() == "-3/4");
  CHECK(Rat(3, -4).to_string() == "-3/4");  // denominator kept positive
  CHECK(Rat(4, 2).to_string() == "2");
  CHECK(Rat().to_string() == "0");

  CHECK(Rat(6, 8).num() == 3);
  CHECK(Rat(6, 8).den() == 4);
  CHECK(Rat(5).is_integer());
  CHECK_FALSE(Rat(5, 3).is_integer());
  CHECK(Rat(-2, 7).sign() == -1);
  CHECK(Rat(0).is_zero());

  for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "2/3/4", "-", "1e3", " 1"}) {
    CAPTURE(bad);
    CHECK(thrown_code([&] { Rat::from_string(bad); }) == Err::parse_error);
  }
  CHECK(thrown_code([] { Rat(1, 0); }) == Err::parse_error);
}

TEST_CASE("rational arithmetic and order") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
  CHECK(Rat(1, 2) - Rat(1, 2) == Rat(0));
  CHECK(-Rat(3, 5) == Rat(-3, 5));
  CHECK(abs(Rat(-7, 2)) == Rat(7, 2));
  CHECK(sq(Rat(-3, 4)) == Rat(9, 16));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(1, 3) < Rat(2, 5));
  CHECK(thrown_code([] { return Rat(1) / Rat(0); }) == Err::invariant_violated);

  test_rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Rat r(rng.range(-1000, 1000), rng.range(1, 999));
    CHECK(Rat::from_string(r.to_string()) == r);
  }
}

TEST_CASE("ratio canonicalization") {
  std::vector<Rat> v{Rat(2, 3), Rat(-4, 9), Rat(2)};
  CHECK(canonicalize_ratio(v));
  CHECK(v == std::vector<Rat>{Rat(3), Rat(-2), Rat(9)});

  v = {Rat(0), Rat(-1, 2), Rat(1, 4)};
  CHECK(canonicalize_ratio(v));
  CHECK(v == std::vector<Rat>{Rat(0), Rat(2), Rat(-1)});  // first nonzero positive

  v = {Rat(0), Rat(0)};
  CHECK_FALSE(canonicalize_ratio(v));
  CHECK(v == std::vector<Rat>{Rat(0), Rat(0)});
}

TEST_CASE("line canonical form") {
  Line2 l = Line2::make(Rat(2), Rat(4), Rat(-6));
  CHECK(l.a == Rat(1));
  CHECK(l.b == Rat(2));
  CHECK(l.c == Rat(-3));

  // scaling (including by a negative rational) does not change the line
  CHECK(Line2::make(Rat(-1, 2), Rat(-1), Rat(3, 2)) == l);

  Line2 diag = Line2::through({Rat(0), Rat(0)}, {Rat(2), Rat(2)});
  CHECK(diag == Line2::make(Rat(1), Rat(-1), Rat(0)));
  CHECK(diag.contains({Rat(5), Rat(5)}));
  CHECK_FALSE(diag.contains({Rat(5), Rat(4)}));
  CHECK(diag.eval({Rat(3), Rat(1)}) == Rat(2));
  CHECK(diag.direction() == Vec2{Rat(-1), Rat(-1)});

  CHECK(thrown_code([] { Line2::make(Rat(0), Rat(0), Rat(1)); }) == Err::degenerate);
  CHECK(thrown_code([] { Line2::through({Rat(1), Rat(2)}, {Rat(1), Rat(2)}); }) ==
        Err::degenerate);
}

TEST_CASE("line intersection") {
  Line2 l = Line2::make(Rat(1), Rat(1), Rat(-1));
  Line2 m = Line2::make(Rat(1), Rat(-1), Rat(0));
  auto p = intersect(l, m);
  REQUIRE(p.has_value());
  CHECK(*p == Point2{Rat(1, 2), Rat(1, 2)});
  CHECK_FALSE(parallel(l, m));

  Line2 l2 = Line2::make(Rat(1), Rat(1), Rat(4));
  CHECK(parallel(l, l2));
  CHECK_FALSE(intersect(l, l2).has_value());
  CHECK_FALSE(intersect(l, l).has_value());
}

TEST_CASE("segment canonical order") {
  Segment2 s = Segment2::make({Rat(1), Rat(0)}, {Rat(0), Rat(1)});
  CHECK(s == Segment2::make({Rat(0), Rat(1)}, {Rat(1), Rat(0)}));
  CHECK(s.a == Point2{Rat(0), Rat(1)});
  CHECK(thrown_code([] {
          Segment2::make({Rat(1), Rat(1)}, {Rat(1), Rat(1)});
        }) == Err::degenerate);

  Segment3 t = Segment3::make({Rat(2), Rat(0), Rat(0)}, {Rat(1), Rat(5), Rat(-1)});
  CHECK(t.a == Point3{Rat(1), Rat(5), Rat(-1)});
}

TEST_CASE("spatial line canonical form") {
  Line3 l = Line3::through({Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(2), Rat(2)});
  CHECK(l.p0 == Point3{Rat(0), Rat(0), Rat(0)});
  CHECK(l.dir == Vec3{Rat(1), Rat(1), Rat(1)});

  // same line from different samples / opposite direction compares equal
  Line3 m = Line3::point_dir({Rat(1), Rat(0), Rat(5)}, {Rat(0), Rat(0), Rat(-2)});
  CHECK(m == Line3::through({Rat(1), Rat(0), Rat(7)}, {Rat(1), Rat(0), Rat(3)}));
  CHECK(m.dir == Vec3{Rat(0), Rat(0), Rat(1)});
  CHECK(m.p0 == Point3{Rat(1), Rat(0), Rat(0)});
  CHECK(m.contains({Rat(1), Rat(0), Rat(-9)}));
  CHECK_FALSE(m.contains({Rat(1), Rat(1), Rat(0)}));
}

TEST_CASE("planar areas") {
  Point2 a{Rat(0), Rat(0)}, b{Rat(1), Rat(0)}, c{Rat(0), Rat(1)};
  CHECK(double_area_2d(a, b, c) == Rat(1));
  CHECK(double_area_2d(a, c, b) == Rat(-1));
  CHECK(area_key_2d(a, c, b) == Rat(1));
  CHECK(double_area_2d(a, b, {Rat(7), Rat(0)}) == Rat(0));

  // a triangle has doubled area 2 exactly when its area is 1
  CHECK(double_area_2d(a, {Rat(2), Rat(0)}, c) == Rat(2));

  test_rng rng(5);
  for (int t = 0; t < 200; ++t) {
    auto p = random_points2(rng, 3, 50);
    Rat ar = double_area_2d(p[0], p[1], p[2]);
    // cyclic shift keeps sign, swap flips it
    CHECK(double_area_2d(p[1], p[2], p[0]) == ar);
    CHECK(double_area_2d(p[0], p[2], p[1]) == -ar);
    // translation invariance
    Vec2 d{Rat(rng.range(-9, 9)), Rat(rng.range(-9, 9))};
    CHECK(double_area_2d(p[0] + d, p[1] + d, p[2] + d) == ar);
    // unimodular maps preserve the doubled area; a reflection flips its sign
    auto shear = [](const Point2& q) { return Point2{q.x * 2 + q.y, q.x + q.y}; };
    auto flip = [](const Point2& q) { return Point2{q.y, q.x}; };
    CHECK(double_area_2d(shear(p[0]), shear(p[1]), shear(p[2])) == ar);
    CHECK(double_area_2d(flip(p[0]), flip(p[1]), flip(p[2])) == -ar);
  }
}

TEST_CASE("spatial area key") {
  Point3 o{Rat(0), Rat(0), Rat(0)};
  CHECK(quad_sq_area_3d(o, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}) == Rat(1));
  CHECK(quad_sq_area_3d(o, {Rat(2), Rat(0), Rat(0)}, {Rat(0), Rat(3), Rat(0)}) == Rat(36));
  CHECK(quad_sq_area_3d(o, {Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(2), Rat(2)}) == Rat(0));

  // area-1 right triangle on coordinate axes: key 4
  CHECK(quad_sq_area_3d(o, {Rat(2), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}) == Rat(4));

  test_rng rng(6);
  for (int t = 0; t < 200; ++t) {
    auto p = random_points2(rng, 3, 50);
    auto lift = [](const Point2& q) { return Point3{q.x, q.y, Rat(0)}; };
    CHECK(quad_sq_area_3d(lift(p[0]), lift(p[1]), lift(p[2])) ==
          sq(double_area_2d(p[0], p[1], p[2])));
  }
}

TEST_CASE("area decomposition") {
  auto d = area_decomposition_3d({Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)});
  CHECK(d.total == Rat(3));
  CHECK(d.planar == Rat(1));
  CHECK(d.residual == Rat(2));

  auto flat = area_decomposition_3d({Rat(3), Rat(1), Rat(0)}, {Rat(-2), Rat(5), Rat(0)});
  CHECK(flat.residual == Rat(0));
  CHECK(flat.total == flat.planar);

  test_rng rng(7);
  for (int t = 0; t < 200; ++t) {
    Vec3 u{Rat(rng.range(-20, 20)), Rat(rng.range(-20, 20)), Rat(rng.range(-20, 20))};
    Vec3 v{Rat(rng.range(-20, 20)), Rat(rng.range(-20, 20)), Rat(rng.range(-20, 20))};
    auto r = area_decomposition_3d(u, v);
    CHECK(r.total == r.planar + r.residual);
    CHECK(r.planar >= Rat(0));
    CHECK(r.residual >= Rat(0));
  }
}

TEST_CASE("angle classification") {
  Point2 o{Rat(0), Rat(0)};
  CHECK(classify_angles(o, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}) == AngleClass::right);
  CHECK(classify_angles(o, {Rat(2), Rat(0)}, {Rat(1), Rat(5)}) == AngleClass::acute);
  CHECK(classify_angles(o, {Rat(4), Rat(0)}, {Rat(1), Rat(1)}) == AngleClass::obtuse);
  CHECK(classify_angles(o, {Rat(1), Rat(1)}, {Rat(3), Rat(3)}) == AngleClass::degenerate);
  CHECK(classify_angles(o, o, {Rat(1), Rat(1)}) == AngleClass::degenerate);

  Point3 z{Rat(0), Rat(0), Rat(0)};
  CHECK(classify_angles(z, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}) ==
        AngleClass::right);
  CHECK(classify_angles(z, {Rat(2), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(5)}) ==
        AngleClass::acute);
  CHECK(std::string(angle_class_name(AngleClass::obtuse)) == "obtuse");
}

TEST_CASE("longest side") {
  Point2 a{Rat(0), Rat(0)}, b{Rat(1), Rat(0)}, c{Rat(0), Rat(1)};
  CHECK(longest_side(a, b, c) == Segment2::make(b, c));

  // tie between the two slanted sides: the lexicographically smaller wins
  Point2 apex{Rat(1, 2), Rat(5)};
  CHECK(longest_side(a, b, apex) == Segment2::make(a, apex));

  CHECK(thrown_code([&] { longest_side(a, b, {Rat(7), Rat(0)}); }) == Err::degenerate);

  Point3 z{Rat(0), Rat(0), Rat(0)};
  CHECK(longest_side(z, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(2), Rat(0)}) ==
        Segment3::make({Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(2), Rat(0)}));
}

TEST_CASE("convex position") {
  std::vector<Point2> square{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)},
                             {Rat(0), Rat(1)}};
  CHECK(convex_position_check(square));

  auto with_center = square;
  with_center.push_back({Rat(1, 2), Rat(1, 2)});
  CHECK_FALSE(convex_position_check(with_center));

  auto with_mid = square;
  with_mid.push_back({Rat(1, 2), Rat(0)});  // collinear hull triple
  CHECK_FALSE(convex_position_check(with_mid));

  auto dup = square;
  dup.push_back(square[0]);
  CHECK_FALSE(convex_position_check(dup));

  std::vector<Point2> seg{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  CHECK_FALSE(convex_position_check(seg));

  std::vector<Point2> tri{{Rat(0), Rat(0)}, {Rat(3), Rat(1)}, {Rat(1), Rat(4)}};
  CHECK(convex_position_check(tri));

  CHECK(thrown_code([] {
          std::vector<Point2> two{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
          convex_position_check(two);
        }) == Err::too_few_points);

  // points on a parabola are always in strictly convex position
  test_rng rng(8);
  for (int t = 0; t < 50; ++t) {
    std::set<long long> xs;
    while (static_cast<int>(xs.size()) < 8) xs.insert(rng.range(-40, 40));
    std::vector<Point2> par;
    for (long long x : xs) par.push_back({Rat(x), Rat(x) * Rat(x)});
    CHECK(convex_position_check(par));
  }
}
