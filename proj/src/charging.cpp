#include "triarea/charging.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace triarea {

namespace {

std::string tri_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace

ChargeMap2 charge_min_area_2d(const std::vector<Point2>& pts) {
  ExtremeArea mn = min_nonzero_area(pts);
  ChargeMap2 cm;
  cm.min_key = mn.key;

  for (const Triple& t : mn.witnesses) {
    Segment2 seg = longest_side(pts[t[0]], pts[t[1]], pts[t[2]]);
    int apex = -1;
    for (int idx : t)
      if (pts[idx] != seg.a && pts[idx] != seg.b) apex = idx;
    if (apex < 0)
      fail(Err::charging_invariant_violated, "no apex for triangle " + tri_str(t));
    const Point2& p = pts[apex];

    Rat proj = dot(p - seg.a, seg.b - seg.a);
    if (!(Rat(0) < proj && proj < norm_sq(seg.b - seg.a)))
      fail(Err::charging_invariant_violated,
           "apex projects outside the longest side for triangle " + tri_str(t));

    int side = double_area_2d(seg.a, seg.b, p).sign();
    cm.charges[seg].push_back({t, apex, side});
    ++cm.charged;
  }

  for (const auto& [seg, v] : cm.charges) {
    cm.max_load = std::max(cm.max_load, static_cast<long long>(v.size()));
    if (v.size() > 2)
      fail(Err::charging_invariant_violated,
           "segment charged " + std::to_string(v.size()) + " times, first " + tri_str(v[0].tri));
    if (v.size() == 2 && v[0].side == v[1].side)
      fail(Err::charging_invariant_violated,
           "two charges on one side of a segment: " + tri_str(v[0].tri) + " and " + tri_str(v[1].tri));
  }
  return cm;
}

ChargeMap3 charge_min_area_3d(const std::vector<Point3>& pts) {
  ExtremeArea mn = min_nonzero_area(pts);
  ChargeMap3 cm;
  cm.min_key = mn.key;
  const Rat& k = mn.key;  // 4 * min_area^2

  for (const Triple& t : mn.witnesses) {
    Segment3 seg = longest_side(pts[t[0]], pts[t[1]], pts[t[2]]);
    int apex = -1;
    for (int idx : t)
      if (pts[idx] != seg.a && pts[idx] != seg.b) apex = idx;
    if (apex < 0)
      fail(Err::charging_invariant_violated, "no apex for triangle " + tri_str(t));
    const Point3& p = pts[apex];

    Rat s = norm_sq(seg.b - seg.a);
    Rat proj = dot(p - seg.a, seg.b - seg.a);
    // The apex must project into the band the minimum area leaves on the
    // longest side: proj^2 <= s^2 - k on both ends.
    Rat band = sq(s) - k;
    if (!(sq(proj) <= band && sq(s - proj) <= band))
      fail(Err::charging_invariant_violated,
           "apex outside the admissible band for triangle " + tri_str(t));
    // Apex distance r from the side line satisfies 4 r^2 <= 3 s.
    if (!(Rat(4) * k <= Rat(3) * sq(s)))
      fail(Err::charging_invariant_violated,
           "apex too far from the longest side for triangle " + tri_str(t));

    Rat four_h_sq = Rat(4) * k / s;
    FatThin tag = four_h_sq < s ? FatThin::thin : FatThin::fat;
    if (tag == FatThin::fat) {
      // Normalized height^4 stays in [16/3, 16]: s^2 <= 4k and 4k <= 3 s^2.
      if (!(sq(s) <= Rat(4) * k))
        fail(Err::charging_invariant_violated, "fat charge outside range for " + tri_str(t));
    }
    if (tag == FatThin::thin) ++cm.thin_total;
    cm.charges[seg].push_back({t, apex, tag, four_h_sq, s});
    ++cm.charged;
  }

  for (const auto& [seg, v] : cm.charges) {
    cm.max_load = std::max(cm.max_load, static_cast<long long>(v.size()));
    if (v.size() > 10)
      fail(Err::charging_invariant_violated,
           "segment charged " + std::to_string(v.size()) + " times, first " + tri_str(v[0].tri));
    int thin = 0;
    for (const Charge3& c : v)
      if (c.tag == FatThin::thin) ++thin;
    if (thin > 2)
      fail(Err::charging_invariant_violated,
           "segment carries " + std::to_string(thin) + " thin charges, first " + tri_str(v[0].tri));
  }
  return cm;
}

GridAuditReport grid_visibility_audit(int w, int h) {
  if (w < 2 || w > 16 || h < 2 || h > 16)
    fail(Err::bad_n, "grid audit supports sides in [2, 16]");

  GridAuditReport rep;
  rep.w = w;
  rep.h = h;

  std::vector<Point2> pts;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) pts.push_back({Rat(x), Rat(y)});
  int n = static_cast<int>(pts.size());

  ChargeMap2 cm = charge_min_area_2d(pts);

  AuditClause vis{"pairs-visibility", true, ""};
  AuditClause charge2{"charge-2", true, ""};
  AuditClause ratio{"ratio", true, ""};
  AuditClause noacute{"no-acute", true, ""};
  AuditClause minkey{"min-key", true, ""};

  if (cm.min_key != Rat(1)) {
    minkey.pass = false;
    minkey.detail = "minimum area key is " + cm.min_key.to_string();
  }

  long long visible_nonaxis = 0;
  long long charged_on_expected = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Point2 &p = pts[i], &q = pts[j];
      mpz_class dx = abs((q.x - p.x).num()), dy = abs((q.y - p.y).num());
      mpz_class g = gcd(dx, dy);
      bool vis_gcd = g == 1;

      // Brute-force interior test: any third grid point strictly between.
      bool blocked = false;
      for (int r = 0; r < n && !blocked; ++r) {
        if (r == i || r == j) continue;
        const Point2& z = pts[r];
        if (!collinear(p, q, z)) continue;
        if (std::min(p.x, q.x) <= z.x && z.x <= std::max(p.x, q.x) &&
            std::min(p.y, q.y) <= z.y && z.y <= std::max(p.y, q.y))
          blocked = true;
      }
      if (vis_gcd == blocked) {
        vis.pass = false;
        vis.detail = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                     "): gcd test and interior test disagree";
      }

      bool nonaxis = dx != 0 && dy != 0;
      auto it = cm.charges.find(Segment2::make(p, q));
      long long loaded = it == cm.charges.end() ? 0 : static_cast<long long>(it->second.size());
      if (vis_gcd && nonaxis) {
        ++visible_nonaxis;
        charged_on_expected += loaded;
        if (loaded != 2) {
          charge2.pass = false;
          charge2.detail = "segment (" + std::to_string(i) + "," + std::to_string(j) + ") carries " +
                           std::to_string(loaded) + " charges";
        }
      } else if (loaded != 0) {
        charge2.pass = false;
        charge2.detail = "segment (" + std::to_string(i) + "," + std::to_string(j) +
                         ") should be uncharged but carries " + std::to_string(loaded);
      }
    }
  }
  if (charge2.pass && charged_on_expected != cm.charged) {
    charge2.pass = false;
    charge2.detail = "charge total mismatch";
  }

  double r = static_cast<double>(cm.charged) / (static_cast<double>(n) * n);
  const double six_over_pi_sq = 0.6079271018540267;
  double gap = std::abs(r - six_over_pi_sq);
  if (n >= 64 && gap > 0.15) {
    ratio.pass = false;
    ratio.detail = "ratio " + std::to_string(r) + " strays from the coprimality density";
  }

  long long acute = acute_min_area_count(pts);
  if (acute != 0) {
    noacute.pass = false;
    noacute.detail = std::to_string(acute) + " acute minimum-area triangles";
  }

  rep.clauses = {vis, charge2, ratio, noacute, minkey};
  rep.pass = true;
  for (const AuditClause& c : rep.clauses) rep.pass = rep.pass && c.pass;

  std::ostringstream rs, gs;
  rs.precision(6);
  rs << std::fixed << r;
  gs.precision(6);
  gs << std::fixed << gap;
  rep.stats = {{"n", std::to_string(n)},
               {"min_count", std::to_string(cm.charged)},
               {"visible_nonaxis", std::to_string(visible_nonaxis)},
               {"ratio", rs.str()},
               {"ratio_gap", gs.str()},
               {"max_load", std::to_string(cm.max_load)}};
  return rep;
}

}  // namespace triarea
