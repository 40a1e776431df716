#pragma once

#include <map>
#include <string>
#include <vector>

#include "triarea/census.hpp"

namespace triarea {

// Assignment of one minimum-area triangle to its longest side. `side` is the
// sign of the apex against the oriented segment, so the two charges a
// segment can carry sit on opposite sides.
struct Charge2 {
  Triple tri;
  int apex;  // index of the vertex off the charged segment
  int side;  // +1 or -1
};

struct ChargeMap2 {
  Rat min_key;
  long long charged = 0;
  long long max_load = 0;
  std::map<Segment2, std::vector<Charge2>> charges;
};

// Charges every minimum-area triangle to its longest side and checks the
// packing invariants: the apex projects strictly inside the segment, and no
// segment carries two charges on the same side (hence at most 2 total).
// Throws ChargingInvariantViolated with a witness if any check fails.
ChargeMap2 charge_min_area_2d(const std::vector<Point2>& pts);

enum class FatThin { fat, thin };

struct Charge3 {
  Triple tri;
  int apex;
  FatThin tag;       // thin iff 4*h^2 < s, with h the apex height, s = |side|^2
  Rat four_h_sq;     // 4 * h^2
  Rat side_sq;       // s
};

struct ChargeMap3 {
  Rat min_key;
  long long charged = 0;
  long long max_load = 0;
  long long thin_total = 0;
  std::map<Segment3, std::vector<Charge3>> charges;
};

// Spatial analogue. Invariants checked per charge: the apex projects into
// the middle band of the segment allowed by the minimum area, and the apex
// distance r from the side line satisfies 4*r^2 <= 3*s; fat charges satisfy
// 4/3 <= s^2/key <= 4. Packing: at most 10 charges per segment, at most 2 of
// them thin.
ChargeMap3 charge_min_area_3d(const std::vector<Point3>& pts);

struct AuditClause {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct GridAuditReport {
  int w = 0, h = 0;
  bool pass = false;
  std::vector<AuditClause> clauses;
  std::map<std::string, std::string> stats;
};

// Exhaustive check of the charging picture on the w x h grid:
//  * pairs-visibility: a grid segment has no grid point strictly inside it
//    iff its coordinate gaps are coprime (verified against brute force);
//  * charge-2: every segment that is visible and not axis-parallel carries
//    exactly 2 charges, and these are all charges;
//  * ratio: minimum-area triangles / n^2 compared against 6/pi^2;
//  * no-acute: no minimum-area triangle is acute.
GridAuditReport grid_visibility_audit(int w, int h);

}  // namespace triarea
