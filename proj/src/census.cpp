#include "triarea/census.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace triarea {

long long Census::nondegenerate_total() const {
  long long t = 0;
  for (const auto& [key, cls] : classes) t += cls.count;
  return t;
}

long long LineTripleCensus::total() const {
  long long t = skipped;
  for (const auto& [key, count] : classes) t += count;
  return t;
}

namespace {

template <class P>
void require_distinct(const std::vector<P>& pts, size_t min_size) {
  if (pts.size() < min_size)
    fail(Err::too_few_points, "need at least " + std::to_string(min_size) + " points");
  std::vector<P> s(pts);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    fail(Err::duplicate_points, "point set contains duplicates");
}

Rat triple_key(const std::vector<Point2>& pts, int i, int j, int k) {
  return area_key_2d(pts[i], pts[j], pts[k]);
}
Rat triple_key(const std::vector<Point3>& pts, int i, int j, int k) {
  return quad_sq_area_3d(pts[i], pts[j], pts[k]);
}

template <class P>
Census census_impl(const std::vector<P>& pts, bool witnesses, int threads) {
  require_distinct(pts, 3);
  if (threads < 1) fail(Err::parse_error, "thread count must be positive");
  int n = static_cast<int>(pts.size());

  Census out;
  out.dim = std::is_same_v<P, Point2> ? 2 : 3;

  auto scan = [&](int tid, int stride, Census& local) {
    for (int i = tid; i < n; i += stride) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          Rat key = triple_key(pts, i, j, k);
          if (key.is_zero()) {
            ++local.degenerate;
            continue;
          }
          CensusClass& cls = local.classes[key];
          ++cls.count;
          if (witnesses) cls.witnesses.push_back({i, j, k});
        }
      }
    }
  };

  if (threads == 1) {
    scan(0, 1, out);
  } else {
    std::vector<Census> parts(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] { scan(t, threads, parts[t]); });
    for (auto& th : pool) th.join();
    for (Census& part : parts) {
      out.degenerate += part.degenerate;
      for (auto& [key, cls] : part.classes) {
        CensusClass& dst = out.classes[key];
        dst.count += cls.count;
        dst.witnesses.insert(dst.witnesses.end(), cls.witnesses.begin(), cls.witnesses.end());
      }
    }
    if (witnesses)
      for (auto& [key, cls] : out.classes) std::sort(cls.witnesses.begin(), cls.witnesses.end());
  }
  return out;
}

template <class P>
std::vector<Triple> collect_with_key(const std::vector<P>& pts, const Rat& key) {
  int n = static_cast<int>(pts.size());
  std::vector<Triple> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (triple_key(pts, i, j, k) == key) out.push_back({i, j, k});
  return out;
}

template <class P>
ExtremeArea min_impl(const std::vector<P>& pts) {
  Census c = area_census(pts);
  if (c.classes.empty())
    fail(Err::no_nonzero_triangle, "all triples are collinear");
  auto it = c.classes.begin();
  ExtremeArea r{it->first, it->second.count, collect_with_key(pts, it->first)};
  return r;
}

template <class P>
ExtremeArea max_impl(const std::vector<P>& pts) {
  Census c = area_census(pts);
  if (c.classes.empty())
    fail(Err::no_nonzero_triangle, "all triples are collinear");
  auto it = std::prev(c.classes.end());
  ExtremeArea r{it->first, it->second.count, collect_with_key(pts, it->first)};
  return r;
}

template <class P>
MaxAreaHistogram histogram_impl(const std::vector<P>& pts) {
  ExtremeArea mx = max_impl(pts);
  MaxAreaHistogram h;
  h.key = mx.key;
  h.triangle_count = mx.count;
  for (const Triple& t : mx.witnesses)
    for (int idx : t) ++h.per_point[idx];
  long long best = -1;
  for (const auto& [idx, cnt] : h.per_point) {
    if (cnt > best) {
      best = cnt;
      h.argmax = idx;
    }
  }
  return h;
}

}  // namespace

Census area_census(const std::vector<Point2>& pts, bool witnesses, int threads) {
  return census_impl(pts, witnesses, threads);
}
Census area_census(const std::vector<Point3>& pts, bool witnesses, int threads) {
  return census_impl(pts, witnesses, threads);
}

long long count_unit_area(const std::vector<Point2>& pts) {
  Census c = area_census(pts);
  auto it = c.classes.find(Rat(2));
  return it == c.classes.end() ? 0 : it->second.count;
}
long long count_unit_area(const std::vector<Point3>& pts) {
  Census c = area_census(pts);
  auto it = c.classes.find(Rat(4));
  return it == c.classes.end() ? 0 : it->second.count;
}

ExtremeArea min_nonzero_area(const std::vector<Point2>& pts) { return min_impl(pts); }
ExtremeArea min_nonzero_area(const std::vector<Point3>& pts) { return min_impl(pts); }

ExtremeArea max_area(const std::vector<Point2>& pts) { return max_impl(pts); }
ExtremeArea max_area(const std::vector<Point3>& pts) { return max_impl(pts); }

long long acute_min_area_count(const std::vector<Point2>& pts) {
  ExtremeArea mn = min_nonzero_area(pts);
  long long acute = 0;
  for (const Triple& t : mn.witnesses)
    if (classify_angles(pts[t[0]], pts[t[1]], pts[t[2]]) == AngleClass::acute) ++acute;
  return acute;
}

long long distinct_area_count(const std::vector<Point2>& pts) {
  return static_cast<long long>(area_census(pts).classes.size());
}
long long distinct_area_count(const std::vector<Point3>& pts) {
  return static_cast<long long>(area_census(pts).classes.size());
}

CommonSideResult distinct_areas_common_side(const std::vector<Point2>& pts) {
  require_distinct(pts, 3);
  int n = static_cast<int>(pts.size());

  // Visit sides in canonical order so the reported maximizer is the
  // lexicographically smallest segment among ties.
  std::vector<Segment2> sides;
  sides.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sides.push_back(Segment2::make(pts[i], pts[j]));
  std::sort(sides.begin(), sides.end());

  CommonSideResult best;
  for (const Segment2& s : sides) {
    std::set<Rat> keys;
    for (int k = 0; k < n; ++k) {
      if (pts[k] == s.a || pts[k] == s.b) continue;
      Rat key = area_key_2d(s.a, s.b, pts[k]);
      if (!key.is_zero()) keys.insert(key);
    }
    if (static_cast<long long>(keys.size()) > best.distinct) {
      best.distinct = static_cast<long long>(keys.size());
      best.side = s;
      best.keys.assign(keys.begin(), keys.end());
    }
  }
  if (best.distinct == 0)
    fail(Err::no_nonzero_triangle, "all triples are collinear");
  return best;
}

MaxAreaHistogram max_area_incident_histogram(const std::vector<Point2>& pts) {
  return histogram_impl(pts);
}
MaxAreaHistogram max_area_incident_histogram(const std::vector<Point3>& pts) {
  return histogram_impl(pts);
}

LineTripleCensus line_triple_census(const std::vector<Line2>& lines) {
  if (lines.size() < 3) fail(Err::too_few_points, "need at least 3 lines");
  {
    std::vector<Line2> s(lines);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(Err::duplicate_lines, "line set contains duplicates");
  }
  int n = static_cast<int>(lines.size());
  LineTripleCensus out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto pij = intersect(lines[i], lines[j]);
      for (int k = j + 1; k < n; ++k) {
        if (!pij || parallel(lines[i], lines[k]) || parallel(lines[j], lines[k])) {
          ++out.skipped;
          continue;
        }
        auto pik = intersect(lines[i], lines[k]);
        if (*pik == *pij) {  // concurrent
          ++out.skipped;
          continue;
        }
        auto pjk = intersect(lines[j], lines[k]);
        ++out.classes[area_key_2d(*pij, *pik, *pjk)];
      }
    }
  }
  return out;
}

}  // namespace triarea
