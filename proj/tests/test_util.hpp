#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "triarea/geom.hpp"

// xorshift64: self-contained generator so test data is byte-identical across
// platforms and standard libraries.
struct test_rng {
  uint64_t s;
  explicit test_rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

inline std::vector<triarea::Point2> random_points2(test_rng& rng, int n, long long lim) {
  std::set<triarea::Point2> s;
  while (static_cast<int>(s.size()) < n)
    s.insert({triarea::Rat(rng.range(-lim, lim)), triarea::Rat(rng.range(-lim, lim))});
  return {s.begin(), s.end()};
}

inline std::vector<triarea::Point3> random_points3(test_rng& rng, int n, long long lim) {
  std::set<triarea::Point3> s;
  while (static_cast<int>(s.size()) < n)
    s.insert({triarea::Rat(rng.range(-lim, lim)), triarea::Rat(rng.range(-lim, lim)),
              triarea::Rat(rng.range(-lim, lim))});
  return {s.begin(), s.end()};
}
