#pragma once

#include <map>

#include "regcyc/rational.hpp"

namespace regcyc {

struct BoundsReport {
  int r = 1;
  int c_lower = 0;         // ceil(3r/22)
  int c_upper = 0;         // 7 ceil(r/8)
  int c_upper_capped = 0;  // min(c_upper, r)
  int dtw_lower = 0;       // floor(r/20)
  Rational limit_lower;    // 3/22
  Rational limit_upper;    // 7/8
};

BoundsReport theorem_bounds(int r);

/// Upper bound on c_n from known bounds ub(r) >= c_r: min over r of
/// ceil(n/r) * ub(r), capped by n.
int propagate_upper_bounds(const std::map<int, int>& known, int n);

}  // namespace regcyc
