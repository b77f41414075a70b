#include "regcyc/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "regcyc/error.hpp"

namespace regcyc {

BoundsReport theorem_bounds(int r) {
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "r must be >= 1");
  BoundsReport report;
  report.r = r;
  report.c_lower = (3 * r + 21) / 22;
  report.c_upper = 7 * ((r + 7) / 8);
  report.c_upper_capped = std::min(report.c_upper, r);
  report.dtw_lower = r / 20;
  report.limit_lower = make_rational(3, 22);
  report.limit_upper = make_rational(7, 8);
  return report;
}

int propagate_upper_bounds(const std::map<int, int>& known, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  std::int64_t best = n;
  for (auto [r, ub] : known) {
    if (r < 1 || ub < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "known bound c_" + std::to_string(r) + " <= " + std::to_string(ub) + " is not positive");
    }
    std::int64_t blocks = (static_cast<std::int64_t>(n) + r - 1) / r;
    best = std::min(best, blocks * ub);
  }
  return static_cast<int>(best);
}

}  // namespace regcyc
