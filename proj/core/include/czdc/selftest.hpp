#pragma once

#include <iosfwd>

namespace czdc {

struct SelftestResult {
  int passed{0};
  int failed{0};
  bool ok() const { return failed == 0; }
};

/**
 * @brief Fast randomized property checks of the whole stack: interval
 * inclusion, LP sanity, exactness of the set operations, hull and reduction
 * containment, linearization remainders, and a short closed-loop run. One
 * line per suite is written to the stream.
 */
SelftestResult run_selftest(std::ostream& out);

}  // namespace czdc
