#pragma once

#include <cmath>

#include "genbern/errors.hpp"

namespace genbern {

// Closed bounded interval [a, b] with a < b.
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
      throw BadArgument("interval requires finite endpoints with a < b");
  }

  double length() const { return b - a; }
  bool contains(double x) const { return a <= x && x <= b; }
};

}  // namespace genbern
