#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "coxeter/types.hpp"

namespace coxeter {

// Exact arithmetic in the ring Z[sqrt2, sqrt3, phi], phi = (1+sqrt5)/2.
//
// An element is stored as eight integer coefficients
//   (a + b*sqrt2 + c*sqrt3 + d*sqrt6) + (e + f*sqrt2 + g*sqrt3 + h*sqrt6)*phi.
// The ring contains 2*cos(pi/m) for every m in {1,2,3,4,5,6,inf}:
//   m=2 -> 0, m=3 -> 1, m=4 -> sqrt2, m=5 -> phi, m=6 -> sqrt3, m=inf -> 2,
// so the geometric representation of such systems has entries here and all
// comparisons can be made exactly. Arithmetic is overflow-checked; a desk-scale
// computation never gets near the limits, and anything that does throws.
struct AlgInt {
  std::array<long long, 8> c{};

  static AlgInt from_int(long long n);
  static AlgInt zero() { return AlgInt{}; }
  static AlgInt one() { return from_int(1); }
  static AlgInt sqrt2();
  static AlgInt sqrt3();
  static AlgInt phi();

  bool is_zero() const;
  bool operator==(const AlgInt& o) const { return c == o.c; }
  bool operator!=(const AlgInt& o) const { return c != o.c; }

  AlgInt operator+(const AlgInt& o) const;
  AlgInt operator-(const AlgInt& o) const;
  AlgInt operator-() const;
  AlgInt operator*(const AlgInt& o) const;
  AlgInt& operator+=(const AlgInt& o) { return *this = *this + o; }
  AlgInt& operator-=(const AlgInt& o) { return *this = *this - o; }
  AlgInt& operator*=(const AlgInt& o) { return *this = *this * o; }

  // Exact sign (-1, 0, +1). Fast double evaluation with a rigorous error
  // bound, falling back to integer comparisons in the tower
  // Z[sqrt2] < Z[sqrt2,sqrt3] < Z[sqrt2,sqrt3,phi].
  int sign() const;

  double to_double() const;
  std::string to_string() const;
};

// 2*cos(pi/m) for m in {1,2,3,4,5,6} or kInfiniteOrder; throws
// CoxError(UnsupportedOrder) for any other order.
AlgInt two_cos_pi_over(int m);
bool order_is_exact(int m);

}  // namespace coxeter
