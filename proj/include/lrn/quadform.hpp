// Class numbers h(-d) of imaginary quadratic fields via reduced primitive
// binary quadratic forms, and enumeration of representations 2^m y = u^2+d v^2.
#pragma once

#include "lrn/arith.hpp"

#include <vector>

namespace lrn {

// Positive definite form a x^2 + b xy + c y^2.
struct QuadraticForm {
  long a = 0, b = 0, c = 0;

  long discriminant() const { return b * b - 4 * a * c; }
  bool is_positive_definite() const { return discriminant() < 0 && a > 0; }
  bool is_reduced() const;
  bool is_primitive() const;
  bool operator==(const QuadraticForm&) const = default;
  auto operator<=>(const QuadraticForm&) const = default;
};

// One representation 2^m y = u^2 + d v^2 with gcd(u, dv) = 1.
struct Representation {
  Int u, v;
  long d = 1;
  int m = 0;
  Int y;
};

// Field discriminant of Q(sqrt(-d)): -d when d = 3 mod 4, else -4d.
// Throws on non-squarefree d.
long discriminant_of(long d);

// All reduced primitive positive-definite forms of the given discriminant,
// lexicographically sorted. disc < 0 and disc = 0 or 1 mod 4.
std::vector<QuadraticForm> reduced_forms(long disc);

// h(-d) = number of reduced primitive forms of discriminant_of(d).
long class_number(long d);

// All (u,v), u,v >= 1, with u^2 + d v^2 = 2^m y and gcd(u, dv) = 1,
// ordered by u ascending. For m = 1 the representation is kept only when
// u, v, d are all odd (forced for solutions of the target equation).
std::vector<Representation> represent(const Int& y, long d, int m);

}  // namespace lrn
