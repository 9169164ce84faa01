// The central domain type: one solution of x^2 + 5^a 13^b 17^c = 2^m y^n.
#pragma once

#include "lrn/arith.hpp"

#include <string>
#include <tuple>

namespace lrn {

struct SolutionTuple {
  Int x, y;
  int a = 0, b = 0, c = 0, m = 0, n = 3;

  SExp exponents() const { return SExp{a, b, c}; }

  // x^2 + 5^a 13^b 17^c = 2^m y^n, exactly.
  bool satisfies_equation() const;
  bool coprime_xy() const { return gcd(x, y) == 1; }

  std::string to_string() const;
  std::string to_json() const;

  auto key() const { return std::tie(n, m, a, b, c, y, x); }
  bool operator==(const SolutionTuple& o) const { return key() == o.key(); }
  bool operator<(const SolutionTuple& o) const { return key() < o.key(); }
};

// Throws std::invalid_argument when the equation or gcd(x,y)=1 fails.
SolutionTuple make_solution(Int x, Int y, int a, int b, int c, int m, int n);

}  // namespace lrn
