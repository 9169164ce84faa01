#include "lrn/solution.hpp"

#include <sstream>
#include <stdexcept>

namespace lrn {

bool SolutionTuple::satisfies_equation() const {
  if (x < 1 || y < 1 || a < 0 || b < 0 || c < 0 || m < 0 || n < 3) return false;
  Int lhs = x * x + exponents().value();
  Int rhs = pow_int(y, n) << m;
  return lhs == rhs;
}

std::string SolutionTuple::to_string() const {
  std::ostringstream os;
  os << "x=" << x << " y=" << y << " a=" << a << " b=" << b << " c=" << c
     << " m=" << m << " n=" << n;
  return os.str();
}

std::string SolutionTuple::to_json() const {
  std::ostringstream os;
  os << "{\"x\":" << x << ",\"y\":" << y << ",\"a\":" << a << ",\"b\":" << b
     << ",\"c\":" << c << ",\"m\":" << m << ",\"n\":" << n << "}";
  return os.str();
}

SolutionTuple make_solution(Int x, Int y, int a, int b, int c, int m, int n) {
  SolutionTuple t{std::move(x), std::move(y), a, b, c, m, n};
  if (!t.satisfies_equation())
    throw std::invalid_argument("make_solution: equation fails for " + t.to_string());
  if (!t.coprime_xy())
    throw std::invalid_argument("make_solution: gcd(x,y) > 1 for " + t.to_string());
  return t;
}

}  // namespace lrn
