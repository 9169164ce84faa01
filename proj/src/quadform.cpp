#include "lrn/quadform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrn {

bool QuadraticForm::is_reduced() const {
  if (!is_positive_definite()) return false;
  long ab = b < 0 ? -b : b;
  if (!(ab <= a && a <= c)) return false;
  if ((ab == a || a == c) && b < 0) return false;
  return true;
}

bool QuadraticForm::is_primitive() const {
  return std::gcd(std::gcd(a, b), c) == 1;
}

long discriminant_of(long d) {
  if (d < 1 || !is_squarefree_long(d))
    throw std::invalid_argument("discriminant_of: d must be squarefree positive");
  return d % 4 == 3 ? -d : -4 * d;
}

std::vector<QuadraticForm> reduced_forms(long disc) {
  if (disc >= 0) throw std::invalid_argument("reduced_forms: disc must be negative");
  long r = ((disc % 4) + 4) % 4;
  if (r != 0 && r != 1)
    throw std::invalid_argument("reduced_forms: disc must be 0 or 1 mod 4");
  std::vector<QuadraticForm> out;
  // |b| <= a <= c forces 3a^2 <= 4ac - b^2 = -disc.
  for (long a = 1; 3 * a * a <= -disc; ++a) {
    for (long b = -a; b <= a; ++b) {
      long num = b * b - disc;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      QuadraticForm f{a, b, c};
      if (f.is_reduced() && f.is_primitive()) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long class_number(long d) {
  return static_cast<long>(reduced_forms(discriminant_of(d)).size());
}

std::vector<Representation> represent(const Int& y, long d, int m) {
  if (y < 1) throw std::invalid_argument("represent: y >= 1");
  std::vector<Representation> out;
  Int target = y << m;
  for (Int v = 1; d * v * v < target; ++v) {
    Int u2 = target - d * v * v;
    auto u = is_perfect_square(u2);
    if (!u || *u < 1) continue;
    if (gcd(*u, d * v) != 1) continue;
    if (m == 1 && (mpz_even_p(u->get_mpz_t()) || mpz_even_p(Int(d * v).get_mpz_t())))
      continue;
    out.push_back(Representation{*u, v, d, m, y});
  }
  std::sort(out.begin(), out.end(),
            [](const Representation& lhs, const Representation& rhs) {
              return lhs.u < rhs.u;
            });
  return out;
}

}  // namespace lrn
