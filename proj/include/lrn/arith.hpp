// Exact integer utilities shared by every other module. All arithmetic is
// arbitrary precision (GMP); no floating point anywhere in the library.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace lrn {

using Int = mpz_class;

// Exponent vector over the prime support S = {5, 13, 17}.
// Represents exactly 5^e5 * 13^e13 * 17^e17.
struct SExp {
  int e5 = 0;
  int e13 = 0;
  int e17 = 0;

  Int value() const;
  bool operator==(const SExp&) const = default;
  auto operator<=>(const SExp&) const = default;
};

// Decomposition 5^a 13^b 17^c = d * z^2 with d squarefree.
// d is always a divisor of 1105 = 5*13*17, so it fits a long.
struct SquarefreeSplit {
  long d = 1;
  Int z = 1;
  SExp source;
};

inline constexpr long kSPrimes[3] = {5, 13, 17};

// The eight squarefree values of d the equation can produce.
inline constexpr long kAdmissibleD[8] = {1, 5, 13, 17, 65, 85, 221, 1105};

Int pow_int(const Int& base, unsigned long exp);
Int pow2(unsigned long exp);

// Exact square test; returns the nonnegative root when n is a perfect square.
std::optional<Int> is_perfect_square(const Int& n);

// Returns r with r^k = n when such an integer exists (n >= 1, k >= 2).
std::optional<Int> is_perfect_power(const Int& n, unsigned long k);

// Standard Jacobi symbol (a|n); n odd and positive. 0 when gcd(a,n) > 1.
int jacobi_symbol(const Int& a, const Int& n);

// n = cofactor * prod p^e(p) over S with the cofactor coprime to S.
struct SFactorization {
  std::map<long, int> exponents;
  Int cofactor;
};
SFactorization s_factor(const Int& n, const std::vector<long>& S);

// 5^a 13^b 17^c = d * z^2 with d squarefree (d = product of the odd-exponent
// primes).
SquarefreeSplit squarefree_split(const SExp& exps);

// Inverse of SExp::value for numbers supported on {5,13,17}; nullopt when n
// has any other prime factor.
std::optional<SExp> s_exponents_of(const Int& n);

bool is_squarefree_long(long n);
bool is_prime_long(long n);
std::vector<long> primes_up_to(long n);

}  // namespace lrn
