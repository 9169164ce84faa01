#include "lrn/arith.hpp"

#include <cassert>
#include <stdexcept>

namespace lrn {

Int SExp::value() const {
  Int r = 1;
  for (int i = 0; i < e5; ++i) r *= 5;
  for (int i = 0; i < e13; ++i) r *= 13;
  for (int i = 0; i < e17; ++i) r *= 17;
  return r;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int pow2(unsigned long exp) {
  Int r = 1;
  r <<= exp;
  return r;
}

std::optional<Int> is_perfect_square(const Int& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  assert(r * r == n);
  return r;
}

std::optional<Int> is_perfect_power(const Int& n, unsigned long k) {
  if (n < 1 || k < 2) throw std::invalid_argument("is_perfect_power: n >= 1, k >= 2");
  Int r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  assert(pow_int(r, k) == n);
  return r;
}

int jacobi_symbol(const Int& a, const Int& n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("jacobi_symbol: n must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

SFactorization s_factor(const Int& n, const std::vector<long>& S) {
  if (n < 1) throw std::invalid_argument("s_factor: n >= 1");
  SFactorization out;
  out.cofactor = n;
  for (long p : S) {
    int e = 0;
    while (mpz_divisible_ui_p(out.cofactor.get_mpz_t(), p)) {
      mpz_divexact_ui(out.cofactor.get_mpz_t(), out.cofactor.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.exponents[p] = e;
  }
  return out;
}

SquarefreeSplit squarefree_split(const SExp& exps) {
  SquarefreeSplit out;
  out.source = exps;
  out.d = 1;
  if (exps.e5 % 2) out.d *= 5;
  if (exps.e13 % 2) out.d *= 13;
  if (exps.e17 % 2) out.d *= 17;
  out.z = SExp{exps.e5 / 2, exps.e13 / 2, exps.e17 / 2}.value();
  assert(out.d * out.z * out.z == exps.value());
  return out;
}

std::optional<SExp> s_exponents_of(const Int& n) {
  if (n < 1) return std::nullopt;
  Int m = n;
  SExp out;
  int* slots[3] = {&out.e5, &out.e13, &out.e17};
  for (int i = 0; i < 3; ++i) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), kSPrimes[i])) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), kSPrimes[i]);
      ++*slots[i];
    }
  }
  if (m != 1) return std::nullopt;
  return out;
}

bool is_squarefree_long(long n) {
  if (n < 1) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<long> out;
  for (long i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

}  // namespace lrn
