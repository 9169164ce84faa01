#include "lrn/lehmer.hpp"

#include <cassert>
#include <stdexcept>

namespace lrn {

LehmerInstance::LehmerInstance(Int u_, Int v_, long d_, int m_)
    : u(std::move(u_)), v(std::move(v_)), d(d_), m(m_) {
  if (u < 1 || v < 1) throw std::invalid_argument("LehmerInstance: u, v >= 1");
  if (d < 1 || !is_squarefree_long(d))
    throw std::invalid_argument("LehmerInstance: d must be squarefree positive");
  if (m != 0 && m != 1) throw std::invalid_argument("LehmerInstance: m in {0,1}");
  if (m == 1 && (mpz_even_p(u.get_mpz_t()) || mpz_even_p(v.get_mpz_t()) || d % 2 == 0))
    throw std::invalid_argument("LehmerInstance: u, v, d odd when m = 1");
}

Int LehmerInstance::param_a() const { return (u * u) << (2 - m); }

Int LehmerInstance::param_b() const { return -((v * v * d) << (2 - m)); }

Int LehmerInstance::norm() const {
  Int s = u * u + v * v * d;
  if (m == 1) {
    if (mpz_odd_p(s.get_mpz_t()))
      throw std::logic_error("LehmerInstance: u^2 + d v^2 odd with m = 1");
    s >>= 1;
  }
  return s;
}

std::pair<Int, Int> complex_pow(const Int& u, const Int& v, long d,
                                unsigned long n) {
  Int re = 1, im = 0;
  for (unsigned long i = 0; i < n; ++i) {
    Int re2 = re * u - im * v * d;
    im = re * v + im * u;
    re = re2;
  }
  return {re, im};
}

bool is_lehmer_pair(const Int& u, const Int& v, long d, int m) {
  if (u < 1 || v < 1 || d < 1 || !is_squarefree_long(d)) return false;
  if (m != 0 && m != 1) return false;
  if (gcd(u, v * d) != 1) return false;
  if (m == 1 && (mpz_even_p(u.get_mpz_t()) || mpz_even_p(v.get_mpz_t()) || d % 2 == 0))
    return false;
  Int s = u * u + v * v * d;
  if (m == 1) {
    if (mpz_odd_p(s.get_mpz_t())) return false;
    s >>= 1;
  }
  // (alpha+conj)^2 = 2^(2-m) u^2 and alpha*conj = s must be coprime.
  if (gcd((u * u) << (2 - m), s) != 1) return false;
  // alpha/conj is a root of unity iff alpha^k is real for some k <= 6.
  Int re = 1, im = 0;
  for (int k = 1; k <= 6; ++k) {
    Int re2 = re * u - im * v * d;
    im = re * v + im * u;
    re = re2;
    if (im == 0) return false;
  }
  return true;
}

namespace {

// Imaginary coefficient of (u + v sqrt(-d))^n as a binomial-coefficient sum:
// I_n = sum over odd j of C(n,j) u^(n-j) v^j (-d)^((j-1)/2).
Int imag_by_binomial(const Int& u, const Int& v, long d, unsigned long n) {
  Int total = 0;
  for (unsigned long j = 1; j <= n; j += 2) {
    Int term;
    mpz_bin_uiui(term.get_mpz_t(), n, j);
    term *= pow_int(u, n - j);
    term *= pow_int(v, j);
    Int dpow = pow_int(Int(d), (j - 1) / 2);
    if (((j - 1) / 2) % 2) dpow = -dpow;
    total += term * dpow;
  }
  return total;
}

Int divide_exactly(const Int& numerator, const Int& denominator,
                   const char* what) {
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw std::logic_error(std::string("inexact Lehmer-number division in ") + what);
  Int q;
  mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return q;
}

Int odd_denominator(const LehmerInstance& inst, unsigned long n) {
  return inst.v * pow2(static_cast<unsigned long>(inst.m) * ((n - 1) / 2));
}

Int even_denominator(const LehmerInstance& inst, unsigned long n) {
  return 2 * inst.u * inst.v *
         pow2(static_cast<unsigned long>(inst.m) * ((n - 2) / 2));
}

}  // namespace

Int lehmer_number(const LehmerInstance& inst, unsigned long n) {
  if (n % 2 == 0) throw std::invalid_argument("lehmer_number: n must be odd");
  Int in = imag_by_binomial(inst.u, inst.v, inst.d, n);
  Int result = divide_exactly(in, odd_denominator(inst, n), "lehmer_number");
  if (result == 0) throw std::logic_error("lehmer_number: zero value");
  return result;
}

Int lehmer_number_by_recurrence(const LehmerInstance& inst, unsigned long n) {
  if (n % 2 == 0)
    throw std::invalid_argument("lehmer_number_by_recurrence: n must be odd");
  Int norm = inst.u * inst.u + inst.v * inst.v * inst.d;
  Int prev = inst.v;            // I_1
  Int cur = 2 * inst.u * inst.v;  // I_2
  if (n == 1) cur = prev;
  for (unsigned long k = 3; k <= n; ++k) {
    Int next = 2 * inst.u * cur - norm * prev;
    prev = cur;
    cur = next;
  }
  const Int& in = (n == 1) ? prev : cur;
  Int result =
      divide_exactly(in, odd_denominator(inst, n), "lehmer_number_by_recurrence");
  if (result == 0) throw std::logic_error("lehmer_number_by_recurrence: zero value");
  return result;
}

Int lehmer_number_even(const LehmerInstance& inst, unsigned long n) {
  if (n % 2 || n == 0)
    throw std::invalid_argument("lehmer_number_even: n must be even positive");
  Int in = imag_by_binomial(inst.u, inst.v, inst.d, n);
  return divide_exactly(in, even_denominator(inst, n), "lehmer_number_even");
}

Int squared_diff(const LehmerInstance& inst) {
  return -((inst.u * inst.u * inst.v * inst.v * inst.d) << (4 - 2 * inst.m));
}

bool is_primitive_divisor(const Int& q, const LehmerInstance& inst,
                          unsigned long n) {
  if (n < 3) throw std::invalid_argument("is_primitive_divisor: n >= 3");
  auto divides = [&q](const Int& x) {
    return mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t()) != 0;
  };
  Int ln = (n % 2) ? lehmer_number(inst, n) : lehmer_number_even(inst, n);
  if (!divides(ln)) return false;
  if (divides(squared_diff(inst))) return false;
  for (unsigned long k = 1; k < n; ++k) {
    Int lk = (k % 2) ? lehmer_number(inst, k) : lehmer_number_even(inst, k);
    if (divides(lk)) return false;
  }
  return true;
}

bool congruence_criterion(long q, long p, long d) {
  if (p < 3 || p % 2 == 0 || !is_prime_long(p))
    throw std::invalid_argument("congruence_criterion: p must be an odd prime");
  if (!is_prime_long(q)) throw std::invalid_argument("congruence_criterion: q prime");
  if (q == 2) return false;  // 2 always divides squared_diff
  long r = q % p;
  int eps;
  if (r == 1)
    eps = 1;
  else if (r == p - 1)
    eps = -1;
  else
    return false;
  return jacobi_symbol(Int(-4) * d, Int(q)) == eps;
}

DefectiveParams defective_params(long p) {
  if (p < 3 || !is_prime_long(p) || p % 2 == 0)
    throw std::invalid_argument("defective_params: p must be an odd prime");
  DefectiveParams out;
  if (p == 3) {
    out.kind = DefectiveParams::Kind::NotApplicable;
  } else if (p == 5) {
    out.kind = DefectiveParams::Kind::FibonacciLucasFamilies;
  } else if (p == 7) {
    out.pairs = {{1, 7}, {1, 19}, {3, 5}, {5, 7}, {13, 3}, {14, 22}};
  } else if (p == 13) {
    out.pairs = {{1, 7}};
  }
  return out;
}

bool defective_pair_realizable(long first, long second, std::string* reason) {
  for (int m = 0; m <= 1; ++m) {
    long shift = 1L << (2 - m);
    if (first % shift || second % shift) continue;
    auto u = is_perfect_square(Int(first / shift));
    if (!u || *u < 1) continue;
    if (m == 1 && mpz_even_p(u->get_mpz_t())) continue;
    long w = second / shift;  // v^2 d
    if (w < 1) continue;
    if (m == 1 && w % 2 == 0) continue;
    return true;
  }
  if (reason)
    *reason = "2^(2-m) u^2 = " + std::to_string(first) +
              " has no solution with m in {0,1}";
  return false;
}

EliminationCertificate eliminate_p_gt_7(long p) {
  if (p <= 7 || !is_prime_long(p))
    throw std::invalid_argument("eliminate_p_gt_7: p must be a prime > 7");
  EliminationCertificate cert;
  cert.p = p;
  cert.valid = true;
  for (long q : kSPrimes) {
    for (long d : kAdmissibleD) {
      bool holds = congruence_criterion(q, p, d);
      cert.congruence_checks.push_back({q, d, holds});
      if (holds) cert.valid = false;
    }
  }
  for (auto [first, second] : defective_params(p).pairs) {
    DefectivePairFact fact;
    fact.first = first;
    fact.second = second;
    fact.realizable = defective_pair_realizable(first, second, &fact.reason);
    if (fact.realizable) cert.valid = false;
    cert.defective_checks.push_back(std::move(fact));
  }
  if (!cert.valid)
    throw std::logic_error("eliminate_p_gt_7: a check unexpectedly passed for p = " +
                           std::to_string(p));
  return cert;
}

}  // namespace lrn
