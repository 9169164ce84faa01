// Lehmer pairs alpha = (u + v sqrt(-d)) / sqrt(2^m), their Lehmer numbers,
// primitive-divisor tests, and the elimination criteria for prime exponents.
#pragma once

#include "lrn/arith.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lrn {

// Pair (alpha, conj(alpha)) with parameters (2^(2-m) u^2, -2^(2-m) v^2 d).
struct LehmerInstance {
  Int u, v;
  long d = 1;
  int m = 0;

  LehmerInstance(Int u_, Int v_, long d_, int m_);

  Int param_a() const;          // (alpha + conj)^2 = 2^(2-m) u^2
  Int param_b() const;          // (alpha - conj)^2 = -2^(2-m) v^2 d
  Int norm() const;             // alpha * conj = (u^2 + d v^2) / 2^m
};

// (R, I) with (u + v sqrt(-d))^n = R + I sqrt(-d); exact integers.
std::pair<Int, Int> complex_pow(const Int& u, const Int& v, long d,
                                unsigned long n);

// True iff (u,v,d,m) yields a genuine Lehmer pair: gcd(u,dv)=1, u v d odd
// when m=1, (alpha+conj)^2 coprime to alpha*conj, and alpha/conj not a root
// of unity. Roots of unity in an imaginary quadratic field have order <= 6,
// so alpha^k real for some k in 1..6 is the complete test.
bool is_lehmer_pair(const Int& u, const Int& v, long d, int m);

// L_n for odd n via the binomial-coefficient expansion of (u+v sqrt(-d))^n.
// Throws on even n and signals (logic_error) if the division is inexact.
Int lehmer_number(const LehmerInstance& inst, unsigned long n);

// Same value via the integer recurrence I1=v, I2=2uv,
// I_{k+2} = 2u I_{k+1} - (u^2+dv^2) I_k. Independent second path.
Int lehmer_number_by_recurrence(const LehmerInstance& inst, unsigned long n);

// L_n for even n (denominator alpha^2 - conj^2).
Int lehmer_number_even(const LehmerInstance& inst, unsigned long n);

// (alpha^2 - conj^2)^2 = -2^(4-2m) u^2 v^2 d.
Int squared_diff(const LehmerInstance& inst);

// q is a primitive divisor of L_n: q | L_n and
// q does not divide squared_diff * L_1 * ... * L_{n-1}.
bool is_primitive_divisor(const Int& q, const LehmerInstance& inst,
                          unsigned long n);

// Necessary condition for q to be a primitive divisor of L_p:
// q = eps (mod p) with eps in {+1,-1} and jacobi(-4d, q) = eps.
bool congruence_criterion(long q, long p, long d);

// Parameter pairs of Lehmer pairs whose p-th Lehmer number can lack a
// primitive divisor, as far as this artifact needs them.
struct DefectiveParams {
  enum class Kind {
    ExplicitList,            // finitely many pairs, listed
    FibonacciLucasFamilies,  // p = 5: parametrized families (see fib_lucas)
    NotApplicable,           // p = 3: primitive divisors give nothing
  };
  Kind kind = Kind::ExplicitList;
  std::vector<std::pair<long, long>> pairs;  // (2^(2-m)u^2, 2^(2-m)v^2 d)
};
DefectiveParams defective_params(long p);

// Machine-checkable record of why exponent p > 7 admits no solutions.
struct CongruenceFact {
  long q = 0;
  long d = 0;
  bool criterion_holds = false;  // must be false for the certificate
};
struct DefectivePairFact {
  long first = 0, second = 0;
  bool realizable = false;  // must be false: needs 2^(2-m) u^2 shape, m in {0,1}
  std::string reason;
};
struct EliminationCertificate {
  long p = 0;
  std::vector<CongruenceFact> congruence_checks;
  std::vector<DefectivePairFact> defective_checks;
  bool valid = false;
};

// Checks that no q in {5,13,17} can be a primitive divisor of L_p for any
// admissible d, and that every listed defective pair is unrealizable with
// m in {0,1}. Throws logic_error if any check unexpectedly passes.
EliminationCertificate eliminate_p_gt_7(long p);

// True iff (first, second) = (2^(2-m) u^2, 2^(2-m) v^2 d) is attainable with
// m in {0,1}, u,v >= 1 (u,v,d odd when m=1). Used by certificates and tests.
bool defective_pair_realizable(long first, long second, std::string* reason);

}  // namespace lrn
