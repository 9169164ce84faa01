// Orchestrates the complete case analysis: quartic reduction for 4 | n,
// Mordell curves for p = 3, defective-pair analysis for p = 5, cubic-curve
// families for p = 7, primitive-divisor certificates for p > 7, and the
// composition step for general n.
#pragma once

#include "lrn/curves.hpp"
#include "lrn/fib_lucas.hpp"
#include "lrn/lehmer.hpp"
#include "lrn/oracle.hpp"
#include "lrn/solution.hpp"

#include <string>
#include <vector>

namespace lrn {

struct SolveBounds {
  int denomBound = 2;
  long numerBound = 10000;
  // Verification mode: tuples found by the oracle on this box are mapped to
  // their curves, checked to lie on them exactly, and back-substituted. This
  // is how rows beyond the sweep bounds (e.g. x = 188000497) enter.
  SearchBox feedBox;
  bool useOracleFeed = true;
  long pgt7Max = 10000;
  int threads = 0;
};

// true iff m admits solutions: 5^a 13^b 17^c = 1 (mod 4), so m >= 2 would
// force x^2 = 3 (mod 4).
bool mod4_filter(int m);

struct P5Report {
  std::string case_tag = "p=5";
  P5Analysis classical;
  P5CorrectedAnalysis corrected;
  std::string conclusion_classical;
  std::string conclusion;
};

struct P7Report {
  std::string case_tag = "p=7";
  // b1 = 0 (and a1 = b1 = c1 = 0): every listed defective pair unrealizable.
  std::vector<DefectivePairFact> defective_pair_facts;
  struct DRestrictionFact {
    long d;
    int jacobi;   // (-4d | 13); 13 = -1 (mod 7) forces jacobi = -1
    bool kept;
  };
  std::vector<DRestrictionFact> d_restriction;  // over d with 13 coprime to d
  std::vector<long> admissible_d;               // {5, 85}
  struct FamilySweep {
    CubicFamily family;
    std::size_t curve_count = 0;
    std::size_t point_count = 0;
    std::vector<SolutionTuple> back_substituted;  // expected empty
  };
  std::vector<FamilySweep> sweeps;
  std::string conclusion;
};

struct PGt7Report {
  std::string case_tag = "p>7";
  std::vector<EliminationCertificate> certificates;
  std::string conclusion;
};

struct MasterResult {
  std::vector<SolutionTuple> solutions;
  P5Report p5;
  P7Report p7;
  PGt7Report pgt7;
  std::string mod4_note;
  // Oracle-found tuples the analytic paths could not reproduce (expect none).
  std::vector<SolutionTuple> oracle_unexpected;
};

// Quartic path: sweep the 128 curves, back-substitute for every t with
// 4t <= nmax, and integrate oracle-fed rows through the exact embedding.
std::vector<SolutionTuple> solve_multiple_of_4(const SolveBounds& bounds,
                                               int nmax = 16);

// p = 3 path over the 432 Mordell curves (sweep + verification mode).
std::vector<SolutionTuple> solve_p3(const SolveBounds& bounds);

// p = 5: classical elimination plus the corrected back-substitution.
// Throws if the classical final equations unexpectedly acquire solutions.
P5Report solve_p5();

// p = 7: defective pairs, the d restriction to {5,85}, and the four
// cubic-curve family sweeps. Throws if a back-substitution succeeds.
P7Report solve_p7(const SolveBounds& bounds);

// Certificates for every prime 7 < p <= pmax.
PGt7Report solve_p_gt7(long pmax);

// Back-substitution for exponent-7 cubic points: X = U/(7D) must be (u/v)^2
// with v of the family's shape, the pair must be a Lehmer pair, z = v |L_7|
// must be supported on {5,13,17}, and the reconstructed tuple must satisfy
// the equation exactly. Any success is a genuine n = 7 solution.
std::optional<SolutionTuple> backsubstitute_p7(const CurvePoint& p,
                                               const CubicCurveSpec& curve);

// Lifts prime-exponent solutions to composite exponents n <= nmax with
// 4 not dividing n: a p-level solution rises to level n = p*l when its
// y-value is a perfect l-th power.
std::vector<SolutionTuple> compose_general_n(
    const std::vector<SolutionTuple>& primeSolutions, int nmax);

MasterResult solve_master(int nmax, const SolveBounds& bounds);

struct CorollaryConstraint {
  bool a_zero = false;
  bool b_zero = false;
  bool c_zero = false;
};

// Pure projection of a solution list onto a zero-exponent constraint.
std::vector<SolutionTuple> corollary_filter(
    const std::vector<SolutionTuple>& solutions, const CorollaryConstraint& c);

}  // namespace lrn
