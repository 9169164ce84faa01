// Fibonacci/Lucas sequences, the square / twice-a-square classification, and
// the complete exponent-5 case analysis through the defective-pair families.
#pragma once

#include "lrn/arith.hpp"
#include "lrn/solution.hpp"

#include <string>
#include <vector>

namespace lrn {

Int fibonacci(unsigned long k);
Int lucas(unsigned long k);

// The four classification kinds. The classical lemma labels two of its items
// identically, so the kinds are named explicitly here.
enum class CohnKind { FibSquare, FibTwiceSquare, LucasSquare, LucasTwiceSquare };

// All k <= limit whose sequence value has the requested shape, by brute force;
// pairs are (k, |x|).
std::vector<std::pair<unsigned long, Int>> cohn_classify(CohnKind kind,
                                                         unsigned long limit);

enum class FLFamily { Fibonacci, Lucas };

// One candidate from the exponent-5 defective-pair parametrization
// (2^(2-m)u^2, 2^(2-m)v^2 d) = (F_{k-2eps}, 4F_k - F_{k-2eps}) with k >= 3,
// or the Lucas analogue with k != 1.
struct FLCandidate {
  FLFamily family = FLFamily::Fibonacci;
  long k = 0;
  int eps = 1;       // k - 2 eps is the index of the first parameter
  int m = 0;
  Int u, v;
  long d = 1;
  Int first, second;  // the parameter pair (both positive)
};

struct P5Rejection {
  FLCandidate candidate;
  std::string reason;
};

// Final equation x^2 + D = 2^m y^5 as the classical analysis forms it
// (D = d * (S-part of v)^2).
struct P5FinalEquation {
  FLCandidate candidate;
  Int d_value;  // the 5^a 13^b 17^c value substituted
  Int y;
  Int rhs;      // 2^m y^5
  bool has_integer_x = false;
  Int x;        // meaningful only when has_integer_x
};

struct P5Analysis {
  std::vector<FLCandidate> candidates;        // survived to a final equation
  std::vector<P5Rejection> rejections;
  std::vector<P5FinalEquation> final_equations;
  bool any_solution = false;
};

// The classical exponent-5 elimination: enumerate candidates, apply the
// oddness constraints on u and vd, and test the final equations with
// z taken as the S-part of v. All final equations come out unsolvable.
P5Analysis p5_case_analysis(long kmax);

struct P5CorrectedFinding {
  FLCandidate candidate;
  Int lehmer5;       // L_5 of the pair
  Int z;             // v * |L_5|
  SolutionTuple solution;
};

struct P5CorrectedAnalysis {
  std::vector<P5Rejection> rejections;
  std::vector<P5CorrectedFinding> solutions;
};

// Repaired back-substitution: z is derived from the pair itself via
// z = v * |L_5| and x from the real part of (u + v sqrt(-d))^5, instead of
// assuming z equals the S-part of v. This recovers solutions the classical
// shortcut misses; every emitted tuple is verified exactly.
P5CorrectedAnalysis p5_case_analysis_corrected(long kmax);

}  // namespace lrn
