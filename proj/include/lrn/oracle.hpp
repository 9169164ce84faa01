// Independent brute-force ground truth: exhaustive search over bounded
// parameter boxes and per-tuple verification.
#pragma once

#include "lrn/solution.hpp"
#include "lrn/tables.hpp"

#include <string>
#include <vector>

namespace lrn {

struct SearchBox {
  int aMax = 10;
  int bMax = 4;
  int cMax = 3;
  int mMax = 1;
  std::vector<int> nSet = {3};  // exponents, each >= 3
  long yMax = 5000;
};

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;
};

// True iff x^2 + 5^a 13^b 17^c = 2^m y^n holds exactly and gcd(x,y) = 1;
// the diagnostic names the first violated condition.
VerifyResult verify_solution(const SolutionTuple& t);

// All tuples in the box with x >= 1, gcd(x,y) = 1, found by testing
// 2^m y^n - 5^a 13^b 17^c for exact squareness. y = 1 solves the equation
// for every n at once; such rows are reported at n = 4 only, the exponent
// the published tables use. OpenMP over the y range; deterministic output.
std::vector<SolutionTuple> brute_force_search(const SearchBox& box,
                                              int threads = 0);

// Plain single-threaded reference implementation (no prefilter, no early
// exit); kept for testing the parallel kernel against.
std::vector<SolutionTuple> brute_force_search_serial(const SearchBox& box);

struct TableReport {
  std::vector<SolutionTuple> found;             // everything in the box
  std::vector<PublishedRow> matched;            // printed rows reproduced
  std::vector<PublishedRow> printed_not_found;  // expect: the erratum row
  std::vector<SolutionTuple> found_not_printed; // corrections + discoveries
};

// Runs the reference box (a<=10, b<=4, c<=3, m<=1; n=3 to y<=270000 and
// n in 4..12 to y<=5000) and compares against the published tables.
TableReport full_table_reproduction(int threads = 0);

}  // namespace lrn
