#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/fib_lucas.hpp"
#include "lrn/oracle.hpp"

#include <algorithm>

using namespace lrn;

TEST_CASE("fibonacci and lucas values") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(12) == 144);
  CHECK(fibonacci(6) == 8);
  CHECK(lucas(0) == 2);
  CHECK(lucas(3) == 4);
  CHECK(lucas(6) == 18);
}

TEST_CASE("recurrences and the L_k = F_{k-1} + F_{k+1} identity") {
  for (unsigned long k = 2; k <= 60; ++k) {
    CHECK(fibonacci(k) == fibonacci(k - 1) + fibonacci(k - 2));
    CHECK(lucas(k) == lucas(k - 1) + lucas(k - 2));
  }
  for (unsigned long k = 1; k <= 60; ++k)
    CHECK(lucas(k) == fibonacci(k - 1) + fibonacci(k + 1));
}

TEST_CASE("cohn classification matches the classical lists exactly") {
  using Pairs = std::vector<std::pair<unsigned long, Int>>;
  CHECK(cohn_classify(CohnKind::FibSquare, 50) ==
        Pairs{{0, 0}, {1, 1}, {2, 1}, {12, 12}});
  CHECK(cohn_classify(CohnKind::FibTwiceSquare, 50) ==
        Pairs{{0, 0}, {3, 1}, {6, 2}});
  CHECK(cohn_classify(CohnKind::LucasSquare, 50) == Pairs{{1, 1}, {3, 2}});
  CHECK(cohn_classify(CohnKind::LucasTwiceSquare, 50) == Pairs{{0, 1}, {6, 3}});
  // limit 60: no further entries appear
  CHECK(cohn_classify(CohnKind::FibSquare, 60).size() == 4);
  CHECK(cohn_classify(CohnKind::FibTwiceSquare, 60).size() == 3);
  CHECK(cohn_classify(CohnKind::LucasSquare, 60).size() == 2);
  CHECK(cohn_classify(CohnKind::LucasTwiceSquare, 60).size() == 2);
}

TEST_CASE("classical exponent-5 analysis: all final equations fail") {
  auto analysis = p5_case_analysis(30);
  CHECK(!analysis.any_solution);
  CHECK(analysis.candidates.size() == 4);
  CHECK(analysis.final_equations.size() == 4);
  for (const auto& eq : analysis.final_equations) CHECK(!eq.has_integer_x);

  auto has_equation = [&](long dval, long y) {
    return std::any_of(analysis.final_equations.begin(),
                       analysis.final_equations.end(), [&](const P5FinalEquation& e) {
                         return e.d_value == dval && e.y == y && e.candidate.m == 1;
                       });
  };
  CHECK(has_equation(1, 5));   // x^2 + 1 = 2 * 5^5
  CHECK(has_equation(5, 7));   // x^2 + 5 = 2 * 7^5

  // the (k-2eps = 12, m = 0) candidates die on the oddness constraint
  bool u_odd_rejection = std::any_of(
      analysis.rejections.begin(), analysis.rejections.end(),
      [](const P5Rejection& r) {
        return r.candidate.first == 144 && r.reason == "u must be odd";
      });
  CHECK(u_odd_rejection);
  // the Lucas m=0 candidate dies on the parity of v^2 d (= 10)
  bool vd_rejection = std::any_of(
      analysis.rejections.begin(), analysis.rejections.end(),
      [](const P5Rejection& r) {
        return r.candidate.second == 40 && r.reason.find("vd must be odd") == 0;
      });
  CHECK(vd_rejection);
}

TEST_CASE("corrected exponent-5 analysis recovers the three missed solutions") {
  auto analysis = p5_case_analysis_corrected(30);
  REQUIRE(analysis.solutions.size() == 3);
  CHECK(analysis.solutions[0].solution ==
        SolutionTuple{Int(19), Int(3), 3, 0, 0, 1, 5});
  CHECK(analysis.solutions[1].solution ==
        SolutionTuple{Int(183), Int(7), 3, 0, 0, 1, 5});
  CHECK(analysis.solutions[2].solution ==
        SolutionTuple{Int(21417), Int(47), 3, 0, 1, 1, 5});
  for (const auto& f : analysis.solutions) {
    CHECK(verify_solution(f.solution).ok);
    CHECK(f.lehmer5 == -5);
    CHECK(f.z == 5);
    CHECK(f.z == f.candidate.v * abs(f.lehmer5));
  }
  // the classical x^2 + 1 = 2*5^5 candidate dies here for the right reason:
  // z = v |L_5| = 3 is not supported on {5,13,17}
  bool z3 = std::any_of(analysis.rejections.begin(), analysis.rejections.end(),
                        [](const P5Rejection& r) {
                          return r.candidate.u == 1 && r.candidate.v == 3 &&
                                 r.candidate.d == 1 &&
                                 r.reason.find("z = v |L_5| = 3") == 0;
                        });
  CHECK(z3);
}

TEST_CASE("corrected analysis is stable in kmax") {
  CHECK(p5_case_analysis_corrected(60).solutions.size() == 3);
}
