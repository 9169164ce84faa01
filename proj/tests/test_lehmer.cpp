#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/lehmer.hpp"
#include "lrn/quadform.hpp"
#include "lrn/tables.hpp"

#include <numeric>

using namespace lrn;

TEST_CASE("instance parameters") {
  LehmerInstance i(3, 1, 1, 1);
  CHECK(i.param_a() == 18);
  CHECK(i.param_b() == -2);
  CHECK(i.norm() == 5);
  CHECK(i.param_a() - i.param_b() == 4 * i.norm());
  CHECK_THROWS_AS(LehmerInstance(2, 1, 5, 1), std::invalid_argument);  // even u, m=1
  CHECK_THROWS_AS(LehmerInstance(1, 1, 12, 0), std::invalid_argument); // d not squarefree
}

TEST_CASE("lehmer_number examples") {
  LehmerInstance a(3, 1, 1, 1);
  CHECK(lehmer_number(a, 3) == 13);
  CHECK(lehmer_number_by_recurrence(a, 3) == 13);
  CHECK(lehmer_number(a, 1) == 1);

  LehmerInstance b(1, 1, 5, 1);
  CHECK(lehmer_number(b, 3) == -1);
  // I_5 = 5u^4 - 10u^2v^2 d + v^4 d^2 = 5 - 50 + 25 = -20; -20/4 = -5.
  // Both computation paths must give the binomial value.
  CHECK(lehmer_number(b, 5) == -5);
  CHECK(lehmer_number_by_recurrence(b, 5) == -5);

  CHECK_THROWS_AS(lehmer_number(a, 4), std::invalid_argument);
}

TEST_CASE("dual-path equality on the full grid") {
  for (long u = 1; u <= 20; ++u)
    for (long v = 1; v <= 20; ++v)
      for (long d = 1; d <= 20; ++d) {
        if (!is_squarefree_long(d)) continue;
        for (int m = 0; m <= 1; ++m) {
          if (!is_lehmer_pair(u, v, d, m)) continue;
          LehmerInstance inst(u, v, d, m);
          for (unsigned long n = 1; n <= 15; n += 2) {
            // exactness is asserted inside; any violation throws
            CHECK(lehmer_number(inst, n) == lehmer_number_by_recurrence(inst, n));
          }
        }
      }
}

TEST_CASE("squared_diff") {
  CHECK(squared_diff(LehmerInstance(3, 1, 1, 1)) == -36);
  CHECK(squared_diff(LehmerInstance(1, 1, 5, 1)) == -20);
  CHECK(squared_diff(LehmerInstance(1, 1, 1, 0)) == -16);
}

TEST_CASE("is_lehmer_pair") {
  CHECK(!is_lehmer_pair(1, 1, 1, 1));  // alpha/conj = i, a 4th root of unity
  CHECK(is_lehmer_pair(3, 1, 1, 1));
  CHECK(is_lehmer_pair(2, 1, 5, 0));
  CHECK(!is_lehmer_pair(2, 1, 5, 1));   // even u with m = 1
  CHECK(!is_lehmer_pair(3, 3, 5, 0));   // gcd(u, dv) > 1
  CHECK(!is_lehmer_pair(1, 1, 3, 1));   // y = (1+3)/2 even: gcd(param_a, y) > 1
}

TEST_CASE("is_primitive_divisor") {
  LehmerInstance inst(3, 1, 1, 1);
  // L_3 = 13, squared_diff = -36, L_1 = L_2 = 1, 13 does not divide 36
  CHECK(is_primitive_divisor(Int(13), inst, 3));
  CHECK(!is_primitive_divisor(Int(3), inst, 3));   // 3 does not divide 13
  CHECK(!is_primitive_divisor(Int(2), inst, 3));   // 2 | squared_diff always
  CHECK(!is_primitive_divisor(Int(2), LehmerInstance(2, 1, 5, 0), 4));
}

TEST_CASE("congruence_criterion") {
  CHECK(congruence_criterion(13, 7, 5));   // 13 = -1 (mod 7), (-20|13) = -1
  CHECK(!congruence_criterion(13, 7, 1));  // (-4|13) = +1, sign mismatch
  CHECK(!congruence_criterion(5, 5, 5));   // 5 = 0 (mod 5)
  CHECK(!congruence_criterion(5, 11, 1));
}

TEST_CASE("empirical: primitive divisors satisfy the +-1 congruence with the jacobi sign") {
  auto primes = primes_up_to(1000);
  for (long u = 1; u <= 10; ++u)
    for (long v = 1; v <= 10; ++v)
      for (long d : {1L, 5L, 13L, 17L})
        for (int m = 0; m <= 1; ++m) {
          if (!is_lehmer_pair(u, v, d, m)) continue;
          LehmerInstance inst(u, v, d, m);
          for (unsigned long p : {3ul, 5ul, 7ul}) {
            for (long q : primes) {
              if (!is_primitive_divisor(Int(q), inst, p)) continue;
              long r = q % static_cast<long>(p);
              int eps = r == 1 ? 1 : (r == static_cast<long>(p) - 1 ? -1 : 0);
              REQUIRE(eps != 0);
              REQUIRE(jacobi_symbol(Int(-4) * d, Int(q)) == eps);
            }
          }
        }
}

TEST_CASE("defective_params") {
  auto p13 = defective_params(13);
  CHECK(p13.kind == DefectiveParams::Kind::ExplicitList);
  CHECK(p13.pairs == std::vector<std::pair<long, long>>{{1, 7}});

  auto p7 = defective_params(7);
  CHECK(p7.pairs == std::vector<std::pair<long, long>>{
                        {1, 7}, {1, 19}, {3, 5}, {5, 7}, {13, 3}, {14, 22}});

  CHECK(defective_params(11).pairs.empty());
  CHECK(defective_params(5).kind == DefectiveParams::Kind::FibonacciLucasFamilies);
  CHECK(defective_params(3).kind == DefectiveParams::Kind::NotApplicable);
}

TEST_CASE("eliminate_p_gt_7 certificates are independently re-checkable") {
  for (long p : {11L, 13L, 19L}) {
    auto cert = eliminate_p_gt_7(p);
    CHECK(cert.valid);
    CHECK(cert.congruence_checks.size() == 24);  // 3 primes x 8 d values
    for (const auto& fact : cert.congruence_checks) {
      CHECK(!fact.criterion_holds);
      CHECK(congruence_criterion(fact.q, p, fact.d) == fact.criterion_holds);
    }
    for (const auto& fact : cert.defective_checks) {
      CHECK(!fact.realizable);
      CHECK(defective_pair_realizable(fact.first, fact.second, nullptr) ==
            fact.realizable);
    }
  }
  CHECK(eliminate_p_gt_7(13).defective_checks.size() == 1);
  CHECK(eliminate_p_gt_7(11).defective_checks.empty());
  CHECK_THROWS_AS(eliminate_p_gt_7(7), std::invalid_argument);
}

TEST_CASE("eliminate_p_gt_7 succeeds for every prime 7 < p <= 500") {
  for (long p : primes_up_to(500))
    if (p > 7) CHECK(eliminate_p_gt_7(p).valid);
}

TEST_CASE("realization of |L_p| = z/v on every verified cube row") {
  // every n=3 solution must admit a representation (u,v) of y whose Lehmer
  // number realizes z/v
  for (const SolutionTuple& s : verified_rows()) {
    if (s.n != 3) continue;
    auto split = squarefree_split(s.exponents());
    auto reps = represent(s.y, split.d, s.m);
    bool realized = false;
    for (const auto& r : reps) {
      if (!is_lehmer_pair(r.u, r.v, split.d, s.m)) continue;
      if (!mpz_divisible_p(split.z.get_mpz_t(), r.v.get_mpz_t())) continue;
      LehmerInstance inst(r.u, r.v, split.d, s.m);
      if (abs(lehmer_number(inst, 3)) * r.v == split.z) realized = true;
    }
    CHECK_MESSAGE(realized, "no representation realizes z/v for ", s.to_string());
  }
}
