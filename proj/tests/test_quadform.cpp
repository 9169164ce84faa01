#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/quadform.hpp"

#include <map>
#include <numeric>
#include <set>

using namespace lrn;

namespace {

long floor_div(long x, long y) {
  long q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

// Independent class-number oracle: reduce every primitive form with
// |b| <= a <= 40 of the right discriminant and count distinct classes.
QuadraticForm reduce(QuadraticForm f) {
  long disc = f.discriminant();
  while (true) {
    if (f.c < f.a) f = {f.c, -f.b, f.a};
    if (f.b > f.a || f.b <= -f.a) {
      long k = floor_div(f.a - f.b, 2 * f.a);  // b + 2ka lands in (-a, a]
      long b2 = f.b + 2 * k * f.a;
      f = {f.a, b2, (b2 * b2 - disc) / (4 * f.a)};
    }
    if (f.a <= f.c && -f.a < f.b && f.b <= f.a) {
      if ((f.a == f.c || f.b == -f.a) && f.b < 0) f.b = -f.b;
      return f;
    }
  }
}

long class_number_by_reduction(long disc) {
  std::set<std::tuple<long, long, long>> classes;
  for (long a = 1; a <= 40; ++a)
    for (long b = -a; b <= a; ++b) {
      if ((b * b - disc) % (4 * a)) continue;
      long c = (b * b - disc) / (4 * a);
      if (c <= 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      auto r = reduce({a, b, c});
      classes.insert({r.a, r.b, r.c});
    }
  return static_cast<long>(classes.size());
}

}  // namespace

TEST_CASE("discriminant_of") {
  CHECK(discriminant_of(5) == -20);
  CHECK(discriminant_of(3) == -3);
  CHECK(discriminant_of(221) == -884);
  CHECK(discriminant_of(1) == -4);
  CHECK_THROWS_AS(discriminant_of(12), std::invalid_argument);
  CHECK_THROWS_AS(discriminant_of(0), std::invalid_argument);
}

TEST_CASE("reduced_forms on small discriminants") {
  CHECK(reduced_forms(-4) == std::vector<QuadraticForm>{{1, 0, 1}});
  CHECK(reduced_forms(-20) == std::vector<QuadraticForm>{{1, 0, 5}, {2, 2, 3}});
  CHECK(reduced_forms(-3) == std::vector<QuadraticForm>{{1, 1, 1}});
  CHECK_THROWS_AS(reduced_forms(-6), std::invalid_argument);
  CHECK_THROWS_AS(reduced_forms(4), std::invalid_argument);
}

TEST_CASE("every returned form is reduced and primitive") {
  for (long disc : {-4L, -20L, -52L, -68L, -260L, -340L, -884L, -4420L}) {
    for (const QuadraticForm& f : reduced_forms(disc)) {
      CHECK(f.discriminant() == disc);
      CHECK(f.is_positive_definite());
      CHECK(f.is_reduced());
      CHECK(f.is_primitive());
    }
  }
}

TEST_CASE("class numbers of the eight d values") {
  const std::map<long, long> expected = {{1, 1},  {5, 2},  {13, 2},   {17, 4},
                                         {65, 8}, {85, 4}, {221, 16}, {1105, 16}};
  for (auto [d, h] : expected) {
    CHECK(class_number(d) == h);
    // membership in {1,2,4,8,16}: coprime to every odd prime
    CHECK((h & (h - 1)) == 0);
    CHECK(h <= 16);
    for (long p : {3L, 5L, 7L, 11L, 13L}) CHECK(std::gcd(h, p) == 1);
    // independent oracle
    CHECK(class_number_by_reduction(discriminant_of(d)) == h);
  }
}

TEST_CASE("represent examples") {
  {
    auto reps = represent(Int(5), 1, 1);  // 2*5 = 1+9 = 9+1
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].u == 1);
    CHECK(reps[0].v == 3);
    CHECK(reps[1].u == 3);
    CHECK(reps[1].v == 1);
  }
  {
    auto reps = represent(Int(17), 13, 0);  // 4 + 13 = 17
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].u == 2);
    CHECK(reps[0].v == 1);
  }
  {
    auto reps = represent(Int(3), 5, 1);  // 1 + 5 = 6
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].u == 1);
    CHECK(reps[0].v == 1);
  }
}

TEST_CASE("represent invariants and exhaustiveness") {
  for (long d : {1L, 5L, 13L, 17L}) {
    for (int m = 0; m <= 1; ++m) {
      for (long y = 1; y <= 60; ++y) {
        auto reps = represent(Int(y), d, m);
        for (const auto& r : reps) {
          CHECK(r.u * r.u + d * r.v * r.v == Int(y) << m);
          CHECK(gcd(r.u, d * r.v) == 1);
          if (m == 1) {
            CHECK(mpz_odd_p(r.u.get_mpz_t()));
            CHECK(mpz_odd_p(r.v.get_mpz_t()));
            // d = 1 (mod 4) and u, v odd force y odd as well
            CHECK(y % 2 == 1);
          }
        }
        // exhaustive double loop over u, v <= sqrt(2^m y)
        long target = y << m;
        std::size_t count = 0;
        for (long u = 1; u * u <= target; ++u)
          for (long v = 1; u * u + d * v * v <= target; ++v) {
            if (u * u + d * v * v != target) continue;
            if (std::gcd(u, d * v) != 1) continue;
            if (m == 1 && (u % 2 == 0 || (d * v) % 2 == 0)) continue;
            ++count;
          }
        CHECK(reps.size() == count);
      }
    }
  }
}
