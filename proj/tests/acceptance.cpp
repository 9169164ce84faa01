// Acceptance suite: runs each acceptance criterion at its stated tolerance
// (exact integer arithmetic throughout) and prints one PASS/FAIL line per
// criterion. Usage: lrn-acceptance [1-8|all]. Exit 0 iff every selected
// criterion passes.
//
// Criterion 2 is expected to FAIL: the published tables are provably
// incomplete (one n=3 row missing, three n=5 solutions missed by the
// published exponent-5 analysis). The oracle reports the truth; see the
// README's errata section. All other criteria pass.
#include "lrn/quadform.hpp"
#include "lrn/solver.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace lrn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::vector<SolutionTuple> slice(const std::vector<SolutionTuple>& v, int n) {
  std::vector<SolutionTuple> out;
  for (const auto& s : v)
    if (s.n == n) out.push_back(s);
  return out;
}

std::string list(const std::vector<SolutionTuple>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += ", ";
    out += "(" + s.to_string() + ")";
  }
  return out;
}

// ---- criterion 1: golden-table verification incl. the erratum flag ----
Outcome criterion1() {
  Outcome o;
  int passes = 0, errata = 0;
  for (const PublishedRow& row : published_rows()) {
    VerifyResult v = verify_solution(row.row);
    if (v.ok) {
      if (row.known_erratum) o.fail("erratum row unexpectedly verifies");
      ++passes;
      continue;
    }
    if (!row.known_erratum) {
      o.fail("row fails without erratum flag: " + row.row.to_string());
      continue;
    }
    ++errata;
    if (!row.correction || !verify_solution(*row.correction).ok)
      o.fail("erratum correction does not verify");
  }
  if (passes != 27 || errata != 1)
    o.fail("expected 27 verifying rows and 1 erratum, got " +
           std::to_string(passes) + "/" + std::to_string(errata));
  else
    o.note("27 rows verify exactly; (33,7,2,2,1,1,3) flagged with correction "
           "(7,33,2,2,1,1,3)");
  return o;
}

// ---- criterion 2: oracle reproduction over the reference box ----
Outcome criterion2() {
  Outcome o;
  auto report = full_table_reproduction();
  const auto& golden = corrected_rows();
  for (int n : {3, 4, 6, 12}) {
    auto got = slice(report.found, n);
    auto want = slice(golden, n);
    if (got == want) {
      o.note("n=" + std::to_string(n) + " matches the corrected golden set (" +
             std::to_string(want.size()) + " rows)");
    } else {
      std::vector<SolutionTuple> extra;
      std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                          std::back_inserter(extra));
      std::vector<SolutionTuple> missing;
      std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                          std::back_inserter(missing));
      std::string why = "n=" + std::to_string(n) + " differs";
      if (!extra.empty()) why += "; oracle additionally finds " + list(extra);
      if (!missing.empty()) why += "; oracle misses " + list(missing);
      o.fail(why);
    }
  }
  for (int n : {5, 7, 8, 9, 10, 11}) {
    auto got = slice(report.found, n);
    if (got.empty())
      o.note("n=" + std::to_string(n) + " empty");
    else
      o.fail("n=" + std::to_string(n) + " expected empty, oracle finds " +
             list(got));
  }
  return o;
}

// ---- criterion 3: class numbers ----
long floor_div(long x, long y) {
  long q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

QuadraticForm reduce_closure(QuadraticForm f) {
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

Outcome criterion3() {
  Outcome o;
  std::string values;
  for (long d : kAdmissibleD) {
    long h = class_number(d);
    values += (values.empty() ? "" : ", ") + std::string("h(-") +
              std::to_string(d) + ")=" + std::to_string(h);
    if (h != 1 && h != 2 && h != 4 && h != 8 && h != 16)
      o.fail("h(-" + std::to_string(d) + ") = " + std::to_string(h) +
             " outside {1,2,4,8,16}");
    for (long p : primes_up_to(97))
      if (p % 2 && std::gcd(h, p) != 1)
        o.fail("h(-" + std::to_string(d) + ") shares a factor with " +
               std::to_string(p));
    // independent oracle: reduction closure over |b| <= a <= 40
    long disc = discriminant_of(d);
    std::set<std::tuple<long, long, long>> classes;
    for (long a = 1; a <= 40; ++a)
      for (long b = -a; b <= a; ++b) {
        if ((b * b - disc) % (4 * a)) continue;
        long c = (b * b - disc) / (4 * a);
        if (c <= 0) continue;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        auto r = reduce_closure({a, b, c});
        classes.insert({r.a, r.b, r.c});
      }
    if (static_cast<long>(classes.size()) != h)
      o.fail("reduction oracle disagrees for d = " + std::to_string(d));
  }
  if (o.pass) o.note(values);
  return o;
}

// ---- criterion 4: curve-family counts ----
Outcome criterion4() {
  Outcome o;
  auto expect = [&o](std::size_t got, std::size_t want, const char* what) {
    if (got != want)
      o.fail(std::string(what) + ": got " + std::to_string(got) + ", want " +
             std::to_string(want));
  };
  expect(enumerate_quartic_curves().size(), 128, "quartic");
  expect(enumerate_mordell_curves().size(), 432, "mordell");
  expect(enumerate_p7_curves(CubicFamily::VOne).size(), 64, "p7 v=1");
  expect(enumerate_p7_curves(CubicFamily::V5Power).size(), 32, "p7 v=5-power");
  expect(enumerate_p7_curves(CubicFamily::V17Power).size(), 32, "p7 v=17-power");
  expect(enumerate_p7_curves(CubicFamily::V5x17Power).size(), 16,
         "p7 v=5*17-power");
  if (o.pass) o.note("128 quartic, 432 mordell, 64/32/32/16 cubic");
  return o;
}

// ---- criterion 5: exact round-trip curve membership ----
Outcome criterion5() {
  Outcome o;
  int cubes = 0, quartics = 0;
  for (const SolutionTuple& s : corrected_rows()) {
    if (s.n == 3) {
      auto [curve, point] = mordell_embedding(s);
      if (!on_curve(curve, point)) o.fail("off mordell curve: " + s.to_string());
      auto back = backsubstitute_mordell(point, curve);
      if (!back || !(*back == s)) o.fail("mordell round trip: " + s.to_string());
      ++cubes;
    } else if (s.n % 4 == 0) {
      auto [curve, point] = quartic_embedding(s);
      if (!on_curve(curve, point)) o.fail("off quartic curve: " + s.to_string());
      auto back = backsubstitute_quartic(point, curve, s.n / 4);
      if (!back || !(*back == s)) o.fail("quartic round trip: " + s.to_string());
      ++quartics;
    }
  }
  // the discovered rows round-trip as well
  for (const SolutionTuple& s : discovered_rows()) {
    if (s.n != 3) continue;
    auto [curve, point] = mordell_embedding(s);
    if (!on_curve(curve, point) || !backsubstitute_mordell(point, curve))
      o.fail("discovered row round trip: " + s.to_string());
  }
  if (o.pass)
    o.note(std::to_string(cubes) + " cube rows (incl. z=5 rows) and " +
           std::to_string(quartics) + " quartic rows map exactly");
  return o;
}

// ---- criterion 6: case eliminations ----
Outcome criterion6() {
  Outcome o;
  auto p5 = solve_p5();
  if (p5.classical.any_solution) o.fail("a classical p=5 equation acquired a root");
  auto has_eq = [&](long dval, long y) {
    return std::any_of(p5.classical.final_equations.begin(),
                       p5.classical.final_equations.end(),
                       [&](const P5FinalEquation& e) {
                         return e.d_value == dval && e.y == y && !e.has_integer_x;
                       });
  };
  if (!has_eq(1, 5)) o.fail("missing rejected equation x^2+1 = 2*5^5");
  if (!has_eq(5, 7)) o.fail("missing rejected equation x^2+5 = 2*7^5");

  auto pgt7 = solve_p_gt7(10000);
  std::size_t expected = 0;
  for (long p : primes_up_to(10000)) expected += p > 7;
  if (pgt7.certificates.size() != expected)
    o.fail("certificate count " + std::to_string(pgt7.certificates.size()));
  for (const auto& cert : pgt7.certificates)
    if (!cert.valid) o.fail("invalid certificate for p=" + std::to_string(cert.p));

  SolveBounds bounds;  // denomBound 2, numerBound 10^4
  auto p7 = solve_p7(bounds);
  std::size_t points = 0;
  for (const auto& s : p7.sweeps) {
    points += s.point_count;
    if (!s.back_substituted.empty())
      o.fail("p7 sweep back-substituted a solution");
  }
  if (o.pass)
    o.note("both p=5 rejected equations reproduced; " +
           std::to_string(pgt7.certificates.size()) +
           " valid certificates for 7 < p <= 10^4; p7 sweeps saw " +
           std::to_string(points) + " points, none back-substitute");
  return o;
}

// ---- criterion 7: property suites ----
Outcome criterion7() {
  Outcome o;
  long checked = 0;
  for (long u = 1; u <= 20; ++u)
    for (long v = 1; v <= 20; ++v)
      for (long d = 1; d <= 20; ++d) {
        if (!is_squarefree_long(d)) continue;
        for (int m = 0; m <= 1; ++m) {
          if (!is_lehmer_pair(u, v, d, m)) continue;
          LehmerInstance inst(u, v, d, m);
          for (unsigned long n = 1; n <= 15; n += 2) {
            try {
              if (lehmer_number(inst, n) != lehmer_number_by_recurrence(inst, n))
                o.fail("dual-path mismatch at u=" + std::to_string(u));
              ++checked;
            } catch (const std::logic_error& e) {
              o.fail(std::string("division exactness violated: ") + e.what());
            }
          }
        }
      }
  o.note("dual-path Lehmer equality on " + std::to_string(checked) + " cases");

  using Pairs = std::vector<std::pair<unsigned long, Int>>;
  if (cohn_classify(CohnKind::FibSquare, 60) !=
          Pairs{{0, 0}, {1, 1}, {2, 1}, {12, 12}} ||
      cohn_classify(CohnKind::FibTwiceSquare, 60) != Pairs{{0, 0}, {3, 1}, {6, 2}} ||
      cohn_classify(CohnKind::LucasSquare, 60) != Pairs{{1, 1}, {3, 2}} ||
      cohn_classify(CohnKind::LucasTwiceSquare, 60) != Pairs{{0, 1}, {6, 3}})
    o.fail("cohn classification to 60 deviates from the classical lists");
  else
    o.note("cohn classification to 60 exact");

  SolveBounds bounds;
  bounds.feedBox.yMax = 5000;
  auto master = solve_master(12, bounds);
  if (!master.oracle_unexpected.empty())
    o.fail("solver failed to reproduce oracle rows");
  SearchBox box = bounds.feedBox;
  box.nSet = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  auto oracle = brute_force_search(box);
  std::vector<SolutionTuple> in_box;
  for (const auto& s : master.solutions)
    if (s.y <= box.yMax && s.a <= box.aMax && s.b <= box.bMax && s.c <= box.cMax)
      in_box.push_back(s);
  if (in_box != oracle)
    o.fail("oracle/solver set equality fails on the y<=5000 box");
  else
    o.note("oracle/solver sets equal on the y<=5000 box (" +
           std::to_string(oracle.size()) + " tuples)");
  return o;
}

// ---- criterion 8: documented completeness substitute ----
Outcome criterion8() {
  Outcome o;
  std::ifstream readme(std::string(LRN_SOURCE_DIR) + "/README.md");
  std::stringstream buf;
  buf << readme.rdbuf();
  std::string text = buf.str();
  if (text.find("Completeness") == std::string::npos ||
      text.find("bounded") == std::string::npos)
    o.fail("README lacks the completeness-limitation section");
  else
    o.note("bounded-search completeness substitute documented in README "
           "(certified S-integral point computation is out of scope; the "
           "oracle box plus elimination certificates stand in)");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string which = argc > 1 ? argv[1] : "all";
  struct Entry {
    int id;
    Outcome (*run)();
  };
  const Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                           {4, criterion4}, {5, criterion5}, {6, criterion6},
                           {7, criterion7}, {8, criterion8}};
  bool all_pass = true;
  for (const Entry& e : entries) {
    if (which != "all" && which != std::to_string(e.id)) continue;
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    std::printf("criterion %d: %s - %s\n", e.id, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
    all_pass &= o.pass;
  }
  return all_pass ? 0 : 1;
}
