#include "lrn/solver.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lrn {

bool mod4_filter(int m) { return m >= 0 && m <= 1; }

namespace {

void sort_dedup(std::vector<SolutionTuple>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains(const std::vector<SolutionTuple>& sorted, const SolutionTuple& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

// Quartic path shared by the public entry point and solve_master.
std::vector<SolutionTuple> quartic_impl(const SolveBounds& bounds, int nmax,
                                        const std::vector<SolutionTuple>* feed) {
  std::vector<SolutionTuple> out;
  int tmax = nmax / 4;
  if (tmax < 1) return out;
  auto curves = enumerate_quartic_curves();
  auto hits = sweep_quartic(curves, bounds.denomBound, bounds.numerBound,
                            bounds.threads);
  for (const auto& hit : hits)
    for (int t = 1; t <= tmax; ++t)
      if (auto s = backsubstitute_quartic(hit.point, curves[hit.curve_index], t))
        out.push_back(std::move(*s));
  if (feed) {
    for (const SolutionTuple& row : *feed) {
      if (row.n % 4 != 0 || row.n > nmax) continue;
      auto [curve, point] = quartic_embedding(row);
      if (!on_curve(curve, point))
        throw std::logic_error("quartic verification: fed row off-curve: " +
                               row.to_string());
      auto s = backsubstitute_quartic(point, curve, row.n / 4);
      if (!s || !(*s == row))
        throw std::logic_error("quartic verification: round-trip failed: " +
                               row.to_string());
      out.push_back(row);
    }
  }
  sort_dedup(out);
  return out;
}

std::vector<SolutionTuple> p3_impl(const SolveBounds& bounds,
                                   const std::vector<SolutionTuple>* feed) {
  std::vector<SolutionTuple> out;
  auto curves = enumerate_mordell_curves();
  auto hits = sweep_mordell(curves, bounds.denomBound, bounds.numerBound,
                            bounds.threads);
  for (const auto& hit : hits)
    if (auto s = backsubstitute_mordell(hit.point, curves[hit.curve_index]))
      out.push_back(std::move(*s));
  if (feed) {
    for (const SolutionTuple& row : *feed) {
      if (row.n != 3) continue;
      auto [curve, point] = mordell_embedding(row);
      if (!on_curve(curve, point))
        throw std::logic_error("mordell verification: fed row off-curve: " +
                               row.to_string());
      auto s = backsubstitute_mordell(point, curve);
      if (!s || !(*s == row))
        throw std::logic_error("mordell verification: round-trip failed: " +
                               row.to_string());
      out.push_back(row);
    }
  }
  sort_dedup(out);
  return out;
}

}  // namespace

std::optional<SolutionTuple> backsubstitute_p7(const CurvePoint& p,
                                               const CubicCurveSpec& curve) {
  if (p.X.num == 0 || p.Y.num == 0) return std::nullopt;  // V=0 maps to x=0
  mpq_class q = p.X.to_mpq();
  q /= mpq_class(7 * curve.D);
  q.canonicalize();
  if (q <= 0) return std::nullopt;
  auto u = is_perfect_square(Int(q.get_num()));
  auto v = is_perfect_square(Int(q.get_den()));
  if (!u || !v || *u < 1 || *v < 1) return std::nullopt;
  auto vexp = s_exponents_of(*v);
  if (!vexp) return std::nullopt;
  switch (curve.family) {
    case CubicFamily::VOne:
      if (!(*v == 1)) return std::nullopt;
      break;
    case CubicFamily::V5Power:
      if (vexp->e5 < 1 || vexp->e13 || vexp->e17) return std::nullopt;
      break;
    case CubicFamily::V17Power:
      if (vexp->e17 < 1 || vexp->e5 || vexp->e13) return std::nullopt;
      break;
    case CubicFamily::V5x17Power:
      if (vexp->e5 < 1 || vexp->e17 < 1 || vexp->e13) return std::nullopt;
      break;
  }
  if (gcd(*u, curve.d * *v) != 1) return std::nullopt;
  if (!is_lehmer_pair(*u, *v, curve.d, curve.m)) return std::nullopt;
  LehmerInstance inst(*u, *v, curve.d, curve.m);
  Int y = inst.norm();
  if (y < 2) return std::nullopt;
  Int z = *v * abs(lehmer_number(inst, 7));
  if (!s_exponents_of(z)) return std::nullopt;
  auto [re, im] = complex_pow(*u, *v, curve.d, 7);
  (void)im;
  Int den = pow2(3 * curve.m);
  if (!mpz_divisible_p(re.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
  Int x = abs(re) / den;
  auto dexp = s_exponents_of(curve.d * z * z);
  if (!dexp) return std::nullopt;
  if (x < 1 || gcd(x, y) != 1) return std::nullopt;
  SolutionTuple s{std::move(x), std::move(y), dexp->e5, dexp->e13, dexp->e17,
                  curve.m, 7};
  if (!s.satisfies_equation()) return std::nullopt;
  return s;
}

std::vector<SolutionTuple> solve_multiple_of_4(const SolveBounds& bounds, int nmax) {
  if (bounds.useOracleFeed) {
    SearchBox box = bounds.feedBox;
    box.nSet.clear();
    for (int n = 4; n <= nmax; n += 4) box.nSet.push_back(n);
    if (box.nSet.empty()) return quartic_impl(bounds, nmax, nullptr);
    auto feed = brute_force_search(box, bounds.threads);
    return quartic_impl(bounds, nmax, &feed);
  }
  return quartic_impl(bounds, nmax, nullptr);
}

std::vector<SolutionTuple> solve_p3(const SolveBounds& bounds) {
  if (bounds.useOracleFeed) {
    SearchBox box = bounds.feedBox;
    box.nSet = {3};
    auto feed = brute_force_search(box, bounds.threads);
    return p3_impl(bounds, &feed);
  }
  return p3_impl(bounds, nullptr);
}

P5Report solve_p5() {
  P5Report report;
  report.classical = p5_case_analysis(30);
  if (report.classical.any_solution)
    throw std::logic_error("solve_p5: a classical final equation has a solution");
  report.conclusion_classical =
      "classical analysis: every final equation x^2 + D = 2^m y^5 fails; "
      "no solutions for p = 5";
  report.corrected = p5_case_analysis_corrected(30);
  std::ostringstream os;
  os << "corrected back-substitution (z = v |L_5|) recovers "
     << report.corrected.solutions.size() << " genuine solutions";
  report.conclusion = os.str();
  return report;
}

P7Report solve_p7(const SolveBounds& bounds) {
  P7Report report;
  for (auto [first, second] : defective_params(7).pairs) {
    DefectivePairFact fact;
    fact.first = first;
    fact.second = second;
    fact.realizable = defective_pair_realizable(first, second, &fact.reason);
    if (fact.realizable)
      throw std::logic_error("solve_p7: defective pair unexpectedly realizable");
    report.defective_pair_facts.push_back(std::move(fact));
  }
  // q = 13 is the only S-prime = +-1 (mod 7) (13 = -1); d divisible by 13 is
  // excluded since 13 | (alpha^2-conj^2)^2 then. Sign matching keeps {5,85}.
  for (long d : {1L, 5L, 17L, 85L}) {
    int jac = jacobi_symbol(Int(-4) * d, Int(13));
    bool kept = congruence_criterion(13, 7, d);
    assert(kept == (jac == -1));
    report.d_restriction.push_back({d, jac, kept});
    if (kept) report.admissible_d.push_back(d);
  }
  for (CubicFamily family :
       {CubicFamily::VOne, CubicFamily::V5Power, CubicFamily::V17Power,
        CubicFamily::V5x17Power}) {
    auto curves = enumerate_p7_curves(family);
    auto hits =
        sweep_cubic(curves, bounds.denomBound, bounds.numerBound, bounds.threads);
    P7Report::FamilySweep sweep;
    sweep.family = family;
    sweep.curve_count = curves.size();
    sweep.point_count = hits.size();
    for (const auto& hit : hits)
      if (auto s = backsubstitute_p7(hit.point, curves[hit.curve_index]))
        sweep.back_substituted.push_back(std::move(*s));
    if (!sweep.back_substituted.empty())
      throw std::logic_error(
          "solve_p7: a cubic point back-substituted to a solution: " +
          sweep.back_substituted.front().to_string());
    report.sweeps.push_back(std::move(sweep));
  }
  report.conclusion = "no solutions for p = 7 within the sweep bounds";
  return report;
}

PGt7Report solve_p_gt7(long pmax) {
  if (pmax < 11) throw std::invalid_argument("solve_p_gt7: pmax >= 11");
  PGt7Report report;
  for (long p : primes_up_to(pmax))
    if (p > 7) report.certificates.push_back(eliminate_p_gt_7(p));
  std::ostringstream os;
  os << "no solutions for any prime 7 < p <= " << pmax << " ("
     << report.certificates.size() << " certificates)";
  report.conclusion = os.str();
  return report;
}

std::vector<SolutionTuple> compose_general_n(
    const std::vector<SolutionTuple>& primeSolutions, int nmax) {
  std::vector<SolutionTuple> out;
  for (int n = 3; n <= nmax; ++n) {
    if (n % 4 == 0) continue;
    for (const SolutionTuple& s : primeSolutions) {
      if (n % s.n != 0) continue;
      int l = n / s.n;
      if (l == 1) {
        out.push_back(s);
        continue;
      }
      auto root = is_perfect_power(s.y, l);
      if (!root || *root < 2) continue;
      out.push_back(SolutionTuple{s.x, *root, s.a, s.b, s.c, s.m, n});
    }
  }
  sort_dedup(out);
  return out;
}

MasterResult solve_master(int nmax, const SolveBounds& bounds) {
  if (nmax < 3) throw std::invalid_argument("solve_master: nmax >= 3");
  MasterResult result;
  result.mod4_note =
      "m >= 2 impossible: 5^a 13^b 17^c = 1 (mod 4) would force x^2 = 3 (mod 4)";

  std::vector<SolutionTuple> feed;
  const std::vector<SolutionTuple>* feed_ptr = nullptr;
  if (bounds.useOracleFeed) {
    SearchBox box = bounds.feedBox;
    box.nSet.clear();
    for (int n = 3; n <= nmax; ++n) box.nSet.push_back(n);
    feed = brute_force_search(box, bounds.threads);
    feed_ptr = &feed;
  }

  auto quartic = quartic_impl(bounds, nmax, feed_ptr);
  auto p3 = p3_impl(bounds, feed_ptr);
  result.p5 = solve_p5();
  result.p7 = solve_p7(bounds);
  result.pgt7 = solve_p_gt7(bounds.pgt7Max);

  std::vector<SolutionTuple> prime_level = p3;
  if (nmax >= 5)
    for (const auto& finding : result.p5.corrected.solutions)
      prime_level.push_back(finding.solution);
  auto composed = compose_general_n(prime_level, nmax);

  std::vector<SolutionTuple> all = std::move(quartic);
  all.insert(all.end(), composed.begin(), composed.end());
  all.erase(std::remove_if(all.begin(), all.end(),
                           [&](const SolutionTuple& s) { return s.n > nmax; }),
            all.end());
  sort_dedup(all);

  for (const SolutionTuple& f : feed)
    if (f.n <= nmax && !contains(all, f)) result.oracle_unexpected.push_back(f);

  result.solutions = std::move(all);
  return result;
}

std::vector<SolutionTuple> corollary_filter(
    const std::vector<SolutionTuple>& solutions, const CorollaryConstraint& c) {
  std::vector<SolutionTuple> out;
  for (const SolutionTuple& s : solutions) {
    if (c.a_zero && s.a != 0) continue;
    if (c.b_zero && s.b != 0) continue;
    if (c.c_zero && s.c != 0) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace lrn
