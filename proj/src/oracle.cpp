#include "lrn/oracle.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lrn {

VerifyResult verify_solution(const SolutionTuple& t) {
  if (t.x < 1) return {false, "x must be >= 1"};
  if (t.y < 1) return {false, "y must be >= 1"};
  if (t.a < 0 || t.b < 0 || t.c < 0 || t.m < 0) return {false, "negative exponent"};
  if (t.n < 3) return {false, "n must be >= 3"};
  if (!t.coprime_xy()) return {false, "gcd(x,y) > 1"};
  if (!t.satisfies_equation())
    return {false, "equation mismatch: x^2 + 5^a 13^b 17^c != 2^m y^n"};
  return {true, "ok"};
}

namespace {

struct DEntry {
  Int value;
  int a, b, c;
};

std::vector<DEntry> d_entries(const SearchBox& box) {
  std::vector<DEntry> out;
  for (int a = 0; a <= box.aMax; ++a)
    for (int b = 0; b <= box.bMax; ++b)
      for (int c = 0; c <= box.cMax; ++c)
        out.push_back({SExp{a, b, c}.value(), a, b, c});
  std::sort(out.begin(), out.end(),
            [](const DEntry& l, const DEntry& r) { return l.value < r.value; });
  return out;
}

// squares mod 64 land in 12 residue classes; everything else is rejected
// before the full square test.
std::array<bool, 64> squares_mod_64() {
  std::array<bool, 64> table{};
  for (int i = 0; i < 64; ++i) table[(i * i) & 63] = true;
  return table;
}

void validate(const SearchBox& box) {
  if (box.nSet.empty()) throw std::invalid_argument("SearchBox: nSet nonempty");
  for (int n : box.nSet)
    if (n < 3) throw std::invalid_argument("SearchBox: every n >= 3");
  if (box.aMax < 0 || box.bMax < 0 || box.cMax < 0 || box.mMax < 0 || box.yMax < 1)
    throw std::invalid_argument("SearchBox: bounds must be nonnegative");
}

}  // namespace

std::vector<SolutionTuple> brute_force_search(const SearchBox& box, int threads) {
  validate(box);
  static const std::array<bool, 64> kSq64 = squares_mod_64();
  const std::vector<DEntry> ds = d_entries(box);
  std::vector<int> ns = box.nSet;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::vector<SolutionTuple> out;
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  for (int n : ns) {
#pragma omp parallel
    {
      std::vector<SolutionTuple> local;
      Int yn, t, cand, x;
#pragma omp for schedule(dynamic, 512) nowait
      for (long y = 1; y <= box.yMax; ++y) {
        mpz_ui_pow_ui(yn.get_mpz_t(), y, n);
        for (int m = 0; m <= box.mMax; ++m) {
          t = yn << m;
          for (const DEntry& d : ds) {
            if (d.value >= t) break;  // entries are ascending
            cand = t - d.value;
            if (!kSq64[mpz_getlimbn(cand.get_mpz_t(), 0) & 63]) continue;
            if (!mpz_perfect_square_p(cand.get_mpz_t())) continue;
            mpz_sqrt(x.get_mpz_t(), cand.get_mpz_t());
            if (x < 1) continue;
            if (gcd(x, Int(y)) != 1) continue;
            if (y == 1 && n != 4) continue;  // y=1 family: canonical n is 4
            local.push_back(SolutionTuple{x, Int(y), d.a, d.b, d.c, m, n});
          }
        }
      }
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
  }
  std::sort(out.begin(), out.end());
  for (const SolutionTuple& s : out) assert(verify_solution(s).ok);
  return out;
}

std::vector<SolutionTuple> brute_force_search_serial(const SearchBox& box) {
  validate(box);
  std::vector<SolutionTuple> out;
  for (int n : box.nSet) {
    for (long y = 1; y <= box.yMax; ++y) {
      if (y == 1 && n != 4) continue;
      for (int m = 0; m <= box.mMax; ++m) {
        Int t = pow_int(Int(y), n) << m;
        for (int a = 0; a <= box.aMax; ++a)
          for (int b = 0; b <= box.bMax; ++b)
            for (int c = 0; c <= box.cMax; ++c) {
              Int cand = t - SExp{a, b, c}.value();
              if (cand < 1) continue;
              auto x = is_perfect_square(cand);
              if (!x || *x < 1) continue;
              if (gcd(*x, Int(y)) != 1) continue;
              out.push_back(SolutionTuple{*x, Int(y), a, b, c, m, n});
            }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TableReport full_table_reproduction(int threads) {
  TableReport report;
  SearchBox cubes;
  cubes.nSet = {3};
  cubes.yMax = 270000;
  report.found = brute_force_search(cubes, threads);
  SearchBox rest;
  rest.nSet = {4, 5, 6, 7, 8, 9, 10, 11, 12};
  rest.yMax = 5000;
  auto more = brute_force_search(rest, threads);
  report.found.insert(report.found.end(), more.begin(), more.end());
  std::sort(report.found.begin(), report.found.end());

  auto contains = [&](const SolutionTuple& s) {
    return std::binary_search(report.found.begin(), report.found.end(), s);
  };
  std::vector<SolutionTuple> printed;
  for (const PublishedRow& row : published_rows()) {
    printed.push_back(row.row);
    if (contains(row.row))
      report.matched.push_back(row);
    else
      report.printed_not_found.push_back(row);
  }
  std::sort(printed.begin(), printed.end());
  for (const SolutionTuple& s : report.found)
    if (!std::binary_search(printed.begin(), printed.end(), s))
      report.found_not_printed.push_back(s);
  return report;
}

}  // namespace lrn
