#include "lrn/fib_lucas.hpp"

#include "lrn/lehmer.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lrn {

Int fibonacci(unsigned long k) {
  Int r;
  mpz_fib_ui(r.get_mpz_t(), k);
  return r;
}

Int lucas(unsigned long k) {
  Int r;
  mpz_lucnum_ui(r.get_mpz_t(), k);
  return r;
}

std::vector<std::pair<unsigned long, Int>> cohn_classify(CohnKind kind,
                                                         unsigned long limit) {
  std::vector<std::pair<unsigned long, Int>> out;
  bool fib = kind == CohnKind::FibSquare || kind == CohnKind::FibTwiceSquare;
  bool twice = kind == CohnKind::FibTwiceSquare || kind == CohnKind::LucasTwiceSquare;
  for (unsigned long k = 0; k <= limit; ++k) {
    Int val = fib ? fibonacci(k) : lucas(k);
    if (twice) {
      if (mpz_odd_p(val.get_mpz_t())) continue;
      val >>= 1;
    }
    if (auto r = is_perfect_square(val)) out.emplace_back(k, *r);
  }
  return out;
}

namespace {

Int seq_value(FLFamily family, long idx) {
  assert(idx >= 0);
  return family == FLFamily::Fibonacci ? fibonacci(idx) : lucas(idx);
}

// n = d * v^2 with d squarefree.
void squarefree_kernel(const Int& n, long& d_out, Int& v_out) {
  Int m = n, v = 1;
  long d = 1;
  for (long p = 2; Int(p) * p <= m; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e % 2) d *= p;
    for (int i = 0; i < e / 2; ++i) v *= p;
  }
  if (m > 1) d *= m.get_si();
  d_out = d;
  v_out = v;
}

Int s_part(const Int& n) {
  Int rest = n, part = 1;
  for (long p : kSPrimes) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      part *= p;
    }
  }
  return part;
}

// Enumerates every parametrized pair with both parameters of the required
// 2^(2-m) shape; downstream filters decide rejection vs survival.
template <typename Visit>
void enumerate_p5_candidates(long kmax, Visit&& visit) {
  if (kmax < 3) throw std::invalid_argument("p5 analysis: kmax >= 3");
  for (FLFamily family : {FLFamily::Fibonacci, FLFamily::Lucas}) {
    for (long k = 0; k <= kmax; ++k) {
      if (family == FLFamily::Fibonacci && k < 3) continue;
      if (family == FLFamily::Lucas && k == 1) continue;
      for (int eps : {1, -1}) {
        long j = k - 2 * eps;
        if (j < 0) continue;  // negative indices duplicate |L_-k| = L_k
        Int first = seq_value(family, j);
        Int second = 4 * seq_value(family, k) - first;
        if (first < 1 || second < 1) continue;
        for (int m = 0; m <= 1; ++m) {
          long shift = 1L << (2 - m);
          if (!mpz_divisible_ui_p(first.get_mpz_t(), shift)) continue;
          auto u = is_perfect_square(first / shift);
          if (!u || *u < 1) continue;
          if (!mpz_divisible_ui_p(second.get_mpz_t(), shift)) continue;
          Int w = second / shift;  // v^2 d
          long d;
          Int v;
          squarefree_kernel(w, d, v);
          FLCandidate cand{family, k, eps, m, *u, v, d, first, second};
          visit(cand, w);
        }
      }
    }
  }
}

// Distinct (k, eps) nodes can carry the same parameter pair; analyze each
// pair once.
bool duplicate_key(std::vector<std::tuple<Int, Int, int>>& seen,
                   const FLCandidate& c) {
  std::tuple<Int, Int, int> key{c.first, c.second, c.m};
  for (auto& k : seen)
    if (k == key) return true;
  seen.push_back(key);
  return false;
}

}  // namespace

P5Analysis p5_case_analysis(long kmax) {
  P5Analysis out;
  std::vector<std::tuple<Int, Int, int>> seen;
  enumerate_p5_candidates(kmax, [&](const FLCandidate& cand, const Int& w) {
    if (duplicate_key(seen, cand)) return;
    // Classical constraints: u and vd both odd.
    if (mpz_even_p(cand.u.get_mpz_t())) {
      out.rejections.push_back({cand, "u must be odd"});
      return;
    }
    if (mpz_even_p(w.get_mpz_t())) {
      out.rejections.push_back({cand, "vd must be odd (v^2 d = " + w.get_str() + ")"});
      return;
    }
    bool admissible = false;
    for (long d : kAdmissibleD) admissible |= d == cand.d;
    if (!admissible) {
      out.rejections.push_back(
          {cand, "d = " + std::to_string(cand.d) + " not supported on {5,13,17}"});
      return;
    }
    if (!is_lehmer_pair(cand.u, cand.v, cand.d, cand.m)) {
      out.rejections.push_back({cand, "not a Lehmer pair"});
      return;
    }
    out.candidates.push_back(cand);
    P5FinalEquation eq;
    eq.candidate = cand;
    Int sv = s_part(cand.v);
    eq.d_value = cand.d * sv * sv;
    eq.y = (cand.u * cand.u + cand.d * cand.v * cand.v) >> cand.m;
    eq.rhs = pow_int(eq.y, 5) << cand.m;
    auto x = is_perfect_square(eq.rhs - eq.d_value);
    eq.has_integer_x = x.has_value() && *x >= 1;
    if (eq.has_integer_x) {
      eq.x = *x;
      out.any_solution = true;
    }
    out.final_equations.push_back(eq);
  });
  return out;
}

P5CorrectedAnalysis p5_case_analysis_corrected(long kmax) {
  P5CorrectedAnalysis out;
  std::vector<std::tuple<Int, Int, int>> seen;
  enumerate_p5_candidates(kmax, [&](const FLCandidate& cand, const Int& w) {
    if (duplicate_key(seen, cand)) return;
    (void)w;
    bool admissible = false;
    for (long d : kAdmissibleD) admissible |= d == cand.d;
    if (!admissible) {
      out.rejections.push_back(
          {cand, "d = " + std::to_string(cand.d) + " not supported on {5,13,17}"});
      return;
    }
    if (cand.m == 1 && mpz_even_p(cand.u.get_mpz_t())) {
      out.rejections.push_back({cand, "u even with m = 1"});
      return;
    }
    if (!is_lehmer_pair(cand.u, cand.v, cand.d, cand.m)) {
      out.rejections.push_back({cand, "not a Lehmer pair"});
      return;
    }
    LehmerInstance inst(cand.u, cand.v, cand.d, cand.m);
    Int l5 = lehmer_number(inst, 5);
    Int z = cand.v * abs(l5);
    auto zexp = s_exponents_of(z);
    if (!zexp) {
      out.rejections.push_back(
          {cand, "z = v |L_5| = " + z.get_str() + " not supported on {5,13,17}"});
      return;
    }
    auto [re, im] = complex_pow(cand.u, cand.v, cand.d, 5);
    Int den = pow2(2 * cand.m);
    if (!mpz_divisible_p(re.get_mpz_t(), den.get_mpz_t()))
      throw std::logic_error("p5 corrected: inexact real part");
    Int x = abs(re) / den;
    Int y = inst.norm();
    Int dv = cand.d * z * z;
    auto sexp = s_exponents_of(dv);
    if (!sexp) {
      out.rejections.push_back({cand, "d z^2 not supported on {5,13,17}"});
      return;
    }
    if (x < 1 || gcd(x, y) != 1 || y < 2) {
      out.rejections.push_back({cand, "back-substitution violates x,y constraints"});
      return;
    }
    SolutionTuple sol =
        make_solution(x, y, sexp->e5, sexp->e13, sexp->e17, cand.m, 5);
    out.solutions.push_back({cand, l5, z, sol});
  });
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const P5CorrectedFinding& a, const P5CorrectedFinding& b) {
              return a.solution < b.solution;
            });
  return out;
}

}  // namespace lrn
