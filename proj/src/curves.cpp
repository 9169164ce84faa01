#include "lrn/curves.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lrn {

SRational SRational::reduced(Int numerator, SExp denominator) {
  if (numerator == 0) return SRational{0, SExp{}};
  SRational r{std::move(numerator), denominator};
  int* exps[3] = {&r.den.e5, &r.den.e13, &r.den.e17};
  for (int idx = 0; idx < 3; ++idx) {
    while (*exps[idx] > 0 &&
           mpz_divisible_ui_p(r.num.get_mpz_t(), kSPrimes[idx])) {
      mpz_divexact_ui(r.num.get_mpz_t(), r.num.get_mpz_t(), kSPrimes[idx]);
      --*exps[idx];
    }
  }
  return r;
}

mpq_class SRational::to_mpq() const {
  mpq_class q(num, den.value());
  q.canonicalize();
  return q;
}

std::vector<QuarticCurveSpec> enumerate_quartic_curves() {
  std::vector<QuarticCurveSpec> out;
  for (int m = 0; m <= 1; ++m)
    for (int a1 = 0; a1 <= 3; ++a1)
      for (int b1 = 0; b1 <= 3; ++b1)
        for (int c1 = 0; c1 <= 3; ++c1)
          out.push_back({m, a1, b1, c1, SExp{a1, b1, c1}.value()});
  return out;
}

std::vector<MordellCurveSpec> enumerate_mordell_curves() {
  std::vector<MordellCurveSpec> out;
  for (int m = 0; m <= 1; ++m)
    for (int a1 = 0; a1 <= 5; ++a1)
      for (int b1 = 0; b1 <= 5; ++b1)
        for (int c1 = 0; c1 <= 5; ++c1)
          out.push_back({m, a1, b1, c1, SExp{a1, b1, c1}.value() << (2 * m)});
  return out;
}

namespace {

CubicCurveSpec make_cubic(CubicFamily family, long d, int m, int sign, int i,
                          int j, int k) {
  CubicCurveSpec spec;
  spec.family = family;
  spec.d = d;
  spec.m = m;
  spec.sign = sign;
  spec.i = i;
  spec.j = j;
  spec.k = k;
  spec.D = Int(sign) * pow2(m) * SExp{i, j, k}.value();
  spec.c2 = -35 * d * spec.D;
  spec.c1 = 147 * d * d * spec.D * spec.D;
  spec.c0 = -49 * d * d * d * spec.D * spec.D * spec.D;
  return spec;
}

}  // namespace

std::vector<CubicCurveSpec> enumerate_p7_curves(CubicFamily family) {
  std::vector<CubicCurveSpec> out;
  for (int m = 0; m <= 1; ++m) {
    for (long d : {5L, 85L}) {
      auto emit = [&](int i, int j, int k) {
        for (int sign : {1, -1}) out.push_back(make_cubic(family, d, m, sign, i, j, k));
      };
      switch (family) {
        case CubicFamily::VOne:  // D = eps 2^m 5^i 13^j 17^k
          for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 1; ++j)
              for (int k = 0; k <= 1; ++k) emit(i, j, k);
          break;
        case CubicFamily::V5Power:  // D = eps 2^m 13^j 17^k
          for (int j = 0; j <= 1; ++j)
            for (int k = 0; k <= 1; ++k) emit(0, j, k);
          break;
        case CubicFamily::V17Power:  // D = eps 2^m 5^i 13^j
          for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 1; ++j) emit(i, j, 0);
          break;
        case CubicFamily::V5x17Power:  // D = eps 2^m 13^j
          for (int j = 0; j <= 1; ++j) emit(0, j, 0);
          break;
      }
    }
  }
  return out;
}

bool on_curve(const QuarticCurveSpec& curve, const CurvePoint& p) {
  mpq_class X = p.X.to_mpq(), Y = p.Y.to_mpq();
  mpq_class Y2 = Y * Y;
  return X * X == Y2 * Y2 * pow2(curve.m) - curve.N;
}

bool on_curve(const MordellCurveSpec& curve, const CurvePoint& p) {
  mpq_class X = p.X.to_mpq(), Y = p.Y.to_mpq();
  return X * X == Y * Y * Y - curve.A;
}

bool on_curve(const CubicCurveSpec& curve, const CurvePoint& p) {
  mpq_class U = p.X.to_mpq(), V = p.Y.to_mpq();
  return V * V == U * U * U + curve.c2 * U * U + curve.c1 * U + curve.c0;
}

namespace {

std::vector<SExp> denominators_up_to(int bound, bool use5, bool use13, bool use17) {
  std::vector<SExp> out;
  for (int e5 = 0; e5 <= (use5 ? bound : 0); ++e5)
    for (int e13 = 0; e13 <= (use13 ? bound : 0); ++e13)
      for (int e17 = 0; e17 <= (use17 ? bound : 0); ++e17)
        out.push_back(SExp{e5, e13, e17});
  return out;
}

bool coprime_to_denominator(const Int& num, const SExp& z) {
  if (z.e5 > 0 && mpz_divisible_ui_p(num.get_mpz_t(), 5)) return false;
  if (z.e13 > 0 && mpz_divisible_ui_p(num.get_mpz_t(), 13)) return false;
  if (z.e17 > 0 && mpz_divisible_ui_p(num.get_mpz_t(), 17)) return false;
  return true;
}

}  // namespace

std::vector<CurvePoint> s_points_mordell(const MordellCurveSpec& curve,
                                         int denomBound, long numerBound) {
  std::vector<CurvePoint> out;
  for (const SExp& ze : denominators_up_to(denomBound, true, true, true)) {
    Int z = ze.value();
    Int az6 = curve.A * pow_int(z, 6);
    // smallest yNum with yNum^3 >= A z^6
    Int start;
    mpz_root(start.get_mpz_t(), az6.get_mpz_t(), 3);
    if (start < 1) start = 1;
    Int yn;
    for (Int y = start; y <= numerBound; ++y) {
      if (!coprime_to_denominator(y, ze)) continue;
      yn = y * y * y - az6;
      if (yn < 0) continue;
      auto r = is_perfect_square(yn);
      if (!r) continue;
      CurvePoint p;
      p.X = SRational::reduced(*r, SExp{3 * ze.e5, 3 * ze.e13, 3 * ze.e17});
      p.Y = SRational::reduced(y, SExp{2 * ze.e5, 2 * ze.e13, 2 * ze.e17});
      assert(on_curve(curve, p));
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurvePoint> s_points_quartic(const QuarticCurveSpec& curve,
                                         int denomBound, long numerBound) {
  std::vector<CurvePoint> out;
  for (const SExp& ze : denominators_up_to(denomBound, true, true, true)) {
    Int z = ze.value();
    Int nz4 = curve.N * pow_int(z, 4);
    Int start;
    mpz_root(start.get_mpz_t(), Int(nz4 >> curve.m).get_mpz_t(), 4);
    if (start < 1) start = 1;
    Int y4;
    for (Int y = start; y <= numerBound; ++y) {
      if (!coprime_to_denominator(y, ze)) continue;
      y4 = y * y;
      y4 *= y4;
      Int cand = (y4 << curve.m) - nz4;
      if (cand < 0) continue;
      auto r = is_perfect_square(cand);
      if (!r) continue;
      CurvePoint p;
      p.X = SRational::reduced(*r, SExp{2 * ze.e5, 2 * ze.e13, 2 * ze.e17});
      p.Y = SRational::reduced(y, ze);
      assert(on_curve(curve, p));
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurvePoint> s_points_cubic(const CubicCurveSpec& curve,
                                       int denomBound, long numerBound) {
  bool use5 = curve.family == CubicFamily::V5Power ||
              curve.family == CubicFamily::V5x17Power;
  bool use17 = curve.family == CubicFamily::V17Power ||
               curve.family == CubicFamily::V5x17Power;
  std::vector<CurvePoint> out;
  // U's denominator is v^2, so exponents run to twice the v bound.
  for (const SExp& we : denominators_up_to(2 * denomBound, use5, false, use17)) {
    Int w = we.value();
    Int c2w = curve.c2 * w;
    Int c1w2 = curve.c1 * w * w;
    Int c0w3 = curve.c0 * w * w * w;
    for (Int u = -numerBound; u <= numerBound; ++u) {
      if (w > 1 && !coprime_to_denominator(u, we)) continue;
      // P*w = (V w^2)^2 where P = u^3 + c2 w u^2 + c1 w^2 u + c0 w^3
      Int t = u + c2w;
      t *= u;
      t += c1w2;
      t *= u;
      t += c0w3;
      t *= w;
      if (t < 0) continue;
      auto r = is_perfect_square(t);
      if (!r) continue;
      CurvePoint p;
      p.X = SRational::reduced(u, we);
      p.Y = SRational::reduced(*r, SExp{2 * we.e5, 2 * we.e13, 2 * we.e17});
      assert(on_curve(curve, p));
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <typename CurveT, typename Kernel>
std::vector<SweepHit<CurveT>> run_sweep(const std::vector<CurveT>& curves,
                                        int threads, Kernel&& kernel) {
  std::vector<std::vector<CurvePoint>> per_curve(curves.size());
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < curves.size(); ++i) per_curve[i] = kernel(curves[i]);
  std::vector<SweepHit<CurveT>> hits;
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (auto& p : per_curve[i]) hits.push_back({i, std::move(p)});
  return hits;  // per-curve order is already deterministic
}

}  // namespace

std::vector<SweepHit<MordellCurveSpec>> sweep_mordell(
    const std::vector<MordellCurveSpec>& curves, int denomBound, long numerBound,
    int threads) {
  return run_sweep(curves, threads, [&](const MordellCurveSpec& c) {
    return s_points_mordell(c, denomBound, numerBound);
  });
}

std::vector<SweepHit<QuarticCurveSpec>> sweep_quartic(
    const std::vector<QuarticCurveSpec>& curves, int denomBound, long numerBound,
    int threads) {
  return run_sweep(curves, threads, [&](const QuarticCurveSpec& c) {
    return s_points_quartic(c, denomBound, numerBound);
  });
}

std::vector<SweepHit<CubicCurveSpec>> sweep_cubic(
    const std::vector<CubicCurveSpec>& curves, int denomBound, long numerBound,
    int threads) {
  return run_sweep(curves, threads, [&](const CubicCurveSpec& c) {
    return s_points_cubic(c, denomBound, numerBound);
  });
}

namespace {

int ceil_div(int value, int q) { return (value + q - 1) / q; }

// z = smallest S-number clearing both denominators (larger z only rescales
// x and y by a common factor, which the gcd filter rejects).
SExp minimal_z(const SExp& xden, int xpow, const SExp& yden, int ypow) {
  SExp z;
  z.e5 = std::max(ceil_div(xden.e5, xpow), ceil_div(yden.e5, ypow));
  z.e13 = std::max(ceil_div(xden.e13, xpow), ceil_div(yden.e13, ypow));
  z.e17 = std::max(ceil_div(xden.e17, xpow), ceil_div(yden.e17, ypow));
  return z;
}

// numerator * (z^pow / den), exact by choice of z.
Int scale_to_integer(const Int& numerator, const SExp& den, const SExp& z, int pow) {
  SExp rest{pow * z.e5 - den.e5, pow * z.e13 - den.e13, pow * z.e17 - den.e17};
  assert(rest.e5 >= 0 && rest.e13 >= 0 && rest.e17 >= 0);
  return numerator * rest.value();
}

}  // namespace

std::optional<SolutionTuple> backsubstitute_quartic(const CurvePoint& p,
                                                    const QuarticCurveSpec& curve,
                                                    int t) {
  if (t < 1) throw std::invalid_argument("backsubstitute_quartic: t >= 1");
  if (p.X.num == 0 || p.Y.num == 0) return std::nullopt;  // xy = 0
  if (p.Y.num < 0) return std::nullopt;
  if (gcd(p.X.num, p.Y.num) != 1) return std::nullopt;  // numerators coprime
  SExp z = minimal_z(p.X.den, 2, p.Y.den, 1);
  Int x = scale_to_integer(abs(p.X.num), p.X.den, z, 2);
  Int w = scale_to_integer(p.Y.num, p.Y.den, z, 1);  // y^t
  Int y;
  if (t == 1) {
    y = w;
  } else {
    auto root = is_perfect_power(w, t);
    if (!root) return std::nullopt;
    y = *root;
    if (y == 1) return std::nullopt;  // y=1 family reported at n=4 only
  }
  if (x < 1 || y < 1) return std::nullopt;
  if (gcd(x, y) != 1) return std::nullopt;
  int a = curve.a1 + 4 * z.e5, b = curve.b1 + 4 * z.e13, c = curve.c1 + 4 * z.e17;
  if (gcd(x, SExp{a, b, c}.value()) != 1) return std::nullopt;
  SolutionTuple s{std::move(x), std::move(y), a, b, c, curve.m, 4 * t};
  if (!s.satisfies_equation()) return std::nullopt;
  return s;
}

std::optional<SolutionTuple> backsubstitute_mordell(const CurvePoint& p,
                                                    const MordellCurveSpec& curve) {
  if (p.X.num == 0 || p.Y.num == 0) return std::nullopt;  // xy = 0
  if (p.Y.num < 0) return std::nullopt;
  // numerators of X/2^m and Y/2^m must be coprime
  mpq_class half_m(Int(1), pow2(curve.m));
  mpq_class qx = p.X.to_mpq() * half_m;
  mpq_class qy = p.Y.to_mpq() * half_m;
  qx.canonicalize();
  qy.canonicalize();
  if (gcd(Int(qx.get_num()), Int(qy.get_num())) != 1) return std::nullopt;
  SExp z = minimal_z(p.X.den, 3, p.Y.den, 2);
  Int x2m = scale_to_integer(abs(p.X.num), p.X.den, z, 3);
  Int y2m = scale_to_integer(p.Y.num, p.Y.den, z, 2);
  if (curve.m == 1) {
    if (mpz_odd_p(x2m.get_mpz_t()) || mpz_odd_p(y2m.get_mpz_t()))
      return std::nullopt;
    x2m >>= 1;
    y2m >>= 1;
  }
  if (x2m < 1 || y2m < 2) return std::nullopt;  // y > 1 in the prime-exponent case
  if (gcd(x2m, y2m) != 1) return std::nullopt;
  int a = curve.a1 + 6 * z.e5, b = curve.b1 + 6 * z.e13, c = curve.c1 + 6 * z.e17;
  if (gcd(x2m, SExp{a, b, c}.value()) != 1) return std::nullopt;
  SolutionTuple s{std::move(x2m), std::move(y2m), a, b, c, curve.m, 3};
  if (!s.satisfies_equation()) return std::nullopt;
  return s;
}

std::pair<QuarticCurveSpec, CurvePoint> quartic_embedding(const SolutionTuple& s) {
  if (s.n % 4 != 0) throw std::invalid_argument("quartic_embedding: 4 | n required");
  int t = s.n / 4;
  QuarticCurveSpec curve{s.m, s.a % 4, s.b % 4, s.c % 4,
                         SExp{s.a % 4, s.b % 4, s.c % 4}.value()};
  SExp z{(s.a - curve.a1) / 4, (s.b - curve.b1) / 4, (s.c - curve.c1) / 4};
  CurvePoint p;
  p.X = SRational::reduced(s.x, SExp{2 * z.e5, 2 * z.e13, 2 * z.e17});
  p.Y = SRational::reduced(pow_int(s.y, t), z);
  return {curve, p};
}

std::pair<MordellCurveSpec, CurvePoint> mordell_embedding(const SolutionTuple& s) {
  if (s.n != 3) throw std::invalid_argument("mordell_embedding: n = 3 required");
  MordellCurveSpec curve{s.m, s.a % 6, s.b % 6, s.c % 6,
                         SExp{s.a % 6, s.b % 6, s.c % 6}.value() << (2 * s.m)};
  SExp z{s.a / 6, s.b / 6, s.c / 6};
  CurvePoint p;
  p.X = SRational::reduced(s.x << s.m, SExp{3 * z.e5, 3 * z.e13, 3 * z.e17});
  p.Y = SRational::reduced(s.y << s.m, SExp{2 * z.e5, 2 * z.e13, 2 * z.e17});
  return {curve, p};
}

}  // namespace lrn
