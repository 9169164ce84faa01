// Reduction-curve families (quartic, exponent-7 cubic, Mordell), bounded
// S-rational point sweeps, and back-substitution of points into solutions.
#pragma once

#include "lrn/arith.hpp"
#include "lrn/solution.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace lrn {

// Rational with denominator supported on S = {5,13,17}, in lowest terms.
struct SRational {
  Int num;
  SExp den;

  static SRational reduced(Int numerator, SExp denominator);
  Int den_value() const { return den.value(); }
  bool is_integer() const { return den == SExp{}; }
  mpq_class to_mpq() const;

  auto key() const { return std::tuple(den.value(), num); }
  bool operator==(const SRational& o) const { return num == o.num && den == o.den; }
  bool operator<(const SRational& o) const { return key() < o.key(); }
};

struct CurvePoint {
  SRational X, Y;

  auto key() const { return std::tuple(Y.key(), X.key()); }
  bool operator==(const CurvePoint& o) const { return X == o.X && Y == o.Y; }
  bool operator<(const CurvePoint& o) const { return key() < o.key(); }
};

// X^2 = 2^m Y^4 - N with N = 5^a1 13^b1 17^c1, a1,b1,c1 in 0..3.
struct QuarticCurveSpec {
  int m = 0, a1 = 0, b1 = 0, c1 = 0;
  Int N;
};

// X^2 = Y^3 - A with A = 2^(2m) 5^a1 13^b1 17^c1, a1,b1,c1 in 0..5.
struct MordellCurveSpec {
  int m = 0, a1 = 0, b1 = 0, c1 = 0;
  Int A;
};

// V^2 = U^3 + c2 U^2 + c1 U + c0 with (c2,c1,c0) = (-35dD, 147d^2D^2, -49d^3D^3).
// One curve per (d, D); D = sign * 2^m * (prime part) per family.
enum class CubicFamily { VOne, V5Power, V17Power, V5x17Power };

struct CubicCurveSpec {
  CubicFamily family = CubicFamily::VOne;
  long d = 5;
  int m = 0;
  int sign = 1;
  int i = 0, j = 0, k = 0;  // exponents of 5, 13, 17 inside D where the family allows
  Int D;
  Int c2, c1, c0;
};

std::vector<QuarticCurveSpec> enumerate_quartic_curves();   // exactly 128
std::vector<MordellCurveSpec> enumerate_mordell_curves();   // exactly 432
std::vector<CubicCurveSpec> enumerate_p7_curves(CubicFamily family);  // 64/32/32/16

bool on_curve(const QuarticCurveSpec& curve, const CurvePoint& p);
bool on_curve(const MordellCurveSpec& curve, const CurvePoint& p);
bool on_curve(const CubicCurveSpec& curve, const CurvePoint& p);

// Bounded sweeps. Y = yNum / z^2 (Mordell) or yNum / z (quartic) with z
// ranging over 5^e5 13^e13 17^e17, e <= denomBound componentwise and
// 1 <= yNum <= numerBound coprime to z; X >= 0 is recovered exactly.
// Bounded-complete only: no completeness certificate beyond the bounds.
std::vector<CurvePoint> s_points_mordell(const MordellCurveSpec& curve,
                                         int denomBound, long numerBound);
std::vector<CurvePoint> s_points_quartic(const QuarticCurveSpec& curve,
                                         int denomBound, long numerBound);
// U = uNum / w, |uNum| <= numerBound, w supported on the family's prime
// subset with exponents <= 2*denomBound (U carries the square v^2).
std::vector<CurvePoint> s_points_cubic(const CubicCurveSpec& curve,
                                       int denomBound, long numerBound);

// OpenMP sweeps over whole families; results merged deterministically.
// threads <= 0 means the OpenMP default. Each hit pairs the curve index in
// the input vector with the point. The per-curve s_points_* functions above
// are the serial reference the tests compare against.
template <typename CurveT>
struct SweepHit {
  std::size_t curve_index = 0;
  CurvePoint point;

  auto key() const { return std::tuple(curve_index, point.key()); }
  bool operator==(const SweepHit& o) const {
    return curve_index == o.curve_index && point == o.point;
  }
  bool operator<(const SweepHit& o) const { return key() < o.key(); }
};

std::vector<SweepHit<MordellCurveSpec>> sweep_mordell(
    const std::vector<MordellCurveSpec>& curves, int denomBound, long numerBound,
    int threads);
std::vector<SweepHit<QuarticCurveSpec>> sweep_quartic(
    const std::vector<QuarticCurveSpec>& curves, int denomBound, long numerBound,
    int threads);
std::vector<SweepHit<CubicCurveSpec>> sweep_cubic(
    const std::vector<CubicCurveSpec>& curves, int denomBound, long numerBound,
    int threads);

// Reconstructs (x, y, a, b, c, m, n=4t) from a quartic point. Requires
// XY != 0, coprime numerators, gcd(x,y)=1; for t > 1 the t=1 y-value must be
// a perfect t-th power. y = 1 is kept only at t = 1 (the canonical exponent
// for the y=1 family).
std::optional<SolutionTuple> backsubstitute_quartic(const CurvePoint& p,
                                                    const QuarticCurveSpec& curve,
                                                    int t);

// Reconstructs (x, y, a, b, c, m, 3) from a Mordell point; rejects XY = 0,
// non-coprime numerators of X/2^m and Y/2^m, y < 2, gcd(x,y) > 1.
std::optional<SolutionTuple> backsubstitute_mordell(const CurvePoint& p,
                                                    const MordellCurveSpec& curve);

// The exact curve/point a known solution must land on (used by the
// verification mode and the round-trip checks).
std::pair<QuarticCurveSpec, CurvePoint> quartic_embedding(const SolutionTuple& s);
std::pair<MordellCurveSpec, CurvePoint> mordell_embedding(const SolutionTuple& s);

}  // namespace lrn
