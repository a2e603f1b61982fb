#pragma once

#include "ladderlab/errors.hpp"

namespace ladderlab::zeta {

struct EvalConfig {
  int correction_order = 2;  // Riemann-Siegel remainder terms C0..C_order
  double min_height = 50.0;  // evaluation below this t is refused
};

// Throws BadConfig unless correction_order is in 0..4 and min_height >= 10.
void validate(const EvalConfig& cfg);

// theta(t) = (t/2) ln(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3).
double riemann_siegel_theta(double t, const EvalConfig& cfg = {});

// Z(t) = 2 sum_{n<=N} n^{-1/2} cos(theta(t) - t ln n) + remainder,
// N = floor(sqrt(t/2pi)). Below detail::kLowHeightCutoff the truncated
// remainder series cannot reach the accuracy contract, so the same value is
// produced by a convergent Euler-Maclaurin summation instead (cheap there).
double hardy_z(double t, const EvalConfig& cfg = {});

// hardy_z(t)^2 == |zeta(1/2+it)|^2, bit-identical to squaring hardy_z.
double zeta_mod_sq(double t, const EvalConfig& cfg = {});

namespace detail {

inline constexpr double kLowHeightCutoff = 100.0;

// The pure Riemann-Siegel path, no low-height dispatch (exposed for tests).
double hardy_z_riemann_siegel(double t, int correction_order);

// The convergent low-height path (exposed for tests).
double hardy_z_euler_maclaurin(double t);

// theta asymptotic series with 0..4 of the 1/t correction terms.
double theta_series(double t, int terms);

// Correction term C_j at the fractional-part coordinate z = 2p - 1, p =
// sqrt(t/2pi) - N. Defined for z in (-1, 1); removable singularities at
// z = +-1/2 are handled by local series deflation.
double rs_correction(int j, double z);

}  // namespace detail

}  // namespace ladderlab::zeta
