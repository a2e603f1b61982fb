#pragma once

#include <functional>

#include "ladderlab/errors.hpp"

namespace ladderlab::numerics {

using Fn = std::function<double(double)>;

// Adaptive Gauss7/Kronrod15 with absolute-error target tol. Initial panels
// are capped at an eighth of the local oscillation wavelength 2pi/ln(b/2pi)
// so every zeta oscillation is resolved before refinement starts.
// Throws NoConvergence past the depth cap, OutOfRange if a > b.
double integrate_adaptive(const Fn& fn, double a, double b, double tol);

// Leftmost x in (a, b) with |fn(x) - target| <= tol*(1+|target|), found by a
// sign-change scan at step oscillation-scale/8 followed by bisection. A
// whole-interval plateau (fn == target everywhere on the grid) returns the
// midpoint. The result is strictly interior. Throws TargetOutsideRange when
// the scan grid brackets no crossing.
double mean_value_point(const Fn& fn, double a, double b, double target,
                        double tol);

// Unique root of fn(x) = target for strictly increasing fn, by bisection to
// |fn(x) - target| <= 1e-12*(1+|target|). Throws NotBracketed unless
// fn(a) <= target <= fn(b).
double invert_increasing(const Fn& fn, double target, double a, double b);

namespace detail {
// Scan/panel step: (2pi / ln(b/2pi)) / 8, with the log clamped below at 1.
double oscillation_step(double b);
}  // namespace detail

}  // namespace ladderlab::numerics
