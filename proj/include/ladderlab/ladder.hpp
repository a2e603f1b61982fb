#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ladderlab/errors.hpp"
#include "ladderlab/primes.hpp"
#include "ladderlab/zeta.hpp"

namespace ladderlab::ladder {

inline constexpr double kEulerGamma =
    0.57721566490153286060651209008240243;
inline constexpr double kDefaultT0 = 200.0;

// Absolute residual at which phi1_inverse stops. Anything downstream that
// compares integrals over reverse-iterated segments inherits an endpoint
// slack of this size, scaled by the integrand there.
inline constexpr double kInverseTol = 1e-9;

// omega(t) = ln(t/2pi) + 1 + gamma. Positive on the whole working domain.
double omega(double t, double min_t = kDefaultT0);

// z_tilde_sq(t) = zeta_mod_sq(t) / omega(t).
double z_tilde_sq(double t, const zeta::EvalConfig& cfg = {},
                  double min_t = kDefaultT0);

struct Segment {
  double left;
  double right;
};

struct IteratedSegment {
  Segment base;
  int order;
  double left_r;
  double right_r;
  double length() const { return right_r - left_r; }
};

struct DisconnectedSet {
  double u;
  double pi_l;
  int k;
  std::vector<IteratedSegment> components;  // orders 0..k, left to right
};

// Separation between two iterated segments, b strictly to the right of a.
double rho_gap(const IteratedSegment& a, const IteratedSegment& b);

/*
 * The operational ladder: phi1(t) = t0 - offset + Phi(t) with
 * Phi(t) = integral of z_tilde_sq from t0 to t and offset =
 * (1-gamma)*prime_count(t0). Phi checkpoints are cached at spacing <= 1.0,
 * each panel integrated adaptively to 1e-11 absolute; queries add a local
 * quadrature from the nearest checkpoint. Inversion bisects the checkpoint
 * table, then bisects on the Phi-residual inside one panel (never a
 * derivative step: z_tilde_sq vanishes at zeta zeros). Construction is the
 * only mutating phase; a built model is read-only.
 */
class LadderModel {
 public:
  static LadderModel build(double t0, double t_max,
                           const zeta::EvalConfig& cfg = {});
  static LadderModel load(const std::string& path);
  void save(const std::string& path) const;

  double t0() const { return t0_; }
  double t_max() const { return t_max_; }
  double anchor_offset() const { return anchor_offset_; }
  const zeta::EvalConfig& eval_config() const { return cfg_; }
  std::size_t checkpoint_count() const { return ts_.size(); }

  double z_tilde_sq(double t) const;
  // Phi(t), the cumulative integral anchored at t0.
  double phi_integral(double t) const;
  double phi1(double t) const;
  // The unique t with |Phi(t) - (y - phi1(t0))| <= 1e-9; the contract is on
  // the Phi-residual, t itself is ill-conditioned near zeta zeros.
  double phi1_inverse(double y) const;

  IteratedSegment reverse_iterate_segment(const Segment& seg, int r) const;
  DisconnectedSet disconnected_set(long long l, double u, int k,
                                   long long l0 = 64) const;

 private:
  LadderModel() = default;

  double t0_ = 0.0;
  double t_max_ = 0.0;
  double anchor_offset_ = 0.0;
  zeta::EvalConfig cfg_;
  std::vector<double> ts_;
  std::vector<double> phis_;
};

}  // namespace ladderlab::ladder
