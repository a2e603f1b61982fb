#pragma once

#include <utility>
#include <vector>

#include "ladderlab/ladder.hpp"

namespace ladderlab::factorize {

enum class FamilyId { f1, f2, f3, unit, power };

// The admissible integrand families on the base segment [piL, piL+U]:
// f1 = t sin^2 t, f2 = t cos^2 t, f3 = t cos 2t, unit = 1, and
// power = (t - anchor)^delta. All are continuous and nonnegative there for
// U in (0, pi/4), which is what the mean-value solves rely on.
struct FunctionFamily {
  FamilyId id = FamilyId::unit;
  double delta = 0.0;   // power only
  double anchor = 0.0;  // power only

  double operator()(double t) const;
  const char* name() const;

  static FunctionFamily f1() { return {FamilyId::f1}; }
  static FunctionFamily f2() { return {FamilyId::f2}; }
  static FunctionFamily f3() { return {FamilyId::f3}; }
  static FunctionFamily unit() { return {FamilyId::unit}; }
  static FunctionFamily power(double delta, double anchor) {
    return {FamilyId::power, delta, anchor};
  }
};

struct FactorizationCertificate {
  FunctionFamily family;
  long long l = 0;
  double u = 0.0;
  int k = 0;
  double alpha0 = 0.0;
  std::vector<double> alphas;       // alpha_1..alpha_k
  std::vector<double> betas;        // beta_1..beta_k
  std::vector<double> j_integrals;  // J_0..J_k
  std::vector<double> k_lengths;    // K_0..K_k
  double residual = 0.0;
};

// 1/U times the integral of the family over [piL, piL+U], in closed form.
double closed_form_mean(const FunctionFamily& family, long long l, double u);

// J_r = integral over the r-th iterated segment of f(phi1^r(t)) dt and
// K_r = its length; J_0 = U*mean and K_0 = U exactly. The change-of-variables
// transport J_{r-1} = integral of f(phi1^r(t)) z_tilde_sq(t) over the r-th
// segment is recomputed and asserted to 1e-7 relative at every level.
std::pair<std::vector<double>, std::vector<double>> iterated_integrals(
    const FunctionFamily& family, long long l, double u, int k,
    const ladder::LadderModel& model);

// Telescoping construction: alpha_r and beta_r are mean-value points of
// z_tilde_sq on the r-th iterated segment at targets J_{r-1}/J_r and
// K_{r-1}/K_r, alpha0 is a mean-value point of f on the base at J_k/K_k.
// The product identity prod z_tilde_sq(alpha_r)/z_tilde_sq(beta_r) =
// mean(f)/f(alpha0) then holds with residual <= 1e-7.
FactorizationCertificate factorize(const FunctionFamily& family, long long l,
                                   double u, int k,
                                   const ladder::LadderModel& model,
                                   double mvp_tol = 1e-9);

// Recomputes both sides of the certificate identity with fresh evaluator
// calls; returns |defect| / (1 + |mean/f(alpha0)|).
double verify_certificate(const FactorizationCertificate& cert,
                          const ladder::LadderModel& model);

}  // namespace ladderlab::factorize
