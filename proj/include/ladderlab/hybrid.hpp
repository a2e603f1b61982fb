#pragma once

#include <array>
#include <string>
#include <vector>

#include "ladderlab/factorize.hpp"

namespace ladderlab::hybrid {

using factorize::FactorizationCertificate;
using ladder::LadderModel;

struct HybridReport {
  std::string formula_id;
  long long l = 0;
  double u = 0.0;
  std::vector<int> ks;
  double delta4 = 0.0;
  double delta5 = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;                     // |lhs - rhs|
  double rel_residual = 0.0;                     // |lhs-rhs|/(1+max(|lhs|,|rhs|))
  double deviation = 0.0;                        // |lhs/rhs - 1|, asymptotic ids
  double tol_budget = 0.0;
  bool passed = false;
};

// Exact crossbred identities: the f1 certificate combined with f3 against
// (1/2)(piL + U/2), and the f1+f2 pair against piL + U/2.
std::array<HybridReport, 2> check_exact_32_33(
    const FactorizationCertificate& c1, const FactorizationCertificate& c2,
    const FactorizationCertificate& c3, const LadderModel& model,
    double budget = 1e-6);

// Complete hybrid identity: {a2 prod2} cos^2 a2 - {a1 prod1} sin^2 a1 =
// {a3 prod3} cos 2a3, with every certificate point asserted to lie inside
// the disconnected set of order max(k1,k2,k3).
HybridReport check_exact_hybrid_35(const FactorizationCertificate& c1,
                                   const FactorizationCertificate& c2,
                                   const FactorizationCertificate& c3,
                                   const LadderModel& model,
                                   double budget = 1e-6);

// Asymptotic form: raw |zeta|^2 ratios, normalizers and alpha0 prefactors
// dropped. Factors shared by all three terms (the common beta prefix) are
// cancelled before multiplication, so the equal-k case follows bit-identical
// arithmetic to check_secondary_43. Deviation budget margin*max(k)*U/(piL)
// plus 1e-6 absolute floor.
HybridReport check_asymptotic_41(const FactorizationCertificate& c1,
                                 const FactorizationCertificate& c2,
                                 const FactorizationCertificate& c3,
                                 const LadderModel& model,
                                 double margin = 5.0);

// Equal-k secondary form: beta products cancel entirely, leaving pure
// |zeta|^2 alpha-products. Reported as C18 when k = 1.
HybridReport check_secondary_43(const FactorizationCertificate& c1,
                                const FactorizationCertificate& c2,
                                const FactorizationCertificate& c3,
                                const LadderModel& model, double margin = 5.0);

// Power-pair identity: both sides evaluate to U.
HybridReport check_power_pair_51(long long l, double u, int k4, int k5,
                                 double delta4, double delta5,
                                 const LadderModel& model,
                                 double budget = 1e-6, double mvp_tol = 1e-9);

// Right side of the beta-product elimination identity, assembled from the
// two equal-k power certificates.
double compute_beta_product_52(int k, double delta4, double delta5,
                               long long l, double u, const LadderModel& model,
                               double mvp_tol = 1e-9);

// Direct beta product against compute_beta_product_52.
HybridReport check_beta_product_52(int k, double delta4, double delta5,
                                   long long l, double u,
                                   const LadderModel& model,
                                   double budget = 1e-5,
                                   double mvp_tol = 1e-9);

// Secondary exact identity: beta products eliminated through the power pair.
HybridReport check_secondary_exact_53(int k1, int k2, int k3, double delta4,
                                      double delta5, long long l, double u,
                                      const LadderModel& model,
                                      double budget = 1e-5,
                                      double mvp_tol = 1e-9);

// Negative controls. The first keeps the trigonometric certificates'
// alpha0 points but forces unit weights, which breaks the identity unless
// the three alpha0 coincide. The second recomputes the exponent algebra
// with delta5 scaled by 10 percent while the certificates keep the original
// delta5. Both are expected to blow far past their budgets.
HybridReport negative_control_35_unit_weights(
    const FactorizationCertificate& c1, const FactorizationCertificate& c2,
    const FactorizationCertificate& c3, double budget = 1e-6);
HybridReport negative_control_53_perturbed_delta5(
    int k1, int k2, int k3, double delta4, double delta5, long long l,
    double u, const LadderModel& model, double budget = 1e-5,
    double mvp_tol = 1e-9);

}  // namespace ladderlab::hybrid
