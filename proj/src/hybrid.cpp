#include "ladderlab/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "ladderlab/errors.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/zeta.hpp"

namespace ladderlab::hybrid {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_trig_triple(const FactorizationCertificate& c1,
                         const FactorizationCertificate& c2,
                         const FactorizationCertificate& c3) {
  if (c1.family.id != factorize::FamilyId::f1 ||
      c2.family.id != factorize::FamilyId::f2 ||
      c3.family.id != factorize::FamilyId::f3)
    throw MismatchedParams("expected certificates for f1, f2, f3 in order");
  if (c1.l != c2.l || c1.l != c3.l || c1.u != c2.u || c1.u != c3.u)
    throw MismatchedParams("certificates disagree on (L, U)");
}

void fill_common(HybridReport& rep, const FactorizationCertificate& c1,
                 const FactorizationCertificate& c2,
                 const FactorizationCertificate& c3) {
  rep.l = c1.l;
  rep.u = c1.u;
  rep.ks = {c1.k, c2.k, c3.k};
}

void finish_exact(HybridReport& rep, double lhs, double rhs, double budget) {
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_residual = std::abs(lhs - rhs);
  rep.rel_residual =
      rep.abs_residual / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
  rep.deviation = 0.0;
  rep.tol_budget = budget;
  rep.passed = rep.rel_residual <= budget;
}

void finish_asymptotic(HybridReport& rep, double lhs, double rhs,
                       double budget) {
  if (std::abs(rhs) < 1e-12 * (1.0 + std::abs(lhs)))
    throw RhsNearZero("asymptotic right side too close to zero to compare");
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_residual = std::abs(lhs - rhs);
  rep.rel_residual =
      rep.abs_residual / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
  rep.deviation = std::abs(lhs / rhs - 1.0);
  rep.tol_budget = budget;
  rep.passed = rep.deviation <= budget;
}

// Weight prod_r ztilde^2(alpha_r)/ztilde^2(beta_r) recomputed from the model
// so reports never depend on what a caller left inside the certificate.
double weight_product(const FactorizationCertificate& c,
                      const LadderModel& model) {
  double prod = 1.0;
  for (int r = 0; r < c.k; ++r)
    prod *= model.z_tilde_sq(c.alphas[static_cast<std::size_t>(r)]) /
            model.z_tilde_sq(c.betas[static_cast<std::size_t>(r)]);
  return prod;
}

double sin_sq(double x) {
  const double s = std::sin(x);
  return s * s;
}

double cos_sq(double x) {
  const double c = std::cos(x);
  return c * c;
}

// One term of the raw-modulus asymptotic forms: |zeta|^2 over the alpha
// points divided by |zeta|^2 over the surviving beta points.
struct ModulusTerm {
  std::vector<double> num;
  std::vector<double> den;
};

double eval_modulus_term(const ModulusTerm& term, const LadderModel& model) {
  const auto& cfg = model.eval_config();
  double value = 1.0;
  for (double p : term.num) value *= zeta::zeta_mod_sq(p, cfg);
  for (double p : term.den) value /= zeta::zeta_mod_sq(p, cfg);
  return value;
}

// Drops the beta prefix shared by all three terms. Beta points are
// k-independent, so the three lists agree bitwise on their first
// min(k1,k2,k3) entries; anything else means the certificates came from
// different models or sets.
void cancel_shared_betas(std::array<ModulusTerm, 3>& terms) {
  std::size_t shared = std::min(
      {terms[0].den.size(), terms[1].den.size(), terms[2].den.size()});
  for (std::size_t r = 0; r < shared; ++r)
    if (terms[0].den[r] != terms[1].den[r] ||
        terms[0].den[r] != terms[2].den[r])
      throw MismatchedParams(
          "certificates disagree on shared beta points; they were not "
          "produced from one model and one set family");
  for (auto& term : terms)
    term.den.erase(term.den.begin(),
                   term.den.begin() + static_cast<std::ptrdiff_t>(shared));
}

HybridReport asymptotic_triple(const FactorizationCertificate& c1,
                               const FactorizationCertificate& c2,
                               const FactorizationCertificate& c3,
                               const LadderModel& model, double margin,
                               const std::string& id) {
  require_trig_triple(c1, c2, c3);
  std::array<ModulusTerm, 3> terms;
  const FactorizationCertificate* certs[3] = {&c1, &c2, &c3};
  for (int i = 0; i < 3; ++i) {
    terms[static_cast<std::size_t>(i)].num = certs[i]->alphas;
    terms[static_cast<std::size_t>(i)].den = certs[i]->betas;
  }
  cancel_shared_betas(terms);

  const double t1 = eval_modulus_term(terms[0], model);
  const double t2 = eval_modulus_term(terms[1], model);
  const double t3 = eval_modulus_term(terms[2], model);

  HybridReport rep;
  rep.formula_id = id;
  fill_common(rep, c1, c2, c3);
  const int kmax = std::max({c1.k, c2.k, c3.k});
  const double budget =
      margin * kmax * c1.u / (kPi * static_cast<double>(c1.l)) + 1e-6;
  finish_asymptotic(rep, t2 * cos_sq(c2.alpha0) - t1 * sin_sq(c1.alpha0),
                    t3 * std::cos(2.0 * c3.alpha0), budget);
  return rep;
}

void assert_inside(double point, const ladder::IteratedSegment& seg,
                   const char* what) {
  if (!(point > seg.left_r && point < seg.right_r))
    throw PointOutsideSet(std::string(what) +
                          " lies outside its disconnected-set component");
}

void assert_certificate_inside(const FactorizationCertificate& c,
                               const ladder::DisconnectedSet& set) {
  assert_inside(c.alpha0, set.components[0], "alpha0");
  for (int r = 1; r <= c.k; ++r) {
    const auto& comp = set.components[static_cast<std::size_t>(r)];
    assert_inside(c.alphas[static_cast<std::size_t>(r - 1)], comp, "alpha");
    assert_inside(c.betas[static_cast<std::size_t>(r - 1)], comp, "beta");
  }
}

struct PowerPair {
  FactorizationCertificate c4;
  FactorizationCertificate c5;
};

PowerPair build_power_pair(int k4, int k5, double delta4, double delta5,
                           long long l, double u, const LadderModel& model,
                           double mvp_tol) {
  if (!(delta4 > 0.0) || !(delta5 > 0.0))
    throw OutOfRange("power exponents must be positive");
  if (delta4 == delta5)
    throw EqualDeltas("power exponents must differ");
  const double anchor = kPi * static_cast<double>(l);
  PowerPair pair{
      factorize::factorize(factorize::FunctionFamily::power(delta4, anchor),
                           l, u, k4, model, mvp_tol),
      factorize::factorize(factorize::FunctionFamily::power(delta5, anchor),
                           l, u, k5, model, mvp_tol)};
  return pair;
}

double power_side(const FactorizationCertificate& c, double delta,
                  const LadderModel& model) {
  const double anchor = kPi * static_cast<double>(c.l);
  return std::pow(1.0 + delta, 1.0 / delta) * (c.alpha0 - anchor) *
         std::pow(weight_product(c, model), 1.0 / delta);
}

double alpha_product(const FactorizationCertificate& c,
                     const LadderModel& model) {
  double prod = 1.0;
  for (double a : c.alphas) prod *= model.z_tilde_sq(a);
  return prod;
}

// Shared core for the beta-elimination identity and its negative control.
// Certificates are always built at (delta4, delta5); d5_exp feeds only the
// exponent algebra so the control can disagree with the data on purpose.
double beta_product_formula(const PowerPair& pair, double delta4,
                            double d5_exp, long long l,
                            const LadderModel& model) {
  const double anchor = kPi * static_cast<double>(l);
  const double spread = d5_exp - delta4;
  if (spread == 0.0) throw EqualDeltas("exponent spread vanished");
  const double joint = d5_exp * delta4 / spread;
  const double bracket = std::pow(1.0 + delta4, 1.0 / delta4) /
                         std::pow(1.0 + d5_exp, 1.0 / d5_exp);
  const double ratio =
      (pair.c4.alpha0 - anchor) / (pair.c5.alpha0 - anchor);
  return std::pow(bracket, joint) * std::pow(ratio, joint) *
         std::pow(alpha_product(pair.c4, model), d5_exp / spread) *
         std::pow(alpha_product(pair.c5, model), -delta4 / spread);
}

double direct_beta_product(const FactorizationCertificate& c,
                           const LadderModel& model) {
  double prod = 1.0;
  for (double b : c.betas) prod *= model.z_tilde_sq(b);
  return prod;
}

// One corrected term of the secondary exact identity at order k: the plain
// ztilde^2 alpha-product of the trig certificate, re-weighted by the power
// pair built at the same k so the eliminated beta product drops out.
double corrected_term(const FactorizationCertificate& trig,
                      const PowerPair& pair, double delta4, double d5_exp,
                      long long l, const LadderModel& model) {
  const double anchor = kPi * static_cast<double>(l);
  const double spread = d5_exp - delta4;
  if (spread == 0.0) throw EqualDeltas("exponent spread vanished");
  const double joint = d5_exp * delta4 / spread;
  double prod = 1.0;
  for (int r = 0; r < trig.k; ++r) {
    const auto ri = static_cast<std::size_t>(r);
    prod *= model.z_tilde_sq(trig.alphas[ri]) *
            std::pow(model.z_tilde_sq(pair.c5.alphas[ri]), delta4 / spread) *
            std::pow(model.z_tilde_sq(pair.c4.alphas[ri]), -d5_exp / spread);
  }
  const double ratio =
      (pair.c4.alpha0 - anchor) / (pair.c5.alpha0 - anchor);
  return trig.alpha0 * prod / std::pow(ratio, joint);
}

HybridReport secondary_exact_core(int k1, int k2, int k3, double delta4,
                                  double delta5, double d5_exp, long long l,
                                  double u, const LadderModel& model,
                                  double budget, double mvp_tol,
                                  const std::string& id) {
  const auto c1 =
      factorize::factorize(factorize::FunctionFamily::f1(), l, u, k1, model,
                           mvp_tol);
  const auto c2 =
      factorize::factorize(factorize::FunctionFamily::f2(), l, u, k2, model,
                           mvp_tol);
  const auto c3 =
      factorize::factorize(factorize::FunctionFamily::f3(), l, u, k3, model,
                           mvp_tol);

  // One power pair per distinct order among k1, k2, k3.
  std::vector<int> orders = {k1, k2, k3};
  std::vector<PowerPair> pairs;
  std::vector<int> pair_order;
  for (int k : orders) {
    if (std::find(pair_order.begin(), pair_order.end(), k) !=
        pair_order.end())
      continue;
    pair_order.push_back(k);
    pairs.push_back(build_power_pair(k, k, delta4, delta5, l, u, model,
                                     mvp_tol));
  }
  auto pair_at = [&](int k) -> const PowerPair& {
    const auto it = std::find(pair_order.begin(), pair_order.end(), k);
    return pairs[static_cast<std::size_t>(it - pair_order.begin())];
  };

  const double t1 =
      corrected_term(c1, pair_at(k1), delta4, d5_exp, l, model);
  const double t2 =
      corrected_term(c2, pair_at(k2), delta4, d5_exp, l, model);
  const double t3 =
      corrected_term(c3, pair_at(k3), delta4, d5_exp, l, model);

  HybridReport rep;
  rep.formula_id = id;
  fill_common(rep, c1, c2, c3);
  rep.delta4 = delta4;
  rep.delta5 = delta5;
  finish_exact(rep, t2 * cos_sq(c2.alpha0) - t1 * sin_sq(c1.alpha0),
               t3 * std::cos(2.0 * c3.alpha0), budget);
  return rep;
}

}  // namespace

std::array<HybridReport, 2> check_exact_32_33(
    const FactorizationCertificate& c1, const FactorizationCertificate& c2,
    const FactorizationCertificate& c3, const LadderModel& model,
    double budget) {
  require_trig_triple(c1, c2, c3);
  const double p1 = weight_product(c1, model);
  const double p2 = weight_product(c2, model);
  const double p3 = weight_product(c3, model);
  const double pil = kPi * static_cast<double>(c1.l);
  const double term1 = c1.alpha0 * sin_sq(c1.alpha0) * p1;
  const double term2 = c2.alpha0 * cos_sq(c2.alpha0) * p2;
  const double term3 = c3.alpha0 * std::cos(2.0 * c3.alpha0) * p3;

  std::array<HybridReport, 2> out;
  out[0].formula_id = "X32";
  fill_common(out[0], c1, c2, c3);
  finish_exact(out[0], term1 + 0.5 * term3, 0.5 * (pil + c1.u / 2.0),
               budget);
  out[1].formula_id = "X33";
  fill_common(out[1], c1, c2, c3);
  finish_exact(out[1], term1 + term2, pil + c1.u / 2.0, budget);
  return out;
}

HybridReport check_exact_hybrid_35(const FactorizationCertificate& c1,
                                   const FactorizationCertificate& c2,
                                   const FactorizationCertificate& c3,
                                   const LadderModel& model, double budget) {
  require_trig_triple(c1, c2, c3);
  const int kmax = std::max({c1.k, c2.k, c3.k});
  const auto set = model.disconnected_set(c1.l, c1.u, kmax);
  assert_certificate_inside(c1, set);
  assert_certificate_inside(c2, set);
  assert_certificate_inside(c3, set);

  const double t1 = c1.alpha0 * sin_sq(c1.alpha0) * weight_product(c1, model);
  const double t2 = c2.alpha0 * cos_sq(c2.alpha0) * weight_product(c2, model);
  const double t3 =
      c3.alpha0 * std::cos(2.0 * c3.alpha0) * weight_product(c3, model);

  HybridReport rep;
  rep.formula_id = "T35";
  fill_common(rep, c1, c2, c3);
  finish_exact(rep, t2 - t1, t3, budget);
  return rep;
}

HybridReport check_asymptotic_41(const FactorizationCertificate& c1,
                                 const FactorizationCertificate& c2,
                                 const FactorizationCertificate& c3,
                                 const LadderModel& model, double margin) {
  return asymptotic_triple(c1, c2, c3, model, margin, "A41");
}

HybridReport check_secondary_43(const FactorizationCertificate& c1,
                                const FactorizationCertificate& c2,
                                const FactorizationCertificate& c3,
                                const LadderModel& model, double margin) {
  if (c1.k != c2.k || c1.k != c3.k)
    throw UnequalK("equal-k form requires one common iteration order");
  return asymptotic_triple(c1, c2, c3, model, margin,
                           c1.k == 1 ? "C18" : "A43");
}

HybridReport check_power_pair_51(long long l, double u, int k4, int k5,
                                 double delta4, double delta5,
                                 const LadderModel& model, double budget,
                                 double mvp_tol) {
  const auto pair =
      build_power_pair(k4, k5, delta4, delta5, l, u, model, mvp_tol);
  HybridReport rep;
  rep.formula_id = "P51";
  rep.l = l;
  rep.u = u;
  rep.ks = {k4, k5};
  rep.delta4 = delta4;
  rep.delta5 = delta5;
  finish_exact(rep, power_side(pair.c4, delta4, model),
               power_side(pair.c5, delta5, model), budget);
  return rep;
}

double compute_beta_product_52(int k, double delta4, double delta5,
                               long long l, double u,
                               const LadderModel& model, double mvp_tol) {
  const auto pair =
      build_power_pair(k, k, delta4, delta5, l, u, model, mvp_tol);
  return beta_product_formula(pair, delta4, delta5, l, model);
}

HybridReport check_beta_product_52(int k, double delta4, double delta5,
                                   long long l, double u,
                                   const LadderModel& model, double budget,
                                   double mvp_tol) {
  const auto pair =
      build_power_pair(k, k, delta4, delta5, l, u, model, mvp_tol);
  HybridReport rep;
  rep.formula_id = "B52";
  rep.l = l;
  rep.u = u;
  rep.ks = {k};
  rep.delta4 = delta4;
  rep.delta5 = delta5;
  finish_exact(rep, direct_beta_product(pair.c4, model),
               beta_product_formula(pair, delta4, delta5, l, model), budget);
  return rep;
}

HybridReport check_secondary_exact_53(int k1, int k2, int k3, double delta4,
                                      double delta5, long long l, double u,
                                      const LadderModel& model, double budget,
                                      double mvp_tol) {
  if (delta4 == delta5)
    throw EqualDeltas("power exponents must differ");
  return secondary_exact_core(k1, k2, k3, delta4, delta5, delta5, l, u,
                              model, budget, mvp_tol, "T53");
}

HybridReport negative_control_35_unit_weights(
    const FactorizationCertificate& c1, const FactorizationCertificate& c2,
    const FactorizationCertificate& c3, double budget) {
  require_trig_triple(c1, c2, c3);
  const double t1 = c1.alpha0 * sin_sq(c1.alpha0);
  const double t2 = c2.alpha0 * cos_sq(c2.alpha0);
  const double t3 = c3.alpha0 * std::cos(2.0 * c3.alpha0);
  HybridReport rep;
  rep.formula_id = "T35-control";
  fill_common(rep, c1, c2, c3);
  finish_exact(rep, t2 - t1, t3, budget);
  return rep;
}

HybridReport negative_control_53_perturbed_delta5(
    int k1, int k2, int k3, double delta4, double delta5, long long l,
    double u, const LadderModel& model, double budget, double mvp_tol) {
  if (delta4 == delta5)
    throw EqualDeltas("power exponents must differ");
  // With one common order the perturbed exponents corrupt all three terms
  // by the same factor and the identity survives; the control only has
  // teeth when the orders differ.
  if (k1 == k2 && k1 == k3)
    throw MismatchedParams(
        "perturbed-exponent control needs distinct iteration orders");
  return secondary_exact_core(k1, k2, k3, delta4, delta5, 1.1 * delta5, l, u,
                              model, budget, mvp_tol, "T53-control");
}

}  // namespace ladderlab::hybrid
