#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ladderlab/hybrid.hpp"
#include "ladderlab/zeta.hpp"

using namespace ladderlab;
using namespace ladderlab::factorize;
using namespace ladderlab::hybrid;

namespace {

constexpr double kPi = 3.14159265358979323846;

const ladder::LadderModel& model() {
  static const ladder::LadderModel m =
      ladder::LadderModel::build(200.0, 550.0, zeta::EvalConfig{4, 50.0});
  return m;
}

FactorizationCertificate cert(const FunctionFamily& fam, int k,
                              double u = 0.5) {
  return factorize::factorize(fam, 100, u, k, model());
}

}  // namespace

TEST_CASE("exact crossbred identities hold at equal orders") {
  const auto c1 = cert(FunctionFamily::f1(), 1);
  const auto c2 = cert(FunctionFamily::f2(), 1);
  const auto c3 = cert(FunctionFamily::f3(), 1);
  const auto pair = check_exact_32_33(c1, c2, c3, model());
  CHECK(pair[0].formula_id == "X32");
  CHECK(pair[1].formula_id == "X33");
  for (const auto& rep : pair) {
    CHECK(rep.rel_residual <= 1e-6);
    CHECK(rep.passed);
    CHECK(rep.l == 100);
    CHECK(rep.ks.size() == 3);
    // right sides carry the base height, so the scale is piL
    CHECK(rep.rhs > 150.0);
  }
}

TEST_CASE("complete hybrid identity holds at mixed orders") {
  const auto c1 = cert(FunctionFamily::f1(), 1);
  const auto c2 = cert(FunctionFamily::f2(), 2);
  const auto c3 = cert(FunctionFamily::f3(), 3);
  const auto rep = check_exact_hybrid_35(c1, c2, c3, model());
  CHECK(rep.formula_id == "T35");
  CHECK(rep.rel_residual <= 1e-6);
  CHECK(rep.passed);
  CHECK(rep.ks == std::vector<int>{1, 2, 3});
}

TEST_CASE("crossbred checks reject mismatched certificates") {
  const auto c1 = cert(FunctionFamily::f1(), 1);
  const auto c2 = cert(FunctionFamily::f2(), 1);
  const auto c3 = cert(FunctionFamily::f3(), 1);
  CHECK_THROWS_AS(check_exact_32_33(c2, c1, c3, model()), MismatchedParams);
  const auto c2_narrow = cert(FunctionFamily::f2(), 1, 0.2);
  CHECK_THROWS_AS(check_exact_hybrid_35(c1, c2_narrow, c3, model()),
                  MismatchedParams);
}

TEST_CASE("asymptotic form stays within its deviation budget") {
  const auto c1 = cert(FunctionFamily::f1(), 1);
  const auto c2 = cert(FunctionFamily::f2(), 2);
  const auto c3 = cert(FunctionFamily::f3(), 3);
  const auto rep = check_asymptotic_41(c1, c2, c3, model());
  CHECK(rep.formula_id == "A41");
  CHECK(rep.tol_budget ==
        doctest::Approx(5.0 * 3 * 0.5 / (kPi * 100) + 1e-6));
  CHECK(rep.deviation <= rep.tol_budget);
  CHECK(rep.passed);
}

TEST_CASE("equal-order secondary form is bit-identical to the general one") {
  const auto c1 = cert(FunctionFamily::f1(), 2);
  const auto c2 = cert(FunctionFamily::f2(), 2);
  const auto c3 = cert(FunctionFamily::f3(), 2);
  const auto general = check_asymptotic_41(c1, c2, c3, model());
  const auto reduced = check_secondary_43(c1, c2, c3, model());
  CHECK(reduced.formula_id == "A43");
  CHECK(general.lhs == reduced.lhs);
  CHECK(general.rhs == reduced.rhs);
  CHECK(general.deviation == reduced.deviation);

  // The shared beta prefix cancels, so the terms are pure alpha products.
  const auto& cfg = model().eval_config();
  double direct = 1.0;
  for (double a : c3.alphas) direct *= zeta::zeta_mod_sq(a, cfg);
  CHECK(reduced.rhs == direct * std::cos(2.0 * c3.alpha0));
}

TEST_CASE("first-order secondary form reports as C18") {
  const auto c1 = cert(FunctionFamily::f1(), 1);
  const auto c2 = cert(FunctionFamily::f2(), 1);
  const auto c3 = cert(FunctionFamily::f3(), 1);
  const auto rep = check_secondary_43(c1, c2, c3, model());
  CHECK(rep.formula_id == "C18");
  CHECK(rep.passed);
}

TEST_CASE("secondary form requires one common order") {
  const auto c1 = cert(FunctionFamily::f1(), 1);
  const auto c2 = cert(FunctionFamily::f2(), 2);
  const auto c3 = cert(FunctionFamily::f3(), 2);
  CHECK_THROWS_AS(check_secondary_43(c1, c2, c3, model()), UnequalK);
}

TEST_CASE("power-pair identity pins both sides to U") {
  const auto rep =
      check_power_pair_51(100, 0.5, 1, 2, 0.5, 2.0, model());
  CHECK(rep.formula_id == "P51");
  CHECK(std::abs(rep.lhs - 0.5) <= 1e-6 * 0.5);
  CHECK(std::abs(rep.rhs - 0.5) <= 1e-6 * 0.5);
  CHECK(rep.passed);
  CHECK_THROWS_AS(check_power_pair_51(100, 0.5, 1, 1, 2.0, 2.0, model()),
                  EqualDeltas);
}

TEST_CASE("beta-product elimination matches the direct product") {
  for (int k : {1, 2}) {
    const auto rep = check_beta_product_52(k, 1.0, 3.0, 100, 0.5, model());
    CHECK(rep.formula_id == "B52");
    CHECK(rep.rel_residual <= 1e-5);
    CHECK(rep.passed);
  }
  // Swapping the two exponents leaves the identity intact.
  const auto swapped = check_beta_product_52(1, 3.0, 1.0, 100, 0.5, model());
  CHECK(swapped.rel_residual <= 1e-5);
}

TEST_CASE("secondary exact identity holds with eliminated beta products") {
  const auto mixed =
      check_secondary_exact_53(1, 2, 3, 0.5, 2.0, 100, 0.5, model());
  CHECK(mixed.formula_id == "T53");
  CHECK(mixed.rel_residual <= 1e-5);
  CHECK(mixed.passed);
  const auto equal =
      check_secondary_exact_53(2, 2, 2, 1.0, 3.0, 100, 0.5, model());
  CHECK(equal.rel_residual <= 1e-5);
  CHECK(equal.passed);
  CHECK_THROWS_AS(
      check_secondary_exact_53(1, 2, 3, 2.0, 2.0, 100, 0.5, model()),
      EqualDeltas);
}

TEST_CASE("unit-weight control breaks the hybrid identity loudly") {
  const auto c1 = cert(FunctionFamily::f1(), 1);
  const auto c2 = cert(FunctionFamily::f2(), 2);
  const auto c3 = cert(FunctionFamily::f3(), 3);
  const auto rep = negative_control_35_unit_weights(c1, c2, c3);
  CHECK(rep.formula_id == "T35-control");
  CHECK_FALSE(rep.passed);
  CHECK(rep.rel_residual > 1e-5);  // 10x the exact budget
}

TEST_CASE("perturbed-exponent control breaks the secondary identity loudly") {
  const auto rep = negative_control_53_perturbed_delta5(
      1, 2, 3, 0.5, 2.0, 100, 0.5, model());
  CHECK(rep.formula_id == "T53-control");
  CHECK_FALSE(rep.passed);
  CHECK(rep.rel_residual > 1e-4);  // 10x the secondary budget
  // Equal orders would let the perturbation cancel; that call is refused.
  CHECK_THROWS_AS(negative_control_53_perturbed_delta5(2, 2, 2, 0.5, 2.0,
                                                       100, 0.5, model()),
                  MismatchedParams);
}
