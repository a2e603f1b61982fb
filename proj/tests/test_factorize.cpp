#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ladderlab/factorize.hpp"
#include "ladderlab/numerics.hpp"
#include "oracle/oracle_data.hpp"

using namespace ladderlab;
using namespace ladderlab::factorize;

namespace {

constexpr double kPi = 3.14159265358979323846;

const ladder::LadderModel& model() {
  static const ladder::LadderModel m =
      ladder::LadderModel::build(200.0, 550.0, zeta::EvalConfig{4, 50.0});
  return m;
}

}  // namespace

TEST_CASE("closed-form means match the reference values") {
  CHECK(closed_form_mean(FunctionFamily::f1(), 100, 0.5) ==
        doctest::Approx(oracle::kMeanF1_L100_U05).epsilon(1e-12));
  CHECK(closed_form_mean(FunctionFamily::f2(), 100, 0.5) ==
        doctest::Approx(oracle::kMeanF2_L100_U05).epsilon(1e-12));
  CHECK(closed_form_mean(FunctionFamily::f3(), 100, 0.5) ==
        doctest::Approx(oracle::kMeanF3_L100_U05).epsilon(1e-12));
  CHECK(closed_form_mean(FunctionFamily::unit(), 123, 0.3) == 1.0);
  // power mean is U^delta/(1+delta), independent of L
  CHECK(closed_form_mean(FunctionFamily::power(2.0, kPi * 100), 100, 0.5) ==
        doctest::Approx(0.25 / 3.0).epsilon(1e-14));
  CHECK(closed_form_mean(FunctionFamily::power(0.5, kPi * 200), 200, 0.2) ==
        doctest::Approx(std::sqrt(0.2) / 1.5).epsilon(1e-14));
}

TEST_CASE("closed-form means agree with quadrature off the oracle grid") {
  const FunctionFamily fams[] = {FunctionFamily::f1(), FunctionFamily::f2(),
                                 FunctionFamily::f3(),
                                 FunctionFamily::power(1.5, kPi * 300)};
  for (const auto& fam : fams) {
    const double a = kPi * 300, u = 0.37;
    const double quad =
        numerics::integrate_adaptive([&](double t) { return fam(t); }, a,
                                     a + u, 1e-12) /
        u;
    CHECK(closed_form_mean(fam, 300, u) ==
          doctest::Approx(quad).epsilon(1e-11));
  }
}

TEST_CASE("trig means close exactly") {
  for (long long l : {100LL, 500LL}) {
    for (double u : {0.2, 0.5, 0.78}) {
      const double m1 = closed_form_mean(FunctionFamily::f1(), l, u);
      const double m2 = closed_form_mean(FunctionFamily::f2(), l, u);
      const double m3 = closed_form_mean(FunctionFamily::f3(), l, u);
      const double scale = std::abs(m2);
      CHECK(std::abs((m2 - m1) - m3) <= 1e-12 * scale);
      CHECK(std::abs((m1 + m2) - (kPi * l + u / 2.0)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("closed_form_mean validates U") {
  CHECK_THROWS_AS(closed_form_mean(FunctionFamily::f1(), 100, 0.0), BadU);
  CHECK_THROWS_AS(closed_form_mean(FunctionFamily::f1(), 100, 0.79), BadU);
}

TEST_CASE("iterated integrals anchor exactly at order zero") {
  const auto [j, k] =
      iterated_integrals(FunctionFamily::f1(), 100, 0.5, 0, model());
  REQUIRE(j.size() == 1);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == 0.5);
  CHECK(j[0] == 0.5 * closed_form_mean(FunctionFamily::f1(), 100, 0.5));
}

TEST_CASE("iterated integrals shrink with depth and transport") {
  const auto [j, k] =
      iterated_integrals(FunctionFamily::f2(), 100, 0.5, 3, model());
  REQUIRE(j.size() == 4);
  REQUIRE(k.size() == 4);
  for (int r = 1; r <= 3; ++r) {
    // z_tilde_sq > 1 on average here, so preimage segments are shorter.
    CHECK(k[r] > 0.0);
    CHECK(j[r] > 0.0);
  }
}

TEST_CASE("factorization certificate meets its residual budget") {
  for (const auto& fam :
       {FunctionFamily::f1(), FunctionFamily::f2(), FunctionFamily::f3(),
        FunctionFamily::power(0.5, kPi * 100),
        FunctionFamily::power(2.0, kPi * 100)}) {
    const auto cert = factorize::factorize(fam, 100, 0.5, 2, model());
    CHECK(cert.residual <= 1e-7);
    CHECK(cert.alphas.size() == 2);
    CHECK(cert.betas.size() == 2);
    CHECK(cert.j_integrals.size() == 3);
    CHECK(cert.k_lengths.size() == 3);
  }
}

TEST_CASE("certificate points are strictly interior to their components") {
  const auto cert = factorize::factorize(FunctionFamily::f1(), 100, 0.5, 3, model());
  const auto set = model().disconnected_set(100, 0.5, 3);
  CHECK(cert.alpha0 > set.components[0].left_r);
  CHECK(cert.alpha0 < set.components[0].right_r);
  for (int r = 1; r <= 3; ++r) {
    CHECK(cert.alphas[r - 1] > set.components[r].left_r);
    CHECK(cert.alphas[r - 1] < set.components[r].right_r);
    CHECK(cert.betas[r - 1] > set.components[r].left_r);
    CHECK(cert.betas[r - 1] < set.components[r].right_r);
  }
}

TEST_CASE("verify_certificate recomputes the stored residual") {
  const auto cert = factorize::factorize(FunctionFamily::f3(), 100, 0.2, 1, model());
  CHECK(verify_certificate(cert, model()) == cert.residual);
}

TEST_CASE("unit family collapses to a trivial certificate") {
  const auto cert = factorize::factorize(FunctionFamily::unit(), 100, 0.5, 2, model());
  // J and K coincide, so both mean-value problems are identical.
  for (int r = 0; r < 2; ++r) CHECK(cert.alphas[r] == cert.betas[r]);
  CHECK(cert.residual <= 1e-12);
  // alpha0 of a constant family sits at the base midpoint.
  CHECK(cert.alpha0 == doctest::Approx(kPi * 100 + 0.25).epsilon(1e-12));
}

TEST_CASE("beta points do not depend on the family") {
  const auto c1 = factorize::factorize(FunctionFamily::f1(), 100, 0.5, 3, model());
  const auto c2 = factorize::factorize(FunctionFamily::f2(), 100, 0.5, 3, model());
  const auto c3 = factorize::factorize(FunctionFamily::f3(), 100, 0.5, 3, model());
  for (int r = 0; r < 3; ++r) {
    CHECK(c1.betas[r] == c2.betas[r]);
    CHECK(c1.betas[r] == c3.betas[r]);
  }
}

TEST_CASE("tampering with a mean-value point is detected") {
  auto cert = factorize::factorize(FunctionFamily::f1(), 100, 0.5, 2, model());
  cert.alphas[0] += 0.05;
  CHECK(verify_certificate(cert, model()) > 1e-3);
}

TEST_CASE("factorize validates inputs") {
  CHECK_THROWS_AS(factorize::factorize(FunctionFamily::f1(), 100, 0.9, 1, model()),
                  BadU);
  CHECK_THROWS_AS(factorize::factorize(FunctionFamily::f1(), 100, 0.5, 0, model()),
                  OutOfRange);
  CHECK_THROWS_AS(factorize::factorize(FunctionFamily::f1(), 10, 0.5, 1, model()),
                  OutOfRange);
}

TEST_CASE("family evaluation and names") {
  const double t = 1.234;
  CHECK(FunctionFamily::f1()(t) == t * std::sin(t) * std::sin(t));
  CHECK(FunctionFamily::f2()(t) == t * std::cos(t) * std::cos(t));
  CHECK(FunctionFamily::f3()(t) == t * std::cos(2.0 * t));
  CHECK(FunctionFamily::unit()(t) == 1.0);
  CHECK(FunctionFamily::power(2.0, 1.0)(3.0) == 4.0);
  CHECK(std::string(FunctionFamily::f1().name()) == "f1");
  CHECK(std::string(FunctionFamily::power(2.0, 0.0).name()) == "power");
}
