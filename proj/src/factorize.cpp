#include "ladderlab/factorize.hpp"

#include <cmath>

#include "ladderlab/numerics.hpp"

namespace ladderlab::factorize {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kJTol = 1e-9;
constexpr double kTransportTol = 1e-7;

double iterate_phi1(const ladder::LadderModel& model, double t, int times) {
  for (int i = 0; i < times; ++i) t = model.phi1(t);
  return t;
}

}  // namespace

double FunctionFamily::operator()(double t) const {
  switch (id) {
    case FamilyId::f1: {
      const double s = std::sin(t);
      return t * s * s;
    }
    case FamilyId::f2: {
      const double c = std::cos(t);
      return t * c * c;
    }
    case FamilyId::f3:
      return t * std::cos(2 * t);
    case FamilyId::unit:
      return 1.0;
    case FamilyId::power:
      return std::pow(t - anchor, delta);
  }
  return 0.0;
}

const char* FunctionFamily::name() const {
  switch (id) {
    case FamilyId::f1:
      return "f1";
    case FamilyId::f2:
      return "f2";
    case FamilyId::f3:
      return "f3";
    case FamilyId::unit:
      return "unit";
    case FamilyId::power:
      return "power";
  }
  return "?";
}

double closed_form_mean(const FunctionFamily& family, long long l, double u) {
  if (!(u > 0.0 && u < kPi / 4))
    throw BadU("closed_form_mean: U not in (0, pi/4)");
  const double pi_l = kPi * double(l);
  const double sin2u_over = std::sin(2 * u) / (2 * u);
  const double sinu = std::sin(u);
  const double sin_sq_over = sinu * sinu / u;
  switch (family.id) {
    case FamilyId::f1:
      return 0.25 * (2 * pi_l + u) - 0.5 * (pi_l + u) * sin2u_over +
             0.25 * sin_sq_over;
    case FamilyId::f2:
      return 0.25 * (2 * pi_l + u) + 0.5 * (pi_l + u) * sin2u_over -
             0.25 * sin_sq_over;
    case FamilyId::f3:
      return (pi_l + u) * sin2u_over - 0.5 * sin_sq_over;
    case FamilyId::unit:
      return 1.0;
    case FamilyId::power:
      return std::pow(u, family.delta) / (1.0 + family.delta);
  }
  return 0.0;
}

std::pair<std::vector<double>, std::vector<double>> iterated_integrals(
    const FunctionFamily& family, long long l, double u, int k,
    const ladder::LadderModel& model) {
  if (k < 0) throw OutOfRange("iterated_integrals: negative k");
  const double pi_l = kPi * double(l);
  const ladder::Segment base{pi_l, pi_l + u};

  std::vector<double> j(k + 1), kk(k + 1);
  j[0] = u * closed_form_mean(family, l, u);
  kk[0] = u;

  double prev_left = base.left, prev_right = base.right;
  for (int r = 1; r <= k; ++r) {
    const auto seg = model.reverse_iterate_segment(base, r);
    kk[r] = seg.length();
    const auto pushed = [&](double t) {
      return family(iterate_phi1(model, t, r));
    };
    const double tol = kJTol * std::max(1.0, std::abs(j[r - 1]));
    j[r] = numerics::integrate_adaptive(pushed, seg.left_r, seg.right_r, tol);
    const double transported = numerics::integrate_adaptive(
        [&](double t) { return pushed(t) * model.z_tilde_sq(t); }, seg.left_r,
        seg.right_r, tol);
    // The segment endpoints come out of phi1_inverse with an absolute
    // slack of kInverseTol, which enters the change-of-variables residual
    // multiplied by the integrand size on the image interval. Budget both
    // that and the quadrature tolerance; a genuine wiring defect overshoots
    // this by orders of magnitude.
    double fmax = 0.0;
    for (int i = 0; i <= 8; ++i) {
      const double x = prev_left + (prev_right - prev_left) * i / 8.0;
      fmax = std::max(fmax, std::abs(family(x)));
    }
    const double budget = kTransportTol * (1.0 + std::abs(j[r - 1])) +
                          4.0 * ladder::kInverseTol * fmax;
    if (std::abs(transported - j[r - 1]) > budget)
      throw TransportViolation(
          "iterated_integrals: change-of-variables identity violated");
    prev_left = seg.left_r;
    prev_right = seg.right_r;
  }
  return {j, kk};
}

FactorizationCertificate factorize(const FunctionFamily& family, long long l,
                                   double u, int k,
                                   const ladder::LadderModel& model,
                                   double mvp_tol) {
  if (k < 1) throw OutOfRange("factorize: k must be >= 1");
  const double mean = closed_form_mean(family, l, u);
  if (!(mean > 0.0)) throw ZeroDenominator("factorize: family mean not positive");

  const auto set = model.disconnected_set(l, u, k);
  const auto [j, kk] = iterated_integrals(family, l, u, k, model);

  FactorizationCertificate cert;
  cert.family = family;
  cert.l = l;
  cert.u = u;
  cert.k = k;
  cert.j_integrals = j;
  cert.k_lengths = kk;

  const auto zt = [&](double t) { return model.z_tilde_sq(t); };
  for (int r = 1; r <= k; ++r) {
    const auto& seg = set.components[r];
    cert.alphas.push_back(numerics::mean_value_point(
        zt, seg.left_r, seg.right_r, j[r - 1] / j[r], mvp_tol));
    cert.betas.push_back(numerics::mean_value_point(
        zt, seg.left_r, seg.right_r, kk[r - 1] / kk[r], mvp_tol));
  }
  const auto f = [&](double t) { return family(t); };
  cert.alpha0 = numerics::mean_value_point(f, set.components[0].left_r,
                                           set.components[0].right_r,
                                           j[k] / kk[k], mvp_tol);
  cert.residual = verify_certificate(cert, model);
  return cert;
}

double verify_certificate(const FactorizationCertificate& cert,
                          const ladder::LadderModel& model) {
  const double f0 = cert.family(cert.alpha0);
  if (!(f0 > 0.0))
    throw ZeroDenominator("verify_certificate: f(alpha0) not positive");
  double prod = 1.0;
  for (int r = 0; r < cert.k; ++r)
    prod *= model.z_tilde_sq(cert.alphas[r]) / model.z_tilde_sq(cert.betas[r]);
  const double rhs = closed_form_mean(cert.family, cert.l, cert.u) / f0;
  return std::abs(prod - rhs) / (1.0 + std::abs(rhs));
}

}  // namespace ladderlab::factorize
