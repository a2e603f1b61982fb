#include "ladderlab/zeta.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "ladderlab/power_series.hpp"

namespace ladderlab::zeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

/*
 * psi(z) = cos(pi z^2/2 + 3pi/8) / cos(pi z), z in (-1, 1).
 * Fills d[0..12] with d^k psi/dz^k at z.
 *
 * Away from the removable singularities at z = +-1/2 this is a direct
 * series division. Near them, numerator and denominator are expanded
 * about the singular center where both reduce to explicit sine series
 * with a simple zero at the center; the zero is deflated from both
 * before dividing, and the quotient polynomial is recentered at z.
 */
void psi_derivs(double z, double d[13]) {
  using Series = ::ladderlab::detail::Series;
  const double d_plus = z - 0.5, d_minus = z + 0.5;
  const double s = std::abs(d_plus) < std::abs(d_minus) ? 0.5 : -0.5;
  const double dz = z - s;

  if (std::abs(dz) < 0.125) {
    constexpr int n = 26;
    // center +1/2: num = -sin(pi w/2 + pi w^2/2), den = -sin(pi w)
    // center -1/2: num = -sin(-pi w/2 + pi w^2/2), den = +sin(pi w)
    Series a(n), b(n);
    a.at(1) = s > 0 ? kPi / 2 : -kPi / 2;
    a.at(2) = kPi / 2;
    b.at(1) = kPi;
    Series num = -1.0 * Series::sin_cos_of(a).first;
    Series den = (s > 0 ? -1.0 : 1.0) * Series::sin_cos_of(b).first;
    Series q = Series::divide(num.deflate(), den.deflate());
    Series at_z = q.shifted(dz);
    for (int k = 0; k < 13; ++k) d[k] = at_z.derivative(k);
    return;
  }

  constexpr int n = 13;
  Series a(n), b(n);
  a.at(0) = kPi * z * z / 2 + 3 * kPi / 8;
  a.at(1) = kPi * z;
  a.at(2) = kPi / 2;
  b.at(0) = kPi * z;
  b.at(1) = kPi;
  Series num = Series::sin_cos_of(a).second;
  Series den = Series::sin_cos_of(b).second;
  Series q = Series::divide(num, den);
  for (int k = 0; k < 13; ++k) d[k] = q.derivative(k);
}

void rs_corrections(double z, int order, double c[5]) {
  double d[13];
  psi_derivs(z, d);
  const double p2 = kPi * kPi;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  const double p8 = p4 * p4;
  c[0] = d[0];
  if (order >= 1) c[1] = -d[3] / (12 * p2);
  if (order >= 2) c[2] = d[2] / (16 * p2) + d[6] / (288 * p4);
  if (order >= 3)
    c[3] = -d[1] / (32 * p2) - d[5] / (120 * p4) - d[9] / (10368 * p6);
  if (order >= 4)
    c[4] = d[0] / (128 * p2) + 19 * d[4] / (1536 * p4) +
           11 * d[8] / (23040 * p6) + d[12] / (497664 * p8);
}

// n^{-1/2} and ln n for the main sum, precomputed once. 4096 entries cover
// t/2pi up to 4096^2, i.e. t beyond 10^8; larger n falls back to libm.
struct SumTables {
  std::vector<double> inv_sqrt, log;
  SumTables() {
    constexpr int n = 4096;
    inv_sqrt.resize(n + 1);
    log.resize(n + 1);
    for (int i = 1; i <= n; ++i) {
      inv_sqrt[i] = 1.0 / std::sqrt(double(i));
      log[i] = std::log(double(i));
    }
  }
};

const SumTables& tables() {
  static const SumTables t;
  return t;
}

constexpr int kBernoulliTerms = 12;

// B_{2k}/(2k)! for k = 1..12.
const double* bernoulli_over_factorial() {
  static const std::vector<double> v = [] {
    const double b[kBernoulliTerms] = {
        1.0 / 6,           -1.0 / 30,         1.0 / 42,
        -1.0 / 30,         5.0 / 66,          -691.0 / 2730,
        7.0 / 6,           -3617.0 / 510,     43867.0 / 798,
        -174611.0 / 330,   854513.0 / 138,    -236364091.0 / 2730};
    std::vector<double> r(kBernoulliTerms);
    double fact = 1.0;
    for (int k = 1; k <= kBernoulliTerms; ++k) {
      fact *= (2 * k - 1) * (2 * k);
      r[k - 1] = b[k - 1] / fact;
    }
    return r;
  }();
  return v.data();
}

}  // namespace

void validate(const EvalConfig& cfg) {
  if (cfg.correction_order < 0 || cfg.correction_order > 4)
    throw BadConfig("correction_order must be in 0..4");
  if (cfg.min_height < 10.0) throw BadConfig("min_height must be >= 10");
}

double riemann_siegel_theta(double t, const EvalConfig& cfg) {
  validate(cfg);
  if (t < cfg.min_height) throw HeightTooLow("theta: t below min_height");
  return detail::theta_series(t, 2);
}

double hardy_z(double t, const EvalConfig& cfg) {
  validate(cfg);
  if (t < cfg.min_height) throw HeightTooLow("hardy_z: t below min_height");
  if (t < detail::kLowHeightCutoff) return detail::hardy_z_euler_maclaurin(t);
  return detail::hardy_z_riemann_siegel(t, cfg.correction_order);
}

double zeta_mod_sq(double t, const EvalConfig& cfg) {
  const double z = hardy_z(t, cfg);
  return z * z;
}

namespace detail {

double theta_series(double t, int terms) {
  double th = 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8;
  const double t2 = t * t;
  if (terms >= 1) th += 1.0 / (48 * t);
  if (terms >= 2) th += 7.0 / (5760 * t * t2);
  if (terms >= 3) th += 31.0 / (80640 * t * t2 * t2);
  if (terms >= 4) th += 127.0 / (430080 * t * t2 * t2 * t2);
  return th;
}

double rs_correction(int j, double z) {
  double c[5];
  rs_corrections(z, 4, c);
  return c[j];
}

double hardy_z_riemann_siegel(double t, int order) {
  const double x = t / kTwoPi;
  const double sq = std::sqrt(x);
  const long n = static_cast<long>(std::floor(sq));
  const double th = theta_series(t, 2);
  const auto& tab = tables();
  const long cached = static_cast<long>(tab.log.size()) - 1;
  double sum = 0.0;
  for (long i = 1; i <= n; ++i) {
    const double ln = i <= cached ? tab.log[i] : std::log(double(i));
    const double w = i <= cached ? tab.inv_sqrt[i] : 1.0 / std::sqrt(double(i));
    sum += w * std::cos(th - t * ln);
  }
  sum *= 2.0;

  const double p = sq - double(n);
  double c[5];
  rs_corrections(2 * p - 1, order, c);
  const double u = 1.0 / sq;
  double rem = 0.0;
  for (int j = order; j >= 0; --j) rem = rem * u + c[j];
  rem *= (n % 2 ? 1.0 : -1.0) / std::sqrt(sq);
  return sum + rem;
}

double hardy_z_euler_maclaurin(double t) {
  using cplx = std::complex<double>;
  const cplx s(0.5, t);
  const long m = std::max<long>(24, static_cast<long>(std::ceil(1.3 * t)) + 10);
  cplx acc = 0.0;
  for (long i = 1; i < m; ++i) {
    const double ln = std::log(double(i));
    acc += std::polar(1.0 / std::sqrt(double(i)), -t * ln);
  }
  const cplx ms = std::polar(1.0 / std::sqrt(double(m)), -t * std::log(double(m)));
  acc += ms * double(m) / (s - 1.0);
  acc += 0.5 * ms;

  const double* bf = bernoulli_over_factorial();
  cplx rising = s;
  const double m_inv2 = 1.0 / (double(m) * double(m));
  double mp = 1.0 / double(m);
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    if (k > 1) rising *= (s + double(2 * k - 3)) * (s + double(2 * k - 2));
    acc += bf[k - 1] * rising * ms * mp;
    mp *= m_inv2;
  }
  const double th = theta_series(t, 2);
  return std::cos(th) * acc.real() - std::sin(th) * acc.imag();
}

}  // namespace detail

}  // namespace ladderlab::zeta
