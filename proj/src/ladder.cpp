#include "ladderlab/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ladderlab/numerics.hpp"

namespace ladderlab::ladder {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kPanelTol = 1e-11;
constexpr const char* kCacheVersion = "ladderlab-cache-v1";
constexpr const char* kOmegaTag = "log-t-over-2pi-plus-1-plus-gamma";

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

double omega(double t, double min_t) {
  if (t < min_t) throw HeightTooLow("omega: t below anchor");
  return std::log(t / kTwoPi) + 1.0 + kEulerGamma;
}

double z_tilde_sq(double t, const zeta::EvalConfig& cfg, double min_t) {
  if (t < min_t) throw HeightTooLow("z_tilde_sq: t below anchor");
  return zeta::zeta_mod_sq(t, cfg) / omega(t, min_t);
}

double rho_gap(const IteratedSegment& a, const IteratedSegment& b) {
  if (!(a.right_r < b.left_r))
    throw NotSeparated("rho_gap: segments touch or overlap");
  return b.left_r - a.right_r;
}

double LadderModel::z_tilde_sq(double t) const {
  return ladder::z_tilde_sq(t, cfg_, t0_);
}

LadderModel LadderModel::build(double t0, double t_max,
                               const zeta::EvalConfig& cfg) {
  zeta::validate(cfg);
  if (t0 < cfg.min_height) throw HeightTooLow("build: t0 below min_height");
  if (t_max <= t0) throw OutOfRange("build: t_max must exceed t0");

  LadderModel m;
  m.t0_ = t0;
  m.t_max_ = t_max;
  m.cfg_ = cfg;
  m.anchor_offset_ = (1.0 - kEulerGamma) * double(prime_count(t0));

  const auto n = static_cast<std::size_t>(std::ceil(t_max - t0));
  m.ts_.resize(n + 1);
  m.phis_.resize(n + 1);
  const double h = (t_max - t0) / double(n);
  const auto f = [&](double u) { return m.z_tilde_sq(u); };
  double acc = 0.0, comp = 0.0;  // Kahan-compensated running Phi
  m.ts_[0] = t0;
  m.phis_[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double lo = t0 + double(i - 1) * h;
    const double hi = i == n ? t_max : t0 + double(i) * h;
    const double piece = numerics::integrate_adaptive(f, lo, hi, kPanelTol);
    const double y = piece - comp;
    const double next = acc + y;
    comp = (next - acc) - y;
    acc = next;
    m.ts_[i] = hi;
    m.phis_[i] = acc;
  }
  for (std::size_t i = 1; i <= n; ++i)
    if (!(m.phis_[i] > m.phis_[i - 1]))
      throw CacheFormatError("build: Phi checkpoints not strictly increasing");
  return m;
}

double LadderModel::phi_integral(double t) const {
  if (t < t0_) throw HeightTooLow("phi_integral: t below anchor");
  if (t > t_max_) throw HeightAboveCache("phi_integral: t above cache");
  const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
  const auto i = static_cast<std::size_t>(it - ts_.begin()) - 1;
  if (i + 1 == ts_.size()) return phis_.back();
  const auto f = [&](double u) { return z_tilde_sq(u); };
  return phis_[i] + numerics::integrate_adaptive(f, ts_[i], t, kPanelTol);
}

double LadderModel::phi1(double t) const { return t0_ - anchor_offset_ + phi_integral(t); }

double LadderModel::phi1_inverse(double y) const {
  const double target = y - (t0_ - anchor_offset_);  // Phi value sought
  if (target < 0.0) throw OutOfRange("phi1_inverse: y below phi1(t0)");
  if (target > phis_.back())
    throw OutOfRange("phi1_inverse: y above cached range");
  if (target == 0.0) return t0_;

  auto it = std::upper_bound(phis_.begin(), phis_.end(), target);
  auto i = static_cast<std::size_t>(it - phis_.begin()) - 1;
  if (i + 1 == phis_.size()) return ts_.back();

  const auto f = [&](double u) { return z_tilde_sq(u); };
  double lo = ts_[i], hi = ts_[i + 1];
  const double local_target = target - phis_[i];
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double res =
        numerics::integrate_adaptive(f, ts_[i], mid, kPanelTol) - local_target;
    if (std::abs(res) <= kInverseTol) return mid;
    if (hi - lo <= 4e-16 * (std::abs(mid) + 1.0)) return mid;
    if (res < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  throw NoConvergence("phi1_inverse: bisection stalled");
}

IteratedSegment LadderModel::reverse_iterate_segment(const Segment& seg,
                                                     int r) const {
  if (!(seg.left < seg.right))
    throw OutOfRange("reverse_iterate_segment: degenerate segment");
  if (seg.left < t0_)
    throw HeightTooLow("reverse_iterate_segment: segment below anchor");
  if (r < 0) throw OutOfRange("reverse_iterate_segment: negative order");
  double lo = seg.left, hi = seg.right;
  for (int step = 0; step < r; ++step) {
    lo = phi1_inverse(lo);
    hi = phi1_inverse(hi);
  }
  return IteratedSegment{seg, r, lo, hi};
}

DisconnectedSet LadderModel::disconnected_set(long long l, double u, int k,
                                              long long l0) const {
  if (!(u > 0.0 && u < kPi / 4)) throw BadU("disconnected_set: U not in (0, pi/4)");
  if (k < 1) throw OutOfRange("disconnected_set: k must be >= 1");
  if (l < l0) throw OutOfRange("disconnected_set: L below configured L0");

  DisconnectedSet set;
  set.u = u;
  set.pi_l = kPi * double(l);
  set.k = k;
  const Segment base{set.pi_l, set.pi_l + u};
  for (int r = 0; r <= k; ++r)
    set.components.push_back(reverse_iterate_segment(base, r));
  for (int r = 1; r <= k; ++r)
    if (!(set.components[r - 1].right_r < set.components[r].left_r))
      throw OverlapDetected("disconnected_set: component overlap");
  return set;
}

void LadderModel::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw CacheFormatError("save: cannot open " + path);
  out << kCacheVersion << '\t' << format_g17(t0_) << '\t' << format_g17(t_max_)
      << '\t' << kOmegaTag << '\t' << cfg_.correction_order << '\n';
  for (std::size_t i = 0; i < ts_.size(); ++i)
    out << format_g17(ts_[i]) << '\t' << format_g17(phis_[i]) << '\n';
  if (!out) throw CacheFormatError("save: write failure on " + path);
}

LadderModel LadderModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CacheFormatError("load: cannot open " + path);
  std::string header;
  if (!std::getline(in, header))
    throw CacheFormatError("load: missing header");
  std::istringstream hs(header);
  std::string version, omega_tag;
  double t0 = 0.0, t_max = 0.0;
  int order = -1;
  if (!(hs >> version >> t0 >> t_max >> omega_tag >> order))
    throw CacheFormatError("load: malformed header");
  if (version != kCacheVersion)
    throw CacheFormatError("load: unsupported cache version " + version);
  if (omega_tag != kOmegaTag)
    throw CacheFormatError("load: omega definition mismatch");
  if (order < 0 || order > 4)
    throw CacheFormatError("load: bad correction order in header");

  LadderModel m;
  m.t0_ = t0;
  m.t_max_ = t_max;
  m.cfg_.correction_order = order;
  m.anchor_offset_ = (1.0 - kEulerGamma) * double(prime_count(t0));
  double t = 0.0, phi = 0.0;
  while (in >> t >> phi) {
    m.ts_.push_back(t);
    m.phis_.push_back(phi);
  }
  if (m.ts_.size() < 2) throw CacheFormatError("load: too few checkpoints");
  if (m.ts_.front() != t0 || m.ts_.back() != t_max)
    throw CacheFormatError("load: checkpoint range disagrees with header");
  if (m.phis_.front() != 0.0)
    throw CacheFormatError("load: Phi must be anchored at zero");
  for (std::size_t i = 1; i < m.ts_.size(); ++i) {
    if (!(m.ts_[i] > m.ts_[i - 1]) || !(m.phis_[i] > m.phis_[i - 1]))
      throw CacheFormatError("load: checkpoints not strictly increasing");
    if (m.ts_[i] - m.ts_[i - 1] > 1.0 + 1e-9)
      throw CacheFormatError("load: checkpoint spacing above 1.0");
  }
  return m;
}

}  // namespace ladderlab::ladder
