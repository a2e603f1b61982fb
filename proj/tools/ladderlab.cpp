#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ladderlab/config.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/factorize.hpp"
#include "ladderlab/hybrid.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/primes.hpp"
#include "ladderlab/report.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

// Exit codes: 0 all checks within budget, 1 a budget or identity violation,
// 2 usage error, 3 cache unusable (missing, corrupt, or not covering the
// requested heights).
enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2, kCache = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  ladderlab::Config cfg;
  std::string cache_path;
  std::string out_path;
  bool csv = false;
  bool no_timestamp = false;
};

std::ostream& open_out(const Options& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path);
  if (!file) throw UsageError("cannot open output file: " + opt.out_path);
  return file;
}

ladderlab::ladder::LadderModel load_model(const Options& opt) {
  if (opt.cache_path.empty())
    throw UsageError("no cache given: pass --cache or set LADDERLAB_CACHE");
  return ladderlab::ladder::LadderModel::load(opt.cache_path);
}

// k tuple of a fixed arity from what the user passed: none means all ones,
// one value is replicated, a full tuple is taken as is.
std::vector<int> expand_ks(const std::vector<int>& ks, std::size_t arity,
                           int k0) {
  std::vector<int> out;
  if (ks.empty())
    out.assign(arity, 1);
  else if (ks.size() == 1)
    out.assign(arity, ks[0]);
  else if (ks.size() == arity)
    out = ks;
  else
    throw UsageError("expected " + std::to_string(arity) +
                     " comma-separated k values");
  for (int k : out)
    if (k < 1 || k > k0)
      throw UsageError("k must lie in 1.." + std::to_string(k0));
  return out;
}

void check_common(long long l, double u, const ladderlab::Config& cfg) {
  if (l < cfg.l0)
    throw UsageError("L must be at least " + std::to_string(cfg.l0));
  if (!(u > 0.0 && u < kPi / 4.0))
    throw UsageError("U must lie in (0, pi/4)");
}

void check_deltas(double d4, double d5) {
  if (!(d4 > 0.0) || !(d5 > 0.0))
    throw UsageError("delta4 and delta5 must be positive");
  if (d4 == d5) throw UsageError("delta4 and delta5 must differ");
}

ladderlab::factorize::FactorizationCertificate trig_cert(
    ladderlab::factorize::FunctionFamily fam, long long l, double u, int k,
    const ladderlab::ladder::LadderModel& model,
    const ladderlab::Config& cfg) {
  return ladderlab::factorize::factorize(fam, l, u, k, model, cfg.mvp_tol);
}

int emit_report(const ladderlab::hybrid::HybridReport& rep,
                const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_out(opt, file);
  if (opt.csv) {
    out << ladderlab::report::csv_header() << '\n'
        << ladderlab::report::csv_row(rep) << '\n';
  } else {
    const std::string ts =
        opt.no_timestamp ? "" : ladderlab::report::current_timestamp();
    out << ladderlab::report::json_line(rep, ts) << '\n';
  }
  return rep.passed ? kOk : kViolation;
}

int cmd_build(const Options& opt, double t0, double t_max) {
  if (opt.cache_path.empty())
    throw UsageError("no cache given: pass --cache or set LADDERLAB_CACHE");
  if (!(t0 >= 100.0)) throw UsageError("t0 must be at least 100");
  if (!(t_max > t0 + 100.0))
    throw UsageError("t-max must exceed t0 by at least 100");

  ladderlab::zeta::EvalConfig ecfg;
  ecfg.correction_order = opt.cfg.correction_order;
  ecfg.min_height = opt.cfg.min_height;

  {
    std::ifstream probe(opt.cache_path);
    if (probe) {
      probe.close();
      try {
        auto existing =
            ladderlab::ladder::LadderModel::load(opt.cache_path);
        if (existing.t0() == t0 && existing.t_max() == t_max &&
            existing.eval_config().correction_order ==
                ecfg.correction_order) {
          std::cout << "cache up to date: " << existing.checkpoint_count()
                    << " checkpoints in [" << t0 << ", " << t_max << "]\n";
          return kOk;
        }
      } catch (const ladderlab::error&) {
        // unusable existing file: rebuild over it
      }
    }
  }

  auto model = ladderlab::ladder::LadderModel::build(t0, t_max, ecfg);
  model.save(opt.cache_path);
  std::cout << "built " << model.checkpoint_count() << " checkpoints in ["
            << t0 << ", " << t_max << "]\n";

  // Drift diagnostic: (t - phi1(t)) / ((1-gamma) t/ln t) stays of order one
  // when the ladder tracks the prime-counting drift. Calibrated against the
  // evaluator itself, so it is a sanity ratio, not an independent proof.
  const double lo = t0 + 1.0;
  double rmax = 0.0;
  const int samples = 64;
  for (int i = 0; i <= samples; ++i) {
    const double t = lo + (t_max - lo) * i / samples;
    const double expected =
        (1.0 - ladderlab::ladder::kEulerGamma) * t / std::log(t);
    rmax = std::max(rmax, std::abs(t - model.phi1(t)) / expected);
  }
  std::cout << "max drift ratio " << ladderlab::report::format_g17(rmax)
            << " over t in [" << lo << ", " << t_max << "]\n";
  return kOk;
}

int cmd_verify(const Options& opt, const std::string& formula,
               const std::string& family_name, long long l, double u,
               const std::vector<int>& ks_in, double d4, double d5) {
  namespace fz = ladderlab::factorize;
  namespace hy = ladderlab::hybrid;
  const auto& cfg = opt.cfg;
  check_common(l, u, cfg);

  if (!family_name.empty()) {
    fz::FunctionFamily fam;
    if (family_name == "f1")
      fam = fz::FunctionFamily::f1();
    else if (family_name == "f2")
      fam = fz::FunctionFamily::f2();
    else if (family_name == "f3")
      fam = fz::FunctionFamily::f3();
    else if (family_name == "unit")
      fam = fz::FunctionFamily::unit();
    else if (family_name == "power") {
      if (!(d4 > 0.0)) throw UsageError("power family needs --delta4 > 0");
      fam = fz::FunctionFamily::power(d4, kPi * static_cast<double>(l));
    } else
      throw UsageError("unknown family: " + family_name);
    const auto ks = expand_ks(ks_in, 1, cfg.k0);
    auto model = load_model(opt);
    const auto cert = trig_cert(fam, l, u, ks[0], model, cfg);
    std::ofstream file;
    std::ostream& out = open_out(opt, file);
    if (opt.csv)
      out << ladderlab::report::certificate_csv_row(cert) << '\n';
    else
      out << ladderlab::report::certificate_json_line(
                 cert, opt.no_timestamp
                           ? ""
                           : ladderlab::report::current_timestamp())
          << '\n';
    return cert.residual <= cfg.cert_budget ? kOk : kViolation;
  }

  if (formula == "X32" || formula == "X33" || formula == "T35" ||
      formula == "A41" || formula == "A43" || formula == "C18") {
    auto ks = expand_ks(ks_in, 3, cfg.k0);
    if (formula == "C18" && (ks[0] != 1 || ks[1] != 1 || ks[2] != 1))
      throw UsageError("C18 is the k=1 case; pass --k 1 or omit --k");
    if ((formula == "A43" || formula == "C18") &&
        !(ks[0] == ks[1] && ks[1] == ks[2]))
      throw UsageError(formula + " needs one common k");
    auto model = load_model(opt);
    const auto c1 = trig_cert(fz::FunctionFamily::f1(), l, u, ks[0], model,
                              cfg);
    const auto c2 = trig_cert(fz::FunctionFamily::f2(), l, u, ks[1], model,
                              cfg);
    const auto c3 = trig_cert(fz::FunctionFamily::f3(), l, u, ks[2], model,
                              cfg);
    if (formula == "X32" || formula == "X33") {
      const auto pair =
          hy::check_exact_32_33(c1, c2, c3, model, cfg.exact_budget);
      return emit_report(pair[formula == "X32" ? 0 : 1], opt);
    }
    if (formula == "T35")
      return emit_report(
          hy::check_exact_hybrid_35(c1, c2, c3, model, cfg.exact_budget),
          opt);
    if (formula == "A41")
      return emit_report(
          hy::check_asymptotic_41(c1, c2, c3, model, cfg.asym_margin), opt);
    return emit_report(
        hy::check_secondary_43(c1, c2, c3, model, cfg.asym_margin), opt);
  }
  if (formula == "P51") {
    auto ks = expand_ks(ks_in, 2, cfg.k0);
    check_deltas(d4, d5);
    auto model = load_model(opt);
    return emit_report(
        hy::check_power_pair_51(l, u, ks[0], ks[1], d4, d5, model,
                                cfg.exact_budget, cfg.mvp_tol),
        opt);
  }
  if (formula == "B52") {
    auto ks = expand_ks(ks_in, 1, cfg.k0);
    check_deltas(d4, d5);
    auto model = load_model(opt);
    return emit_report(
        hy::check_beta_product_52(ks[0], d4, d5, l, u, model,
                                  cfg.secondary_budget, cfg.mvp_tol),
        opt);
  }
  if (formula == "T53") {
    auto ks = expand_ks(ks_in, 3, cfg.k0);
    check_deltas(d4, d5);
    auto model = load_model(opt);
    return emit_report(
        hy::check_secondary_exact_53(ks[0], ks[1], ks[2], d4, d5, l, u,
                                     model, cfg.secondary_budget,
                                     cfg.mvp_tol),
        opt);
  }
  throw UsageError("unknown formula: " + formula);
}

int cmd_sweep(const Options& opt, const std::string& formula,
              std::vector<long long> ls, double u, const std::vector<int>& ks_in) {
  namespace fz = ladderlab::factorize;
  namespace hy = ladderlab::hybrid;
  const auto& cfg = opt.cfg;
  if (formula != "A41" && formula != "A43" && formula != "C18")
    throw UsageError("sweep supports the asymptotic forms A41, A43, C18");
  if (ls.empty()) throw UsageError("pass at least one L");
  const auto ks = expand_ks(ks_in, 1, cfg.k0);
  const int k = ks[0];
  if (formula == "C18" && k != 1)
    throw UsageError("C18 is the k=1 case; pass --k 1 or omit --k");
  std::sort(ls.begin(), ls.end());
  for (long long l : ls) check_common(l, u, cfg);

  auto model = load_model(opt);
  std::ofstream file;
  std::ostream& out = open_out(opt, file);
  out << ladderlab::report::sweep_csv_header() << '\n';
  bool all_ok = true;
  for (long long l : ls) {
    const auto c1 = trig_cert(fz::FunctionFamily::f1(), l, u, k, model, cfg);
    const auto c2 = trig_cert(fz::FunctionFamily::f2(), l, u, k, model, cfg);
    const auto c3 = trig_cert(fz::FunctionFamily::f3(), l, u, k, model, cfg);
    const auto rep =
        formula == "A41"
            ? hy::check_asymptotic_41(c1, c2, c3, model, cfg.asym_margin)
            : hy::check_secondary_43(c1, c2, c3, model, cfg.asym_margin);
    const auto set = model.disconnected_set(l, u, std::max(k, 1), cfg.l0);
    const double gap =
        ladderlab::ladder::rho_gap(set.components[0], set.components[1]);
    const double norm = (1.0 - ladderlab::ladder::kEulerGamma) *
                        static_cast<double>(ladderlab::prime_count(
                            kPi * static_cast<double>(l)));
    out << ladderlab::report::sweep_csv_row(l, rep.deviation, rep.tol_budget,
                                            gap / norm)
        << '\n';
    all_ok = all_ok && rep.passed;
  }
  return all_ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mean-value point systems on iterated ladder segments: cache "
      "construction, factorization certificates, formula verification"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "flat key=value config file; flags override it");
  // Tolerance and shape knobs, overriding the config file when passed.
  int correction_order = 0;
  double min_height = 0.0, mvp_tol = 0.0, cert_budget = 0.0;
  double exact_budget = 0.0, secondary_budget = 0.0, asym_margin = 0.0;
  int k0 = 0;
  long long l0 = 0;
  auto* o_order = app.add_option("--correction-order", correction_order,
                                 "evaluator remainder order 0..4");
  auto* o_minh = app.add_option("--min-height", min_height,
                                "lowest admissible evaluation height");
  auto* o_k0 = app.add_option("--k0", k0, "largest accepted iteration order");
  auto* o_l0 = app.add_option("--l0", l0, "smallest accepted segment index");
  auto* o_mvp = app.add_option("--mvp-tol", mvp_tol,
                               "mean-value point solve tolerance");
  auto* o_cert = app.add_option("--cert-budget", cert_budget,
                                "certificate residual budget");
  auto* o_exact = app.add_option("--exact-budget", exact_budget,
                                 "exact-identity residual budget");
  auto* o_sec = app.add_option("--secondary-budget", secondary_budget,
                               "secondary-identity residual budget");
  auto* o_margin = app.add_option("--asym-margin", asym_margin,
                                  "asymptotic deviation margin multiplier");

  Options opt;
  app.add_option("--cache", opt.cache_path, "ladder cache file")
      ->envname("LADDERLAB_CACHE");
  app.add_option("--out", opt.out_path, "write the report here, not stdout");
  bool want_json = false;
  auto* o_json =
      app.add_flag("--json", want_json, "JSON-lines output (the default)");
  app.add_flag("--csv", opt.csv, "CSV output (default JSON lines)")
      ->excludes(o_json);
  app.add_flag("--no-timestamp", opt.no_timestamp,
               "omit the timestamp field from JSON reports");

  auto* build = app.add_subcommand("ladder-build",
                                   "integrate and cache the ladder");
  build->fallthrough();
  double t0 = 200.0, t_max = 0.0;
  build->add_option("--t0", t0, "anchor height (default 200)");
  build->add_option("--t-max", t_max, "top of the cached range")->required();

  auto* verify = app.add_subcommand(
      "verify", "check one formula or emit one certificate");
  verify->fallthrough();
  std::string formula, family;
  long long l = 0;
  double u = 0.5, d4 = 0.0, d5 = 0.0;
  verify->add_option("--formula", formula,
                     "X32 X33 T35 A41 A43 C18 P51 B52 T53");
  verify->add_option("--family", family,
                     "emit a certificate instead: f1 f2 f3 unit power");
  verify->add_option("--L", l, "segment index")->required();
  verify->add_option("--U", u, "segment width (default 0.5)");
  std::vector<int> ks;
  verify->add_option("--k", ks, "iteration orders, comma separated")
      ->delimiter(',');
  verify->add_option("--delta4", d4, "first power exponent");
  verify->add_option("--delta5", d5, "second power exponent");

  auto* sweep = app.add_subcommand(
      "sweep", "asymptotic deviation and gap diagnostic across L");
  sweep->fallthrough();
  std::string sweep_formula;
  std::vector<long long> sweep_ls;
  double sweep_u = 0.5;
  std::vector<int> sweep_ks;
  sweep->add_option("--formula", sweep_formula, "A41 A43 C18")->required();
  sweep->add_option("--L", sweep_ls, "segment indices, comma separated")
      ->required()
      ->delimiter(',');
  sweep->add_option("--U", sweep_u, "segment width (default 0.5)");
  sweep->add_option("--k", sweep_ks, "iteration order")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!config_path.empty()) opt.cfg = ladderlab::load_config(config_path);
    if (*o_order) opt.cfg.correction_order = correction_order;
    if (*o_minh) opt.cfg.min_height = min_height;
    if (*o_k0) opt.cfg.k0 = k0;
    if (*o_l0) opt.cfg.l0 = l0;
    if (*o_mvp) opt.cfg.mvp_tol = mvp_tol;
    if (*o_cert) opt.cfg.cert_budget = cert_budget;
    if (*o_exact) opt.cfg.exact_budget = exact_budget;
    if (*o_sec) opt.cfg.secondary_budget = secondary_budget;
    if (*o_margin) opt.cfg.asym_margin = asym_margin;
    ladderlab::validate(opt.cfg);

    if (build->parsed()) return cmd_build(opt, t0, t_max);
    if (verify->parsed()) {
      if (formula.empty() == family.empty())
        throw UsageError("pass exactly one of --formula or --family");
      // A cache built at another correction order would make the weights
      // inconsistent with its own checkpoints; refuse rather than guess.
      if (*o_order && !opt.cache_path.empty()) {
        auto model = ladderlab::ladder::LadderModel::load(opt.cache_path);
        if (model.eval_config().correction_order != opt.cfg.correction_order)
          throw UsageError(
              "--correction-order differs from the cache; rebuild the "
              "cache instead");
      }
      return cmd_verify(opt, formula, family, l, u, ks, d4, d5);
    }
    return cmd_sweep(opt, sweep_formula, sweep_ls, sweep_u, sweep_ks);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ladderlab::BadConfig& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ladderlab::BadU& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ladderlab::CacheFormatError& e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return kCache;
  } catch (const ladderlab::HeightAboveCache& e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return kCache;
  } catch (const ladderlab::OutOfRange& e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return kCache;
  } catch (const ladderlab::error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  }
}
