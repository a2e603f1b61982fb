#include "ladderlab/report.hpp"

#include <cstdio>
#include <ctime>
#include <sstream>

namespace ladderlab::report {
namespace {

std::string join_ks(const std::vector<int>& ks, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i > 0) out << sep;
    out << ks[i];
  }
  return out.str();
}

std::string json_int_array(const std::vector<int>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << v[i];
  }
  out << ']';
  return out.str();
}

std::string json_double_array(const std::vector<double>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << format_g17(v[i]);
  }
  out << ']';
  return out.str();
}

}  // namespace

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string current_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string json_line(const hybrid::HybridReport& rep,
                      const std::string& timestamp) {
  std::ostringstream out;
  out << "{\"formula_id\":\"" << rep.formula_id << "\""
      << ",\"L\":" << rep.l << ",\"U\":" << format_g17(rep.u)
      << ",\"k\":" << json_int_array(rep.ks)
      << ",\"delta4\":" << format_g17(rep.delta4)
      << ",\"delta5\":" << format_g17(rep.delta5)
      << ",\"lhs\":" << format_g17(rep.lhs)
      << ",\"rhs\":" << format_g17(rep.rhs)
      << ",\"abs_residual\":" << format_g17(rep.abs_residual)
      << ",\"rel_residual\":" << format_g17(rep.rel_residual)
      << ",\"deviation\":" << format_g17(rep.deviation)
      << ",\"tol_budget\":" << format_g17(rep.tol_budget)
      << ",\"passed\":" << (rep.passed ? "true" : "false");
  if (!timestamp.empty()) out << ",\"timestamp\":\"" << timestamp << "\"";
  out << '}';
  return out.str();
}

std::string csv_header() {
  return "formula_id,L,U,k,delta4,delta5,lhs,rhs,abs_residual,rel_residual,"
         "deviation,tol_budget,passed";
}

std::string csv_row(const hybrid::HybridReport& rep) {
  std::ostringstream out;
  out << rep.formula_id << ',' << rep.l << ',' << format_g17(rep.u) << ','
      << join_ks(rep.ks, ';') << ',' << format_g17(rep.delta4) << ','
      << format_g17(rep.delta5) << ',' << format_g17(rep.lhs) << ','
      << format_g17(rep.rhs) << ',' << format_g17(rep.abs_residual) << ','
      << format_g17(rep.rel_residual) << ',' << format_g17(rep.deviation)
      << ',' << format_g17(rep.tol_budget) << ','
      << (rep.passed ? "true" : "false");
  return out.str();
}

std::string certificate_json_line(
    const factorize::FactorizationCertificate& cert,
    const std::string& timestamp) {
  std::ostringstream out;
  out << "{\"family\":\"" << cert.family.name() << "\""
      << ",\"L\":" << cert.l << ",\"U\":" << format_g17(cert.u)
      << ",\"k\":" << cert.k << ",\"alpha0\":" << format_g17(cert.alpha0)
      << ",\"alphas\":" << json_double_array(cert.alphas)
      << ",\"betas\":" << json_double_array(cert.betas)
      << ",\"residual\":" << format_g17(cert.residual);
  if (!timestamp.empty()) out << ",\"timestamp\":\"" << timestamp << "\"";
  out << '}';
  return out.str();
}

std::string certificate_csv_row(
    const factorize::FactorizationCertificate& cert) {
  std::ostringstream out;
  out << cert.family.name() << ',' << cert.l << ',' << format_g17(cert.u)
      << ',' << cert.k << ',' << format_g17(cert.alpha0);
  for (double a : cert.alphas) out << ',' << format_g17(a);
  for (double b : cert.betas) out << ',' << format_g17(b);
  out << ',' << format_g17(cert.residual);
  return out.str();
}

std::string sweep_csv_header() {
  return "L,deviation,tol_budget,gap_ratio_surrogate_diag";
}

std::string sweep_csv_row(long long l, double deviation, double budget,
                          double gap_ratio) {
  std::ostringstream out;
  out << l << ',' << format_g17(deviation) << ',' << format_g17(budget)
      << ',' << format_g17(gap_ratio);
  return out.str();
}

}  // namespace ladderlab::report
