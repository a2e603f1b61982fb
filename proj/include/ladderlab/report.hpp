#pragma once

#include <string>

#include "ladderlab/factorize.hpp"
#include "ladderlab/hybrid.hpp"

namespace ladderlab::report {

// All numeric fields print with %.17g so a report round-trips the exact
// double. Field order is fixed; identical inputs give byte-identical lines
// except for the optional timestamp.
std::string format_g17(double x);
std::string current_timestamp();  // UTC, seconds resolution

std::string json_line(const hybrid::HybridReport& rep,
                      const std::string& timestamp = "");
std::string csv_header();
std::string csv_row(const hybrid::HybridReport& rep);

std::string certificate_json_line(
    const factorize::FactorizationCertificate& cert,
    const std::string& timestamp = "");
std::string certificate_csv_row(
    const factorize::FactorizationCertificate& cert);

std::string sweep_csv_header();
std::string sweep_csv_row(long long l, double deviation, double budget,
                          double gap_ratio);

}  // namespace ladderlab::report
