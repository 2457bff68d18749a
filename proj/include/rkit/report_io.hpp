#pragma once

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"
#include "rkit/verification.hpp"

namespace rkit {

inline constexpr const char* kCsvHeader =
    "case,domain_lo,domain_hi,counterexamples,min_margin,elapsed_s";

/// %.17g, which round-trips every double.
std::string format_number(double v);

/// One CSV row per report, header first. Counterexamples are joined with
/// ';'; fields containing ',' or '"' are quoted.
void write_csv(std::ostream& out, std::span<const VerificationReport> reports);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(std::span<const VerificationReport> reports);
nlohmann::json to_json(const GrowthReport& report);
nlohmann::json to_json(const RatioTrendReport& report);

}  // namespace rkit
