#pragma once

#include <nlohmann/json.hpp>

#include "latform/verify.hpp"

namespace latform {

// All potentially large integers are serialized as decimal strings.
nlohmann::json to_json(const DetReport& r);
nlohmann::json to_json(const VoaDetReport& r);
nlohmann::json to_json(const VerifySummary& s);

std::string det_reports_csv(const std::vector<DetReport>& reports);
std::string voa_reports_csv(const std::vector<VoaDetReport>& reports);
std::string summary_csv(const VerifySummary& s);

// Fixed-width plain table renderers.
std::string det_reports_table(const std::vector<DetReport>& reports);
std::string voa_reports_table(const std::vector<VoaDetReport>& reports);
std::string summary_table(const VerifySummary& s);

}  // namespace latform
