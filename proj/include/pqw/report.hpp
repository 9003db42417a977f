#pragma once

#include <string>

#include <json.hpp>

#include "pqw/fermat.hpp"
#include "pqw/pi1.hpp"
#include "pqw/product_quotient.hpp"
#include "pqw/todd_coxeter.hpp"

namespace pqw {

struct ReportOptions {
  bool include_timing = true;
};

nlohmann::json census_json(const Census& census);
nlohmann::json kodaira_json(const KodairaReport& k);
nlohmann::json invariants_json(const ProductQuotientSpec& spec, const Census& census);
nlohmann::json pi1_json(const Pi1Result& r, const ReportOptions& opt);
nlohmann::json cover_json(const EtaleCover& c);
nlohmann::json universal_cover_json(const UniversalCoverReport& r);
nlohmann::json fermat_json(const FermatReport& r);
nlohmann::json limits_json(const EnumerationLimits& l);

// Top-level envelope: {"schema": "report-v1", "command": ..., blocks...}.
nlohmann::json make_report(const std::string& command, nlohmann::json blocks,
                           const EnumerationLimits& limits, const ReportOptions& opt,
                           double wall_ms);

}  // namespace pqw
