#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gfib/claims.hpp"
#include "gfib/golden.hpp"
#include "gfib/identities.hpp"
#include "gfib/verifier.hpp"

namespace gfib {

// JSON documents use nlohmann::json's sorted keys, so dumps are canonical. Every document
// carries a "kind" member; schema/report.schema.json describes all of them. Big integers
// are decimal strings.

std::string_view verdict_name(Verdict v);
std::string_view mode_name(EvalMode mode);

nlohmann::json to_json(const SweepConfig& config);
nlohmann::json to_json(const Witness& witness);
nlohmann::json to_json(const Counterexample& counterexample);
nlohmann::json to_json(const VerificationReport& report, bool include_timing = false);
nlohmann::json to_json(const HypothesisReport& report);
nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const SurveyReport& report);
nlohmann::json examples_json(const std::vector<ExampleOutcome>& outcomes);
nlohmann::json claim_catalog_json();
nlohmann::json search_json(ClaimId claim, std::string_view relaxed, const SweepConfig& bounds,
                           const std::optional<Counterexample>& first,
                           const std::optional<std::vector<Counterexample>>& all);

/// RFC 4180 style: header row first, fields quoted when they contain a comma, quote or newline.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);
    void add_row(std::vector<std::string> row);
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string violations_csv(const std::vector<Counterexample>& violations);
std::string claim_catalog_csv();
std::string examples_csv(const std::vector<ExampleOutcome>& outcomes);
std::string survey_csv(const SurveyReport& report);
std::string identities_csv(const IdentityReport& report);

}  // namespace gfib
