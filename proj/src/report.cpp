#include "gfib/report.hpp"

#include <sstream>

namespace gfib {

using nlohmann::json;

namespace {

std::string source_kind_name(SSource::Kind kind) {
    switch (kind) {
        case SSource::Kind::Explicit: return "explicit";
        case SSource::Kind::DivisorsOfR: return "divisors-of-r";
        case SSource::Kind::DivisorsOfRQuarter: return "divisors-of-r4";
        case SSource::Kind::UpTo: return "up-to";
    }
    return "unknown";
}

json claim_ref(ClaimId id) { return std::string(claim_info(id).alias); }

json condition_names(const std::vector<Condition>& conditions) {
    json out = json::array();
    for (Condition c : conditions) out.push_back(std::string(condition_name(c)));
    return out;
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::AllPass: return "all_pass";
        case Verdict::Violations: return "violations";
        case Verdict::HypothesisNeverApplicable: return "hypothesis_never_applicable";
    }
    return "unknown";
}

std::string_view mode_name(EvalMode mode) { return mode == EvalMode::Exact ? "exact" : "modular"; }

json to_json(const SweepConfig& config) {
    json source = {{"kind", source_kind_name(config.s_source.kind)}};
    if (config.s_source.kind == SSource::Kind::Explicit) source["values"] = config.s_source.values;
    if (config.s_source.kind == SSource::Kind::UpTo) source["max"] = config.s_source.max;
    return {
        {"p_range", {config.p_range.lo, config.p_range.hi}},
        {"q_range", {config.q_range.lo, config.q_range.hi}},
        {"s_source", source},
        {"k_max", config.k_max},
        {"n_max", config.n_max},
        {"t_max", config.t_max},
        {"mode", std::string(mode_name(config.mode))},
        {"alphas", config.alphas},
    };
}

json to_json(const Witness& witness) {
    json out = {
        {"relation", witness.relation},
        {"divisor", witness.divisor.get_str()},
        {"index", witness.index.get_str()},
        {"term_divisible", witness.term_divisible},
        {"g_n", witness.g_n.get_str()},
    };
    out["index_divisible"] = witness.index_divisible ? json(*witness.index_divisible) : json(nullptr);
    out["alpha"] = witness.alpha ? json(*witness.alpha) : json(nullptr);
    return out;
}

json to_json(const Counterexample& c) {
    return {
        {"claim", claim_ref(c.claim)},
        {"relaxed_condition", c.relaxed_condition.empty() ? json(nullptr) : json(c.relaxed_condition)},
        {"p", c.p},
        {"q", c.q},
        {"s", c.s},
        {"k", c.k},
        {"n", c.n},
        {"witness", to_json(c.witness)},
    };
}

json to_json(const VerificationReport& report, bool include_timing) {
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back(to_json(v));
    json out = {
        {"kind", "verification"},
        {"claim", claim_ref(report.claim)},
        {"config", to_json(report.config)},
        {"points_checked", report.points_checked},
        {"applicable_triples", report.applicable_triples},
        {"violations", violations},
        {"verdict", {{"status", std::string(verdict_name(report.verdict))}, {"count", report.violations.size()}}},
        {"bounded", "verified for k <= " + std::to_string(report.config.k_max) +
                        ", n <= " + std::to_string(report.config.n_max) + " only"},
    };
    if (include_timing) out["elapsed_ms"] = report.elapsed.count() * 1000.0;
    return out;
}

json to_json(const HypothesisReport& report) {
    json conditions = json::array();
    for (const auto& value : report.conditions) {
        conditions.push_back({{"name", std::string(condition_name(value.condition))}, {"holds", value.holds}});
    }
    return {
        {"kind", "hypothesis"},
        {"claim", claim_ref(report.claim)},
        {"conditions", conditions},
        {"applicable", report.applicable},
        {"note", report.note},
    };
}

json to_json(const IdentityReport& report) {
    json results = json::array();
    for (const auto& r : report.results) {
        results.push_back({
            {"name", r.name},
            {"relation", r.relation},
            {"applicable", r.applicable},
            {"checked", r.checked},
            {"failures", r.failures},
            {"first_failure", r.first_failure.empty() ? json(nullptr) : json(r.first_failure)},
        });
    }
    return {
        {"kind", "identities"},
        {"p", report.p},
        {"q", report.q},
        {"n_max", report.n_max},
        {"s_list", report.s_list},
        {"results", results},
        {"all_pass", report.all_pass()},
    };
}

json to_json(const SurveyReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json applicable = json::array();
        for (ClaimId id : row.applicable) applicable.push_back(claim_ref(id));
        rows.push_back({
            {"p", row.p},
            {"q", row.q},
            {"r", row.r.get_str()},
            {"s", row.s},
            {"s_divides_r4", row.s_divides_r_quarter},
            {"k", row.k},
            {"n", row.n},
            {"failing_conditions", condition_names(row.failing_conditions)},
            {"applicable_claims", applicable},
        });
    }
    return {
        {"kind", "survey"},
        {"config", to_json(report.config)},
        {"triples_examined", report.triples_examined},
        {"rows", rows},
        {"note", report.note},
    };
}

json examples_json(const std::vector<ExampleOutcome>& outcomes) {
    json list = json::array();
    std::size_t passed = 0;
    for (const auto& outcome : outcomes) {
        json facts = json::array();
        json expected = json::object();
        json observed = json::object();
        for (const auto& fact : outcome.facts) {
            facts.push_back({{"fact", fact.description},
                             {"expected", fact.expected},
                             {"observed", fact.observed},
                             {"pass", fact.pass}});
            expected[fact.description] = fact.expected;
            observed[fact.description] = fact.observed;
        }
        passed += outcome.pass() ? 1 : 0;
        list.push_back({
            {"id", outcome.id},
            {"p", outcome.p},
            {"q", outcome.q},
            {"s", outcome.s ? json(*outcome.s) : json(nullptr)},
            {"facts", facts},
            {"expected", expected},
            {"observed", observed},
            {"pass", outcome.pass()},
        });
    }
    return {{"kind", "examples"}, {"examples", list}, {"passed", passed}, {"total", outcomes.size()}};
}

json claim_catalog_json() {
    json claims = json::array();
    for (ClaimId id : kAllClaims) {
        const auto& info = claim_info(id);
        json cases = json::array();
        for (const auto& block : info.cases) cases.push_back(condition_names(block));
        claims.push_back({
            {"id", std::string(info.key)},
            {"alias", std::string(info.alias)},
            {"citation", std::string(info.citation)},
            {"statement", std::string(info.statement)},
            {"hypothesis",
             {{"all_of", condition_names(info.global)}, {"any_case", cases}}},
            {"conditions", condition_names(hypothesis_conditions(id))},
            {"max_k", info.max_k ? json(*info.max_k) : json(nullptr)},
        });
    }
    return {{"kind", "claims"}, {"claims", claims}};
}

json search_json(ClaimId claim, std::string_view relaxed, const SweepConfig& bounds,
                 const std::optional<Counterexample>& first, const std::optional<std::vector<Counterexample>>& all) {
    json out = {
        {"kind", "search"},
        {"claim", claim_ref(claim)},
        {"relaxed_condition", std::string(relaxed)},
        {"config", to_json(bounds)},
        {"found", first.has_value()},
        {"counterexample", first ? to_json(*first) : json(nullptr)},
    };
    if (all) {
        json list = json::array();
        for (const auto& c : *all) list.push_back(to_json(c));
        out["violations"] = list;
    }
    return out;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

std::string CsvTable::str() const {
    auto field = [](const std::string& value) {
        if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
        std::string quoted = "\"";
        for (char c : value) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    };
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << field(cells[i]);
        out << "\n";
    };
    line(header_);
    for (const auto& row : rows_) line(row);
    return out.str();
}

std::string violations_csv(const std::vector<Counterexample>& violations) {
    CsvTable table({"claim", "relaxed_condition", "p", "q", "s", "k", "n", "relation", "divisor", "index",
                    "index_divisible", "term_divisible", "g_n", "alpha"});
    for (const auto& c : violations) {
        const auto& w = c.witness;
        table.add_row({std::string(claim_info(c.claim).alias), c.relaxed_condition, std::to_string(c.p),
                       std::to_string(c.q), std::to_string(c.s), std::to_string(c.k), std::to_string(c.n), w.relation,
                       w.divisor.get_str(), w.index.get_str(), w.index_divisible ? bool_text(*w.index_divisible) : "",
                       bool_text(w.term_divisible), w.g_n.get_str(), w.alpha ? std::to_string(*w.alpha) : ""});
    }
    return table.str();
}

std::string claim_catalog_csv() {
    CsvTable table({"id", "alias", "citation", "statement", "conditions"});
    for (ClaimId id : kAllClaims) {
        const auto& info = claim_info(id);
        std::string conditions;
        for (Condition c : hypothesis_conditions(id)) {
            conditions += (conditions.empty() ? "" : ";") + std::string(condition_name(c));
        }
        table.add_row({std::string(info.key), std::string(info.alias), std::string(info.citation),
                       std::string(info.statement), conditions});
    }
    return table.str();
}

std::string examples_csv(const std::vector<ExampleOutcome>& outcomes) {
    CsvTable table({"id", "p", "q", "fact", "expected", "observed", "pass"});
    for (const auto& outcome : outcomes) {
        for (const auto& fact : outcome.facts) {
            table.add_row({outcome.id, std::to_string(outcome.p), std::to_string(outcome.q), fact.description,
                           fact.expected, fact.observed, bool_text(fact.pass)});
        }
    }
    return table.str();
}

std::string survey_csv(const SurveyReport& report) {
    CsvTable table({"p", "q", "r", "s", "s_divides_r4", "k", "n", "failing_conditions", "applicable_claims"});
    for (const auto& row : report.rows) {
        std::string failing;
        for (Condition c : row.failing_conditions) failing += (failing.empty() ? "" : ";") + std::string(condition_name(c));
        std::string applicable;
        for (ClaimId id : row.applicable) {
            applicable += (applicable.empty() ? "" : ";") + std::string(claim_info(id).alias);
        }
        table.add_row({std::to_string(row.p), std::to_string(row.q), row.r.get_str(), std::to_string(row.s),
                       bool_text(row.s_divides_r_quarter), std::to_string(row.k), std::to_string(row.n), failing,
                       applicable});
    }
    return table.str();
}

std::string identities_csv(const IdentityReport& report) {
    CsvTable table({"p", "q", "identity", "applicable", "checked", "failures", "first_failure"});
    for (const auto& r : report.results) {
        table.add_row({std::to_string(report.p), std::to_string(report.q), r.name, bool_text(r.applicable),
                       std::to_string(r.checked), std::to_string(r.failures), r.first_failure});
    }
    return table.str();
}

}  // namespace gfib
