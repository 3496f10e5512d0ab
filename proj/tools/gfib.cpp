#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "gfib/claims.hpp"
#include "gfib/errors.hpp"
#include "gfib/golden.hpp"
#include "gfib/identities.hpp"
#include "gfib/modular.hpp"
#include "gfib/report.hpp"
#include "gfib/sequence.hpp"
#include "gfib/verifier.hpp"

namespace {

using nlohmann::json;

enum Exit : int {
    kOk = 0,
    kViolation = 1,
    kInputError = 2,
    kNeverApplicable = 3,
    kResourceCeiling = 4,
};

struct Output {
    std::string format = "json";
    std::string path;
    bool timing = false;
};

struct Document {
    json doc;
    std::string csv;
    std::string text;
};

void emit(const Output& out, const Document& document) {
    std::string body;
    if (out.format == "json") {
        body = document.doc.dump(2) + "\n";
    } else if (out.format == "csv") {
        body = document.csv;
    } else {
        body = document.text;
    }
    if (out.path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw gfib::InputError("cannot open output file " + out.path);
    file << body;
}

std::int64_t parse_i64(const std::string& text, const char* what) {
    std::int64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw gfib::InputError(std::string("invalid ") + what + ": '" + text + "'");
    return value;
}

gfib::IntRange parse_range(const std::string& text, const char* what) {
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos) {
        const auto v = parse_i64(text, what);
        return {v, v};
    }
    return {parse_i64(text.substr(0, colon), what), parse_i64(text.substr(colon + 1), what)};
}

// divisors-r | divisors-r4 | list:2,3,5 | range:N
gfib::SSource parse_s_source(const std::string& text) {
    if (text == "divisors-r") return gfib::SSource::divisors_of_r();
    if (text == "divisors-r4") return gfib::SSource::divisors_of_r_quarter();
    if (text.rfind("list:", 0) == 0) {
        std::vector<std::int64_t> values;
        std::stringstream items(text.substr(5));
        std::string item;
        while (std::getline(items, item, ',')) values.push_back(parse_i64(item, "s value"));
        return gfib::SSource::explicit_list(std::move(values));
    }
    if (text.rfind("range:", 0) == 0) return gfib::SSource::up_to(parse_i64(text.substr(6), "s bound"));
    throw gfib::InputError("unknown s source '" + text + "' (divisors-r, divisors-r4, list:A,B,..., range:N)");
}

gfib::ClaimId parse_claim(const std::string& name) {
    if (auto id = gfib::claim_from_name(name)) return *id;
    throw gfib::InputError("unknown claim '" + name + "'; run 'gfib claims list' for the alias table");
}

gfib::EvalMode parse_mode(const std::string& mode) {
    return mode == "modular" ? gfib::EvalMode::Modular : gfib::EvalMode::Exact;
}

struct SweepFlags {
    std::string claim;
    std::string p_range = "-8:8";
    std::string q_range = "-8:8";
    std::string s_source = "divisors-r";
    std::uint64_t k_max = 3;
    std::uint64_t n_max = 40;
    std::optional<std::uint64_t> t_max;
    std::string mode = "exact";
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& flags, bool with_claim) {
    if (with_claim) cmd->add_option("--claim", flags.claim, "Claim id or alias")->required();
    cmd->add_option("--p-range", flags.p_range, "p range lo:hi")->capture_default_str();
    cmd->add_option("--q-range", flags.q_range, "q range lo:hi")->capture_default_str();
    cmd->add_option("--s-source", flags.s_source, "divisors-r | divisors-r4 | list:A,B,... | range:N")->capture_default_str();
    cmd->add_option("--kmax", flags.k_max, "Largest exponent k")->capture_default_str();
    cmd->add_option("--nmax", flags.n_max, "Largest index n")->capture_default_str();
    cmd->add_option("--tmax", flags.t_max, "Bound for the lift condition (default: nmax)");
    cmd->add_option("--mode", flags.mode, "Evaluation mode")->capture_default_str()->check(CLI::IsMember({"exact", "modular"}));
}

gfib::SweepConfig make_config(const SweepFlags& flags, int workers, std::optional<double> budget) {
    gfib::SweepConfig config;
    config.p_range = parse_range(flags.p_range, "p range");
    config.q_range = parse_range(flags.q_range, "q range");
    config.s_source = parse_s_source(flags.s_source);
    config.k_max = flags.k_max;
    config.n_max = flags.n_max;
    config.t_max = flags.t_max.value_or(std::max<std::uint64_t>(flags.n_max, 1));
    config.mode = parse_mode(flags.mode);
    config.worker_count = workers;
    config.time_budget_seconds = budget;
    return config;
}

std::string witness_text(const gfib::Counterexample& c) {
    std::ostringstream out;
    out << "(p=" << c.p << ", q=" << c.q << ", s=" << c.s << ", k=" << c.k << ", n=" << c.n << ") " << c.witness.relation
        << " fails: divisor " << c.witness.divisor.get_str() << ", G_" << c.n << " = " << c.witness.g_n.get_str();
    return out.str();
}

Document verification_document(const gfib::VerificationReport& report, bool timing) {
    std::ostringstream text;
    text << gfib::claim_info(report.claim).alias << ": " << gfib::verdict_name(report.verdict) << "\n"
         << "  applicable (p, q, s) triples: " << report.applicable_triples << "\n"
         << "  points checked: " << report.points_checked << "\n"
         << "  violations: " << report.violations.size() << "\n";
    for (const auto& v : report.violations) text << "  " << witness_text(v) << "\n";
    if (timing) text << "  elapsed: " << report.elapsed.count() << " s\n";
    return {gfib::to_json(report, timing), gfib::violations_csv(report.violations), text.str()};
}

int verdict_exit(gfib::Verdict verdict) {
    switch (verdict) {
        case gfib::Verdict::AllPass: return kOk;
        case gfib::Verdict::Violations: return kViolation;
        case gfib::Verdict::HypothesisNeverApplicable: return kNeverApplicable;
    }
    return kViolation;
}

int default_workers() {
    const int procs = omp_get_num_procs();
    return procs > 0 ? procs : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized <p,q>-Fibonacci sequences: exact and modular terms, claim verification, "
                 "counterexample search"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    int workers = default_workers();
    std::optional<double> budget;
    std::uint64_t n_ceiling = gfib::kDefaultRangeCeiling;
    app.add_option("--format", out.format, "Output format")->capture_default_str()
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output,-o", out.path, "Write the report to a file instead of stdout");
    app.add_option("--workers", workers, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_flag("--timing", out.timing, "Include elapsed wall-clock time in reports");
    app.add_option("--time-budget", budget, "Abort with exit code 4 after this many seconds")
        ->check(CLI::PositiveNumber);
    app.add_option("--n-ceiling", n_ceiling, "Largest exact index or range length accepted")->capture_default_str();

    // compute
    auto* compute = app.add_subcommand("compute", "Print G_n exactly, or modulo m with --mod");
    std::int64_t cp = 0;
    std::int64_t cq = 0;
    std::string cn;
    std::string cmod;
    compute->add_option("-p", cp, "Coefficient p")->required();
    compute->add_option("-q", cq, "Coefficient q")->required();
    compute->add_option("-n", cn, "Index N or range A:B (decimal, any length with --mod)")->required();
    compute->add_option("--mod", cmod, "Modulus m >= 1 (decimal)");

    // claims list
    auto* claims = app.add_subcommand("claims", "Claim catalog");
    claims->require_subcommand(1);
    auto* claims_list = claims->add_subcommand("list", "List every claim with aliases, hypotheses and citations");

    // check
    auto* check = app.add_subcommand("check", "Verify one claim at a single (p, q)");
    std::string check_claim;
    std::int64_t kp = 0;
    std::int64_t kq = 0;
    std::optional<std::int64_t> ks;
    SweepFlags check_flags;
    check->add_option("--claim", check_claim, "Claim id or alias")->required();
    check->add_option("-p", kp, "Coefficient p")->required();
    check->add_option("-q", kq, "Coefficient q")->required();
    check->add_option("-s", ks, "Modulus base s (default: every positive divisor of |r|)");
    check->add_option("--kmax", check_flags.k_max, "Largest exponent k")->capture_default_str();
    check->add_option("--nmax", check_flags.n_max, "Largest index n")->capture_default_str();
    check->add_option("--tmax", check_flags.t_max, "Bound for the lift condition (default: nmax)");
    check->add_option("--mode", check_flags.mode, "Evaluation mode")->capture_default_str()
        ->check(CLI::IsMember({"exact", "modular"}));

    // hypothesis
    auto* hypothesis = app.add_subcommand("hypothesis", "Show the hypothesis conditions of a claim at (p, q, s)");
    std::string hyp_claim;
    std::int64_t hp = 0;
    std::int64_t hq = 0;
    std::int64_t hs = 0;
    std::uint64_t ht = 50;
    hypothesis->add_option("--claim", hyp_claim, "Claim id or alias")->required();
    hypothesis->add_option("-p", hp, "Coefficient p")->required();
    hypothesis->add_option("-q", hq, "Coefficient q")->required();
    hypothesis->add_option("-s", hs, "Modulus base s")->required();
    hypothesis->add_option("--tmax", ht, "Bound for the lift condition")->capture_default_str();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Verify one claim over a (p, q) grid");
    SweepFlags sweep_flags;
    add_sweep_flags(sweep, sweep_flags, true);

    // search
    auto* search = app.add_subcommand("search", "Look for counterexamples with one hypothesis condition dropped");
    SweepFlags search_flags;
    search_flags.p_range = "-10:10";
    search_flags.q_range = "-10:10";
    search_flags.s_source = "range:20";
    search_flags.n_max = 12;
    std::string relax;
    bool first_only = false;
    add_sweep_flags(search, search_flags, true);
    search->add_option("--relax", relax, "Condition name to drop")->required();
    search->add_flag("--first-only", first_only, "Stop at the first counterexample in scan order");

    // examples
    auto* examples = app.add_subcommand("examples", "Recompute the twelve published examples");

    // survey
    auto* survey = app.add_subcommand("survey", "Catalog (p, q, s) where s^k | n <=> s^k | G_n fails");
    SweepFlags survey_flags;
    survey_flags.n_max = 200;
    add_sweep_flags(survey, survey_flags, false);

    // rank
    auto* rank = app.add_subcommand("rank", "Smallest n >= 1 with s | G_n");
    std::int64_t rp = 0;
    std::int64_t rq = 0;
    std::int64_t rs = 0;
    std::uint64_t rbound = 1000;
    rank->add_option("-p", rp, "Coefficient p")->required();
    rank->add_option("-q", rq, "Coefficient q")->required();
    rank->add_option("-s", rs, "Modulus s >= 2")->required();
    rank->add_option("--bound", rbound, "Largest n searched")->capture_default_str();

    // identities
    auto* identities = app.add_subcommand("identities", "Cross-check the algebraic expansions at one (p, q)");
    std::int64_t ip = 0;
    std::int64_t iq = 0;
    std::uint64_t inmax = 30;
    std::vector<std::int64_t> is_list = {2, 3, 5, 7};
    identities->add_option("-p", ip, "Coefficient p")->required();
    identities->add_option("-q", iq, "Coefficient q")->required();
    identities->add_option("--nmax", inmax, "Largest index")->capture_default_str();
    identities->add_option("-s", is_list, "Values of s for the index-multiplication checks")->capture_default_str()->delimiter(',');

    // Environment overrides replace the built-in defaults; explicit flags still win.
    try {
        if (const char* env = std::getenv("GFIB_WORKERS")) workers = static_cast<int>(parse_i64(env, "GFIB_WORKERS"));
        if (const char* env = std::getenv("GFIB_FORMAT")) out.format = env;
    } catch (const gfib::InputError& e) {
        std::cerr << "gfib: " << e.what() << "\n";
        return kInputError;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (workers < 1) throw gfib::InputError("worker count must be positive");
        if (out.format != "json" && out.format != "csv" && out.format != "text") {
            throw gfib::InputError("unknown output format '" + out.format + "'");
        }
        if (*compute) {
            const gfib::SequenceParams params(cp, cq);
            const auto colon = cn.find(':');
            const std::string lo_text = colon == std::string::npos ? cn : cn.substr(0, colon);
            const std::string hi_text = colon == std::string::npos ? cn : cn.substr(colon + 1);
            const mpz_class lo = gfib::parse_index(lo_text);
            const mpz_class hi = gfib::parse_index(hi_text);
            if (lo > hi) throw gfib::InputError("empty index range");
            if (hi - lo >= n_ceiling) throw gfib::ResourceError("index range longer than the n ceiling");

            json values = json::array();
            gfib::CsvTable table({"p", "q", "n", "mod", "value"});
            std::string text;
            auto record = [&](const mpz_class& n, const mpz_class& value) {
                values.push_back({{"n", n.get_str()}, {"value", value.get_str()}});
                table.add_row({std::to_string(cp), std::to_string(cq), n.get_str(), cmod, value.get_str()});
                text += (colon == std::string::npos ? "" : "G_" + n.get_str() + " = ") + value.get_str() + "\n";
            };
            if (!cmod.empty()) {
                const mpz_class m = gfib::parse_index(cmod);
                if (m == 0) throw gfib::InputError("modulus must be >= 1");
                for (mpz_class n = lo; n <= hi; ++n) record(n, gfib::g_mod(params, n, m));
            } else {
                if (!hi.fits_ulong_p()) throw gfib::InputError("indices beyond 64 bits need --mod");
                if (hi.get_ui() >= n_ceiling) {
                    throw gfib::ResourceError("exact index above the n ceiling; use --mod or raise --n-ceiling");
                }
                const auto terms = gfib::g_range(params, hi.get_ui(), n_ceiling);
                for (auto n = lo.get_ui(); n <= hi.get_ui(); ++n) record(mpz_class(n), terms[n]);
            }
            json doc = {{"kind", "compute"},
                        {"p", cp},
                        {"q", cq},
                        {"mod", cmod.empty() ? json(nullptr) : json(cmod)},
                        {"values", values}};
            emit(out, {doc, table.str(), text});
            return kOk;
        }

        if (*claims && *claims_list) {
            std::ostringstream text;
            for (gfib::ClaimId id : gfib::kAllClaims) {
                const auto& info = gfib::claim_info(id);
                text << info.alias << "  " << info.key << "  [" << info.citation << "]\n    " << info.statement << "\n";
            }
            emit(out, {gfib::claim_catalog_json(), gfib::claim_catalog_csv(), text.str()});
            return kOk;
        }

        if (*check) {
            SweepFlags flags = check_flags;
            flags.p_range = std::to_string(kp);
            flags.q_range = std::to_string(kq);
            flags.s_source = ks ? "list:" + std::to_string(*ks) : "divisors-r";
            auto config = make_config(flags, workers, budget);
            const auto report = gfib::verify_claim(parse_claim(check_claim), config);
            emit(out, verification_document(report, out.timing));
            return verdict_exit(report.verdict);
        }

        if (*hypothesis) {
            const auto id = parse_claim(hyp_claim);
            const auto report = gfib::hypothesis_check(id, gfib::SequenceParams(hp, hq), hs, {ht});
            std::ostringstream text;
            gfib::CsvTable table({"claim", "condition", "holds"});
            for (const auto& value : report.conditions) {
                text << (value.holds ? "  yes  " : "  no   ") << gfib::condition_name(value.condition) << "  "
                     << gfib::condition_text(value.condition) << "\n";
                table.add_row({std::string(gfib::claim_info(id).alias), std::string(gfib::condition_name(value.condition)),
                               value.holds ? "true" : "false"});
            }
            text << "applicable: " << (report.applicable ? "yes" : "no") << "\n";
            if (!report.note.empty()) text << report.note << "\n";
            emit(out, {gfib::to_json(report), table.str(), text.str()});
            return report.applicable ? kOk : kNeverApplicable;
        }

        if (*sweep) {
            const auto config = make_config(sweep_flags, workers, budget);
            const auto report = gfib::verify_claim(parse_claim(sweep_flags.claim), config);
            emit(out, verification_document(report, out.timing));
            return verdict_exit(report.verdict);
        }

        if (*search) {
            const auto id = parse_claim(search_flags.claim);
            const auto config = make_config(search_flags, workers, budget);
            std::optional<gfib::Counterexample> first;
            std::optional<std::vector<gfib::Counterexample>> all;
            if (first_only) {
                first = gfib::search_counterexample(id, relax, config);
            } else {
                all = gfib::counterexample_set(id, relax, config);
                if (!all->empty()) first = all->front();
            }
            std::vector<gfib::Counterexample> listed = all ? *all : std::vector<gfib::Counterexample>{};
            if (!all && first) listed.push_back(*first);
            std::ostringstream text;
            text << gfib::claim_info(id).alias << " without " << relax << ": "
                 << (first ? std::to_string(all ? all->size() : 1) + " counterexample(s)" : "no counterexample") << "\n";
            for (const auto& c : listed) text << "  " << witness_text(c) << "\n";
            emit(out, {gfib::search_json(id, relax, config, first, all), gfib::violations_csv(listed), text.str()});
            return first ? kOk : kViolation;
        }

        if (*examples) {
            const auto outcomes = gfib::reproduce_examples();
            std::size_t passed = 0;
            std::ostringstream text;
            for (const auto& outcome : outcomes) {
                passed += outcome.pass() ? 1 : 0;
                text << "Example " << outcome.id << " (p=" << outcome.p << ", q=" << outcome.q << "): "
                     << (outcome.pass() ? "pass" : "FAIL") << "\n";
                for (const auto& fact : outcome.facts) {
                    text << "    " << fact.description << ": expected " << fact.expected << ", observed " << fact.observed
                         << "\n";
                }
            }
            text << passed << "/" << outcomes.size() << " examples reproduced\n";
            emit(out, {gfib::examples_json(outcomes), gfib::examples_csv(outcomes), text.str()});
            return passed == outcomes.size() ? kOk : kViolation;
        }

        if (*survey) {
            const auto config = make_config(survey_flags, workers, budget);
            const auto report = gfib::converse_survey(config);
            std::ostringstream text;
            text << report.note << "\n" << report.rows.size() << " of " << report.triples_examined
                 << " triples fail the equivalence\n";
            for (const auto& row : report.rows) {
                text << "  p=" << row.p << " q=" << row.q << " r=" << row.r.get_str() << " s=" << row.s << " k=" << row.k
                     << " n=" << row.n << "\n";
            }
            emit(out, {gfib::to_json(report), gfib::survey_csv(report), text.str()});
            return kOk;
        }

        if (*rank) {
            const auto found = gfib::rank_of_apparition(gfib::SequenceParams(rp, rq), rs, rbound);
            json doc = {{"kind", "rank"},
                        {"p", rp},
                        {"q", rq},
                        {"s", rs},
                        {"bound", rbound},
                        {"rank", found ? json(*found) : json(nullptr)}};
            gfib::CsvTable table({"p", "q", "s", "bound", "rank"});
            table.add_row({std::to_string(rp), std::to_string(rq), std::to_string(rs), std::to_string(rbound),
                           found ? std::to_string(*found) : ""});
            emit(out, {doc, table.str(), (found ? std::to_string(*found) : std::string("none")) + "\n"});
            return kOk;
        }

        if (*identities) {
            const auto report = gfib::identity_suite(gfib::SequenceParams(ip, iq), inmax, is_list);
            std::ostringstream text;
            for (const auto& r : report.results) {
                text << (r.applicable ? (r.passed() ? "pass " : "FAIL ") : "skip ") << r.name << "  (" << r.checked
                     << " checks)";
                if (!r.first_failure.empty()) text << "  first failure: " << r.first_failure;
                text << "\n";
            }
            emit(out, {gfib::to_json(report), gfib::identities_csv(report), text.str()});
            return report.all_pass() ? kOk : kViolation;
        }
    } catch (const gfib::ResourceError& e) {
        std::cerr << "gfib: resource ceiling: " << e.what() << "\n";
        return kResourceCeiling;
    } catch (const std::invalid_argument& e) {
        std::cerr << "gfib: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "gfib: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
