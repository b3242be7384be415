#pragma once

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "statements.hpp"

namespace locreg {

inline constexpr const char* kVersion = "0.1.0";

struct FailureRecord {
    std::string statement;
    int trial = 0;
    std::string details;
    std::string instance;
};

struct StatementStats {
    std::string name;
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    int skip_unknown = 0;
    int skip_unstable = 0;
    int skip_out_of_class = 0;
};

struct CampaignReport {
    std::string field;
    std::uint64_t seed = 0;
    int trials = 0;
    int max_vars = 0, max_relations = 0, max_gen_degree = 0, max_ideal_gens = 0, trunc_degree = 0;
    std::vector<StatementStats> stats;
    std::vector<FailureRecord> failures;
    int total_pass = 0, total_fail = 0, total_skipped = 0;
    double wall_seconds = 0.0;  // reported in the text rendering only

    bool has_failures() const { return total_fail > 0; }
    double skip_rate() const {
        int total = total_pass + total_fail + total_skipped;
        return total == 0 ? 0.0 : static_cast<double>(total_skipped) / static_cast<double>(total);
    }
};

inline constexpr int kMaxStoredFailures = 5;  // per statement, full digests kept

// Run `trials` instances of every requested statement. Deterministic: the
// per-trial seed is a pure mix of the campaign seed, the statement and the
// trial index, so identical inputs give identical reports.
template <CoeffField F>
CampaignReport campaign(const GenParams<F>& params, int trials,
                        const std::vector<StatementId>& statements) {
    if (trials < 1) throw Error("campaign: trials must be >= 1");
    auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.field = params.field.spec().name();
    report.seed = params.seed;
    report.trials = trials;
    report.max_vars = params.max_vars;
    report.max_relations = params.max_relations;
    report.max_gen_degree = params.max_gen_degree;
    report.max_ideal_gens = params.max_ideal_gens;
    report.trunc_degree = params.trunc_degree;

    for (std::size_t si = 0; si < statements.size(); ++si) {
        StatementId id = statements[si];
        const StatementInfo& info = statement_info(id);
        StatementStats stats;
        stats.name = info.name;
        int stored = 0;
        for (int t = 0; t < trials; ++t) {
            GenParams<F> p = params;
            p.seed = mix_seed(params.seed, mix_seed(0x1000 + static_cast<std::uint64_t>(
                                                                 static_cast<int>(id)),
                                                    static_cast<std::uint64_t>(t)));
            Verdict v{id, Outcome::Fail, std::nullopt, "", ""};
            try {
                Instance<F> inst = gen_instance(p, info.shape);
                v = check_statement(id, inst, p);
            } catch (const Error& e) {
                v.details = std::string("exception(") + e.kind() + "): " + e.what();
            }
            switch (v.outcome) {
                case Outcome::Pass:
                    ++stats.pass;
                    break;
                case Outcome::Fail:
                    ++stats.fail;
                    if (stored < kMaxStoredFailures) {
                        report.failures.push_back(
                            FailureRecord{info.name, t, v.details, v.instance_digest});
                        ++stored;
                    }
                    break;
                case Outcome::Skipped:
                    ++stats.skipped;
                    if (v.skip_reason == SkipReason::UnknownBlocked) ++stats.skip_unknown;
                    if (v.skip_reason == SkipReason::UnstableMu) ++stats.skip_unstable;
                    if (v.skip_reason == SkipReason::OutOfClass) ++stats.skip_out_of_class;
                    break;
            }
        }
        report.total_pass += stats.pass;
        report.total_fail += stats.fail;
        report.total_skipped += stats.skipped;
        report.stats.push_back(std::move(stats));
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// JSON rendering. Wall time is deliberately omitted so identical campaigns
// serialize byte-identically.
inline nlohmann::ordered_json campaign_json(const CampaignReport& r) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["params"] = {{"field", r.field},
                   {"seed", r.seed},
                   {"trials", r.trials},
                   {"max_vars", r.max_vars},
                   {"max_relations", r.max_relations},
                   {"max_gen_degree", r.max_gen_degree},
                   {"max_ideal_gens", r.max_ideal_gens},
                   {"trunc_degree", r.trunc_degree}};
    nlohmann::ordered_json stmts = nlohmann::ordered_json::array();
    for (const auto& s : r.stats) {
        stmts.push_back({{"id", s.name},
                         {"pass", s.pass},
                         {"fail", s.fail},
                         {"skipped", s.skipped},
                         {"skip_reasons",
                          {{"unknown_blocked", s.skip_unknown},
                           {"unstable_mu", s.skip_unstable},
                           {"out_of_class", s.skip_out_of_class}}}});
    }
    j["statements"] = std::move(stmts);
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"statement", f.statement},
                         {"trial", f.trial},
                         {"details", f.details},
                         {"instance", f.instance}});
    j["failures"] = std::move(fails);
    j["totals"] = {{"pass", r.total_pass},
                   {"fail", r.total_fail},
                   {"skipped", r.total_skipped},
                   {"skip_rate", r.skip_rate()}};
    return j;
}

inline std::string campaign_text(const CampaignReport& r) {
    std::string out;
    out += "campaign: field=" + r.field + " seed=" + std::to_string(r.seed) +
           " trials=" + std::to_string(r.trials) + " N=" + std::to_string(r.trunc_degree) + "\n";
    for (const auto& s : r.stats) {
        out += "  " + s.name;
        out.append(s.name.size() < 20 ? 20 - s.name.size() : 1, ' ');
        out += "pass " + std::to_string(s.pass) + "  fail " + std::to_string(s.fail) + "  skip " +
               std::to_string(s.skipped);
        if (s.skipped > 0) {
            out += " (unknown " + std::to_string(s.skip_unknown) + ", unstable " +
                   std::to_string(s.skip_unstable) + ")";
        }
        out += "\n";
    }
    for (const auto& f : r.failures) {
        out += "FAIL " + f.statement + " trial " + std::to_string(f.trial) + ": " + f.details +
               "\n  instance: " + f.instance + "\n";
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "totals: pass %d, fail %d, skip %d (skip rate %.1f%%), %.2fs\n",
                  r.total_pass, r.total_fail, r.total_skipped, 100.0 * r.skip_rate(),
                  r.wall_seconds);
    out += buf;
    return out;
}

inline std::vector<StatementId> all_statements() {
    std::vector<StatementId> ids;
    for (const auto& s : statement_catalog()) ids.push_back(s.id);
    return ids;
}

}  // namespace locreg
