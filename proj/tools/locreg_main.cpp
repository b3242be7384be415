// locreg: regularity invariants of local ring presentations.
//
//   locreg run <file.lrh> [--json] [--trunc N]    execute a session file
//   locreg verify [--suite paper] [--trials N]    run the statement campaign
//   locreg explain <statement-id>                 describe a catalog entry
//
// Exit codes: 0 success, 1 a check returned false or a campaign trial failed,
// 2 input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "locreg/locreg.hpp"

namespace {

constexpr const char* kTruncEnvVar = "LOCREG_TRUNC_DEGREE";

std::optional<int> trunc_from_env() {
    const char* v = std::getenv(kTruncEnvVar);
    if (!v || !*v) return std::nullopt;
    try {
        int n = std::stoi(v);
        if (n < 2 || n > 16) throw std::out_of_range("range");
        return n;
    } catch (...) {
        std::cerr << "warning: ignoring invalid " << kTruncEnvVar << "='" << v << "'\n";
        return std::nullopt;
    }
}

int cmd_run(const std::string& path, bool json, std::optional<int> trunc) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    locreg::SessionAst ast;
    try {
        ast = locreg::parse_session(text);
    } catch (const locreg::SyntaxError& e) {
        std::cerr << locreg::format_diagnostic(text, e.kind(), e.what(), e.span);
        return 2;
    } catch (const locreg::UndeclaredName& e) {
        std::cerr << locreg::format_diagnostic(text, e.kind(), e.what(), e.span);
        return 2;
    } catch (const locreg::Redeclaration& e) {
        std::cerr << locreg::format_diagnostic(text, e.kind(), e.what(), e.span);
        return 2;
    }

    locreg::ExecOptions opts;
    opts.trunc_override = trunc ? trunc : trunc_from_env();
    locreg::RunReport report;
    try {
        report = locreg::execute(ast, opts);
    } catch (const locreg::ExecError& e) {
        std::cerr << locreg::format_diagnostic(text, e.kind(), e.what(), e.span);
        return 2;
    } catch (const locreg::Error& e) {
        std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
        return 2;
    }
    if (json) {
        std::cout << locreg::report_json(report).dump(2) << "\n";
    } else {
        std::cout << locreg::report_text(report);
    }
    return report.check_failed() ? 1 : 0;
}

std::vector<locreg::StatementId> resolve_statements(const std::vector<std::string>& names) {
    if (names.empty()) return locreg::all_statements();
    std::vector<locreg::StatementId> ids;
    for (const auto& n : names) {
        auto id = locreg::statement_from_name(n);
        if (!id) throw locreg::Error("unknown statement '" + n + "'");
        ids.push_back(*id);
    }
    return ids;
}

int cmd_verify(const std::string& field_name, int trials, std::uint64_t seed, bool json,
               const std::vector<std::string>& statement_names, int max_vars, int trunc) {
    locreg::FieldSpec spec;
    if (field_name == "QQ") {
        spec = locreg::FieldSpec::rationals();
    } else if (field_name.rfind("GF(", 0) == 0 && field_name.back() == ')') {
        spec = locreg::FieldSpec::prime_field(
            std::stoll(field_name.substr(3, field_name.size() - 4)));
    } else {
        std::cerr << "error: field must be QQ or GF(p)\n";
        return 2;
    }
    auto ids = resolve_statements(statement_names);
    locreg::CampaignReport report;
    if (spec.kind == locreg::FieldKind::Rationals) {
        locreg::GenParams<locreg::RationalField> params{locreg::RationalField{}};
        params.seed = seed;
        params.max_vars = max_vars;
        params.trunc_degree = trunc;
        report = locreg::campaign(params, trials, ids);
    } else {
        locreg::GenParams<locreg::PrimeFieldT> params{locreg::PrimeFieldT(spec.p)};
        params.seed = seed;
        params.max_vars = max_vars;
        params.trunc_degree = trunc;
        report = locreg::campaign(params, trials, ids);
    }
    if (json) {
        std::cout << locreg::campaign_json(report).dump(2) << "\n";
    } else {
        std::cout << locreg::campaign_text(report);
    }
    return report.has_failures() ? 1 : 0;
}

int cmd_explain(const std::string& name) {
    auto id = locreg::statement_from_name(name);
    if (!id) {
        std::cerr << "error: unknown statement '" << name << "'. Known statements:\n";
        for (const auto& s : locreg::statement_catalog()) std::cerr << "  " << s.name << "\n";
        return 2;
    }
    const auto& info = locreg::statement_info(*id);
    std::cout << info.name << "\n";
    std::cout << "  statement: " << info.statement << "\n";
    std::cout << "  checked on: " << locreg::shape_str(info.shape) << " instances\n";
    std::cout << "  method: " << info.method << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regularity invariants of local ring presentations"};
    app.require_subcommand(1);

    std::string run_path;
    bool run_json = false;
    int run_trunc = 0;
    auto* run = app.add_subcommand("run", "execute a session file (.lrh)");
    run->add_option("file", run_path, "session file")->required();
    run->add_flag("--json", run_json, "emit a JSON report");
    run->add_option("--trunc", run_trunc, "truncation degree (2..16); also settable via $" +
                                              std::string(kTruncEnvVar))
        ->check(CLI::Range(2, 16));

    std::string suite = "paper";
    std::string field_name = "GF(5)";
    int trials = 100;
    std::uint64_t seed = 42;
    bool verify_json = false;
    int max_vars = 4;
    int verify_trunc = 6;
    std::vector<std::string> statement_names;
    auto* verify = app.add_subcommand("verify", "re-check the statement catalog on random instances");
    verify->add_option("--suite", suite, "statement suite (paper)")
        ->check(CLI::IsMember({"paper"}));
    verify->add_option("--trials", trials, "instances per statement")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "campaign seed");
    verify->add_flag("--json", verify_json, "emit a JSON report");
    verify->add_option("--field", field_name, "coefficient field (QQ or GF(p))");
    verify->add_option("--statement", statement_names, "restrict to specific statements");
    verify->add_option("--max-vars", max_vars, "generator bound on variables")
        ->check(CLI::Range(1, 6));
    verify->add_option("--trunc", verify_trunc, "generator truncation degree")
        ->check(CLI::Range(2, 12));

    std::string explain_name;
    auto* explain = app.add_subcommand("explain", "describe a statement from the catalog");
    explain->add_option("statement", explain_name, "statement id (e.g. br_lem1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (run->parsed())
            return cmd_run(run_path, run_json,
                           run_trunc >= 2 ? std::optional<int>(run_trunc) : std::nullopt);
        if (verify->parsed())
            return cmd_verify(field_name, trials, seed, verify_json, statement_names, max_vars,
                              verify_trunc);
        if (explain->parsed()) return cmd_explain(explain_name);
    } catch (const locreg::Error& e) {
        std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
        return 2;
    }
    return 2;
}
