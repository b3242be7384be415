#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "campaign.hpp"
#include "invariants.hpp"
#include "session.hpp"

namespace locreg {

struct ExecOptions {
    std::optional<int> trunc_override;  // CLI/env override for the default truncation degree
};

struct ReportEntry {
    std::string query;
    std::string subject;
    std::optional<long long> value;
    std::optional<std::string> verdict;
    std::vector<std::string> caveats;
};

struct RunFailure {
    std::string query, subject, reason;
};

struct RunReport {
    std::string field = "QQ";
    int trunc_degree = 6;
    std::vector<ReportEntry> entries;
    std::vector<RunFailure> failures;

    bool check_failed() const { return !failures.empty(); }
};

// Execution-time diagnostic carrying the offending statement's span.
struct ExecError : Error {
    ExecError(const std::string& msg, SourceSpan span) : Error(msg), span(span) {}
    const char* kind() const override { return "ExecError"; }
    SourceSpan span;
};

namespace exec_detail {

template <CoeffField F>
Poly<F> bind_poly(const F& f, const AstPoly& ap, const LocalRingPres<F>& ring) {
    Poly<F> p(f, ring.nvars());
    for (const auto& t : ap.terms) {
        Monomial m(ring.nvars());
        for (const auto& [var, exp] : t.factors) {
            int idx = -1;
            for (int i = 0; i < ring.nvars(); ++i)
                if (ring.vars[static_cast<std::size_t>(i)] == var) idx = i;
            if (idx < 0) throw ExecError("variable '" + var + "' not in ring ambient", ap.span);
            m.e[static_cast<std::size_t>(idx)] += exp;
        }
        p.add_term(m, f.from_int(t.coeff));
    }
    return p;
}

template <CoeffField F>
class SessionRunner {
  public:
    SessionRunner(F field, const ExecOptions& opts) : field_(field) {
        if (opts.trunc_override) trunc_ = *opts.trunc_override;
        if (trunc_ < 2) throw Error("truncation degree must be >= 2");
    }

    RunReport run(const SessionAst& ast) {
        RunReport report;
        report.field = field_.spec().name();
        for (const auto& stmt : ast.statements) {
            SourceSpan span = statement_span(stmt);
            try {
                std::visit([&](const auto& s) { handle(s, report); }, stmt);
            } catch (const ExecError&) {
                throw;
            } catch (const Error& e) {
                throw ExecError(std::string(e.kind()) + ": " + e.what(), span);
            }
        }
        report.trunc_degree = trunc_;
        return report;
    }

  private:
    void handle(const FieldDecl&, RunReport&) {}

    void handle(const SetOption& s, RunReport&) {
        if (s.option == "trunc_degree") {
            if (s.value < 2 || s.value > 16)
                throw ExecError("trunc_degree must be between 2 and 16", s.span);
            trunc_ = static_cast<int>(s.value);
        } else {
            auto it = rings_.find(*s.subject);
            if (it == rings_.end()) throw ExecError("unknown ring", s.span);
            if (s.value < 0) throw ExecError("dim_override must be >= 0", s.span);
            it->second.dim_override = static_cast<int>(s.value);
        }
    }

    void handle(const RingDecl& d, RunReport&) {
        std::vector<Poly<F>> rels;
        LocalRingPres<F> shell{field_, d.vars, {}, trunc_, std::nullopt};
        for (const auto& ap : d.relations) rels.push_back(bind_poly(field_, ap, shell));
        rings_.emplace(d.name, make_ring(field_, d.vars, std::move(rels), trunc_));
    }

    void handle(const IdealDecl& d, RunReport&) {
        const LocalRingPres<F>& ring = ring_at(d.ring, d.span);
        std::vector<Poly<F>> gens;
        for (const auto& ap : d.gens) gens.push_back(bind_poly(field_, ap, ring));
        ideals_.emplace(d.name, make_ideal(ring, std::move(gens)));
    }

    void handle(const MapDecl& d, RunReport&) {
        const LocalRingPres<F>& src = ring_at(d.source, d.span);
        const LocalRingPres<F>& tgt = ring_at(d.target, d.span);
        std::vector<Poly<F>> images;
        for (const auto& ap : d.images) images.push_back(bind_poly(field_, ap, tgt));
        maps_.emplace(d.name, make_map(src, tgt, std::move(images),
                                       std::min(src.trunc_degree, tgt.trunc_degree)));
    }

    void handle(const QuotientDecl& d, RunReport&) {
        auto q = quotient(ring_at(d.base_ring, d.span), ideal_at(d.ideal, d.span));
        rings_.emplace(d.ring_name, std::move(q.ring));
        maps_.emplace(d.map_name, std::move(q.projection));
    }

    void handle(const ComposeDecl& d, RunReport&) {
        maps_.emplace(d.name, compose(map_at(d.first, d.span), map_at(d.second, d.span)));
    }

    void handle(const DiagramDecl& d, RunReport&) {
        if (d.is_square) {
            diagrams_.emplace(d.name, make_square(map_at(d.arrows[0], d.span),
                                                  map_at(d.arrows[1], d.span),
                                                  map_at(d.arrows[2], d.span),
                                                  map_at(d.arrows[3], d.span), d.orientation));
        } else {
            diagrams_.emplace(d.name,
                              make_triangle(map_at(d.arrows[0], d.span),
                                            map_at(d.arrows[1], d.span), d.orientation));
        }
    }

    void handle(const ComputeQuery& q, RunReport& report) {
        ReportEntry e;
        e.query = q.invariant;
        e.subject = join(q.args);
        const std::string& op = q.invariant;
        if (op == "edim") {
            e.value = edim(ring_arg(q, 0));
        } else if (op == "dim") {
            set_opt(e, krull_dim(ring_arg(q, 0)));
        } else if (op == "cdim") {
            set_opt(e, cdim(ring_arg(q, 0)));
        } else if (op == "delta") {
            e.value = delta(ideal_arg(q, 0));
        } else if (op == "delta_phi") {
            const auto& phi = map_arg(q, 0);
            const auto& I = ideal_arg(q, 1);
            if (!(I.ring == phi.source))
                throw ExecError("delta_phi: ideal does not live over the map's source", q.span);
            e.value = delta_phi(phi, I);
            e.caveats.push_back("verified_degree=" + std::to_string(phi.verified_degree));
        } else if (op == "mu") {
            MuResult m = mu(ideal_arg(q, 0));
            e.value = m.value;
            if (!m.stable) e.caveats.push_back("unstable");
        } else if (op == "eps2") {
            auto r = eps2(ring_arg(q, 0));
            if (!r) {
                e.verdict = "unknown";
            } else {
                e.value = r->value;
                if (!r->stable) e.caveats.push_back("unstable");
            }
        } else if (op == "rd" || op == "triangle_rd" || op == "square_rd") {
            require_args(q.args, 1, q.span);
            if (auto it = maps_.find(q.args[0]); it != maps_.end() && op == "rd") {
                e.value = rd(it->second);
                e.caveats.push_back("verified_degree=" +
                                    std::to_string(it->second.verified_degree));
            } else if (auto dt = diagrams_.find(q.args[0]); dt != diagrams_.end()) {
                const auto& dia = dt->second;
                bool square = dia.kind == DiagramShape<F>::Kind::Square;
                if (op == "triangle_rd" && square)
                    throw ExecError("triangle_rd: subject is a square", q.span);
                if (op == "square_rd" && !square)
                    throw ExecError("square_rd: subject is a triangle", q.span);
                e.value = square ? square_rd(dia) : triangle_rd(dia);
            } else {
                throw ExecError(op + ": expects a map or diagram", q.span);
            }
        } else {
            throw ExecError("unknown invariant '" + op + "'", q.span);
        }
        report.entries.push_back(std::move(e));
    }

    void handle(const CheckQuery& q, RunReport& report) {
        ReportEntry e;
        e.query = q.predicate;
        e.subject = join(q.args);
        const std::string& op = q.predicate;
        if (op == "basically_regular") {
            require_args(q.args, 1, q.span);
            if (auto it = maps_.find(q.args[0]); it != maps_.end()) {
                e.verdict = is_basically_regular(it->second) ? "true" : "false";
                e.caveats.push_back("verified_degree=" +
                                    std::to_string(it->second.verified_degree));
            } else if (auto dt = diagrams_.find(q.args[0]); dt != diagrams_.end()) {
                const auto& dia = dt->second;
                int v = dia.kind == DiagramShape<F>::Kind::Square ? square_rd(dia)
                                                                  : triangle_rd(dia);
                e.verdict = v == 0 ? "true" : "false";
            } else {
                throw ExecError("basically_regular: expects a map or diagram", q.span);
            }
        } else if (op == "weakly_regular") {
            e.verdict = tri_str(is_weakly_regular(map_arg(q, 0)));
        } else if (op == "regular") {
            e.verdict = tri_str(is_regular(ring_arg(q, 0)));
        } else if (op == "flat") {
            FlatStatus fs = flatness_status(map_arg(q, 0));
            e.verdict = fs.kind == FlatStatus::Kind::Flat      ? "true"
                        : fs.kind == FlatStatus::Kind::NotFlat ? "false"
                                                               : "unknown";
            if (!fs.witness.empty()) e.caveats.push_back("witness: " + fs.witness);
        } else if (op == "contained_in_m2") {
            e.verdict = contained_in_m2(ideal_arg(q, 0)) ? "true" : "false";
        } else {
            throw ExecError("unknown predicate '" + op + "'", q.span);
        }
        if (e.verdict == "false")
            report.failures.push_back(RunFailure{e.query, e.subject, "check returned false"});
        report.entries.push_back(std::move(e));
    }

    // --- helpers ---
    static std::string join(const std::vector<std::string>& args) {
        std::string s;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) s += " ";
            s += args[i];
        }
        return s;
    }
    static void require_args(const std::vector<std::string>& args, std::size_t n,
                             SourceSpan span) {
        if (args.size() != n)
            throw ExecError("expected " + std::to_string(n) + " argument(s)", span);
    }
    static void set_opt(ReportEntry& e, std::optional<int> v) {
        if (v) {
            e.value = *v;
        } else {
            e.verdict = "unknown";
        }
    }
    const LocalRingPres<F>& ring_at(const std::string& name, SourceSpan span) const {
        auto it = rings_.find(name);
        if (it == rings_.end()) throw ExecError("'" + name + "' is not a ring", span);
        return it->second;
    }
    const IdealPres<F>& ideal_at(const std::string& name, SourceSpan span) const {
        auto it = ideals_.find(name);
        if (it == ideals_.end()) throw ExecError("'" + name + "' is not an ideal", span);
        return it->second;
    }
    const LocalMapPres<F>& map_at(const std::string& name, SourceSpan span) const {
        auto it = maps_.find(name);
        if (it == maps_.end()) throw ExecError("'" + name + "' is not a map", span);
        return it->second;
    }
    template <class Q>
    const LocalRingPres<F>& ring_arg(const Q& q, std::size_t i) const {
        if (q.args.size() <= i) throw ExecError("missing argument", q.span);
        return ring_at(q.args[i], q.span);
    }
    template <class Q>
    const IdealPres<F>& ideal_arg(const Q& q, std::size_t i) const {
        if (q.args.size() <= i) throw ExecError("missing argument", q.span);
        return ideal_at(q.args[i], q.span);
    }
    template <class Q>
    const LocalMapPres<F>& map_arg(const Q& q, std::size_t i) const {
        if (q.args.size() <= i) throw ExecError("missing argument", q.span);
        return map_at(q.args[i], q.span);
    }

    F field_;
    int trunc_ = 6;
    std::map<std::string, LocalRingPres<F>> rings_;
    std::map<std::string, IdealPres<F>> ideals_;
    std::map<std::string, LocalMapPres<F>> maps_;
    std::map<std::string, DiagramShape<F>> diagrams_;
};

}  // namespace exec_detail

inline RunReport execute(const SessionAst& ast, const ExecOptions& opts = {}) {
    FieldSpec spec = FieldSpec::rationals();
    for (const auto& s : ast.statements)
        if (const auto* f = std::get_if<FieldDecl>(&s)) {
            spec = f->spec;
            break;
        }
    if (spec.kind == FieldKind::Rationals) {
        exec_detail::SessionRunner<RationalField> runner(RationalField{}, opts);
        return runner.run(ast);
    }
    exec_detail::SessionRunner<PrimeFieldT> runner(PrimeFieldT(spec.p), opts);
    return runner.run(ast);
}

inline nlohmann::ordered_json report_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["options"] = {{"field", r.field}, {"trunc_degree", r.trunc_degree}};
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json je;
        je["query"] = e.query;
        je["subject"] = e.subject;
        if (e.value) je["value"] = *e.value;
        if (e.verdict) je["verdict"] = *e.verdict;
        je["caveats"] = e.caveats;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"query", f.query}, {"subject", f.subject}, {"reason", f.reason}});
    j["failures"] = std::move(fails);
    return j;
}

inline std::string report_text(const RunReport& r) {
    std::string out;
    for (const auto& e : r.entries) {
        out += e.query + " " + e.subject + " = ";
        if (e.value) out += std::to_string(*e.value);
        if (e.verdict) out += *e.verdict;
        for (const auto& c : e.caveats) out += "  [" + c + "]";
        out += "\n";
    }
    if (!r.failures.empty()) {
        out += "failed checks:\n";
        for (const auto& f : r.failures) out += "  " + f.query + " " + f.subject + "\n";
    }
    return out;
}

// Render a parse/execution diagnostic against the session text.
inline std::string format_diagnostic(const std::string& text, const std::string& kind,
                                     const std::string& message, SourceSpan span) {
    std::string out = "error (" + kind + ") at line " + std::to_string(span.line) + ", column " +
                      std::to_string(span.column) + ": " + message + "\n";
    // show the offending line
    int line = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size() && line < span.line; ++i)
        if (text[i] == '\n') {
            ++line;
            start = i + 1;
        }
    std::size_t end = start;
    while (end < text.size() && text[end] != '\n') ++end;
    if (start < text.size()) {
        out += "  " + text.substr(start, end - start) + "\n";
        out += "  " + std::string(static_cast<std::size_t>(std::max(0, span.column - 1)), ' ') +
               "^\n";
    }
    return out;
}

}  // namespace locreg
