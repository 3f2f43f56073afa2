#include "bkv/harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "bkv/check.hpp"
#include "bkv/graph6.hpp"
#include "bkv/parallel.hpp"

namespace bkv {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

GraphFacts compute_facts(const Graph& g, const Budget& budget) {
    GraphFacts f;
    f.n = g.order();
    f.m = g.size();
    if (f.n == 0) return f;
    const DegreeStats ds = degree_stats(g);
    f.max_degree = ds.max_degree;
    f.min_degree = ds.min_degree;
    f.omega = max_clique(g, budget);
    f.chi = chromatic_number(g, budget);
    return f;
}

namespace {

std::string bound_detail(const GraphFacts& f, int bound, const std::string& expr) {
    return "chi=" + std::to_string(f.chi.chi) + " vs " + expr + "=" + std::to_string(bound);
}

}  // namespace

CheckOutcome check_brooks(const GraphFacts& f) {
    if (f.max_degree < 3) return {Verdict::Skipped, "maximum degree below 3"};
    if (!f.omega.decided || !f.chi.decided) return {Verdict::Undecided, "solver budget exhausted"};
    const int bound = std::max(f.max_degree, f.omega.omega);
    return {f.chi.chi <= bound ? Verdict::Pass : Verdict::Fail,
            bound_detail(f, bound, "max{Delta,omega}")};
}

CheckOutcome check_bk(const GraphFacts& f) {
    if (f.max_degree < 9) return {Verdict::Skipped, "maximum degree below 9"};
    if (!f.omega.decided || !f.chi.decided) return {Verdict::Undecided, "solver budget exhausted"};
    const int bound = std::max(f.max_degree - 1, f.omega.omega);
    return {f.chi.chi <= bound ? Verdict::Pass : Verdict::Fail,
            bound_detail(f, bound, "max{Delta-1,omega}")};
}

CheckOutcome check_ratio(const Graph& g, const GraphFacts& f) {
    static const ClassSpec p6c4 = ClassSpec::p6c4();
    const MembershipResult mem = is_class_member(g, p6c4);
    if (!mem.member) return {Verdict::Skipped, "not (P6,C4)-free: contains " + mem.violated};
    if (!f.omega.decided || !f.chi.decided) return {Verdict::Undecided, "solver budget exhausted"};
    const int bound = (5 * f.omega.omega + 3) / 4;  // ceil(5*omega/4)
    return {f.chi.chi <= bound ? Verdict::Pass : Verdict::Fail,
            bound_detail(f, bound, "ceil(5*omega/4)")};
}

CheckOutcome verify_brooks(const Graph& g, const Budget& budget) {
    return check_brooks(compute_facts(g, budget));
}

CheckOutcome verify_bk(const Graph& g, const Budget& budget) {
    return check_bk(compute_facts(g, budget));
}

CheckOutcome verify_ratio_bound(const Graph& g, const Budget& budget) {
    return check_ratio(g, compute_facts(g, budget));
}

CriticalityResult is_vertex_critical(const Graph& g, int k, const Budget& budget) {
    if (g.order() == 0) throw std::invalid_argument("is_vertex_critical: empty graph");
    CriticalityResult r;
    const ChromaticResult chi = chromatic_number(g, budget);
    if (!chi.decided) {
        r.detail = "chromatic number undecided";
        return r;
    }
    if (chi.chi != k) {
        r.decided = true;
        r.critical = false;
        r.detail = "chi=" + std::to_string(chi.chi) + ", not " + std::to_string(k);
        return r;
    }
    if (g.order() == 1) {
        // removing the only vertex leaves the empty graph, chromatic number 0
        r.decided = true;
        r.critical = (k == 1);
        r.detail = r.critical ? "1-vertex-critical" : "single vertex";
        return r;
    }
    for (int v = 0; v < g.order(); ++v) {
        const ChromaticResult sub = chromatic_number(remove_vertex(g, v), budget);
        if (!sub.decided) {
            r.detail = "chromatic number of g-" + g.label(v) + " undecided";
            return r;
        }
        if (sub.chi != k - 1) {
            r.decided = true;
            r.critical = false;
            r.detail = "removing " + g.label(v) + " keeps chi=" + std::to_string(sub.chi);
            return r;
        }
    }
    r.decided = true;
    r.critical = true;
    const int delta = degree_stats(g).min_degree;
    r.min_degree_ok = delta >= k - 1;
    r.detail = std::to_string(k) + "-vertex-critical, delta=" + std::to_string(delta);
    if (!r.min_degree_ok)
        r.detail += " (violates delta >= k-1, which indicates a solver bug)";
    return r;
}

Verdict VerificationReport::overall() const {
    if (parse_error) return Verdict::Fail;
    bool any_pass = false, any_undecided = false, any_fail = false;
    for (const auto& [name, c] : checks) {
        if (c.verdict == Verdict::Fail) any_fail = true;
        if (c.verdict == Verdict::Undecided) any_undecided = true;
        if (c.verdict == Verdict::Pass) any_pass = true;
    }
    if (any_fail) return Verdict::Fail;
    if (any_undecided) return Verdict::Undecided;
    if (any_pass) return Verdict::Pass;
    return Verdict::Skipped;
}

std::vector<VerificationReport> run_verification(const std::vector<VerifyInput>& inputs,
                                                 const VerifyOptions& options) {
    std::vector<VerificationReport> reports(inputs.size());
    parallel_for(static_cast<long>(inputs.size()), options.workers, [&](long i) {
        const auto t0 = std::chrono::steady_clock::now();
        VerificationReport& rep = reports[static_cast<std::size_t>(i)];
        rep.index = i;
        rep.graph6 = inputs[static_cast<std::size_t>(i)].graph6;
        rep.line = inputs[static_cast<std::size_t>(i)].line;
        try {
            const Graph g = from_graph6(rep.graph6);
            rep.facts = compute_facts(g, options.budget);
            if (options.klass) {
                rep.class_name = options.klass->name;
                rep.membership = is_class_member(g, *options.klass);
            }
            for (const std::string& name : options.checks) {
                if (name == "brooks")
                    rep.checks.emplace_back(name, check_brooks(rep.facts));
                else if (name == "bk")
                    rep.checks.emplace_back(name, check_bk(rep.facts));
                else if (name == "ratio")
                    rep.checks.emplace_back(name, check_ratio(g, rep.facts));
                else if (name == "critical") {
                    const CriticalityResult cr =
                        is_vertex_critical(g, options.critical_k, options.budget);
                    CheckOutcome out;
                    if (!cr.decided)
                        out = {Verdict::Undecided, cr.detail};
                    else if (!cr.critical)
                        out = {Verdict::Skipped, cr.detail};
                    else
                        out = {cr.min_degree_ok ? Verdict::Pass : Verdict::Fail, cr.detail};
                    rep.checks.emplace_back(name, out);
                } else {
                    throw std::invalid_argument("unknown check: " + name);
                }
            }
        } catch (const Graph6Error& e) {
            rep.parse_error = true;
            rep.error = e.what();
        }
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    return reports;
}

VerifySummary summarize(const std::vector<VerificationReport>& reports) {
    VerifySummary s;
    s.total = static_cast<long>(reports.size());
    for (const auto& r : reports) {
        if (r.parse_error) {
            ++s.errors;
            continue;
        }
        switch (r.overall()) {
            case Verdict::Pass: ++s.pass; break;
            case Verdict::Fail: ++s.fail; break;
            case Verdict::Skipped: ++s.skipped; break;
            case Verdict::Undecided: ++s.undecided; break;
        }
        for (const auto& [name, c] : r.checks) ++s.per_check[name][verdict_name(c.verdict)];
    }
    return s;
}

std::string relaxed_stage_name(RelaxedStage s) {
    switch (s) {
        case RelaxedStage::ParseError: return "parse-error";
        case RelaxedStage::NotMember: return "not-member";
        case RelaxedStage::WrongMaxDegree: return "wrong-max-degree";
        case RelaxedStage::CliqueFilter: return "clique-filter";
        case RelaxedStage::DegreeFilter: return "degree-filter";
        case RelaxedStage::ChiFilter: return "chi-filter";
        case RelaxedStage::NoState: return "no-state";
        case RelaxedStage::LemmaDiscard: return "lemma-discard";
        case RelaxedStage::Candidate: return "candidate";
        case RelaxedStage::Undecided: return "undecided";
    }
    return "?";
}

namespace {

// Continuation of the funnel past the cheap filters. Shared between the main
// pipeline and the audit, which re-runs it on a sample of filtered graphs.
RelaxedStage expensive_stages(const Graph& g, const RelaxedOptions& options,
                              std::string& detail) {
    const ChromaticResult chi = chromatic_number(g, options.budget);
    if (!chi.decided) {
        detail = "chromatic number undecided";
        return RelaxedStage::Undecided;
    }
    if (chi.chi != 9) {
        detail = "chi=" + std::to_string(chi.chi) + ", a minimal counterexample needs chi=9";
        return RelaxedStage::ChiFilter;
    }
    kempe::EnumeratedStates states =
        kempe::enumerate_u_phi(g, options.max_states_per_graph, options.budget);
    if (states.states.empty()) {
        if (states.undecided) {
            detail = "state search undecided";
            return RelaxedStage::Undecided;
        }
        detail = "no (u,phi) exists, but a relaxed graph must have one";
        return RelaxedStage::NoState;
    }
    const bool with_u7_cap = options.spec.forbids_p6_and_c4();
    for (std::size_t si = 0; si < states.states.size(); ++si) {
        const kempe::LemmaReport rep = kempe::lemma_predicates(states.states[si]);
        if (rep.violated(with_u7_cap)) {
            for (const auto& o : rep.outcomes) {
                if (o.pass) continue;
                if (o.clause == "u7-incidence-cap" && !with_u7_cap) continue;
                detail = "state " + std::to_string(si) + " violates " + o.clause + ": " + o.detail;
                return RelaxedStage::LemmaDiscard;
            }
        }
    }
    detail = "survived every filter and lemma conclusion across " +
             std::to_string(states.states.size()) + " state(s)";
    return RelaxedStage::Candidate;
}

// A flagged candidate must survive an independent re-verification before it is
// reported; certificates are recomputed from scratch.
bool reverify_candidate(const Graph& g, const RelaxedOptions& options, std::string& note) {
    const MembershipResult mem = is_class_member(g, options.spec);
    if (!mem.member) {
        note = "re-verification: not a class member";
        return false;
    }
    const GraphFacts f = compute_facts(g, options.budget);
    if (!f.omega.decided || !f.chi.decided) {
        note = "re-verification: solver undecided";
        return false;
    }
    if (f.max_degree != 9 || f.omega.omega > 8 || f.chi.chi != 9) {
        note = "re-verification: facts changed";
        return false;
    }
    if (f.chi.chi <= std::max(f.max_degree - 1, f.omega.omega)) {
        note = "re-verification: the chromatic bound actually holds";
        return false;
    }
    note = "re-verification confirms the candidate";
    return true;
}

}  // namespace

RelaxedReport search_relaxed(const std::vector<VerifyInput>& inputs,
                             const RelaxedOptions& options) {
    RelaxedReport report;
    report.entries.resize(inputs.size());

    parallel_for(static_cast<long>(inputs.size()), options.workers, [&](long i) {
        RelaxedEntry& e = report.entries[static_cast<std::size_t>(i)];
        e.index = i;
        e.graph6 = inputs[static_cast<std::size_t>(i)].graph6;
        try {
            const Graph g = from_graph6(e.graph6);
            const MembershipResult mem = is_class_member(g, options.spec);
            if (!mem.member) {
                e.stage = RelaxedStage::NotMember;
                e.detail = "contains " + mem.violated;
                return;
            }
            if (g.order() == 0) {
                e.stage = RelaxedStage::WrongMaxDegree;
                e.detail = "empty graph";
                return;
            }
            const DegreeStats ds = degree_stats(g);
            if (ds.max_degree != 9) {
                e.stage = RelaxedStage::WrongMaxDegree;
                e.detail = "Delta=" + std::to_string(ds.max_degree);
                return;
            }
            const MaxCliqueResult mc = max_clique(g, options.budget);
            if (!mc.decided) {
                e.stage = RelaxedStage::Undecided;
                e.detail = "clique solver undecided";
                return;
            }
            if (mc.omega > 8) {
                e.stage = RelaxedStage::CliqueFilter;
                e.detail = "omega=" + std::to_string(mc.omega) + " > 8";
                return;
            }
            if (ds.min_degree < 8) {
                e.stage = RelaxedStage::DegreeFilter;
                e.detail = "delta=" + std::to_string(ds.min_degree) +
                           ", every degree must be 8 or 9";
                return;
            }
            e.stage = expensive_stages(g, options, e.detail);
            if (e.stage == RelaxedStage::Candidate) {
                std::string note;
                if (!reverify_candidate(g, options, note)) {
                    e.detail += "; " + note;
                    e.stage = RelaxedStage::LemmaDiscard;
                } else {
                    e.detail += "; " + note;
                }
            }
        } catch (const Graph6Error& err) {
            e.stage = RelaxedStage::ParseError;
            e.detail = err.what();
        }
    });

    // soundness audit: re-run the expensive continuation on a sample of the
    // graphs the cheap filters discarded and confirm none would have survived
    std::mt19937_64 rng(options.audit_seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (const RelaxedEntry& e : report.entries) {
        const bool cheap_discard = e.stage == RelaxedStage::CliqueFilter ||
                                   e.stage == RelaxedStage::DegreeFilter;
        if (!cheap_discard) continue;
        if (coin(rng) >= options.audit_fraction) continue;
        ++report.audited;
        const Graph g = from_graph6(e.graph6);
        const GraphFacts f = compute_facts(g, options.budget);
        if (f.omega.decided && f.chi.decided &&
            f.chi.chi > std::max(f.max_degree - 1, f.omega.omega))
            ++report.audit_failures;
    }

    for (const RelaxedEntry& e : report.entries) {
        ++report.stage_counts[relaxed_stage_name(e.stage)];
        if (e.stage == RelaxedStage::Candidate) report.candidates.push_back(e.index);
        if (e.stage == RelaxedStage::Undecided) report.undecided.push_back(e.index);
    }
    return report;
}

}  // namespace bkv
