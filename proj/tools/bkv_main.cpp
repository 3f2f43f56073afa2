#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bkv/check.hpp"
#include "bkv/classes.hpp"
#include "bkv/graph6.hpp"
#include "bkv/harness.hpp"
#include "bkv/kempe.hpp"
#include "bkv/patterns.hpp"
#include "bkv/report_io.hpp"
#include "bkv/sampler.hpp"
#include "bkv/solve.hpp"

using nlohmann::json;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string input;  // file path or "-"
    std::string inline_g6;
    std::string format = "human";
    double budget_secs = 0;  // 0 -> env default or 10
    int workers = 1;
    std::uint64_t seed = 1;
    std::string class_name;
};

bool records(const CommonOpts& o) { return o.format == "records"; }

double default_budget_secs() {
    if (const char* env = std::getenv("BKV_BUDGET_SECS")) {
        try {
            const double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 10.0;
}

bkv::Budget make_budget(const CommonOpts& o) {
    const double secs = o.budget_secs > 0 ? o.budget_secs : default_budget_secs();
    return bkv::Budget::seconds(secs);
}

void print_config(const CommonOpts& o, const std::string& cmd,
                  const std::vector<std::pair<std::string, std::string>>& extra = {}) {
    const double secs = o.budget_secs > 0 ? o.budget_secs : default_budget_secs();
    if (records(o)) {
        json j{{"type", "config"},       {"command", cmd},
               {"seed", o.seed},         {"workers", o.workers},
               {"budget_secs", secs},    {"format", o.format}};
        if (!o.class_name.empty()) j["class"] = o.class_name;
        if (!o.input.empty()) j["input"] = o.input;
        if (!o.inline_g6.empty()) j["g6"] = o.inline_g6;
        for (const auto& [k, v] : extra) j[k] = v;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "# bkv " << cmd << " seed=" << o.seed << " workers=" << o.workers
                  << " budget_secs=" << secs;
        if (!o.class_name.empty()) std::cout << " class=" << o.class_name;
        if (!o.input.empty()) std::cout << " input=" << o.input;
        for (const auto& [k, v] : extra) std::cout << " " << k << "=" << v;
        std::cout << "\n";
    }
}

std::vector<bkv::VerifyInput> gather_inputs(const CommonOpts& o) {
    std::vector<bkv::VerifyInput> out;
    if (!o.inline_g6.empty() && !o.input.empty())
        throw CLI::ValidationError("input", "use exactly one of --g6 and an input file");
    if (!o.inline_g6.empty()) {
        out.push_back({o.inline_g6, 0});
        return out;
    }
    if (o.input.empty())
        throw CLI::ValidationError("input", "no input given: pass a graph6 file, '-' or --g6");
    std::vector<bkv::Graph6Line> lines;
    if (o.input == "-") {
        lines = bkv::read_graph6_lines(std::cin);
    } else {
        lines = bkv::read_graph6_file(o.input);
    }
    out.reserve(lines.size());
    for (auto& l : lines) out.push_back({l.text, l.line});
    return out;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input, bool with_class) {
    if (with_input) {
        cmd->add_option("input", o.input, "graph6 file, or '-' for stdin");
        cmd->add_option("--g6", o.inline_g6, "inline graph6 record");
    }
    cmd->add_option("--format", o.format, "output format: human | records")
        ->check(CLI::IsMember({"human", "records"}));
    cmd->add_option("--budget-secs", o.budget_secs,
                    "solver budget per graph (default: BKV_BUDGET_SECS or 10)");
    cmd->add_option("--workers", o.workers, "parallel workers")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "seed for all randomness");
    if (with_class)
        cmd->add_option("--class", o.class_name,
                        "forbidden family: p6c4 | p6c4k7 | p6c4c5plus | custom:<file>");
}

std::string render_coloring(const bkv::Graph& g, const bkv::Coloring& c) {
    std::string out;
    for (int v = 0; v < g.order(); ++v) {
        if (!out.empty()) out += " ";
        out += g.label(v) + "=" + std::to_string(c.color(v) + 1);
    }
    return out;
}

std::string render_vertices(const bkv::Graph& g, const bkv::VertexList& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += g.label(vs[i]);
    }
    return out + "}";
}

int cmd_pattern(const std::string& name, bool list, const CommonOpts& o) {
    if (list) {
        for (const auto& e : bkv::pattern_catalog()) {
            if (records(o)) {
                std::cout << json{{"type", "pattern"},
                                  {"name", e.name},
                                  {"n", e.graph.order()},
                                  {"m", e.graph.size()},
                                  {"tier",
                                   e.tier == bkv::PatternTier::Extracted ? "extracted"
                                                                         : "standard"},
                                  {"note", e.note},
                                  {"graph6", bkv::to_graph6(e.graph)}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << e.name << "  (" << e.graph.order() << " vertices, "
                          << e.graph.size() << " edges; "
                          << (e.tier == bkv::PatternTier::Extracted ? "extracted" : "standard")
                          << ": " << e.note << ")\n";
            }
        }
        return kExitClean;
    }
    const bkv::PatternEntry* e = bkv::find_pattern(name);
    if (!e) {
        std::cerr << "unknown pattern '" << name << "'; known names:\n";
        for (const auto& p : bkv::pattern_catalog()) std::cerr << "  " << p.name << "\n";
        return kExitUsage;
    }
    const bkv::Graph& g = e->graph;
    std::vector<std::string> edges;
    for (int v = 0; v < g.order(); ++v)
        g.for_neighbors(v, [&](int w) {
            if (v < w) edges.push_back(g.label(v) + "-" + g.label(w));
        });
    if (records(o)) {
        std::cout << json{{"type", "pattern"},
                          {"name", e->name},
                          {"n", g.order()},
                          {"m", g.size()},
                          {"tier",
                           e->tier == bkv::PatternTier::Extracted ? "extracted" : "standard"},
                          {"note", e->note},
                          {"graph6", bkv::to_graph6(g)},
                          {"edges", edges}}
                         .dump()
                  << "\n";
    } else {
        std::cout << e->name << ": " << g.order() << " vertices, " << g.size() << " edges\n";
        std::cout << "graph6: " << bkv::to_graph6(g) << "\n";
        std::cout << "edges:";
        for (const auto& s : edges) std::cout << " " << s;
        std::cout << "\n";
    }
    return kExitClean;
}

int cmd_detect(const CommonOpts& o, const std::string& patterns_csv) {
    bkv::ClassSpec spec;
    if (!patterns_csv.empty()) {
        spec.name = "patterns:" + patterns_csv;
        std::stringstream ss(patterns_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            if ((tok[0] == 'P' || tok[0] == 'p') &&
                tok.find_first_not_of("0123456789", 1) == std::string::npos &&
                !bkv::find_pattern(tok))
                spec.forbidden.push_back(bkv::ForbiddenPattern::path(std::stoi(tok.substr(1))));
            else if ((tok[0] == 'C' || tok[0] == 'c') &&
                     tok.find_first_not_of("0123456789", 1) == std::string::npos &&
                     !bkv::find_pattern(tok))
                spec.forbidden.push_back(bkv::ForbiddenPattern::hole(std::stoi(tok.substr(1))));
            else
                spec.forbidden.push_back(bkv::ForbiddenPattern::from_catalog(tok));
        }
    } else {
        spec = bkv::ClassSpec::by_name(o.class_name.empty() ? "p6c4c5plus" : o.class_name);
    }

    print_config(o, "detect", {{"patterns", spec.name}});
    int exit_code = kExitClean;
    for (const auto& in : gather_inputs(o)) {
        try {
            const bkv::Graph g = bkv::from_graph6(in.graph6);
            const bkv::MembershipResult r = bkv::is_class_member(g, spec);
            if (!r.member) {
                const bkv::Graph pat =
                    [&] {
                        for (const auto& f : spec.forbidden)
                            if (f.name == r.violated) return f.graph;
                        throw std::logic_error("violated pattern not in spec");
                    }();
                if (!bkv::is_valid_embedding(g, pat, r.witness))
                    throw std::logic_error("witness failed re-validation");
                exit_code = kExitViolations;
                if (records(o)) {
                    std::cout << json{{"type", "detect"},
                                      {"graph6", in.graph6},
                                      {"member", false},
                                      {"violated", r.violated},
                                      {"witness", r.witness}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << in.graph6 << ": not a member, contains " << r.violated
                              << " at " << bkv::render_witness(g, pat, r.witness) << "\n";
                }
            } else {
                if (records(o))
                    std::cout
                        << json{{"type", "detect"}, {"graph6", in.graph6}, {"member", true}}.dump()
                        << "\n";
                else
                    std::cout << in.graph6 << ": member\n";
            }
        } catch (const bkv::Graph6Error& e) {
            exit_code = kExitViolations;
            if (records(o))
                std::cout << json{{"type", "error"},
                                  {"graph6", in.graph6},
                                  {"line", in.line},
                                  {"error", e.what()}}
                                 .dump()
                          << "\n";
            else
                std::cout << "line " << in.line << ": " << e.what() << "\n";
        }
    }
    return exit_code;
}

int cmd_solve(const CommonOpts& o, bool want_chi) {
    print_config(o, want_chi ? "color" : "clique");
    int exit_code = kExitClean;
    const bkv::Budget budget = make_budget(o);
    for (const auto& in : gather_inputs(o)) {
        try {
            const bkv::Graph g = bkv::from_graph6(in.graph6);
            if (want_chi) {
                const bkv::ChromaticResult r = bkv::chromatic_number(g, budget);
                if (!r.decided) {
                    exit_code = kExitViolations;
                    if (records(o))
                        std::cout << json{{"type", "chi"},
                                          {"graph6", in.graph6},
                                          {"decided", false}}
                                         .dump()
                                  << "\n";
                    else
                        std::cout << in.graph6 << ": chi undecided (budget)\n";
                    continue;
                }
                if (records(o)) {
                    std::vector<int> colors;
                    for (int v = 0; v < g.order(); ++v) colors.push_back(r.cert->color(v) + 1);
                    std::cout << json{{"type", "chi"},
                                      {"graph6", in.graph6},
                                      {"decided", true},
                                      {"value", r.chi},
                                      {"colors", colors}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << in.graph6 << ": chi = " << r.chi << ", "
                              << render_coloring(g, *r.cert) << "\n";
                }
            } else {
                const bkv::MaxCliqueResult r = bkv::max_clique(g, budget);
                if (!r.decided) exit_code = kExitViolations;
                if (records(o))
                    std::cout << json{{"type", "omega"},
                                      {"graph6", in.graph6},
                                      {"decided", r.decided},
                                      {"value", r.omega},
                                      {"clique", r.clique}}
                                     .dump()
                              << "\n";
                else
                    std::cout << in.graph6 << ": omega = " << r.omega << ", clique "
                              << render_vertices(g, r.clique) << "\n";
            }
        } catch (const bkv::Graph6Error& e) {
            exit_code = kExitViolations;
            if (records(o))
                std::cout << json{{"type", "error"},
                                  {"graph6", in.graph6},
                                  {"line", in.line},
                                  {"error", e.what()}}
                                 .dump()
                          << "\n";
            else
                std::cout << "line " << in.line << ": " << e.what() << "\n";
        }
    }
    return exit_code;
}

void print_reports(const std::vector<bkv::VerificationReport>& reports, const CommonOpts& o) {
    for (const auto& r : reports) {
        if (records(o)) {
            std::cout << bkv::report_to_json(r).dump() << "\n";
            continue;
        }
        if (r.parse_error) {
            std::cout << "line " << r.line << ": " << r.error << "\n";
            continue;
        }
        std::cout << r.graph6 << ": n=" << r.facts.n << " m=" << r.facts.m
                  << " Delta=" << r.facts.max_degree << " omega=" << r.facts.omega.omega;
        if (r.facts.chi.decided)
            std::cout << " chi=" << r.facts.chi.chi;
        else
            std::cout << " chi=undecided";
        if (r.membership)
            std::cout << " " << r.class_name << "="
                      << (r.membership->member ? "member"
                                               : "violates:" + r.membership->violated);
        for (const auto& [name, c] : r.checks)
            std::cout << " " << name << "=" << bkv::verdict_name(c.verdict);
        std::cout << "\n";
    }
}

int finish_verify(const std::vector<bkv::VerificationReport>& reports, const CommonOpts& o,
                  bool allow_undecided) {
    const bkv::VerifySummary s = bkv::summarize(reports);
    if (records(o)) {
        std::cout << bkv::summary_to_json(s).dump() << "\n";
    } else {
        std::cout << "summary: total=" << s.total << " pass=" << s.pass << " fail=" << s.fail
                  << " skipped=" << s.skipped << " undecided=" << s.undecided
                  << " errors=" << s.errors << "\n";
    }
    if (s.fail > 0 || s.errors > 0) return kExitViolations;
    if (s.undecided > 0 && !allow_undecided) return kExitViolations;
    return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure and coloring verification for small graph corpora"};
    app.require_subcommand(1);

    // pattern
    CommonOpts pat_opts;
    std::string pat_name;
    bool pat_list = false;
    CLI::App* pat = app.add_subcommand("pattern", "print a catalog configuration");
    pat->add_option("name", pat_name, "catalog name, e.g. c5plus, k5-e, hvn");
    pat->add_flag("--list", pat_list, "list the catalog");
    add_common(pat, pat_opts, false, false);

    // detect
    CommonOpts det_opts;
    std::string det_patterns;
    CLI::App* det = app.add_subcommand("detect", "hereditary class membership with witnesses");
    add_common(det, det_opts, true, true);
    det->add_option("--patterns", det_patterns,
                    "comma list of catalog names / P<k> / C<k> (overrides --class)");

    // color / clique
    CommonOpts col_opts, clq_opts;
    CLI::App* col = app.add_subcommand("color", "exact chromatic number with certificate");
    add_common(col, col_opts, true, false);
    CLI::App* clq = app.add_subcommand("clique", "exact clique number with certificate");
    add_common(clq, clq_opts, true, false);

    // verify
    CommonOpts ver_opts;
    std::string ver_checks = "brooks";
    int ver_critical_k = 0;
    bool ver_allow_undecided = false;
    CLI::App* ver = app.add_subcommand("verify", "run bound checks over a corpus");
    add_common(ver, ver_opts, true, true);
    ver->add_option("--checks", ver_checks, "comma list: brooks,bk,ratio,critical");
    ver->add_option("--critical-k", ver_critical_k, "k for the critical check");
    ver->add_flag("--allow-undecided", ver_allow_undecided,
                  "exit 0 even when some graphs are undecided");

    // scan
    CLI::App* scan = app.add_subcommand("scan", "sample class members or hunt for relaxed graphs");
    scan->require_subcommand(1);

    CommonOpts ss_opts;
    std::string ss_range = "10:16";
    int ss_count = 100;
    int ss_delta = -1;
    std::string ss_checks = "bk";
    std::string ss_emit;
    bool ss_allow_undecided = false;
    CLI::App* ss = scan->add_subcommand("sample", "sample members and pipe them to verify");
    add_common(ss, ss_opts, false, true);
    ss->add_option("--n", ss_range, "order range, e.g. 10:16");
    ss->add_option("--count", ss_count, "graphs to sample");
    ss->add_option("--delta", ss_delta, "minimum maximum-degree of emitted graphs");
    ss->add_option("--checks", ss_checks, "checks to run on the samples");
    ss->add_option("--emit", ss_emit, "also write the sampled graph6 stream to a file");
    ss->add_flag("--allow-undecided", ss_allow_undecided, "exit 0 despite undecided graphs");

    CommonOpts sr_opts;
    int sr_max_states = 64;
    double sr_audit = 0.01;
    CLI::App* sr = scan->add_subcommand("relaxed", "minimal-counterexample funnel over a corpus");
    add_common(sr, sr_opts, true, true);
    sr->add_option("--max-states", sr_max_states, "states examined per graph");
    sr->add_option("--audit-fraction", sr_audit, "share of cheap-filter discards re-checked");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitClean : kExitUsage;
    }

    try {
        if (pat->parsed()) {
            if (!pat_list && pat_name.empty()) {
                std::cerr << "pattern: give a name or --list\n";
                return kExitUsage;
            }
            return cmd_pattern(pat_name, pat_list, pat_opts);
        }
        if (det->parsed()) return cmd_detect(det_opts, det_patterns);
        if (col->parsed()) return cmd_solve(col_opts, true);
        if (clq->parsed()) return cmd_solve(clq_opts, false);

        if (ver->parsed()) {
            bkv::VerifyOptions vo;
            vo.checks.clear();
            std::stringstream ss2(ver_checks);
            std::string tok;
            while (std::getline(ss2, tok, ','))
                if (!tok.empty()) vo.checks.push_back(tok);
            if (!ver_opts.class_name.empty())
                vo.klass = bkv::ClassSpec::by_name(ver_opts.class_name);
            vo.critical_k = ver_critical_k;
            vo.budget = make_budget(ver_opts);
            vo.workers = ver_opts.workers;
            print_config(ver_opts, "verify", {{"checks", ver_checks}});
            const auto reports = bkv::run_verification(gather_inputs(ver_opts), vo);
            print_reports(reports, ver_opts);
            return finish_verify(reports, ver_opts, ver_allow_undecided);
        }

        if (ss->parsed()) {
            bkv::SampleOptions so;
            so.spec = bkv::ClassSpec::by_name(ss_opts.class_name.empty() ? "p6c4c5plus"
                                                                         : ss_opts.class_name);
            ss_opts.class_name = so.spec.name;
            const auto colon = ss_range.find(':');
            so.n_min = std::stoi(ss_range.substr(0, colon));
            so.n_max = colon == std::string::npos ? so.n_min
                                                  : std::stoi(ss_range.substr(colon + 1));
            so.count = ss_count;
            so.seed = ss_opts.seed;
            if (ss_delta >= 0) so.min_delta = ss_delta;
            print_config(ss_opts, "scan sample",
                         {{"n", ss_range},
                          {"count", std::to_string(ss_count)},
                          {"checks", ss_checks},
                          {"delta", std::to_string(ss_delta)}});
            const bkv::SampleResult sampled = bkv::sample_class_members(so);
            if (sampled.exhausted) std::cerr << "warning: " << sampled.warning << "\n";
            if (!ss_emit.empty()) {
                std::ofstream out(ss_emit);
                for (const auto& g : sampled.graphs) out << bkv::to_graph6(g) << "\n";
            }
            std::vector<bkv::VerifyInput> inputs;
            for (const auto& g : sampled.graphs) inputs.push_back({bkv::to_graph6(g), 0});
            bkv::VerifyOptions vo;
            vo.checks.clear();
            std::stringstream ss3(ss_checks);
            std::string tok;
            while (std::getline(ss3, tok, ','))
                if (!tok.empty()) vo.checks.push_back(tok);
            vo.klass = so.spec;
            vo.budget = make_budget(ss_opts);
            vo.workers = ss_opts.workers;
            const auto reports = bkv::run_verification(inputs, vo);
            print_reports(reports, ss_opts);
            const int rc = finish_verify(reports, ss_opts, ss_allow_undecided);
            if (rc == kExitClean && sampled.exhausted) return kExitViolations;
            return rc;
        }

        if (sr->parsed()) {
            bkv::RelaxedOptions ro;
            ro.spec = bkv::ClassSpec::by_name(sr_opts.class_name.empty() ? "p6c4c5plus"
                                                                         : sr_opts.class_name);
            sr_opts.class_name = ro.spec.name;
            ro.budget = make_budget(sr_opts);
            ro.workers = sr_opts.workers;
            ro.max_states_per_graph = sr_max_states;
            ro.audit_fraction = sr_audit;
            ro.audit_seed = sr_opts.seed;
            print_config(sr_opts, "scan relaxed");
            const bkv::RelaxedReport rep = bkv::search_relaxed(gather_inputs(sr_opts), ro);
            if (records(sr_opts)) {
                for (const auto& e : rep.entries)
                    std::cout << bkv::relaxed_entry_to_json(e).dump() << "\n";
                std::cout << bkv::relaxed_summary_to_json(rep).dump() << "\n";
            } else {
                for (const auto& e : rep.entries)
                    if (e.stage == bkv::RelaxedStage::Candidate ||
                        e.stage == bkv::RelaxedStage::Undecided ||
                        e.stage == bkv::RelaxedStage::ParseError)
                        std::cout << e.graph6 << ": " << bkv::relaxed_stage_name(e.stage) << " ("
                                  << e.detail << ")\n";
                std::cout << "relaxed summary:";
                for (const auto& [k, v] : rep.stage_counts) std::cout << " " << k << "=" << v;
                std::cout << " audited=" << rep.audited
                          << " audit_failures=" << rep.audit_failures << "\n";
            }
            const bool clean = rep.candidates.empty() && rep.undecided.empty() &&
                               rep.audit_failures == 0 &&
                               rep.stage_counts.count("parse-error") == 0;
            return clean ? kExitClean : kExitViolations;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolations;
    }
    return kExitUsage;
}
