#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bkv/classes.hpp"
#include "bkv/graph.hpp"
#include "bkv/kempe.hpp"
#include "bkv/solve.hpp"

namespace bkv {

enum class Verdict { Pass, Fail, Skipped, Undecided };
std::string verdict_name(Verdict v);

struct CheckOutcome {
    Verdict verdict = Verdict::Skipped;
    std::string detail;
};

// Facts every check derives from; computed once per graph.
struct GraphFacts {
    int n = 0, m = 0, max_degree = 0, min_degree = 0;
    MaxCliqueResult omega;
    ChromaticResult chi;
};
GraphFacts compute_facts(const Graph& g, const Budget& budget = {});

CheckOutcome check_brooks(const GraphFacts& f);
CheckOutcome check_bk(const GraphFacts& f);
CheckOutcome check_ratio(const Graph& g, const GraphFacts& f);

CheckOutcome verify_brooks(const Graph& g, const Budget& budget = {});
CheckOutcome verify_bk(const Graph& g, const Budget& budget = {});
CheckOutcome verify_ratio_bound(const Graph& g, const Budget& budget = {});

struct CriticalityResult {
    bool decided = false;
    bool critical = false;
    bool min_degree_ok = true;  // delta >= k-1 whenever critical holds
    std::string detail;
};
CriticalityResult is_vertex_critical(const Graph& g, int k, const Budget& budget = {});

struct VerificationReport {
    long index = -1;
    std::string graph6;
    bool parse_error = false;
    std::string error;
    int line = 0;

    GraphFacts facts;
    std::optional<MembershipResult> membership;
    std::string class_name;
    std::vector<std::pair<std::string, CheckOutcome>> checks;
    double seconds = 0.0;

    Verdict overall() const;  // fail > undecided > pass > skipped
};

struct VerifyOptions {
    std::vector<std::string> checks{"brooks"};  // brooks | bk | ratio | critical
    std::optional<ClassSpec> klass;
    int critical_k = 0;
    Budget budget;
    int workers = 1;
};

struct VerifyInput {
    std::string graph6;
    int line = 0;
};

std::vector<VerificationReport> run_verification(const std::vector<VerifyInput>& inputs,
                                                 const VerifyOptions& options);

struct VerifySummary {
    long total = 0, pass = 0, fail = 0, skipped = 0, undecided = 0, errors = 0;
    std::map<std::string, std::map<std::string, long>> per_check;  // check -> verdict -> count
};
VerifySummary summarize(const std::vector<VerificationReport>& reports);

// Stages of the minimal-counterexample funnel, in pipeline order.
enum class RelaxedStage {
    ParseError,
    NotMember,
    WrongMaxDegree,  // relaxedness requires max degree exactly 9
    CliqueFilter,    // omega must be <= 8
    DegreeFilter,    // every degree in {8, 9}
    ChiFilter,       // chromatic number must be exactly 9
    NoState,         // no (u,phi) exists
    LemmaDiscard,    // some state violates a lemma conclusion
    Candidate,
    Undecided,
};
std::string relaxed_stage_name(RelaxedStage s);

struct RelaxedEntry {
    long index = -1;
    std::string graph6;
    RelaxedStage stage = RelaxedStage::Undecided;
    std::string detail;
};

struct RelaxedOptions {
    ClassSpec spec = ClassSpec::p6c4c5plus();
    Budget budget;
    int workers = 1;
    int max_states_per_graph = 64;
    double audit_fraction = 0.01;  // share of cheap-filter discards re-checked in full
    std::uint64_t audit_seed = 1;
};

struct RelaxedReport {
    std::vector<RelaxedEntry> entries;
    std::vector<long> candidates;
    std::vector<long> undecided;
    long audited = 0;
    long audit_failures = 0;
    std::map<std::string, long> stage_counts;
};

RelaxedReport search_relaxed(const std::vector<VerifyInput>& inputs,
                             const RelaxedOptions& options);

}  // namespace bkv
