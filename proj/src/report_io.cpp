#include "bkv/report_io.hpp"

#include <nlohmann/json.hpp>

#include "bkv/graph6.hpp"

namespace bkv {

using nlohmann::json;

json report_to_json(const VerificationReport& r) {
    json j;
    j["type"] = "report";
    j["index"] = r.index;
    j["graph6"] = r.graph6;
    if (r.line > 0) j["line"] = r.line;
    if (r.parse_error) {
        j["error"] = r.error;
        return j;
    }
    j["n"] = r.facts.n;
    j["m"] = r.facts.m;
    j["max_degree"] = r.facts.max_degree;
    j["min_degree"] = r.facts.min_degree;
    j["omega"] = {{"decided", r.facts.omega.decided},
                  {"value", r.facts.omega.omega},
                  {"clique", r.facts.omega.clique}};
    json chi;
    chi["decided"] = r.facts.chi.decided;
    if (r.facts.chi.decided) {
        chi["value"] = r.facts.chi.chi;
        std::vector<int> colors;
        for (int v = 0; v < r.facts.chi.cert->order(); ++v)
            colors.push_back(r.facts.chi.cert->color(v) + 1);
        chi["colors"] = colors;
    }
    j["chi"] = chi;
    if (r.membership) {
        json cls;
        cls["name"] = r.class_name;
        cls["member"] = r.membership->member;
        if (!r.membership->member) {
            cls["violated"] = r.membership->violated;
            cls["witness"] = r.membership->witness;
        }
        j["class"] = cls;
    }
    json checks = json::object();
    for (const auto& [name, c] : r.checks)
        checks[name] = {{"verdict", verdict_name(c.verdict)}, {"detail", c.detail}};
    j["checks"] = checks;
    j["overall"] = verdict_name(r.overall());
    j["seconds"] = r.seconds;
    return j;
}

json summary_to_json(const VerifySummary& s) {
    json j;
    j["type"] = "summary";
    j["total"] = s.total;
    j["pass"] = s.pass;
    j["fail"] = s.fail;
    j["skipped"] = s.skipped;
    j["undecided"] = s.undecided;
    j["errors"] = s.errors;
    j["per_check"] = s.per_check;
    return j;
}

json relaxed_entry_to_json(const RelaxedEntry& e) {
    return {{"type", "relaxed"},
            {"index", e.index},
            {"graph6", e.graph6},
            {"stage", relaxed_stage_name(e.stage)},
            {"detail", e.detail}};
}

json relaxed_summary_to_json(const RelaxedReport& r) {
    json j;
    j["type"] = "relaxed-summary";
    j["total"] = r.entries.size();
    j["stages"] = r.stage_counts;
    j["candidates"] = r.candidates;
    j["undecided"] = r.undecided;
    j["audited"] = r.audited;
    j["audit_failures"] = r.audit_failures;
    return j;
}

std::string render_witness(const Graph& host, const Graph& pattern, const EmbeddingWitness& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!out.empty()) out += ", ";
        out += pattern.label(static_cast<int>(i)) + "->" + host.label(w[i]);
    }
    return out;
}

}  // namespace bkv
