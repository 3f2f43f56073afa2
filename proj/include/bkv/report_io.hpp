#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "bkv/harness.hpp"

// JSON-lines rendering of verification records. Colors are rendered 1-based in
// every output format; the schema is documented in the README.
namespace bkv {

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json summary_to_json(const VerifySummary& s);
nlohmann::json relaxed_entry_to_json(const RelaxedEntry& e);
nlohmann::json relaxed_summary_to_json(const RelaxedReport& r);

std::string render_witness(const Graph& host, const Graph& pattern, const EmbeddingWitness& w);

}  // namespace bkv
