#pragma once

#include <string>
#include <vector>

#include "bei/verifier.hpp"

namespace bei {

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_report_format(const std::string& name); // "text" | "json" | "csv"

/// Deterministic, stable-ordered rendering of census records. Text includes
/// Betti tables when a record carries one; JSON follows
/// {key, n, reg, c, l, is_path, verdicts[]}; CSV is one row per (graph, check).
std::string emit_report(const std::vector<CensusRecord>& records, ReportFormat format);

nlohmann::json record_to_json(const CensusRecord& r);
nlohmann::json betti_entries_json(const BettiTable& t);

/// Minimal primes / cut-set families as JSON (sorted sets, deterministic).
nlohmann::json cutset_family_to_json(const CutSetFamily& fam);
nlohmann::json prime_component_to_json(const PrimeComponent& pc);

/// Ideal interchange format: ring descriptor plus polynomial strings.
nlohmann::json ideal_to_json(const Ideal& I);

} // namespace bei
