#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace znsum {

using json = nlohmann::ordered_json;

/// A concrete instance that violates (or exactly attains) a displayed claim.
/// Sets are stored as ascending set literals so lhs and rhs can be recomputed
/// from the witness alone, and so reports diff cleanly across runs.
struct Witness {
    uint32_t n = 0;
    std::string claim_id;  // "thm1", "conj2", "chowla", "eq1".."eq8", "mainlemma"
    std::vector<std::pair<std::string, std::string>> sets;  // name -> literal
    int64_t lhs = 0;
    int64_t rhs = 0;
    std::string relation;  // the claimed relation lhs <relation> rhs that failed

    std::string set(const std::string& name) const;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one verification campaign at one modulus.
struct AuditReport {
    std::string check_id;
    uint32_t n = 0;
    std::string mode;  // "exhaustive" or "sampled"
    json params = json::object();
    uint64_t instances_tested = 0;
    std::vector<Witness> violations;
    std::vector<Witness> findings;  // bound failures that are reported, not fatal
    std::optional<uint64_t> seed;
    int64_t elapsed_ms = 0;
};

/// Sorts witnesses into the canonical report order (claim, then literals).
void canonicalize(std::vector<Witness>& ws);

json to_json(const Witness& w);
json to_json(const AuditReport& r);
/// Report serialization without the elapsed_ms field, for golden comparisons.
json to_json_stable(const AuditReport& r);

/// One row of the CSV rendering: header() then row(r) per report.
std::string csv_header();
std::string csv_row(const AuditReport& r);

}  // namespace znsum
