#ifndef BLOCKFORGE_REPORT_HPP
#define BLOCKFORGE_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockforge/characters.hpp"
#include "blockforge/invariants.hpp"

// Report records combining all modules, their JSON/CSV/text serialization and
// the parameter scan. Every numeric field carries a source tag out of
// {formula, brute_force, paper_exact}; all JSON numbers are exact integers.

namespace blockforge {

enum class Format { json, csv, text };
Format parse_format(const std::string& name);

struct SourcedInterval {
    IntInterval iv;
    std::string source;
    bool operator==(const SourcedInterval&) const = default;
};

struct FusionSummary {
    long long conjugacy_class_count = 0; // brute-force orbit partition of D
    long long fusion_class_count = 0;
    long long classes_meeting_y = 0;
    long long k_lower_value = 0;               // orbit sum, checked vs formula
    std::optional<long long> k_minus_l;        // n = 1 only
    long long semidirect_class_count = 0;      // k(D x| I(B)) by brute force
    bool operator==(const FusionSummary&) const = default;
};

struct CharacterSummary {
    long long k_D = 0;            // number of irreducible characters of D
    long long linear_count = 0;
    long long degree_p_count = 0;
    long long owc_weight_full = 0; // w(D, m+1)
    long long owc_weight_sub = 0;  // w(D, m)
    std::vector<long long> inertial_linear_orbits;
    std::vector<long long> inertial_degree_p_orbits;
    std::optional<GaloisOrbitData> galois; // e >= 2 and within budget
    bool operator==(const CharacterSummary&) const = default;
};

struct ReportDocument {
    long long p = 0;
    int m = 0, n = 0, l = 0;
    long long e = 1;
    long long group_order = 0;
    long long class_count_formula_value = 0;

    InvariantBounds bounds;                  // source: formula
    std::optional<ExactInvariants> exact;    // source: paper_exact

    // best-known merged invariants
    SourcedInterval k, k0, k1, l_B;
    std::optional<long long> k_minus_l;

    std::optional<FusionSummary> fusion;        // absent when over budget
    std::optional<CharacterSummary> characters; // n = 1 only
    ConjectureReport conjectures;

    std::vector<std::string> consistency_violations;

    bool operator==(const ReportDocument&) const = default;
};

// Assembles the full report; enumeration-backed sections are skipped (left
// empty) when |D| e exceeds the budget. Formula/brute-force mismatches inside
// the library throw consistency_error; cross-module mismatches are recorded
// in consistency_violations.
ReportDocument build_report(const BlockParams& B, long long budget = kDefaultBudget);

nlohmann::json report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

void write_report(const ReportDocument& doc, Format format, std::ostream& os);

struct ScanOptions {
    long long max_order = 3125;
    std::vector<long long> primes = {3, 5, 7};
    long long budget = kDefaultBudget;
};

// All valid (p, m, n, l, e) with p^(m+n) <= max_order, e | p - 1, in
// lexicographic order.
std::vector<BlockParams> scan_grid(const ScanOptions& opts);

// One record per tuple (JSON lines for Format::json); any consistency
// violation aborts with the offending tuple named.
void run_scan(const ScanOptions& opts, Format format, std::ostream& os);

} // namespace blockforge

#endif
