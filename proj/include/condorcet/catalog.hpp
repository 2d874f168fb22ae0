#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "condorcet/core.hpp"

namespace condorcet {

/// One side of a published composition identity: either a named base domain
/// with positional labels, e.g. D3_3(3,2,4), or an explicit order list.
struct FactorSpec {
    std::string family;               // "D3_1", "D3_2" or "D3_3"; empty when explicit
    std::vector<Alternative> labels;  // images of the base labels 1,2,3
    std::optional<Domain> explicit_domain;

    Domain realize() const;
    std::string text() const;
};

struct StatedIdentity {
    FactorSpec left;
    FactorSpec right;

    std::string text() const;
};

/// A domain printed in full in the source material, together with every
/// claim the text attaches to it. The printed matrix is the fixture of
/// record; conditions, identities and flags are claims to be re-derived.
struct CatalogEntry {
    std::string id;
    std::string alias;  // empty for the three 3-alternative domains
    Domain matrix_orders;
    std::optional<std::set<NeverCondition>> stated_conditions;
    std::optional<StatedIdentity> stated_identity;
    std::vector<std::string> stated_flags;  // from {maximal, copious, ample, arrow-sp, single-crossing, not-maximal-width}
    bool stated_is_path = false;            // the text calls the swap graph a line
};

/// One recorded comparison between a stated claim and its recomputation.
struct CatalogCheck {
    std::string entry_id;
    std::string check;  // "condorcet", "flag:<name>", "conditions", "identity", "graph:path"
    bool match;
    std::string stated;
    std::string computed;
};

/// Everything recomputed from one entry's matrix.
struct EntryReport {
    std::string entry_id;
    bool condorcet;
    bool maximal;
    bool ample;
    bool copious;
    bool max_width;
    bool arrow_sp;
    bool single_crossing;
    std::set<NeverCondition> conditions;
    std::size_t decomposition_count;
    int graph_vertices;
    int graph_edges;
    bool graph_connected;
    bool graph_path;
};

struct VerificationReport {
    std::vector<EntryReport> entries;
    std::vector<CatalogCheck> checks;

    std::vector<CatalogCheck> mismatches() const;
};

enum class DiscrepancyKind { identity, conditions, naming, notation };

/// A known internal inconsistency of the source text. Records of kind
/// identity/conditions are exactly the mismatches verify_catalog must
/// reproduce; naming/notation records are informational.
struct DiscrepancyRecord {
    std::string entry_id;
    DiscrepancyKind kind;
    std::string check;     // verifier check name, empty for informational records
    std::string stated;
    std::string computed;  // what the verifier recomputes, empty for informational records
    std::string note;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Lookup by id (D4_5) or alias (crab). Unknown name → input_error.
const CatalogEntry& catalog_get(const std::string& id_or_alias);

/// The three base domains on {1,2,3}: D3_1, D3_2, D3_3.
const Domain& base_family_domain(const std::string& family);

/// Name a factor against the base families: "D3_3(2,3,4)" when the domain is
/// a relabeled base domain (first family, then lexicographically least label
/// tuple), otherwise the explicit order list.
std::string describe_factor(const Domain& factor);

/// Recompute every claim of every entry and compare.
VerificationReport verify_catalog();

const std::vector<DiscrepancyRecord>& known_discrepancies();

/// True iff the report's mismatches are exactly the ledgered
/// identity/conditions records, field for field.
bool report_matches_ledger(const VerificationReport& report);

std::string to_string(DiscrepancyKind kind);

}  // namespace condorcet
