#ifndef TCC_PIPELINE_HPP
#define TCC_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcc/config.hpp"
#include "tcc/perm.hpp"
#include "tcc/schur.hpp"

namespace tcc {

// Full color-preserving group of a coherent configuration, found by a
// level-by-level transversal search (one backtrack per (level, target) pair)
// and returned with exact order via the stabilizer chain.
PermGroup automorphism_group(const TensorConfig& cfg);

struct SchurianVerdict {
    bool schurian = false;
    PermGroup witness;  // aut(cfg)
};

// cfg is schurian iff cfg = orb_m(aut(cfg)) (Galois closure test).
SchurianVerdict is_schurian(const TensorConfig& cfg);

// The residue of a translation-invariant ternary configuration on F_p at
// (0,1), restricted to F_p^x.  Requires {0} and {1} to be singleton classes
// of that residue.
struct PiPartition {
    CyclicCarrier carrier;                  // fstar:p
    std::vector<std::vector<int>> classes;  // partition of F_p^x, {1} a class
};
PiPartition pi_partition(const TensorConfig& cfg);

// Statement checks for the AGL-invariant residue partition: Pi is Schur,
// tau-closed, and (when p = +-3 mod 8) discrete or trivial.
struct ResiduePartitionVerdict {
    bool agl_invariant = false;
    bool schur = false;
    bool tau_closed = false;
    bool discrete = false;
    bool trivial = false;
    bool dichotomy_applies = false;  // p = +-3 (mod 8)
    bool pass = false;
};
ResiduePartitionVerdict verify_residue_partition(const TensorConfig& cfg);

// Class ids of full coordinate pattern (all entries pairwise distinct).
std::vector<std::uint32_t> starred_classes(const TensorConfig& cfg);

// Every non-starred class of a configuration invariant under a 2-transitive
// group is a single G-orbit.
bool nonstarred_are_orbits(const TensorConfig& cfg, const PermGroup& G);

struct EnumerationJob {
    TensorConfig base;
    bool ast_only = false;
    std::uint64_t node_limit = 100'000'000;
    double time_limit_seconds = 0;  // 0 = unlimited (TCC_BUDGET_SECONDS overrides)
    bool analyze_results = true;    // compute aut / schurity per result
};

struct FusionResult {
    TensorConfig cfg;
    std::uint32_t num_classes = 0;
    bool ast = false;
    std::uint64_t aut_order = 0;
    std::optional<std::string> aut_matches;  // catalog spec, if identified
    bool schurian = false;
};

struct EnumerationReport {
    bool complete = false;
    std::uint64_t nodes = 0;
    std::vector<FusionResult> results;  // sorted by class count, then coloring
};

// All coherent fusions of the base (including the base itself), by canonical
// merge-driven search with sigma-closure forcing; exhaustive within budget.
EnumerationReport enumerate_fusions(const EnumerationJob& job);

// Catalog identification: a spec string for a named group equal to G, if any.
std::optional<std::string> match_catalog_group(const PermGroup& G);

struct SuiteItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    int p = 0;
    bool complete = true;
    bool pass = true;
    std::vector<SuiteItem> items;
    std::vector<FusionResult> results;
};

// Orchestrated suites: "thm11" | "thm51" | "exception-probe".
Report theorem_checks(int p, const std::string& suite,
                      std::uint64_t node_limit = 100'000'000,
                      double time_limit_seconds = 0);

}  // namespace tcc

#endif
