#ifndef EHCUT_SOLVER_HPP
#define EHCUT_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ehcut/cuts.hpp"
#include "ehcut/topology.hpp"

namespace ehcut {

// Search limits. Results never depend on `workers`; enumeration is split into
// fixed chunks with a deterministic reduction, so any worker count gives the
// same report. Only the wall-clock limit can truncate nondeterministically,
// and then the report falls back to the seed bound.
struct SolveBudget {
    int max_subset_size = 7;
    std::uint64_t max_candidates = 500'000'000ULL;
    double time_limit_seconds = 600.0;
    int workers = 1;
};

enum class SolveStatus : std::uint8_t {
    VerifiedEqual,  // exact value, equals the closed-form prediction
    Exact,          // exact value, no closed form claimed for this instance
    UpperBoundOnly, // search below the certificate bound was truncated
    Unresolved,     // no cut found within the explored sizes, no bound known
    NoneExists,     // exhaustive search proves no such cut exists
    Mismatch        // exact value disagrees with the closed form
};

const char* to_string(SolveStatus s);

enum class Quantity : std::uint8_t { KappaH, LambdaH };

const char* to_string(Quantity q);

struct ConnectivityReport {
    std::string instance;
    Quantity quantity = Quantity::KappaH;
    int h = 0;
    std::optional<std::uint64_t> formula_value;
    std::optional<std::uint64_t> found_value;
    CutCertificate certificate;
    SolveStatus status = SolveStatus::Unresolved;
};

// One-line stable rendering, binary vertex labels.
std::string to_line(const ConnectivityReport& r, int label_bits);

// Closed-form prediction where one is known for this topology and h.
std::optional<std::uint64_t> predicted_value(const Topology& g, Quantity q, int h);

// The built-in certificate used to seed searches, when the instance has one.
std::optional<CutCertificate> canonical_upper_bound(const Topology& g, CutKind kind, int h);

// Minimum vertex cut via max-flow with vertex splitting over a dominating
// family of source/sink pairs. Disconnected input yields 0 with an empty
// certificate; a complete graph yields n-1 with an empty certificate.
std::pair<std::uint32_t, CutCertificate> vertex_connectivity(const Topology& g);

// Minimum edge cut via max-flow from a fixed root to every other vertex.
std::pair<std::uint32_t, CutCertificate> edge_connectivity(const Topology& g);

// Exact minimum h-vertex-cut size. Seeds the bound with `upper_hint` (or the
// canonical certificate), then enumerates all smaller subsets ascending by
// size, lexicographic within a size. h = 0 delegates to vertex_connectivity.
ConnectivityReport kappa_h_exact(const Topology& g, int h, const SolveBudget& budget = {},
                                 const std::optional<CutCertificate>& upper_hint = {});

// Exact minimum h-edge-cut size via connected-fragment search: minimizes the
// boundary over connected X with both g[X] and g[V-X] of min degree >= h,
// branch-and-bound pruned by edges already committed to the boundary.
// h = 0 delegates to edge_connectivity.
ConnectivityReport lambda_h_exact(const Topology& g, int h, const SolveBudget& budget = {},
                                  const std::optional<CutCertificate>& upper_hint = {});

struct TableRow {
    int s = 0;
    int t = 0;
    int h = 0;
    std::uint64_t formula = 0;
    ConnectivityReport kappa;
    ConnectivityReport lambda;
};

// Runs both solvers for every 1 <= s <= t with s+t <= max_total and 0 <= h <= s.
std::vector<TableRow> verify_connectivity_table(int max_total, const SolveBudget& budget = {});

std::string render_table(std::span<const TableRow> rows);
bool all_rows_verified(std::span<const TableRow> rows);

// Independent reference: unpruned subset enumeration over all vertex (or
// edge) sets of size <= size_cap, ascending, until some set passes the cut
// predicate. Returns the minimum size, or nullopt if none passes within the
// cap. Throws OracleInfeasible when the projected candidate count exceeds
// eval_budget. Shares only the cut predicates with the optimized solvers.
std::optional<std::uint32_t> brute_force_oracle(const Topology& g, int h, CutKind kind,
                                                int size_cap,
                                                std::uint64_t eval_budget = 2'000'000'000ULL,
                                                int workers = 1);

} // namespace ehcut

#endif
