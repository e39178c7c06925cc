#pragma once

#include "zadic/dynamics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zadic {

struct SweepOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 0;  // 0 = all hardware threads
    std::uint64_t chunk_size = 16'384;
    /// Entry cap for the small-value memo table; the effective cap is
    /// min(k^2, memo_limit). Every orbit funnels through values below k^2,
    /// so the table resolves almost every start in one step.
    std::uint64_t memo_limit = std::uint64_t{1} << 21;
    std::string checkpoint_path;  // empty = no checkpointing
};

/// A distinct limit cycle with its discovery statistics over a tested range.
struct CycleRecord {
    std::vector<Nat> cycle;  // canonical (minimum-first) rotation
    Nat first_witness;       // smallest start whose orbit enters this cycle
    std::uint64_t basin_count = 0;
    std::uint64_t max_transient = 0;
};

struct RangeReport {
    Parameters parameters;
    Nat n_lo;
    Nat n_hi;
    bool all_reach_M = false;  // every start lands on the {1, 2} cycle
    std::vector<CycleRecord> cycles;  // sorted by first_witness
    std::uint64_t max_transient = 0;
    std::vector<Nat> budget_exhausted_starts;  // ascending; empty for a verdict
};

struct CatalogResult {
    std::vector<CycleRecord> cycles;  // sorted by first_witness
    std::vector<Nat> budget_exhausted_starts;
};

struct GridCell {
    AssumptionReport assumptions;
    RangeReport report;
};

/// Run every start in [n_lo, n_hi] to its cycle and aggregate. Work is
/// chunked across workers and merged in start order, so the report is
/// identical for any worker count. With a checkpoint path, completed
/// chunks are persisted and skipped on re-run.
RangeReport verify_range(const Parameters& params, const Nat& n_lo, const Nat& n_hi,
                         const SweepOptions& options = {});

/// The distinct cycles reached from starts 1..n_max.
CatalogResult cycle_catalog(const Parameters& params, const Nat& n_max,
                            const SweepOptions& options = {});

/// One cell per (k, p) pair, ordered by (p, k). A conforming cell whose
/// cycle set is anything but {[1, 2]} throws TheoremViolation with a
/// diagnostic dump.
std::vector<GridCell> grid_sweep(std::uint64_t k_lo, std::uint64_t k_hi,
                                 std::uint64_t p_lo, std::uint64_t p_hi,
                                 const Nat& n_max, const SweepOptions& options = {});

/// The guard grid_sweep applies to each finished cell; exposed so its
/// firing path can be tested directly.
void enforce_theorem_guard(const GridCell& cell);

}  // namespace zadic
