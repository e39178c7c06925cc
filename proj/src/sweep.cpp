#include "zadic/sweep.hpp"

#include "zadic/checkpoint.hpp"
#include "zadic/errors.hpp"
#include "zadic/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>
#include <map>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace zadic {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

// ----- small-value memo -----
//
// Every orbit funnels through values below k^2 (and in practice below a
// couple of digit-map maxima), so a table over [0, cap) with
// (cycle id, steps into the cycle) resolves almost every start after one
// explicit transform. The table and the cycle registry are built
// sequentially up front and are read-only during the parallel phase.

struct RegisteredCycle {
    std::vector<Nat> values;  // canonical rotation
    std::unordered_set<Nat, NatHash> members;
    std::vector<std::uint64_t> members_u64;  // sorted; only values that fit
    bool is_one_two = false;

    bool contains_u64(std::uint64_t v) const {
        return std::binary_search(members_u64.begin(), members_u64.end(), v);
    }
};

struct Memo {
    std::uint64_t k = 0;
    std::uint64_t p = 0;
    std::uint64_t cap = 0;  // table covers values < cap

    struct Entry {
        std::uint32_t cycle_id = kUnset;
        std::uint32_t steps_to_cycle = 0;
    };
    std::vector<Entry> table;
    std::vector<RegisteredCycle> cycles;
    std::map<std::vector<Nat>, std::uint32_t> by_key;

    std::uint32_t register_cycle(std::vector<Nat> canon) {
        if (auto it = by_key.find(canon); it != by_key.end()) {
            return it->second;
        }
        RegisteredCycle cyc;
        cyc.is_one_two = canon.size() == 2 && canon[0] == 1 && canon[1] == 2;
        for (const Nat& v : canon) {
            cyc.members.insert(v);
            if (fits_u64(v)) {
                cyc.members_u64.push_back(v.convert_to<std::uint64_t>());
            }
        }
        std::sort(cyc.members_u64.begin(), cyc.members_u64.end());
        cyc.values = std::move(canon);
        cycles.push_back(std::move(cyc));
        const auto id = static_cast<std::uint32_t>(cycles.size() - 1);
        by_key.emplace(cycles.back().values, id);
        return id;
    }
};

Nat z_step(const Nat& v, std::uint64_t k, std::uint64_t p) {
    return detail::z_transform_nat(v, k, p);
}

Memo build_memo(std::uint64_t k, std::uint64_t p, std::uint64_t memo_limit) {
    Memo memo;
    memo.k = k;
    memo.p = p;
    const unsigned __int128 k2 = static_cast<unsigned __int128>(k) * k;
    memo.cap = static_cast<std::uint64_t>(
        std::min<unsigned __int128>(k2, std::max<std::uint64_t>(memo_limit, 4)));
    memo.table.assign(memo.cap, Memo::Entry{});

    std::vector<Nat> path;
    std::unordered_map<Nat, std::uint64_t, NatHash> position;

    for (std::uint64_t v0 = 0; v0 < memo.cap; ++v0) {
        if (memo.table[v0].cycle_id != kUnset) {
            continue;
        }
        path.clear();
        position.clear();

        Nat cur = v0;
        std::uint32_t cycle_id = kUnset;
        std::uint64_t entry_index = 0;  // first path index that sits on the cycle
        for (;;) {
            if (cur < memo.cap) {
                const auto small = cur.convert_to<std::uint64_t>();
                if (memo.table[small].cycle_id != kUnset) {
                    const auto& entry = memo.table[small];
                    cycle_id = entry.cycle_id;
                    const auto& cyc = memo.cycles[cycle_id];
                    entry_index = path.size() + entry.steps_to_cycle;
                    for (std::uint64_t i = 0; i < path.size(); ++i) {
                        if (cyc.members.count(path[i]) != 0) {
                            entry_index = i;
                            break;
                        }
                    }
                    break;
                }
            }
            if (auto it = position.find(cur); it != position.end()) {
                std::vector<Nat> cyc(path.begin() + static_cast<std::ptrdiff_t>(it->second),
                                     path.end());
                cycle_id = memo.register_cycle(canonical_rotation(std::move(cyc)));
                entry_index = it->second;
                break;
            }
            position.emplace(cur, path.size());
            path.push_back(cur);
            cur = z_step(cur, k, p);
        }

        for (std::uint64_t i = 0; i < path.size(); ++i) {
            if (path[i] < memo.cap) {
                auto& entry = memo.table[path[i].convert_to<std::uint64_t>()];
                entry.cycle_id = cycle_id;
                entry.steps_to_cycle =
                    static_cast<std::uint32_t>(i < entry_index ? entry_index - i : 0);
            }
        }
    }
    return memo;
}

// ----- per-start resolution -----

struct StartOutcome {
    bool exhausted = false;
    std::uint32_t cycle_id = kUnset;  // set when the cycle is registered
    std::vector<Nat> cycle;           // canonical; set for unregistered cycles
    std::uint64_t transient = 0;
};

struct ResolveBuffers {
    std::vector<std::uint64_t> prefix_u64;
    std::vector<Nat> prefix_nat;
    std::unordered_map<Nat, std::uint64_t, NatHash> position;
};

// Generic resolver: exact for any start.
StartOutcome resolve_nat(const Nat& n, const Memo& memo, std::uint64_t budget,
                         ResolveBuffers& buf) {
    auto& prefix = buf.prefix_nat;
    auto& position = buf.position;
    prefix.clear();
    position.clear();

    StartOutcome out;
    Nat cur = n;
    for (;;) {
        if (cur < memo.cap) {
            const auto& entry = memo.table[cur.convert_to<std::uint64_t>()];
            const auto& cyc = memo.cycles[entry.cycle_id];
            std::uint64_t transient = prefix.size() + entry.steps_to_cycle;
            for (std::uint64_t i = 0; i < prefix.size(); ++i) {
                if (cyc.members.count(prefix[i]) != 0) {
                    transient = i;
                    break;
                }
            }
            if (transient + cyc.values.size() > budget) {
                out.exhausted = true;
                return out;
            }
            out.cycle_id = entry.cycle_id;
            out.transient = transient;
            return out;
        }
        if (auto it = position.find(cur); it != position.end()) {
            out.transient = it->second;
            std::vector<Nat> cyc(prefix.begin() + static_cast<std::ptrdiff_t>(it->second),
                                 prefix.end());
            auto canon = canonical_rotation(std::move(cyc));
            if (auto reg = memo.by_key.find(canon); reg != memo.by_key.end()) {
                out.cycle_id = reg->second;
            } else {
                out.cycle = std::move(canon);
            }
            return out;
        }
        position.emplace(cur, prefix.size());
        prefix.push_back(cur);
        if (prefix.size() > budget) {
            // the next transform would be application budget+1
            out.exhausted = true;
            return out;
        }
        cur = z_step(cur, memo.k, memo.p);
    }
}

// Word-sized resolver. Returns false when the orbit leaves 64 bits or the
// above-cap prefix grows unusually long; the caller retries generically.
bool resolve_u64(std::uint64_t n, const Memo& memo, std::uint64_t budget,
                 ResolveBuffers& buf, StartOutcome& out) {
    auto& prefix = buf.prefix_u64;
    prefix.clear();

    std::uint64_t cur = n;
    for (;;) {
        if (cur < memo.cap) {
            const auto& entry = memo.table[cur];
            const auto& cyc = memo.cycles[entry.cycle_id];
            std::uint64_t transient = prefix.size() + entry.steps_to_cycle;
            for (std::uint64_t i = 0; i < prefix.size(); ++i) {
                if (cyc.contains_u64(prefix[i])) {
                    transient = i;
                    break;
                }
            }
            if (transient + cyc.values.size() > budget) {
                out.exhausted = true;
                return true;
            }
            out.cycle_id = entry.cycle_id;
            out.transient = transient;
            return true;
        }
        for (std::uint64_t i = 0; i < prefix.size(); ++i) {
            if (prefix[i] == cur) {
                out.transient = i;
                std::vector<Nat> cyc(prefix.begin() + static_cast<std::ptrdiff_t>(i),
                                     prefix.end());
                auto canon = canonical_rotation(std::move(cyc));
                if (auto reg = memo.by_key.find(canon); reg != memo.by_key.end()) {
                    out.cycle_id = reg->second;
                } else {
                    out.cycle = std::move(canon);
                }
                return true;
            }
        }
        if (prefix.size() >= 64) {
            return false;  // quadratic repeat scan stops paying off
        }
        prefix.push_back(cur);
        if (prefix.size() > budget) {
            out.exhausted = true;
            return true;
        }
        const auto next = detail::z_transform_u64(cur, memo.k, memo.p);
        if (!next) {
            return false;
        }
        cur = *next;
    }
}

// ----- chunked aggregation -----

struct LocalTally {
    Nat first_witness;
    std::uint64_t basin_count = 0;
    std::uint64_t max_transient = 0;
};

struct ChunkResult {
    std::vector<std::optional<LocalTally>> by_id;
    std::map<std::vector<Nat>, LocalTally> extra;  // cycles not in the registry
    std::vector<Nat> exhausted;
    std::uint64_t max_transient = 0;
};

void tally_outcome(ChunkResult& res, const Nat& start, StartOutcome&& out) {
    if (out.exhausted) {
        res.exhausted.push_back(start);
        return;
    }
    LocalTally* tally = nullptr;
    if (out.cycle_id != kUnset) {
        auto& slot = res.by_id[out.cycle_id];
        if (!slot) {
            slot = LocalTally{start, 0, 0};
        }
        tally = &*slot;
    } else {
        auto [it, inserted] = res.extra.try_emplace(std::move(out.cycle),
                                                    LocalTally{start, 0, 0});
        tally = &it->second;
    }
    ++tally->basin_count;
    tally->max_transient = std::max(tally->max_transient, out.transient);
    res.max_transient = std::max(res.max_transient, out.transient);
}

ChunkResult process_chunk(const Nat& lo, const Nat& hi, const Memo& memo,
                          std::uint64_t budget, ResolveBuffers& buf) {
    ChunkResult res;
    res.by_id.resize(memo.cycles.size());

    if (fits_u64(hi)) {
        const auto lo64 = lo.convert_to<std::uint64_t>();
        const auto hi64 = hi.convert_to<std::uint64_t>();
        for (std::uint64_t v = lo64;; ++v) {
            StartOutcome out;
            if (!resolve_u64(v, memo, budget, buf, out)) {
                out = resolve_nat(Nat(v), memo, budget, buf);
            }
            tally_outcome(res, Nat(v), std::move(out));
            if (v == hi64) {
                break;
            }
        }
        return res;
    }

    for (Nat v = lo; v <= hi; ++v) {
        StartOutcome out = resolve_nat(v, memo, budget, buf);
        tally_outcome(res, v, std::move(out));
    }
    return res;
}

// ----- checkpoint conversion -----

ChunkRecord to_record(const ChunkResult& res, const Memo& memo, const Nat& lo,
                      const Nat& hi, std::uint64_t budget) {
    ChunkRecord rec;
    rec.k = memo.k;
    rec.p = memo.p;
    rec.lo = lo;
    rec.hi = hi;
    rec.budget = budget;
    rec.max_transient = res.max_transient;
    rec.exhausted = res.exhausted;
    for (std::uint32_t id = 0; id < res.by_id.size(); ++id) {
        if (res.by_id[id]) {
            const auto& t = *res.by_id[id];
            rec.tallies.push_back({memo.cycles[id].values, t.first_witness,
                                   t.basin_count, t.max_transient});
        }
    }
    for (const auto& [cycle, t] : res.extra) {
        rec.tallies.push_back({cycle, t.first_witness, t.basin_count, t.max_transient});
    }
    return rec;
}

ChunkResult from_record(const ChunkRecord& rec, const Memo& memo) {
    ChunkResult res;
    res.by_id.resize(memo.cycles.size());
    res.max_transient = rec.max_transient;
    res.exhausted = rec.exhausted;
    for (const auto& tally : rec.tallies) {
        LocalTally local{tally.first_witness, tally.basin_count, tally.max_transient};
        if (auto it = memo.by_key.find(tally.cycle); it != memo.by_key.end()) {
            res.by_id[it->second] = std::move(local);
        } else {
            res.extra.emplace(tally.cycle, std::move(local));
        }
    }
    return res;
}

}  // namespace

RangeReport verify_range(const Parameters& params, const Nat& n_lo, const Nat& n_hi,
                         const SweepOptions& options) {
    if (n_lo > n_hi) {
        throw InvalidParameter("empty range: n_lo > n_hi");
    }
    if (options.budget < 1) {
        throw InvalidParameter("budget must be >= 1");
    }
    const std::uint64_t chunk_size = std::max<std::uint64_t>(options.chunk_size, 1);
    const Nat range_size = n_hi - n_lo + 1;
    const Nat chunk_count_nat = (range_size + chunk_size - 1) / chunk_size;
    if (!fits_u64(chunk_count_nat)) {
        throw InvalidParameter("range too large to chunk");
    }
    const std::uint64_t chunk_count = chunk_count_nat.convert_to<std::uint64_t>();

    const Memo memo = build_memo(params.k(), params.p(), options.memo_limit);

    std::optional<CheckpointFile> checkpoint;
    if (!options.checkpoint_path.empty()) {
        checkpoint.emplace(options.checkpoint_path);
        checkpoint->load();
    }

    const auto chunk_bounds = [&](std::uint64_t c) -> std::pair<Nat, Nat> {
        Nat lo = n_lo + Nat(c) * chunk_size;
        Nat hi = lo + (chunk_size - 1);
        if (hi > n_hi) {
            hi = n_hi;
        }
        return {std::move(lo), std::move(hi)};
    };

    std::vector<ChunkResult> results(chunk_count);
    std::atomic<std::uint64_t> next_chunk{0};

    const auto worker = [&]() {
        ResolveBuffers buf;
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunk_count) {
                return;
            }
            const auto [lo, hi] = chunk_bounds(c);
            if (checkpoint) {
                if (const ChunkRecord* rec =
                        checkpoint->find(params.k(), params.p(), lo, hi, options.budget)) {
                    results[c] = from_record(*rec, memo);
                    continue;
                }
            }
            results[c] = process_chunk(lo, hi, memo, options.budget, buf);
            if (checkpoint) {
                checkpoint->append(to_record(results[c], memo, lo, hi, options.budget));
            }
        }
    };

    unsigned workers = options.workers != 0 ? options.workers
                                            : std::thread::hardware_concurrency();
    workers = std::max(1u, workers);
    if (Nat(workers) > chunk_count_nat) {
        workers = static_cast<unsigned>(chunk_count);
    }
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    // Merge in chunk (i.e. start) order; the outcome is independent of the
    // schedule that produced the per-chunk results.
    std::map<std::vector<Nat>, CycleRecord> aggregated;
    std::uint64_t max_transient = 0;
    std::vector<Nat> exhausted;
    const auto merge_tally = [&](const std::vector<Nat>& cycle, const LocalTally& t) {
        auto [it, inserted] =
            aggregated.try_emplace(cycle, CycleRecord{cycle, t.first_witness, 0, 0});
        CycleRecord& rec = it->second;
        if (t.first_witness < rec.first_witness) {
            rec.first_witness = t.first_witness;
        }
        rec.basin_count += t.basin_count;
        rec.max_transient = std::max(rec.max_transient, t.max_transient);
    };
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
        const ChunkResult& res = results[c];
        for (std::uint32_t id = 0; id < res.by_id.size(); ++id) {
            if (res.by_id[id]) {
                merge_tally(memo.cycles[id].values, *res.by_id[id]);
            }
        }
        for (const auto& [cycle, tally] : res.extra) {
            merge_tally(cycle, tally);
        }
        exhausted.insert(exhausted.end(), res.exhausted.begin(), res.exhausted.end());
        max_transient = std::max(max_transient, res.max_transient);
    }

    std::vector<CycleRecord> cycles;
    cycles.reserve(aggregated.size());
    for (auto& [key, rec] : aggregated) {
        cycles.push_back(std::move(rec));
    }
    std::sort(cycles.begin(), cycles.end(), [](const CycleRecord& a, const CycleRecord& b) {
        return a.first_witness < b.first_witness;
    });

    const bool all_reach_m = exhausted.empty() && cycles.size() == 1 &&
                             cycles[0].cycle == std::vector<Nat>{1, 2};

    return RangeReport{
        .parameters = params,
        .n_lo = n_lo,
        .n_hi = n_hi,
        .all_reach_M = all_reach_m,
        .cycles = std::move(cycles),
        .max_transient = max_transient,
        .budget_exhausted_starts = std::move(exhausted),
    };
}

CatalogResult cycle_catalog(const Parameters& params, const Nat& n_max,
                            const SweepOptions& options) {
    if (n_max < 1) {
        throw InvalidParameter("n_max must be >= 1");
    }
    RangeReport report = verify_range(params, 1, n_max, options);
    return CatalogResult{
        .cycles = std::move(report.cycles),
        .budget_exhausted_starts = std::move(report.budget_exhausted_starts),
    };
}

void enforce_theorem_guard(const GridCell& cell) {
    if (!cell.assumptions.holds_H || cell.report.all_reach_M) {
        return;
    }
    std::string dump =
        "theorem guard: conforming cell k=" + std::to_string(cell.assumptions.parameters.k()) +
        " p=" + std::to_string(cell.assumptions.parameters.p()) +
        " did not verify the {1,2} limit set over [" + cell.report.n_lo.str() + ", " +
        cell.report.n_hi.str() + "]\n";
    dump += to_json(cell).dump(2);
    throw TheoremViolation(dump);
}

std::vector<GridCell> grid_sweep(std::uint64_t k_lo, std::uint64_t k_hi,
                                 std::uint64_t p_lo, std::uint64_t p_hi, const Nat& n_max,
                                 const SweepOptions& options) {
    if (k_lo < 2 || p_lo < 2 || k_lo > k_hi || p_lo > p_hi) {
        throw InvalidParameter("grid ranges must be nonempty with k, p >= 2");
    }
    if (n_max < 1) {
        throw InvalidParameter("n_max must be >= 1");
    }
    std::vector<GridCell> cells;
    for (std::uint64_t p = p_lo; p <= p_hi; ++p) {
        for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
            GridCell cell{
                .assumptions = check_assumptions(k, p),
                .report = verify_range(Parameters(k, p), 1, n_max, options),
            };
            enforce_theorem_guard(cell);
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

}  // namespace zadic
