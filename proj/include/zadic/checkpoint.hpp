#pragma once

#include "zadic/nat.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace zadic {

/// One completed sweep chunk as persisted to the checkpoint file.
struct ChunkRecord {
    std::uint64_t k = 0;
    std::uint64_t p = 0;
    Nat lo;
    Nat hi;
    std::uint64_t budget = 0;
    std::uint64_t max_transient = 0;
    std::vector<Nat> exhausted;  // starts that did not resolve within budget

    struct Tally {
        std::vector<Nat> cycle;  // canonical rotation
        Nat first_witness;
        std::uint64_t basin_count = 0;
        std::uint64_t max_transient = 0;

        bool operator==(const Tally&) const = default;
    };
    std::vector<Tally> tallies;

    bool operator==(const ChunkRecord&) const = default;
};

std::string format_chunk_record(const ChunkRecord& rec);

/// Parse one checkpoint line. Returns nullopt for headers, blanks, and
/// malformed lines (resume tolerates a torn final write).
std::optional<ChunkRecord> parse_chunk_record(std::string_view line);

/// Append-only, newline-delimited chunk store. Records are keyed by
/// (k, p, lo, hi, budget); re-running a sweep appends only the chunks the
/// file does not already hold, so resume is logically idempotent.
class CheckpointFile {
public:
    explicit CheckpointFile(std::string path);

    /// Read existing records; missing file is an empty store.
    void load();

    const ChunkRecord* find(std::uint64_t k, std::uint64_t p, const Nat& lo,
                            const Nat& hi, std::uint64_t budget) const;

    /// Thread-safe append; flushed immediately so an interrupted sweep
    /// loses at most the chunk being written.
    void append(const ChunkRecord& rec);

    std::size_t size() const { return records_.size(); }

private:
    std::string path_;
    std::unordered_map<std::string, ChunkRecord> records_;
    std::mutex write_mutex_;
};

}  // namespace zadic
