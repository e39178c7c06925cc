#include "zadic/checkpoint.hpp"

#include "zadic/serialize.hpp"
#include "zadic/sweep.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

using zadic::ChunkRecord;
using zadic::Nat;
using zadic::Parameters;
using zadic::SweepOptions;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name)
        : path(std::filesystem::temp_directory_path() /
               (name + "." + std::to_string(::getpid()) + ".ckpt")) {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

ChunkRecord sample_record() {
    ChunkRecord rec;
    rec.k = 16;
    rec.p = 8;
    rec.lo = 1;
    rec.hi = 4096;
    rec.budget = 10'000;
    rec.max_transient = 3;
    rec.exhausted = {Nat(17), Nat(99)};
    rec.tallies.push_back({{Nat(1), Nat(2)}, Nat(1), 4000, 3});
    rec.tallies.push_back({{Nat(4)}, Nat(4), 94, 2});
    return rec;
}

}  // namespace

TEST_CASE("chunk records survive a format/parse round trip") {
    const ChunkRecord rec = sample_record();
    const std::string line = zadic::format_chunk_record(rec);
    const auto parsed = zadic::parse_chunk_record(line);
    REQUIRE(parsed.has_value());
    CHECK(*parsed == rec);

    ChunkRecord empty = rec;
    empty.exhausted.clear();
    empty.tallies.clear();
    const auto parsed_empty = zadic::parse_chunk_record(zadic::format_chunk_record(empty));
    REQUIRE(parsed_empty.has_value());
    CHECK(*parsed_empty == empty);
}

TEST_CASE("headers, blanks, and torn lines are ignored") {
    CHECK_FALSE(zadic::parse_chunk_record("zadic-checkpoint v1").has_value());
    CHECK_FALSE(zadic::parse_chunk_record("").has_value());
    CHECK_FALSE(zadic::parse_chunk_record("chunk k=16 p=8 lo=1").has_value());
    CHECK_FALSE(zadic::parse_chunk_record("chunk k=16 p=8 lo=1 hi=10 budget=5 cycles=1.").has_value());
    const std::string line = zadic::format_chunk_record(sample_record());
    CHECK_FALSE(zadic::parse_chunk_record(line.substr(0, line.size() / 2)).has_value());
}

TEST_CASE("CheckpointFile stores and finds records by identity") {
    TempFile tmp("store");
    {
        zadic::CheckpointFile file(tmp.path.string());
        file.load();
        CHECK(file.size() == 0);
        file.append(sample_record());
    }
    zadic::CheckpointFile file(tmp.path.string());
    file.load();
    CHECK(file.size() == 1);
    const ChunkRecord* found = file.find(16, 8, 1, 4096, 10'000);
    REQUIRE(found != nullptr);
    CHECK(*found == sample_record());
    CHECK(file.find(16, 8, 1, 4096, 9'999) == nullptr);
    CHECK(file.find(16, 7, 1, 4096, 10'000) == nullptr);
}

TEST_CASE("a sweep resumes from a truncated checkpoint with an identical report") {
    TempFile tmp("resume");
    const Parameters params(10, 6);
    SweepOptions options;
    options.chunk_size = 512;
    options.workers = 2;
    options.checkpoint_path = tmp.path.string();

    const auto full = zadic::verify_range(params, 1, 5'000, options);
    const std::string full_json = zadic::to_json(full).dump();

    // keep only the header and the first two chunk lines
    std::vector<std::string> lines;
    {
        std::ifstream in(tmp.path);
        std::string line;
        while (std::getline(in, line)) {
            lines.push_back(line);
        }
    }
    REQUIRE(lines.size() == 1 + 10);  // header + ceil(5000 / 512) chunks
    {
        std::ofstream out(tmp.path, std::ios::trunc);
        for (std::size_t i = 0; i < 3; ++i) {
            out << lines[i] << '\n';
        }
    }

    const auto resumed = zadic::verify_range(params, 1, 5'000, options);
    CHECK(zadic::to_json(resumed).dump() == full_json);

    // the file has been topped back up and re-running appends nothing new
    zadic::CheckpointFile file(tmp.path.string());
    file.load();
    CHECK(file.size() == 10);
    const auto third = zadic::verify_range(params, 1, 5'000, options);
    CHECK(zadic::to_json(third).dump() == full_json);
    zadic::CheckpointFile after(tmp.path.string());
    after.load();
    CHECK(after.size() == 10);
}

TEST_CASE("records from a different chunking or budget are ignored, not merged") {
    TempFile tmp("mismatch");
    const Parameters params(10, 6);
    SweepOptions coarse;
    coarse.chunk_size = 1'000;
    coarse.checkpoint_path = tmp.path.string();
    const auto first = zadic::verify_range(params, 1, 3'000, coarse);

    SweepOptions fine = coarse;
    fine.chunk_size = 700;  // chunk bounds no longer line up
    const auto second = zadic::verify_range(params, 1, 3'000, fine);
    CHECK(second.all_reach_M == first.all_reach_M);
    CHECK(second.cycles[0].basin_count == first.cycles[0].basin_count);

    SweepOptions other_budget = coarse;
    other_budget.budget = 5'000;
    const auto third = zadic::verify_range(params, 1, 3'000, other_budget);
    CHECK(third.cycles[0].basin_count == first.cycles[0].basin_count);
}

TEST_CASE("foreign garbage in the checkpoint file is tolerated") {
    TempFile tmp("garbage");
    {
        std::ofstream out(tmp.path);
        out << "zadic-checkpoint v1\n";
        out << "# a comment someone added by hand\n";
        out << "chunk this is not parseable\n";
        out << zadic::format_chunk_record(sample_record()) << '\n';
    }
    zadic::CheckpointFile file(tmp.path.string());
    file.load();
    CHECK(file.size() == 1);
    CHECK(file.find(16, 8, 1, 4096, 10'000) != nullptr);
}
