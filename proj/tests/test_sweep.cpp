#include "zadic/sweep.hpp"

#include "zadic/errors.hpp"
#include "zadic/serialize.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <cmath>

using zadic::CatalogResult;
using zadic::CycleRecord;
using zadic::GridCell;
using zadic::Nat;
using zadic::Parameters;
using zadic::RangeReport;
using zadic::SweepOptions;

namespace {

std::vector<Nat> cycle_of(std::initializer_list<std::uint64_t> values) {
    std::vector<Nat> out;
    for (auto v : values) {
        out.emplace_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("verify_range: conforming parameters reach {1,2} everywhere") {
    const RangeReport report = zadic::verify_range(Parameters(16, 8), 1, 10'000);
    CHECK(report.all_reach_M);
    REQUIRE(report.cycles.size() == 1);
    CHECK(report.cycles[0].cycle == cycle_of({1, 2}));
    CHECK(report.cycles[0].first_witness == 1);
    CHECK(report.cycles[0].basin_count == 10'000);
    CHECK(report.max_transient == 3);  // frozen from the oracle census
    CHECK(report.budget_exhausted_starts.empty());
}

TEST_CASE("verify_range: (3, 2) splits between [1,2] and the fixed point [4]") {
    const RangeReport report = zadic::verify_range(Parameters(3, 2), 1, 1'000);
    CHECK_FALSE(report.all_reach_M);
    REQUIRE(report.cycles.size() == 2);
    // sorted by first witness: [1,2] from 1, [4] from 4
    CHECK(report.cycles[0].cycle == cycle_of({1, 2}));
    CHECK(report.cycles[0].basin_count == 855);
    CHECK(report.cycles[0].max_transient == 3);
    CHECK(report.cycles[1].cycle == cycle_of({4}));
    CHECK(report.cycles[1].first_witness == 4);
    CHECK(report.cycles[1].basin_count == 145);
    CHECK(report.cycles[1].max_transient == 2);
}

TEST_CASE("verify_range agrees with the per-start oracle census") {
    for (const auto& [k, p] : {std::pair<std::uint64_t, std::uint64_t>{3, 2},
                               {4, 2},
                               {5, 2},
                               {10, 6},
                               {9, 7}}) {
        const std::uint64_t n_max = 300;
        const RangeReport report = zadic::verify_range(Parameters(k, p), 1, n_max);
        const auto expected = oracle::catalog_ref(k, p, n_max);
        REQUIRE(report.cycles.size() == expected.size());
        std::uint64_t total = 0;
        for (const CycleRecord& rec : report.cycles) {
            const auto it = expected.find(rec.cycle);
            REQUIRE(it != expected.end());
            CHECK(rec.first_witness == it->second.first_witness);
            CHECK(rec.basin_count == it->second.basin);
            CHECK(rec.max_transient == it->second.max_transient);
            total += rec.basin_count;
        }
        CHECK(total == n_max);
    }
}

TEST_CASE("partition soundness: basins plus exhausted equal the range size") {
    SweepOptions options;
    options.budget = 3;  // force some exhaustions
    const RangeReport report = zadic::verify_range(Parameters(16, 8), 1, 5'000, options);
    std::uint64_t basins = 0;
    for (const auto& rec : report.cycles) {
        basins += rec.basin_count;
    }
    CHECK(basins + report.budget_exhausted_starts.size() == 5'000);
    CHECK_FALSE(report.budget_exhausted_starts.empty());
    CHECK_FALSE(report.all_reach_M);
    // exhausted list is ascending
    for (std::size_t i = 0; i + 1 < report.budget_exhausted_starts.size(); ++i) {
        CHECK(report.budget_exhausted_starts[i] < report.budget_exhausted_starts[i + 1]);
    }
    // a larger budget clears them
    const RangeReport relaxed = zadic::verify_range(Parameters(16, 8), 1, 5'000);
    CHECK(relaxed.all_reach_M);
}

TEST_CASE("budget exhaustion matches trajectory semantics exactly") {
    // detection of [1,2] from 9815671 takes transient 2 + cycle 2 = 4 steps
    SweepOptions tight;
    tight.budget = 3;
    const RangeReport r3 =
        zadic::verify_range(Parameters(16, 8), 9815671, 9815671, tight);
    CHECK(r3.budget_exhausted_starts == std::vector<Nat>{9815671});
    SweepOptions enough;
    enough.budget = 4;
    const RangeReport r4 =
        zadic::verify_range(Parameters(16, 8), 9815671, 9815671, enough);
    CHECK(r4.all_reach_M);
    CHECK(r4.max_transient == 2);
}

TEST_CASE("single-value range on the cycle itself") {
    const RangeReport report = zadic::verify_range(Parameters(10, 6), 1, 1);
    CHECK(report.all_reach_M);
    CHECK(report.max_transient == 0);
    REQUIRE(report.cycles.size() == 1);
    CHECK(report.cycles[0].cycle == cycle_of({1, 2}));
    CHECK(report.cycles[0].basin_count == 1);
}

TEST_CASE("starting the range at 0 picks up the fixed point [0]") {
    const RangeReport report = zadic::verify_range(Parameters(10, 6), 0, 10);
    CHECK_FALSE(report.all_reach_M);
    REQUIRE(report.cycles.size() == 2);
    CHECK(report.cycles[0].cycle == cycle_of({0}));
    CHECK(report.cycles[0].basin_count == 1);
    CHECK(report.cycles[1].cycle == cycle_of({1, 2}));
    CHECK(report.cycles[1].basin_count == 10);
}

TEST_CASE("verify_range validates its inputs") {
    CHECK_THROWS_AS(zadic::verify_range(Parameters(10, 6), 5, 4), zadic::InvalidParameter);
    SweepOptions zero_budget;
    zero_budget.budget = 0;
    CHECK_THROWS_AS(zadic::verify_range(Parameters(10, 6), 1, 5, zero_budget),
                    zadic::InvalidParameter);
}

TEST_CASE("reports are identical for any worker count and chunk size") {
    const Parameters params(10, 7);
    SweepOptions serial;
    serial.workers = 1;
    const RangeReport base = zadic::verify_range(params, 1, 10'000, serial);
    const std::string base_json = zadic::to_json(base).dump();

    SweepOptions parallel;
    parallel.workers = 8;
    CHECK(zadic::to_json(zadic::verify_range(params, 1, 10'000, parallel)).dump() ==
          base_json);

    SweepOptions odd_chunks;
    odd_chunks.workers = 3;
    odd_chunks.chunk_size = 7;
    CHECK(zadic::to_json(zadic::verify_range(params, 1, 10'000, odd_chunks)).dump() ==
          base_json);

    SweepOptions tiny_memo;
    tiny_memo.workers = 5;
    tiny_memo.memo_limit = 4;
    CHECK(zadic::to_json(zadic::verify_range(params, 1, 10'000, tiny_memo)).dump() ==
          base_json);
}

TEST_CASE("huge starts work through the generic resolver") {
    Nat big = 1;
    big <<= 80;  // 2^80
    const RangeReport report = zadic::verify_range(Parameters(10, 7), big, big + 50);
    CHECK(report.all_reach_M);
    CHECK(report.cycles[0].basin_count == 51);
    CHECK(report.cycles[0].first_witness == big);
}

TEST_CASE("cycle_catalog pinned results") {
    SUBCASE("(5, 2): the assumptions fail yet [1,2] still attracts most starts") {
        const CatalogResult cat = zadic::cycle_catalog(Parameters(5, 2), 10'000);
        REQUIRE(cat.cycles.size() == 2);
        CHECK(cat.cycles[0].cycle == cycle_of({1, 2}));
        CHECK(cat.cycles[0].first_witness == 1);
        CHECK(cat.cycles[0].basin_count == 8436);
        CHECK(cat.cycles[1].cycle == cycle_of({8}));
        CHECK(cat.cycles[1].first_witness == 8);
        CHECK(cat.cycles[1].basin_count == 1564);
        CHECK(cat.budget_exhausted_starts.empty());
    }
    SUBCASE("(10, 6): exactly one cycle") {
        const CatalogResult cat = zadic::cycle_catalog(Parameters(10, 6), 10'000);
        REQUIRE(cat.cycles.size() == 1);
        CHECK(cat.cycles[0].cycle == cycle_of({1, 2}));
        CHECK(cat.cycles[0].basin_count == 10'000);
    }
    SUBCASE("(3, 2): includes the fixed point [4]") {
        const CatalogResult cat = zadic::cycle_catalog(Parameters(3, 2), 1'000);
        REQUIRE(cat.cycles.size() == 2);
        CHECK(cat.cycles[1].cycle == cycle_of({4}));
    }
    SUBCASE("records are sorted by first witness") {
        const CatalogResult cat = zadic::cycle_catalog(Parameters(4, 2), 1'000);
        for (std::size_t i = 0; i + 1 < cat.cycles.size(); ++i) {
            CHECK(cat.cycles[i].first_witness < cat.cycles[i + 1].first_witness);
        }
    }
}

TEST_CASE("transient growth tripwire: bounded by a small multiple of the digit count") {
    for (const auto& [k, p] : {std::pair<std::uint64_t, std::uint64_t>{16, 8},
                               {10, 6},
                               {10, 7},
                               {10, 8},
                               {9, 7}}) {
        const std::uint64_t n_max = 10'000;
        const RangeReport report = zadic::verify_range(Parameters(k, p), 1, n_max);
        const std::uint64_t digit_count = static_cast<std::uint64_t>(
            std::ceil(std::log(static_cast<double>(n_max)) / std::log(static_cast<double>(k))));
        CHECK(report.max_transient <= 10 + 5 * digit_count);
    }
}

TEST_CASE("grid_sweep: degenerate and mixed cells complete") {
    const auto cells = zadic::grid_sweep(2, 4, 2, 3, 100);
    REQUIRE(cells.size() == 6);
    // ordered by (p, k)
    CHECK(cells[0].assumptions.parameters.k() == 2);
    CHECK(cells[0].assumptions.parameters.p() == 2);
    CHECK(cells[1].assumptions.parameters.k() == 3);
    CHECK(cells[5].assumptions.parameters.p() == 3);
    for (const GridCell& cell : cells) {
        CHECK_FALSE(cell.assumptions.holds_H);
        CHECK_FALSE(cell.report.cycles.empty());
    }
    // frozen from the oracle census
    CHECK(cells[0].report.cycles.size() == 1);  // (2,2): everything lands on [2]
    CHECK(cells[0].report.cycles[0].cycle == cycle_of({2}));
    CHECK(cells[1].report.cycles.size() == 2);  // (3,2): [1,2] and [4]
    CHECK(cells[2].report.cycles.size() == 2);  // (4,2): [1,2] and [3,6]
    CHECK(cells[2].report.cycles[1].cycle == cycle_of({3, 6}));
    CHECK(cells[5].report.cycles.size() == 1);  // (4,3): [1,2] only
}

TEST_CASE("grid_sweep: conforming band verifies {1,2} in every cell") {
    const auto cells = zadic::grid_sweep(9, 12, 7, 7, 500);
    REQUIRE(cells.size() == 4);
    for (const GridCell& cell : cells) {
        CHECK(cell.assumptions.holds_H);
        REQUIRE(cell.report.cycles.size() == 1);
        CHECK(cell.report.cycles[0].cycle == cycle_of({1, 2}));
        CHECK(cell.report.budget_exhausted_starts.empty());
    }
}

TEST_CASE("grid_sweep validates its ranges") {
    CHECK_THROWS_AS(zadic::grid_sweep(4, 2, 2, 3, 100), zadic::InvalidParameter);
    CHECK_THROWS_AS(zadic::grid_sweep(1, 2, 2, 3, 100), zadic::InvalidParameter);
    CHECK_THROWS_AS(zadic::grid_sweep(2, 3, 2, 3, 0), zadic::InvalidParameter);
}

TEST_CASE("the theorem guard fires on a synthetic violating cell") {
    GridCell cell{
        .assumptions = zadic::check_assumptions(16, 8),
        .report = zadic::verify_range(Parameters(16, 8), 1, 100),
    };
    CHECK_NOTHROW(zadic::enforce_theorem_guard(cell));

    GridCell corrupted = cell;
    corrupted.report.all_reach_M = false;
    corrupted.report.cycles[0].cycle = cycle_of({4});
    CHECK_THROWS_AS(zadic::enforce_theorem_guard(corrupted), zadic::TheoremViolation);

    // non-conforming cells may report anything
    GridCell nonconforming{
        .assumptions = zadic::check_assumptions(3, 2),
        .report = zadic::verify_range(Parameters(3, 2), 1, 100),
    };
    CHECK_NOTHROW(zadic::enforce_theorem_guard(nonconforming));
}
