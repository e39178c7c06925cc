#include "zadic/serialize.hpp"

#include "zadic/errors.hpp"

#include <doctest.h>

using zadic::Format;
using zadic::Json;
using zadic::Nat;
using zadic::Parameters;

namespace {

// every leaf must be a string or a bool: no JSON numbers anywhere
void require_stringly(const Json& j) {
    if (j.is_object() || j.is_array()) {
        for (const auto& child : j) {
            require_stringly(child);
        }
        return;
    }
    REQUIRE((j.is_string() || j.is_boolean()));
}

}  // namespace

TEST_CASE("format names parse") {
    CHECK(zadic::parse_format("plain") == Format::Plain);
    CHECK(zadic::parse_format("json") == Format::Json);
    CHECK(zadic::parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(zadic::parse_format("yaml"), zadic::InvalidInput);
}

TEST_CASE("trajectory serialization") {
    const auto t = zadic::trajectory(9815671, Parameters(16, 8));

    SUBCASE("json uses decimal strings everywhere") {
        const Json j = zadic::to_json(t);
        require_stringly(j);
        CHECK(j["start"] == "9815671");
        CHECK(j["transient_length"] == "2");
        CHECK(j["cycle"] == Json::array({"1", "2"}));
        CHECK(j["steps"] == Json::array({"9815671", "12", "2", "1"}));
        CHECK(j["status"] == "cycle-found");
    }

    SUBCASE("csv is the pinned step,value schema including the start") {
        const std::string csv = zadic::to_csv(t);
        CHECK(csv == "step,value\n0,9815671\n1,12\n2,2\n3,1\n");
    }

    SUBCASE("plain carries rows plus a summary") {
        const std::string plain = zadic::to_plain(t);
        CHECK(plain.find("step 0: 9815671") != std::string::npos);
        CHECK(plain.find("transient length: 2") != std::string::npos);
        CHECK(plain.find("cycle: [1, 2]") != std::string::npos);
    }
}

TEST_CASE("envelope shape") {
    const Json env = zadic::envelope("trajectory", Json{{"k", "16"}},
                                     zadic::to_json(zadic::trajectory(5, Parameters(16, 8))));
    REQUIRE(env.contains("command"));
    REQUIRE(env.contains("params"));
    REQUIRE(env.contains("payload"));
    CHECK(env["command"] == "trajectory");
    // insertion order is preserved: command, params, payload
    auto it = env.begin();
    CHECK(it.key() == "command");
    ++it;
    CHECK(it.key() == "params");
    ++it;
    CHECK(it.key() == "payload");
}

TEST_CASE("json round trip is byte-idempotent") {
    const auto report = zadic::verify_range(Parameters(3, 2), 1, 500);
    const Json j = zadic::to_json(report);
    require_stringly(j);
    const std::string once = j.dump();
    CHECK(Json::parse(once).dump() == once);

    const auto cells = zadic::grid_sweep(3, 4, 2, 3, 50);
    const std::string grid_once = zadic::to_json(cells).dump();
    CHECK(Json::parse(grid_once).dump() == grid_once);
}

TEST_CASE("csv round trip is byte-idempotent") {
    const auto report = zadic::verify_range(Parameters(3, 2), 1, 500);
    for (const std::string text :
         {zadic::to_csv(report), zadic::to_csv(zadic::cycle_catalog(Parameters(4, 2), 200)),
          zadic::to_csv(zadic::grid_sweep(2, 4, 2, 3, 50)),
          zadic::to_csv(zadic::check_assumptions(16, 8)),
          zadic::to_csv(zadic::trajectory(12345, Parameters(5, 2)))}) {
        CHECK(zadic::csv_emit(zadic::csv_parse(text)) == text);
    }
}

TEST_CASE("range report json pins the documented keys") {
    const auto report = zadic::verify_range(Parameters(3, 2), 1, 1'000);
    const Json j = zadic::to_json(report);
    CHECK(j["all_reach_M"] == false);
    CHECK(j["from"] == "1");
    CHECK(j["to"] == "1000");
    REQUIRE(j["cycles"].size() == 2);
    CHECK(j["cycles"][0]["cycle"] == Json::array({"1", "2"}));
    CHECK(j["cycles"][0]["basin_count"] == "855");
    CHECK(j["cycles"][1]["cycle"] == Json::array({"4"}));
    CHECK(j["budget_exhausted_starts"] == Json::array());
}

TEST_CASE("grid csv has one row per cell with semicolon-joined cycle sets") {
    const auto cells = zadic::grid_sweep(3, 4, 2, 2, 100);
    const std::string csv = zadic::to_csv(cells);
    const auto rows = zadic::csv_parse(csv);
    REQUIRE(rows.size() == 3);  // header + 2 cells
    CHECK(rows[0][0] == "k");
    CHECK(rows[1][0] == "3");
    CHECK(rows[1][7] == "1 2;4");
    CHECK(rows[2][0] == "4");
    CHECK(rows[2][7] == "1 2;3 6");
}

TEST_CASE("assumption report serialization") {
    const auto rep = zadic::check_assumptions(16, 8);
    const Json j = zadic::to_json(rep);
    require_stringly(j);
    CHECK(j["r"] == "1");
    CHECK(j["s"] == "7");
    CHECK(j["f_max"] == "6");
    CHECK(j["holds_H"] == true);
    const std::string csv = zadic::to_csv(rep);
    CHECK(csv ==
          "k,p,r,s,holds_H,holds_H1,holds_H2,f_max\n16,8,1,7,true,true,true,6\n");
}
