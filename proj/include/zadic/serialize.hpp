#pragma once

#include "zadic/checkpoint.hpp"
#include "zadic/sweep.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace zadic {

enum class Format { Plain, Json, Csv };

/// "plain", "json", or "csv"; throws InvalidInput otherwise.
Format parse_format(std::string_view name);

/// Key order is insertion order, so identical data dumps to identical
/// bytes. Every integer is emitted as a decimal string: consumers never
/// overflow, and nothing in the pipeline touches floating point.
using Json = nlohmann::ordered_json;

Json to_json(const Trajectory& t);
Json to_json(const AssumptionReport& rep);
Json to_json(const CycleRecord& rec);
Json to_json(const RangeReport& rep);
Json to_json(const CatalogResult& cat);
Json to_json(const GridCell& cell);
Json to_json(const std::vector<GridCell>& cells);

/// The CLI output envelope: {"command": ..., "params": ..., "payload": ...}.
Json envelope(std::string_view command, Json params, Json payload);

// CSV payloads. Fields never contain commas, quotes, or newlines (cycle
// values are space-joined, cycles semicolon-joined), so parsing is a
// plain split and emit(parse(s)) == s.
std::string to_csv(const Trajectory& t);  // "step,value" rows, start included
std::string to_csv(const AssumptionReport& rep);
std::string cycles_to_csv(const std::vector<CycleRecord>& records);
std::string to_csv(const RangeReport& rep);
std::string to_csv(const CatalogResult& cat);
std::string to_csv(const std::vector<GridCell>& cells);

std::vector<std::vector<std::string>> csv_parse(std::string_view text);
std::string csv_emit(const std::vector<std::vector<std::string>>& rows);

// Human-readable renderings.
std::string to_plain(const Trajectory& t);
std::string to_plain(const AssumptionReport& rep);
std::string to_plain(const RangeReport& rep);
std::string to_plain(const CatalogResult& cat);
std::string to_plain(const std::vector<GridCell>& cells);

}  // namespace zadic
