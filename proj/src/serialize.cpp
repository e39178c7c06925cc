#include "zadic/serialize.hpp"

#include "zadic/errors.hpp"

#include <sstream>

namespace zadic {

namespace {

Json nat_json(const Nat& n) { return n.str(); }

Json nats_json(const std::vector<Nat>& values) {
    Json arr = Json::array();
    for (const Nat& v : values) {
        arr.push_back(v.str());
    }
    return arr;
}

Json u64_json(std::uint64_t v) { return std::to_string(v); }

std::string join_nats(const std::vector<Nat>& values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += values[i].str();
    }
    return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string bracketed(const std::vector<Nat>& cycle) {
    return "[" + join_nats(cycle, ", ") + "]";
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "plain") {
        return Format::Plain;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    throw InvalidInput("unknown format '" + std::string(name) +
                       "' (expected plain, json, or csv)");
}

// ----- json -----

Json to_json(const Trajectory& t) {
    Json j;
    j["start"] = nat_json(t.start);
    j["status"] =
        t.status == TrajectoryStatus::CycleFound ? "cycle-found" : "budget-exhausted";
    j["transient_length"] = u64_json(t.transient_length);
    j["cycle"] = nats_json(t.cycle);
    j["steps"] = nats_json(t.steps);
    return j;
}

Json to_json(const AssumptionReport& rep) {
    Json j;
    j["k"] = u64_json(rep.parameters.k());
    j["p"] = u64_json(rep.parameters.p());
    j["r"] = u64_json(rep.parameters.r());
    j["s"] = u64_json(rep.parameters.s());
    j["holds_H"] = rep.holds_H;
    j["holds_H1"] = rep.holds_H1;
    j["holds_H2"] = rep.holds_H2;
    j["f_max"] = nat_json(rep.f_max);
    return j;
}

Json to_json(const CycleRecord& rec) {
    Json j;
    j["cycle"] = nats_json(rec.cycle);
    j["first_witness"] = nat_json(rec.first_witness);
    j["basin_count"] = u64_json(rec.basin_count);
    j["max_transient"] = u64_json(rec.max_transient);
    return j;
}

Json to_json(const RangeReport& rep) {
    Json j;
    j["k"] = u64_json(rep.parameters.k());
    j["p"] = u64_json(rep.parameters.p());
    j["from"] = nat_json(rep.n_lo);
    j["to"] = nat_json(rep.n_hi);
    j["all_reach_M"] = rep.all_reach_M;
    j["max_transient"] = u64_json(rep.max_transient);
    Json cycles = Json::array();
    for (const auto& rec : rep.cycles) {
        cycles.push_back(to_json(rec));
    }
    j["cycles"] = std::move(cycles);
    j["budget_exhausted_starts"] = nats_json(rep.budget_exhausted_starts);
    return j;
}

Json to_json(const CatalogResult& cat) {
    Json j;
    Json cycles = Json::array();
    for (const auto& rec : cat.cycles) {
        cycles.push_back(to_json(rec));
    }
    j["cycles"] = std::move(cycles);
    j["budget_exhausted_starts"] = nats_json(cat.budget_exhausted_starts);
    return j;
}

Json to_json(const GridCell& cell) {
    Json j;
    j["k"] = u64_json(cell.assumptions.parameters.k());
    j["p"] = u64_json(cell.assumptions.parameters.p());
    j["r"] = u64_json(cell.assumptions.parameters.r());
    j["s"] = u64_json(cell.assumptions.parameters.s());
    j["holds_H"] = cell.assumptions.holds_H;
    j["holds_H1"] = cell.assumptions.holds_H1;
    j["holds_H2"] = cell.assumptions.holds_H2;
    Json cycles = Json::array();
    for (const auto& rec : cell.report.cycles) {
        cycles.push_back(nats_json(rec.cycle));
    }
    j["cycles"] = std::move(cycles);
    j["max_transient"] = u64_json(cell.report.max_transient);
    j["budget_exhausted_count"] =
        u64_json(cell.report.budget_exhausted_starts.size());
    return j;
}

Json to_json(const std::vector<GridCell>& cells) {
    Json arr = Json::array();
    for (const auto& cell : cells) {
        arr.push_back(to_json(cell));
    }
    Json j;
    j["cells"] = std::move(arr);
    return j;
}

Json envelope(std::string_view command, Json params, Json payload) {
    Json j;
    j["command"] = std::string(command);
    j["params"] = std::move(params);
    j["payload"] = std::move(payload);
    return j;
}

// ----- csv -----

std::string to_csv(const Trajectory& t) {
    std::string out = "step,value\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += t.steps[i].str();
        out += '\n';
    }
    return out;
}

std::string to_csv(const AssumptionReport& rep) {
    std::string out = "k,p,r,s,holds_H,holds_H1,holds_H2,f_max\n";
    out += std::to_string(rep.parameters.k()) + "," + std::to_string(rep.parameters.p()) +
           "," + std::to_string(rep.parameters.r()) + "," +
           std::to_string(rep.parameters.s()) + "," + bool_text(rep.holds_H) + "," +
           bool_text(rep.holds_H1) + "," + bool_text(rep.holds_H2) + "," +
           rep.f_max.str() + "\n";
    return out;
}

std::string cycles_to_csv(const std::vector<CycleRecord>& records) {
    std::string out = "cycle,first_witness,basin_count,max_transient\n";
    for (const auto& rec : records) {
        out += join_nats(rec.cycle, " ") + "," + rec.first_witness.str() + "," +
               std::to_string(rec.basin_count) + "," + std::to_string(rec.max_transient) +
               "\n";
    }
    return out;
}

std::string to_csv(const RangeReport& rep) { return cycles_to_csv(rep.cycles); }

std::string to_csv(const CatalogResult& cat) { return cycles_to_csv(cat.cycles); }

std::string to_csv(const std::vector<GridCell>& cells) {
    std::string out =
        "k,p,r,s,holds_H,holds_H1,holds_H2,cycles,max_transient,budget_exhausted\n";
    for (const auto& cell : cells) {
        std::string cycles;
        for (std::size_t i = 0; i < cell.report.cycles.size(); ++i) {
            if (i != 0) {
                cycles += ';';
            }
            cycles += join_nats(cell.report.cycles[i].cycle, " ");
        }
        out += std::to_string(cell.assumptions.parameters.k()) + "," +
               std::to_string(cell.assumptions.parameters.p()) + "," +
               std::to_string(cell.assumptions.parameters.r()) + "," +
               std::to_string(cell.assumptions.parameters.s()) + "," +
               bool_text(cell.assumptions.holds_H) + "," +
               bool_text(cell.assumptions.holds_H1) + "," +
               bool_text(cell.assumptions.holds_H2) + "," + cycles + "," +
               std::to_string(cell.report.max_transient) + "," +
               std::to_string(cell.report.budget_exhausted_starts.size()) + "\n";
    }
    return out;
}

std::vector<std::vector<std::string>> csv_parse(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::size_t begin = 0;
    while (begin < text.size()) {
        const std::size_t end = std::min(text.find('\n', begin), text.size());
        const std::string_view line = text.substr(begin, end - begin);
        std::vector<std::string> fields;
        std::size_t field_begin = 0;
        for (;;) {
            const std::size_t field_end = std::min(line.find(',', field_begin), line.size());
            fields.emplace_back(line.substr(field_begin, field_end - field_begin));
            if (field_end == line.size()) {
                break;
            }
            field_begin = field_end + 1;
        }
        rows.push_back(std::move(fields));
        if (end == text.size()) {
            break;
        }
        begin = end + 1;
    }
    return rows;
}

std::string csv_emit(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

// ----- plain -----

std::string to_plain(const Trajectory& t) {
    std::string out;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        out += "step " + std::to_string(i) + ": " + t.steps[i].str() + "\n";
    }
    if (t.status == TrajectoryStatus::CycleFound) {
        out += "transient length: " + std::to_string(t.transient_length) + "\n";
        out += "cycle: " + bracketed(t.cycle) + "\n";
        out += "status: cycle-found\n";
    } else {
        out += "status: budget-exhausted after " +
               std::to_string(t.steps.size() - 1) + " steps\n";
    }
    return out;
}

std::string to_plain(const AssumptionReport& rep) {
    std::ostringstream out;
    out << "k=" << rep.parameters.k() << " p=" << rep.parameters.p()
        << " decomposition: r=" << rep.parameters.r() << " s=" << rep.parameters.s()
        << "\n";
    out << "H  (p+2 <= k < p^2-3p+2, p > 5): " << bool_text(rep.holds_H) << "\n";
    out << "H1 (1 <= r <= p-4):              " << bool_text(rep.holds_H1) << "\n";
    out << "H2 ((r+1)(r+2) <= rp+1):         " << bool_text(rep.holds_H2) << "\n";
    out << "f_max over digits 0..k-1: " << rep.f_max.str() << "\n";
    return out.str();
}

namespace {

std::string cycles_plain(const std::vector<CycleRecord>& records) {
    std::string out = "cycles:\n";
    for (const auto& rec : records) {
        out += "  " + bracketed(rec.cycle) + "  first witness " +
               rec.first_witness.str() + "  basin " + std::to_string(rec.basin_count) +
               "  max transient " + std::to_string(rec.max_transient) + "\n";
    }
    return out;
}

std::string exhausted_plain(const std::vector<Nat>& starts) {
    if (starts.empty()) {
        return "budget exhausted: none\n";
    }
    std::string out = "budget exhausted (" + std::to_string(starts.size()) + "):";
    for (const Nat& n : starts) {
        out += " " + n.str();
    }
    out += "\n";
    return out;
}

}  // namespace

std::string to_plain(const RangeReport& rep) {
    std::string out;
    out += "parameters: k=" + std::to_string(rep.parameters.k()) +
           " p=" + std::to_string(rep.parameters.p()) + "\n";
    out += "range: " + rep.n_lo.str() + ".." + rep.n_hi.str() + "\n";
    out += "all values reach {1,2}: " + bool_text(rep.all_reach_M) + "\n";
    out += "max transient: " + std::to_string(rep.max_transient) + "\n";
    out += cycles_plain(rep.cycles);
    out += exhausted_plain(rep.budget_exhausted_starts);
    return out;
}

std::string to_plain(const CatalogResult& cat) {
    return cycles_plain(cat.cycles) + exhausted_plain(cat.budget_exhausted_starts);
}

std::string to_plain(const std::vector<GridCell>& cells) {
    std::string out;
    for (const auto& cell : cells) {
        std::string cycles;
        for (std::size_t i = 0; i < cell.report.cycles.size(); ++i) {
            if (i != 0) {
                cycles += " ";
            }
            cycles += bracketed(cell.report.cycles[i].cycle);
        }
        out += "k=" + std::to_string(cell.assumptions.parameters.k()) +
               " p=" + std::to_string(cell.assumptions.parameters.p()) + " H=" +
               bool_text(cell.assumptions.holds_H) + " cycles: " + cycles +
               " max transient " + std::to_string(cell.report.max_transient);
        if (!cell.report.budget_exhausted_starts.empty()) {
            out += " budget exhausted " +
                   std::to_string(cell.report.budget_exhausted_starts.size());
        }
        out += "\n";
    }
    return out;
}

}  // namespace zadic
