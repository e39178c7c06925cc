#include "zadic/checkpoint.hpp"

#include "zadic/errors.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace zadic {

namespace {

constexpr std::string_view kHeader = "zadic-checkpoint v1";

std::string join_nats(const std::vector<Nat>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += values[i].str();
    }
    return out;
}

bool split_nats(std::string_view text, char sep, std::vector<Nat>& out) {
    out.clear();
    if (text.empty()) {
        return true;
    }
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = std::min(text.find(sep, begin), text.size());
        const std::string_view piece = text.substr(begin, end - begin);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string_view::npos) {
            return false;
        }
        out.emplace_back(std::string(piece));
        if (end == text.size()) {
            break;
        }
        begin = end + 1;
    }
    return true;
}

std::string record_key(std::uint64_t k, std::uint64_t p, const Nat& lo, const Nat& hi,
                       std::uint64_t budget) {
    return std::to_string(k) + "|" + std::to_string(p) + "|" + lo.str() + "|" +
           hi.str() + "|" + std::to_string(budget);
}

}  // namespace

std::string format_chunk_record(const ChunkRecord& rec) {
    std::string line = "chunk";
    line += " k=" + std::to_string(rec.k);
    line += " p=" + std::to_string(rec.p);
    line += " lo=" + rec.lo.str();
    line += " hi=" + rec.hi.str();
    line += " budget=" + std::to_string(rec.budget);
    line += " maxt=" + std::to_string(rec.max_transient);
    line += " exhausted=" + join_nats(rec.exhausted, '.');
    line += " cycles=";
    for (std::size_t i = 0; i < rec.tallies.size(); ++i) {
        const auto& tally = rec.tallies[i];
        if (i != 0) {
            line += ';';
        }
        line += join_nats(tally.cycle, '.');
        line += ":w=" + tally.first_witness.str();
        line += ":b=" + std::to_string(tally.basin_count);
        line += ":t=" + std::to_string(tally.max_transient);
    }
    return line;
}

std::optional<ChunkRecord> parse_chunk_record(std::string_view line) {
    std::istringstream stream{std::string(line)};
    std::string token;
    if (!(stream >> token) || token != "chunk") {
        return std::nullopt;
    }

    ChunkRecord rec;
    bool have_k = false, have_p = false, have_lo = false, have_hi = false,
         have_budget = false, have_cycles = false;
    while (stream >> token) {
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos) {
            return std::nullopt;
        }
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        try {
            if (key == "k") {
                rec.k = std::stoull(value);
                have_k = true;
            } else if (key == "p") {
                rec.p = std::stoull(value);
                have_p = true;
            } else if (key == "lo") {
                rec.lo = parse_nat(value);
                have_lo = true;
            } else if (key == "hi") {
                rec.hi = parse_nat(value);
                have_hi = true;
            } else if (key == "budget") {
                rec.budget = std::stoull(value);
                have_budget = true;
            } else if (key == "maxt") {
                rec.max_transient = std::stoull(value);
            } else if (key == "exhausted") {
                if (!split_nats(value, '.', rec.exhausted)) {
                    return std::nullopt;
                }
            } else if (key == "cycles") {
                have_cycles = true;
                if (value.empty()) {
                    continue;
                }
                std::size_t begin = 0;
                while (begin <= value.size()) {
                    const std::size_t end = std::min(value.find(';', begin), value.size());
                    const std::string_view entry =
                        std::string_view(value).substr(begin, end - begin);
                    ChunkRecord::Tally tally;
                    // layout: v1.v2...:w=..:b=..:t=..
                    std::size_t field_begin = 0;
                    int field_index = 0;
                    bool ok = true;
                    while (field_begin <= entry.size()) {
                        const std::size_t field_end =
                            std::min(entry.find(':', field_begin), entry.size());
                        const std::string_view field =
                            entry.substr(field_begin, field_end - field_begin);
                        if (field_index == 0) {
                            ok = split_nats(field, '.', tally.cycle) && !tally.cycle.empty();
                        } else if (field.starts_with("w=")) {
                            tally.first_witness = parse_nat(field.substr(2));
                        } else if (field.starts_with("b=")) {
                            tally.basin_count = std::stoull(std::string(field.substr(2)));
                        } else if (field.starts_with("t=")) {
                            tally.max_transient = std::stoull(std::string(field.substr(2)));
                        } else {
                            ok = false;
                        }
                        if (!ok || field_end == entry.size()) {
                            break;
                        }
                        field_begin = field_end + 1;
                        ++field_index;
                    }
                    if (!ok || field_index != 3) {
                        return std::nullopt;
                    }
                    rec.tallies.push_back(std::move(tally));
                    if (end == value.size()) {
                        break;
                    }
                    begin = end + 1;
                }
            } else {
                return std::nullopt;  // unknown key: treat the line as foreign
            }
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (!(have_k && have_p && have_lo && have_hi && have_budget && have_cycles)) {
        return std::nullopt;
    }
    return rec;
}

CheckpointFile::CheckpointFile(std::string path) : path_(std::move(path)) {}

void CheckpointFile::load() {
    records_.clear();
    std::ifstream in(path_);
    if (!in) {
        return;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (auto rec = parse_chunk_record(line)) {
            auto key = record_key(rec->k, rec->p, rec->lo, rec->hi, rec->budget);
            records_.insert_or_assign(std::move(key), std::move(*rec));
        }
    }
}

const ChunkRecord* CheckpointFile::find(std::uint64_t k, std::uint64_t p, const Nat& lo,
                                        const Nat& hi, std::uint64_t budget) const {
    const auto it = records_.find(record_key(k, p, lo, hi, budget));
    return it == records_.end() ? nullptr : &it->second;
}

void CheckpointFile::append(const ChunkRecord& rec) {
    // records_ is only populated by load(), before workers start; appends go
    // straight to disk so concurrent find() calls never race the map.
    const std::lock_guard<std::mutex> lock(write_mutex_);
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        throw InvalidInput("cannot open checkpoint file '" + path_ + "' for append");
    }
    if (out.tellp() == 0) {
        out << kHeader << '\n';
    }
    out << format_chunk_record(rec) << '\n';
    out.flush();
}

}  // namespace zadic
