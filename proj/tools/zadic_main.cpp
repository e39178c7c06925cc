// zadic: exact base-k digit-map dynamics from the command line.
//
// Subcommands: trajectory, check-params, verify, limits, sweep.
// Exit codes:
//   0  success (check-params: assumptions hold; verify: all starts reach {1,2})
//   1  the checked property does not hold
//   2  verify: some starts exhausted their step budget
//   3  theorem guard tripped during a sweep (see the diagnostic dump)
//   64 usage error (malformed numbers, bad ranges, unknown flags)

#include "zadic/dynamics.hpp"
#include "zadic/errors.hpp"
#include "zadic/serialize.hpp"
#include "zadic/sweep.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

constexpr int kExitNotSatisfied = 1;
constexpr int kExitBudgetExhausted = 2;
constexpr int kExitTheoremViolation = 3;
constexpr int kExitUsage = 64;

struct GlobalFlags {
    std::string format = "plain";
    std::uint64_t budget = zadic::kDefaultBudget;
    unsigned workers = 0;
    std::string checkpoint;
};

// "a..b" inclusive, or a single value meaning a..a.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const std::uint64_t v = std::stoull(text);
            return {v, v};
        }
        const std::uint64_t lo = std::stoull(text.substr(0, sep));
        const std::uint64_t hi = std::stoull(text.substr(sep + 2));
        if (lo > hi) {
            throw zadic::InvalidInput("range '" + text + "' is empty");
        }
        return {lo, hi};
    } catch (const zadic::InvalidInput&) {
        throw;
    } catch (const std::exception&) {
        throw zadic::InvalidInput("malformed range '" + text + "' (expected a..b)");
    }
}

zadic::Json params_json(std::initializer_list<std::pair<const char*, std::string>> kv) {
    zadic::Json j;
    for (const auto& [key, value] : kv) {
        j[key] = value;
    }
    return j;
}

void emit(const zadic::Json& envelope_json, const std::string& csv,
          const std::string& plain, zadic::Format format) {
    switch (format) {
        case zadic::Format::Json:
            std::cout << envelope_json.dump() << "\n";
            break;
        case zadic::Format::Csv:
            std::cout << csv;
            break;
        case zadic::Format::Plain:
            std::cout << plain;
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact base-k digit-map dynamics: orbits, limit-cycle catalogs, and "
        "exhaustive range verification"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format: plain, json, or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--budget", flags.budget,
                   "Maximum transformation steps per start (default 10000)");
    app.add_option("--workers", flags.workers,
                   "Worker threads for verify/sweep (0 = all cores)");
    app.add_option("--checkpoint", flags.checkpoint,
                   "Checkpoint file; completed chunks are skipped on re-run");

    // trajectory
    auto* cmd_trajectory =
        app.add_subcommand("trajectory", "Print the orbit of a start value");
    std::string n_text;
    std::uint64_t k = 0;
    std::uint64_t p = 0;
    cmd_trajectory->add_option("--n", n_text, "Start value (decimal, any length)")
        ->required();
    cmd_trajectory->add_option("--k", k, "Radix (>= 2)")->required();
    cmd_trajectory->add_option("--p", p, "Digit-map modulus (>= 2)")->required();

    // check-params
    auto* cmd_check = app.add_subcommand(
        "check-params", "Evaluate the convergence assumptions for (k, p)");
    cmd_check->add_option("--k", k, "Radix (>= 2)")->required();
    cmd_check->add_option("--p", p, "Digit-map modulus (>= 2)")->required();

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify", "Run every start in a range to its cycle and report");
    std::string from_text, to_text;
    cmd_verify->add_option("--k", k, "Radix (>= 2)")->required();
    cmd_verify->add_option("--p", p, "Digit-map modulus (>= 2)")->required();
    cmd_verify->add_option("--from", from_text, "First start value")->required();
    cmd_verify->add_option("--to", to_text, "Last start value")->required();

    // limits
    auto* cmd_limits = app.add_subcommand(
        "limits", "Catalog the distinct limit cycles reached from 1..n-max");
    std::string n_max_text;
    cmd_limits->add_option("--k", k, "Radix (>= 2)")->required();
    cmd_limits->add_option("--p", p, "Digit-map modulus (>= 2)")->required();
    cmd_limits->add_option("--n-max", n_max_text, "Largest start value")->required();

    // sweep
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "Verify a (k, p) grid; conforming cells must reach {1,2}");
    std::string k_range_text, p_range_text;
    cmd_sweep->add_option("--k", k_range_text, "Radix range a..b (inclusive)")
        ->required();
    cmd_sweep->add_option("--p", p_range_text, "Modulus range a..b (inclusive)")
        ->required();
    cmd_sweep->add_option("--n-max", n_max_text, "Largest start value per cell")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const zadic::Format format = zadic::parse_format(flags.format);
        zadic::SweepOptions options;
        options.budget = flags.budget;
        options.workers = flags.workers;
        options.checkpoint_path = flags.checkpoint;

        if (*cmd_trajectory) {
            const zadic::Nat n = zadic::parse_nat(n_text);
            const zadic::Parameters params(k, p);
            const zadic::Trajectory t = zadic::trajectory(n, params, flags.budget);
            emit(zadic::envelope("trajectory",
                                 params_json({{"n", n.str()},
                                              {"k", std::to_string(k)},
                                              {"p", std::to_string(p)},
                                              {"budget", std::to_string(flags.budget)}}),
                                 zadic::to_json(t)),
                 zadic::to_csv(t), zadic::to_plain(t), format);
            return 0;
        }

        if (*cmd_check) {
            const zadic::AssumptionReport report = zadic::check_assumptions(k, p);
            emit(zadic::envelope("check-params",
                                 params_json({{"k", std::to_string(k)},
                                              {"p", std::to_string(p)}}),
                                 zadic::to_json(report)),
                 zadic::to_csv(report), zadic::to_plain(report), format);
            return report.holds_H ? 0 : kExitNotSatisfied;
        }

        if (*cmd_verify) {
            const zadic::Nat n_lo = zadic::parse_nat(from_text);
            const zadic::Nat n_hi = zadic::parse_nat(to_text);
            const zadic::Parameters params(k, p);
            const zadic::RangeReport report =
                zadic::verify_range(params, n_lo, n_hi, options);
            emit(zadic::envelope(
                     "verify",
                     params_json({{"k", std::to_string(k)},
                                  {"p", std::to_string(p)},
                                  {"from", n_lo.str()},
                                  {"to", n_hi.str()},
                                  {"budget", std::to_string(flags.budget)},
                                  {"workers", std::to_string(flags.workers)}}),
                     zadic::to_json(report)),
                 zadic::to_csv(report), zadic::to_plain(report), format);
            if (!report.budget_exhausted_starts.empty()) {
                std::cerr << "verify: " << report.budget_exhausted_starts.size()
                          << " start(s) exhausted the budget of " << flags.budget
                          << "; re-run with a larger --budget\n";
                return kExitBudgetExhausted;
            }
            return report.all_reach_M ? 0 : kExitNotSatisfied;
        }

        if (*cmd_limits) {
            const zadic::Nat n_max = zadic::parse_nat(n_max_text);
            const zadic::Parameters params(k, p);
            const zadic::CatalogResult catalog =
                zadic::cycle_catalog(params, n_max, options);
            emit(zadic::envelope("limits",
                                 params_json({{"k", std::to_string(k)},
                                              {"p", std::to_string(p)},
                                              {"n_max", n_max.str()},
                                              {"budget", std::to_string(flags.budget)}}),
                                 zadic::to_json(catalog)),
                 zadic::to_csv(catalog), zadic::to_plain(catalog), format);
            return 0;
        }

        if (*cmd_sweep) {
            const auto [klo, khi] = parse_range(k_range_text);
            const auto [plo, phi] = parse_range(p_range_text);
            const zadic::Nat n_max = zadic::parse_nat(n_max_text);
            const std::vector<zadic::GridCell> cells =
                zadic::grid_sweep(klo, khi, plo, phi, n_max, options);
            emit(zadic::envelope(
                     "sweep",
                     params_json({{"k", k_range_text},
                                  {"p", p_range_text},
                                  {"n_max", n_max.str()},
                                  {"budget", std::to_string(flags.budget)},
                                  {"workers", std::to_string(flags.workers)}}),
                     zadic::to_json(cells)),
                 zadic::to_csv(cells), zadic::to_plain(cells), format);
            return 0;
        }
    } catch (const zadic::TheoremViolation& e) {
        std::cerr << e.what() << "\n";
        return kExitTheoremViolation;
    } catch (const std::invalid_argument& e) {
        // InvalidParameter / InvalidDigit / InvalidInput all land here
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
