#pragma once

#include "evtol/dataio.hpp"
#include "evtol/errors.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace evtol::cli {

/// Process exit status for each failure class.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kConfiguration = 2,  ///< bad flags, unknown aircraft, missing pack file
    kValidation = 3,     ///< malformed or invalid input files and parameters
    kInfeasible = 4,     ///< mission or mass budget cannot close
    kIo = 5,
};

struct RangeGrid {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::vector<double> points() const;
};

/// "start:stop:step", "start:stop" (step 1) or a single value.
RangeGrid parse_range_grid(const std::string& text);

inline constexpr double kDefaultGridStartMi = 10.0;

struct RunConfig {
    std::filesystem::path spec_path;
    std::optional<std::filesystem::path> packs_path;
    std::optional<std::filesystem::path> output_path;
    std::vector<std::string> aircraft_filter;
    std::optional<RangeGrid> range_grid;  ///< default: 10 mi to design range, 1 mi step
    std::optional<double> cruise_speed_mph;
    std::vector<std::string> occupants{"1", "full"};  ///< integers or "full"
    std::vector<double> ewf_list{0.45, 0.5, 0.55};
    std::vector<double> failure_list{0.0, 0.5};
    std::vector<double> extra_baselines;  ///< compare: Wh/passenger-mi baselines besides the vehicles
    bool reserve = false;
    bool verdicts = false;
    char delimiter = ',';
};

/// Throws ConfigError when a grid or list is unusable for its subcommand.
void validate(const RunConfig& cfg);

ResultTable cmd_simulate(const RunConfig& cfg, const SpecDocument& doc);
ResultTable cmd_sweep(const RunConfig& cfg, const SpecDocument& doc);
ResultTable cmd_battery(const RunConfig& cfg, const SpecDocument& doc,
                        const std::optional<std::vector<BatteryPackRecord>>& packs);
ResultTable cmd_compare(const RunConfig& cfg, const SpecDocument& doc);

int exit_code_for(ErrorKind kind);

/// Full command line: parse, load, run, write. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace evtol::cli
