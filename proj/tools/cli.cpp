#include "cli.hpp"

#include "evtol/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <map>
#include <set>

namespace evtol::cli {
namespace {

constexpr const char* kWhPerPaxMi = "Wh/passenger-mi";

double parse_number(const std::string& s, const std::string& what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
        throw ConfigError("invalid " + what + " '" + s + "'");
    }
    return v;
}

std::string label_number(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, end);
}

std::vector<const AircraftSpec*> select_aircraft(const RunConfig& cfg, const SpecDocument& doc) {
    std::vector<const AircraftSpec*> out;
    if (cfg.aircraft_filter.empty()) {
        for (const auto& a : doc.aircraft) out.push_back(&a);
    } else {
        for (const auto& name : cfg.aircraft_filter) {
            const AircraftSpec* a = doc.find_aircraft(name);
            if (!a) {
                std::string known;
                for (const auto& x : doc.aircraft) known += (known.empty() ? "" : ", ") + ("'" + x.name + "'");
                throw ConfigError("unknown aircraft '" + name + "' (known: " + known + ")");
            }
            out.push_back(a);
        }
    }
    if (out.empty()) throw ConfigError("spec file defines no aircraft");
    return out;
}

std::vector<int> resolve_occupants(const RunConfig& cfg, const AircraftSpec& spec) {
    std::vector<int> out;
    for (const auto& tok : cfg.occupants) {
        int n = 0;
        if (tok == "full") {
            n = spec.seats;
        } else {
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw ConfigError("invalid occupant count '" + tok + "' (use an integer or 'full')");
            }
        }
        if (n < 1 || n > spec.seats) {
            throw ConfigError("occupants " + tok + " outside [1, " + std::to_string(spec.seats) + "] for '" +
                              spec.name + "'");
        }
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    return out;
}

std::vector<double> grid_for(const RunConfig& cfg, const AircraftSpec& spec) {
    if (cfg.range_grid) return cfg.range_grid->points();
    RangeGrid g{std::min(kDefaultGridStartMi, spec.design_range_mi), spec.design_range_mi, 1.0};
    return g.points();
}

double cruise_speed_for(const RunConfig& cfg, const AircraftSpec& spec) {
    return cfg.cruise_speed_mph.value_or(spec.design_cruise_speed_mph);
}

std::vector<CurvePoint> sweep_or_explain(const AircraftSpec& spec, const std::vector<double>& grid, double speed,
                                         int occupants) {
    try {
        return range_sweep(spec, grid, speed, occupants);
    } catch (const InfeasibleMissionError& e) {
        throw InfeasibleMissionError(e.min_feasible_range_mi(),
                                     std::string(e.what()) + "; narrow the range grid for '" + spec.name + "'");
    }
}

char parse_delimiter(const std::string& s) {
    if (s == "tab" || s == "\\t" || s == "\t") return '\t';
    if (s == "comma") return ',';
    if (s.size() != 1 || s == "\"" || s == "\n" || s == "\r") throw ConfigError("invalid delimiter '" + s + "'");
    return s[0];
}

} // namespace

std::vector<double> RangeGrid::points() const {
    std::vector<double> out;
    const auto n = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    for (long long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

RangeGrid parse_range_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const auto colon = text.find(':', pos);
        parts.push_back(text.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    RangeGrid g;
    if (parts.size() == 1) {
        g.start = g.stop = parse_number(parts[0], "range");
    } else if (parts.size() <= 3) {
        g.start = parse_number(parts[0], "range start");
        g.stop = parse_number(parts[1], "range stop");
        if (parts.size() == 3) g.step = parse_number(parts[2], "range step");
    } else {
        throw ConfigError("range grid must be start:stop:step, got '" + text + "'");
    }
    if (!(g.step > 0.0)) throw ConfigError("range step must be > 0");
    if (!(g.start <= g.stop)) throw ConfigError("range start must not exceed stop");
    if (!(g.start > 0.0)) throw ConfigError("range start must be > 0");
    return g;
}

void validate(const RunConfig& cfg) {
    if (cfg.range_grid) {
        const auto& g = *cfg.range_grid;
        if (!(g.step > 0.0) || !(g.start <= g.stop) || !(g.start > 0.0)) {
            throw ConfigError("range grid needs 0 < start <= stop and step > 0");
        }
    }
    if (cfg.cruise_speed_mph && !(*cfg.cruise_speed_mph > 0.0)) throw ConfigError("cruise speed must be > 0");
    if (cfg.occupants.empty()) throw ConfigError("occupant list is empty");
    if (cfg.ewf_list.empty()) throw ConfigError("ewf list is empty");
    if (cfg.failure_list.empty()) throw ConfigError("failure list is empty");
}

ResultTable cmd_simulate(const RunConfig& cfg, const SpecDocument& doc) {
    validate(cfg);
    const auto selected = select_aircraft(cfg, doc);
    if (selected.size() != 1) {
        std::string names;
        for (const auto* a : selected) names += (names.empty() ? "" : ", ") + ("'" + a->name + "'");
        throw ConfigError("simulate needs exactly one aircraft; matches: " + names + " (use --aircraft)");
    }
    const AircraftSpec& spec = *selected.front();
    double range = spec.design_range_mi;
    if (cfg.range_grid) {
        if (cfg.range_grid->start != cfg.range_grid->stop) {
            throw ConfigError("simulate takes a single range point (e.g. --range 50)");
        }
        range = cfg.range_grid->start;
    }
    const MissionProfile profile = build_mission(spec, range, cruise_speed_for(cfg, spec), cfg.reserve);

    ResultTable t;
    t.add_column("segment", std::string(kIdentifierUnit), ColumnType::Identifier);
    t.add_column("duration", "s");
    t.add_column("distance", "m");
    t.add_column("power", "W");
    t.add_column("energy", "Wh");
    double duration = 0.0, distance = 0.0, energy = 0.0;
    for (const auto& s : profile.segments) {
        t.add_row({std::string(to_string(s.kind)), s.duration_s, s.distance_m, s.power_W, s.energy_Wh});
        duration += s.duration_s;
        distance += s.distance_m;
        energy += s.energy_Wh;
    }
    t.add_row({std::string("Total"), duration, distance, profile.peak_power_W, energy});
    return t;
}

ResultTable cmd_sweep(const RunConfig& cfg, const SpecDocument& doc) {
    validate(cfg);
    const auto selected = select_aircraft(cfg, doc);

    struct Series {
        std::string name;
        std::map<double, double> values;
    };
    std::vector<Series> series;
    std::set<double> all_ranges;
    for (const AircraftSpec* spec : selected) {
        const auto grid = grid_for(cfg, *spec);
        for (int occ : resolve_occupants(cfg, *spec)) {
            Series s{spec->name + "/" + std::to_string(occ) + "pax", {}};
            for (const auto& p : sweep_or_explain(*spec, grid, cruise_speed_for(cfg, *spec), occ)) {
                s.values[p.range_mi] = p.wh_per_passenger_mi;
                all_ranges.insert(p.range_mi);
            }
            series.push_back(std::move(s));
        }
    }
    std::vector<Baseline> baselines;
    for (const auto& v : doc.vehicles) {
        for (auto& b : occupancy_baselines(v)) baselines.push_back(std::move(b));
    }

    ResultTable t;
    t.add_column("range", "mi");
    for (const auto& s : series) t.add_column(s.name, kWhPerPaxMi);
    for (const auto& b : baselines) t.add_column(b.label, kWhPerPaxMi);
    for (double r : all_ranges) {
        std::vector<Cell> row{r};
        for (const auto& s : series) {
            auto it = s.values.find(r);
            row.push_back(it == s.values.end() ? Cell{} : Cell{it->second});
        }
        for (const auto& b : baselines) row.emplace_back(b.wh_per_passenger_mi);
        t.add_row(std::move(row));
    }
    return t;
}

ResultTable cmd_battery(const RunConfig& cfg, const SpecDocument& doc,
                        const std::optional<std::vector<BatteryPackRecord>>& packs) {
    validate(cfg);
    if (cfg.verdicts && !packs) throw ConfigError("feasibility verdicts need a battery pack file (--packs)");
    if (packs && packs->empty()) throw DataError("battery pack file has no data rows");
    const auto selected = select_aircraft(cfg, doc);

    ResultTable t;
    t.add_column("aircraft", std::string(kIdentifierUnit), ColumnType::Identifier);
    t.add_column("ewf", "1");
    t.add_column("failure_fraction", "1");
    t.add_column("sizing_speed", "mph");
    t.add_column("battery_mass", "kg");
    t.add_column("specific_energy", "Wh/kg");
    t.add_column("specific_power", "W/kg");
    if (packs) {
        t.add_column("current_li_ion", std::string(kIdentifierUnit), ColumnType::Identifier);
        t.add_column("novel_prototype_li_ion", std::string(kIdentifierUnit), ColumnType::Identifier);
        t.add_column("advanced", std::string(kIdentifierUnit), ColumnType::Identifier);
        t.add_column("dominating_packs", std::string(kIdentifierUnit), ColumnType::Identifier);
    }

    for (const AircraftSpec* spec : selected) {
        const MissionProfile profile = build_sizing_mission(*spec);
        const auto reqs = ewf_sweep(*spec, profile, cfg.ewf_list, cfg.failure_list);
        for (const auto& req : reqs) {
            std::vector<Cell> row{spec->name,
                                  req.ewf_used,
                                  req.failure_fraction,
                                  profile.cruise_speed_mph,
                                  req.battery_mass_kg,
                                  req.specific_energy_Wh_per_kg,
                                  req.specific_power_W_per_kg};
            if (packs) {
                const auto report = classify_feasibility(req, *packs);
                for (PackCategory c : kPackCategories) {
                    const auto& v = report.verdict(c);
                    row.emplace_back(std::string(!v.present ? "n/a" : (v.feasible ? "yes" : "no")));
                }
                std::string names;
                for (const auto& n : report.dominating_packs) names += (names.empty() ? "" : ";") + n;
                row.emplace_back(names.empty() ? Cell{} : Cell{names});
            }
            t.add_row(std::move(row));
        }
    }
    return t;
}

ResultTable cmd_compare(const RunConfig& cfg, const SpecDocument& doc) {
    validate(cfg);
    const auto selected = select_aircraft(cfg, doc);
    std::vector<Baseline> baselines;
    for (const auto& v : doc.vehicles) {
        for (auto& b : occupancy_baselines(v)) baselines.push_back(std::move(b));
    }
    for (double b : cfg.extra_baselines) baselines.push_back({"baseline=" + label_number(b), 0.0, b});
    if (baselines.empty()) throw ConfigError("compare needs at least one vehicle in the spec file or --baseline");

    ResultTable t;
    t.add_column("aircraft", std::string(kIdentifierUnit), ColumnType::Identifier);
    t.add_column("occupants", "1");
    t.add_column("baseline", std::string(kIdentifierUnit), ColumnType::Identifier);
    t.add_column("baseline_value", kWhPerPaxMi);
    t.add_column("crossover", "mi");
    for (const AircraftSpec* spec : selected) {
        const auto grid = grid_for(cfg, *spec);
        if (grid.size() < 2) {
            throw ConfigError("range grid for '" + spec->name +
                              "' has fewer than two points; widen it with --range start:stop:step");
        }
        for (int occ : resolve_occupants(cfg, *spec)) {
            const auto curve = sweep_or_explain(*spec, grid, cruise_speed_for(cfg, *spec), occ);
            for (const auto& b : baselines) {
                const auto cross = crossover_range(curve, b.wh_per_passenger_mi);
                t.add_row({spec->name, static_cast<double>(occ), b.label, b.wh_per_passenger_mi,
                           cross ? Cell{*cross} : Cell{}});
            }
        }
    }
    return t;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Config: return kConfiguration;
    case ErrorKind::InfeasibleMission:
    case ErrorKind::InfeasibleMassBudget: return kInfeasible;
    case ErrorKind::Io: return kIo;
    case ErrorKind::Parameter:
    case ErrorKind::Domain:
    case ErrorKind::Contract:
    case ErrorKind::Data:
    case ErrorKind::Parse:
    case ErrorKind::Validation: return kValidation;
    }
    return kInternal;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"EVTOL mission energy and battery requirement tables"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string packs, output, range, delimiter = ",";
    std::optional<double> cruise;

    app.add_option("--spec", cfg.spec_path, "Aircraft/vehicle spec file")->required();
    app.add_option("--packs", packs, "Battery pack CSV");
    app.add_option("--out", output, "Output file (default: standard output)");
    app.add_option("--delimiter", delimiter, "Output delimiter: ',' (default), 'tab' or any single character");
    app.add_option("--aircraft", cfg.aircraft_filter, "Aircraft names to include")->delimiter(',');
    app.add_option("--range", range, "Range grid in miles: start:stop:step, or a single value");
    app.add_option("--cruise-speed", cruise, "Cruise speed override (mi/h)");
    app.add_option("--occupants", cfg.occupants, "Occupant counts, integers or 'full'")->delimiter(',');
    app.add_option("--ewf", cfg.ewf_list, "Empty weight fractions")->delimiter(',');
    app.add_option("--failure", cfg.failure_list, "Failed pack fractions")->delimiter(',');
    app.add_option("--baseline", cfg.extra_baselines, "Extra Wh/passenger-mi baselines (compare)")->delimiter(',');
    app.add_flag("--reserve", cfg.reserve, "Append the 30 min reserve segment (simulate)");
    app.add_flag("--verdicts", cfg.verdicts, "Require pack feasibility verdicts (battery)");

    auto* simulate = app.add_subcommand("simulate", "Per-segment mission breakdown for one aircraft");
    auto* sweep = app.add_subcommand("sweep", "Wh/passenger-mi versus range");
    auto* battery = app.add_subcommand("battery", "Pack specific energy/power requirements");
    auto* compare = app.add_subcommand("compare", "Crossover ranges against terrestrial baselines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfiguration;
    }

    try {
        if (!packs.empty()) cfg.packs_path = packs;
        if (!output.empty()) cfg.output_path = output;
        if (!range.empty()) cfg.range_grid = parse_range_grid(range);
        cfg.cruise_speed_mph = cruise;
        cfg.delimiter = parse_delimiter(delimiter);

        const SpecDocument doc = load_specs(cfg.spec_path);
        ResultTable table;
        if (simulate->parsed()) {
            table = cmd_simulate(cfg, doc);
        } else if (sweep->parsed()) {
            table = cmd_sweep(cfg, doc);
        } else if (battery->parsed()) {
            std::optional<std::vector<BatteryPackRecord>> pack_data;
            if (cfg.packs_path) {
                if (!std::filesystem::exists(*cfg.packs_path)) {
                    throw ConfigError("battery pack file '" + cfg.packs_path->string() + "' does not exist");
                }
                pack_data = load_packs(*cfg.packs_path);
            } else if (cfg.verdicts) {
                throw ConfigError("feasibility verdicts need a battery pack file (--packs)");
            }
            table = cmd_battery(cfg, doc, pack_data);
        } else if (compare->parsed()) {
            table = cmd_compare(cfg, doc);
        }

        if (cfg.output_path) {
            write_table(table, *cfg.output_path, cfg.delimiter);
        } else {
            out << format_table(table, cfg.delimiter);
            out.flush();
            if (!out) throw IoError("failed writing to standard output");
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace evtol::cli
