#pragma once

#include "evtol/battery.hpp"
#include "evtol/compare.hpp"
#include "evtol/mission.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace evtol {

// ---------------------------------------------------------------------------
// Spec documents
//
// Line-oriented text, one section per aircraft or vehicle:
//
//     format_version = 1
//
//     [defaults]
//     hover_altitude_m = 15
//
//     [aircraft "Example"]
//     propulsion = open_rotor
//     mtom_kg = 1000
//     ...
//
//     [vehicle "EV"]
//     kind = EV
//     road_consumption_Wh_per_mi = 310.3
//
// Full-line comments start with '#'. Unknown keys are errors. Aircraft keys
// override [defaults], which override built-in defaults.
// ---------------------------------------------------------------------------

inline constexpr int kSpecFormatVersion = 1;

struct SpecDefaults {
    std::optional<double> payload_per_seat_kg;
    std::optional<double> hover_altitude_m;
    std::optional<double> cruise_altitude_m;
    std::optional<double> vertical_climb_rate_mps;
    std::optional<double> wing_climb_rate_mps;
    std::optional<double> hover_time_s;
    std::optional<double> interference_factor;

    friend bool operator==(const SpecDefaults&, const SpecDefaults&) = default;
};

struct SpecDocument {
    int format_version = kSpecFormatVersion;
    SpecDefaults defaults;
    std::vector<AircraftSpec> aircraft;
    std::vector<TerrestrialVehicle> vehicles;

    const AircraftSpec* find_aircraft(std::string_view name) const;

    friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

/// Throws ParseError (syntax, unknown key) or ValidationError (invariants,
/// duplicate names). Nothing is returned unless the whole document is valid.
SpecDocument parse_specs(std::string_view text);
SpecDocument load_specs(const std::filesystem::path& path);

/// Every aircraft field is written explicitly so the output does not depend on
/// the [defaults] section when re-read.
std::string serialize_specs(const SpecDocument& doc);
void save_specs(const SpecDocument& doc, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Battery pack dataset (comma-delimited)
// ---------------------------------------------------------------------------

inline constexpr std::string_view kPackHeader =
    "name,category,specific_energy_Wh_per_kg,specific_power_W_per_kg";

std::vector<BatteryPackRecord> parse_packs(std::string_view text);
std::vector<BatteryPackRecord> load_packs(const std::filesystem::path& path);
std::string serialize_packs(std::span<const BatteryPackRecord> packs);

// ---------------------------------------------------------------------------
// Result tables
// ---------------------------------------------------------------------------

enum class ColumnType { Identifier, Numeric };

/// Unit string used for identifier columns.
inline constexpr std::string_view kIdentifierUnit = "-";

struct Column {
    std::string name;
    std::string unit;
    ColumnType type = ColumnType::Numeric;

    friend bool operator==(const Column&, const Column&) = default;
};

/// Empty cells (monostate) render as nothing between delimiters.
using Cell = std::variant<std::monostate, std::string, double>;

struct ResultTable {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;

    void add_column(std::string name, std::string unit, ColumnType type = ColumnType::Numeric);
    void add_row(std::vector<Cell> row);
    std::size_t column_index(std::string_view name) const;
};

/// Throws DataError when a row is ragged, a unit is empty, a numeric cell is
/// not finite, or a cell type disagrees with its column.
void validate(const ResultTable& table);

/// 17 significant digits, locale independent ("%.17g").
std::string format_number(double value);

/// Header of "name(unit)" cells, then data rows; newline-terminated.
std::string format_table(const ResultTable& table, char delimiter = ',');
void write_table(const ResultTable& table, const std::filesystem::path& path, char delimiter = ',');

/// Inverse of format_table. Columns with unit "-" are identifiers.
ResultTable parse_table(std::string_view text, char delimiter = ',');

} // namespace evtol
