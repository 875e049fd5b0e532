#pragma once

#include "evtol/mission.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evtol {

/// Minimum pack-level requirement. These are end-of-life minima: no
/// degradation margin is applied.
struct BatteryRequirement {
    double battery_mass_kg = 0.0;
    double specific_energy_Wh_per_kg = 0.0;
    double specific_power_W_per_kg = 0.0;
    double ewf_used = 0.0;
    double failure_fraction = 0.0;  ///< fraction of the pack lost when sizing power

    friend bool operator==(const BatteryRequirement&, const BatteryRequirement&) = default;
};

enum class PackCategory { CurrentLiIon, NovelPrototypeLiIon, Advanced };

inline constexpr std::array<PackCategory, 3> kPackCategories = {
    PackCategory::CurrentLiIon, PackCategory::NovelPrototypeLiIon, PackCategory::Advanced};

/// Dataset labels: "Current Li-ion", "Novel/prototype Li-ion", "Advanced".
std::string_view category_label(PackCategory category);

/// Exact, case-sensitive match against category_label.
std::optional<PackCategory> parse_category(std::string_view label);

struct BatteryPackRecord {
    std::string name;
    PackCategory category = PackCategory::CurrentLiIon;
    double specific_energy_Wh_per_kg = 0.0;
    double specific_power_W_per_kg = 0.0;

    friend bool operator==(const BatteryPackRecord&, const BatteryPackRecord&) = default;
};

/// MTOM = payload + battery + empty mass; returns the battery share.
/// Throws InfeasibleMassBudgetError when nothing is left for the battery.
double battery_mass(double mtom_kg, double ewf, double payload_kg);

/// Profile must carry a reserve segment (ContractError otherwise).
BatteryRequirement size_battery(const AircraftSpec& spec, const MissionProfile& profile, double ewf,
                                double failure_fraction);

/// Cartesian product, ewf-major. No partial output on error.
std::vector<BatteryRequirement> ewf_sweep(const AircraftSpec& spec, const MissionProfile& profile,
                                          std::span<const double> ewf_values,
                                          std::span<const double> failure_fractions);

/// Best-range speed from the drag polar at cruise altitude, or the design
/// cruise speed when no polar is available.
double max_range_speed_mph(const AircraftSpec& spec);

/// Design-range mission at max_range_speed_mph with the 30-minute reserve.
MissionProfile build_sizing_mission(const AircraftSpec& spec);

struct CategoryVerdict {
    PackCategory category = PackCategory::CurrentLiIon;
    bool present = false;  ///< dataset holds at least one pack of this category
    bool feasible = false;
    std::vector<std::string> dominating_packs;
};

struct FeasibilityReport {
    std::array<CategoryVerdict, 3> verdicts;  ///< indexed in kPackCategories order
    std::vector<std::string> dominating_packs;

    const CategoryVerdict& verdict(PackCategory category) const;
};

/// A pack meets the requirement iff it is at least as good on both axes.
/// Throws DataError on an empty dataset.
FeasibilityReport classify_feasibility(const BatteryRequirement& req, std::span<const BatteryPackRecord> packs);

} // namespace evtol
