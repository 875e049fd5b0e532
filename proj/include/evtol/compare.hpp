#pragma once

#include "evtol/mission.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evtol {

inline constexpr double kUsAverageCircuity = 1.20;
inline constexpr double kUsAverageOccupancy = 1.67;

enum class VehicleKind { EV, ICEV };

std::string_view to_string(VehicleKind kind);

/// Road vehicle with a range-independent duty cycle.
struct TerrestrialVehicle {
    std::string name;
    VehicleKind kind = VehicleKind::EV;
    double road_consumption_Wh_per_mi = 0.0;  ///< per vehicle, per road mile
    double circuity = kUsAverageCircuity;     ///< road miles per point-to-point mile
    double occupancy = kUsAverageOccupancy;
    int max_occupancy = 4;

    friend bool operator==(const TerrestrialVehicle&, const TerrestrialVehicle&) = default;
};

/// Throws ValidationError naming the offending field.
void validate(const TerrestrialVehicle& v);

/// road_consumption * circuity / occupancy, in Wh per point-to-point passenger mile.
double terrestrial_energy_per_passenger_mile(const TerrestrialVehicle& v);

struct Baseline {
    std::string label;
    double occupancy = 0.0;
    double wh_per_passenger_mi = 0.0;
};

/// Single, expected and full occupancy variants of a vehicle (deduplicated).
std::vector<Baseline> occupancy_baselines(const TerrestrialVehicle& v);

/// Smallest range at which the curve reaches the baseline, linearly
/// interpolated. Absent if the curve stays above it. Throws DataError on
/// fewer than two points, unsorted ranges or a non-decreasing curve.
std::optional<double> crossover_range(std::span<const CurvePoint> curve, double baseline_wh_per_passenger_mi);

} // namespace evtol
