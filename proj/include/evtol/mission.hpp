#pragma once

#include "evtol/powerplant.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evtol {

inline constexpr double kDefaultPayloadPerSeatKg = 100.0;
inline constexpr double kDefaultCruiseAltitudeM = 300.0;
inline constexpr double kDefaultWingClimbRateMps = 5.0;
inline constexpr double kReserveDurationS = 1800.0;

/// Full parameterization of one EVTOL design. SI units except where the field
/// name says otherwise (ranges in statute miles, speeds in mi/h).
struct AircraftSpec {
    std::string name;
    PropulsionKind propulsion = PropulsionKind::OpenRotor;
    double mtom_kg = 0.0;
    int seats = 1;
    double payload_per_seat_kg = kDefaultPayloadPerSeatKg;
    double disc_area_m2 = 0.0;
    double fom = 0.0;
    double interference_factor = kDefaultInterferenceFactor;
    double eta_vertical = 0.0;
    double eta_fixed_wing = 0.0;
    std::optional<double> lod_climb;
    std::optional<double> lod_cruise;
    std::optional<double> lod_descent;
    std::optional<DragPolar> drag_polar;
    double design_range_mi = 0.0;
    double design_cruise_speed_mph = 0.0;
    double vertical_climb_rate_mps = 0.0;
    double hover_altitude_m = 0.0;
    double cruise_altitude_m = kDefaultCruiseAltitudeM;
    double wing_climb_rate_mps = kDefaultWingClimbRateMps;
    /// Hover dwell after lift-off and again before touchdown; 0 disables.
    double hover_time_s = 0.0;
    double ewf = 0.5;

    double weight_N() const;
    double disc_loading_kg_m2() const { return mtom_kg / disc_area_m2; }
    double payload_kg() const { return seats * payload_per_seat_kg; }

    friend bool operator==(const AircraftSpec&, const AircraftSpec&) = default;
};

/// Throws ValidationError naming the first offending field.
void validate(const AircraftSpec& spec);

enum class SegmentKind { VerticalClimb, Hover, WingClimb, Cruise, WingDescent, VerticalDescent, Reserve };

std::string_view to_string(SegmentKind kind);

struct MissionSegment {
    SegmentKind kind = SegmentKind::Cruise;
    double duration_s = 0.0;
    double distance_m = 0.0;  ///< ground distance
    double power_W = 0.0;
    double energy_Wh = 0.0;

    friend bool operator==(const MissionSegment&, const MissionSegment&) = default;
};

struct MissionProfile {
    AircraftSpec aircraft;
    double range_mi = 0.0;
    double cruise_speed_mph = 0.0;
    std::vector<MissionSegment> segments;
    double total_energy_Wh = 0.0;    ///< excludes reserve
    double reserve_energy_Wh = 0.0;
    double peak_power_W = 0.0;

    bool has_reserve() const;
    const MissionSegment* find(SegmentKind kind) const;

    friend bool operator==(const MissionProfile&, const MissionProfile&) = default;
};

/// Ground distance consumed by the wing-borne climb plus descent at the given
/// cruise speed, in miles. Ranges shorter than this are infeasible.
double min_feasible_range_mi(const AircraftSpec& spec);

/// Segment order: VerticalClimb, [Hover], WingClimb, Cruise, WingDescent,
/// [Hover], VerticalDescent, [Reserve]. Zero-duration segments are omitted.
/// Throws InfeasibleMissionError when the range cannot hold climb and descent.
MissionProfile build_mission(const AircraftSpec& spec, double range_mi, double cruise_speed_mph,
                             bool include_reserve);

/// Trip energy (reserve excluded) per point-to-point passenger mile.
double energy_per_passenger_mile(const AircraftSpec& spec, double range_mi, double cruise_speed_mph,
                                 int occupants);

struct CurvePoint {
    double range_mi = 0.0;
    double wh_per_passenger_mi = 0.0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

std::vector<CurvePoint> range_sweep(const AircraftSpec& spec, std::span<const double> ranges_mi,
                                    double cruise_speed_mph, int occupants);

} // namespace evtol
