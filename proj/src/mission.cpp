#include "evtol/mission.hpp"

#include "evtol/atmosphere.hpp"
#include "evtol/errors.hpp"
#include "evtol/units.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace evtol {
namespace {

void check(bool ok, const AircraftSpec& spec, const char* field, const std::string& rule) {
    if (!ok) {
        throw ValidationError(field, "aircraft '" + spec.name + "': field '" + field + "' " + rule);
    }
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
bool in_unit_interval(double v) { return std::isfinite(v) && v > 0.0 && v <= 1.0; }

// Conditions shared by the wing-borne climb and descent legs.
struct WingLeg {
    double speed_mps;
    double duration_s;
    double distance_m;
    double density;
};

WingLeg wing_leg(const AircraftSpec& spec) {
    const double density = air_density(spec.cruise_altitude_m);
    const double speed = spec.drag_polar ? min_power_speed(*spec.drag_polar, spec.weight_N(), density)
                                         : units::mph_to_mps(spec.design_cruise_speed_mph);
    const double duration = (spec.cruise_altitude_m - spec.hover_altitude_m) / spec.wing_climb_rate_mps;
    return {speed, duration, speed * duration, density};
}

// Direct per-segment L/D wins; otherwise the polar at the flown speed; otherwise cruise L/D.
double segment_lift_to_drag(const AircraftSpec& spec, const std::optional<double>& direct, double speed_mps,
                            double density) {
    if (direct) return *direct;
    if (spec.drag_polar) return lift_to_drag_at(*spec.drag_polar, speed_mps, spec.weight_N(), density);
    return *spec.lod_cruise;
}

MissionSegment make_segment(SegmentKind kind, double duration_s, double distance_m, double power_W) {
    return {kind, duration_s, distance_m, power_W, power_W * duration_s / units::kSecondPerHour};
}

double hover_power(const AircraftSpec& spec, double climb_rate_mps) {
    VerticalFlightParams p;
    p.weight_N = spec.weight_N();
    p.disc_area_m2 = spec.disc_area_m2;
    p.fom = spec.fom;
    p.interference_factor = spec.interference_factor;
    p.climb_rate_mps = climb_rate_mps;
    p.density = air_density(spec.hover_altitude_m);
    p.efficiency = spec.eta_vertical;
    return vertical_power(spec.propulsion, p);
}

double wing_power(const AircraftSpec& spec, double speed_mps, double vertical_speed_mps, double lod) {
    FixedWingParams p;
    p.weight_N = spec.weight_N();
    p.forward_speed_mps = speed_mps;
    p.vertical_speed_mps = vertical_speed_mps;
    p.lift_to_drag = lod;
    p.efficiency = spec.eta_fixed_wing;
    return fixed_wing_power(p);
}

} // namespace

double AircraftSpec::weight_N() const { return mtom_kg * units::kStandardGravity; }

void validate(const AircraftSpec& spec) {
    check(!spec.name.empty(), spec, "name", "must be non-empty");
    check(finite_positive(spec.mtom_kg), spec, "mtom_kg", "must be > 0");
    check(spec.seats >= 1, spec, "seats", "must be >= 1");
    check(std::isfinite(spec.payload_per_seat_kg) && spec.payload_per_seat_kg >= 0.0, spec,
          "payload_per_seat_kg", "must be >= 0");
    check(finite_positive(spec.disc_area_m2), spec, "disc_area_m2", "must be > 0");
    check(in_unit_interval(spec.fom), spec, "fom", "must be in (0, 1]");
    check(std::isfinite(spec.interference_factor) && spec.interference_factor >= 1.0, spec,
          "interference_factor", "must be >= 1");
    check(in_unit_interval(spec.eta_vertical), spec, "eta_vertical", "must be in (0, 1]");
    check(in_unit_interval(spec.eta_fixed_wing), spec, "eta_fixed_wing", "must be in (0, 1]");
    check(!spec.lod_climb || finite_positive(*spec.lod_climb), spec, "lod_climb", "must be > 0");
    check(!spec.lod_cruise || finite_positive(*spec.lod_cruise), spec, "lod_cruise", "must be > 0");
    check(!spec.lod_descent || finite_positive(*spec.lod_descent), spec, "lod_descent", "must be > 0");
    check(spec.lod_cruise.has_value() || spec.drag_polar.has_value(), spec, "lod_cruise",
          "is required when no drag polar is given");
    if (spec.drag_polar) {
        check(finite_positive(spec.drag_polar->zero_lift_drag_coeff), spec, "drag_cd0", "must be > 0");
        check(finite_positive(spec.drag_polar->induced_factor), spec, "drag_k", "must be > 0");
        check(finite_positive(spec.drag_polar->wing_area_m2), spec, "wing_area_m2", "must be > 0");
    }
    check(finite_positive(spec.design_range_mi), spec, "design_range_mi", "must be > 0");
    check(finite_positive(spec.design_cruise_speed_mph), spec, "design_cruise_speed_mph", "must be > 0");
    check(finite_positive(spec.vertical_climb_rate_mps), spec, "vertical_climb_rate_mps", "must be > 0");
    check(finite_positive(spec.hover_altitude_m), spec, "hover_altitude_m", "must be > 0");
    check(std::isfinite(spec.cruise_altitude_m) && spec.cruise_altitude_m >= spec.hover_altitude_m &&
              spec.cruise_altitude_m <= isa::kTropopauseAltitude,
          spec, "cruise_altitude_m", "must be in [hover_altitude_m, 11000]");
    check(finite_positive(spec.wing_climb_rate_mps), spec, "wing_climb_rate_mps", "must be > 0");
    check(std::isfinite(spec.hover_time_s) && spec.hover_time_s >= 0.0, spec, "hover_time_s", "must be >= 0");
    check(std::isfinite(spec.ewf) && spec.ewf > 0.0 && spec.ewf < 1.0, spec, "ewf", "must be in (0, 1)");
    check(spec.payload_kg() < spec.mtom_kg * (1.0 - spec.ewf), spec, "payload_per_seat_kg",
          "leaves no mass for a battery (seats * payload_per_seat_kg >= mtom_kg * (1 - ewf))");
}

std::string_view to_string(SegmentKind kind) {
    switch (kind) {
    case SegmentKind::VerticalClimb: return "VerticalClimb";
    case SegmentKind::Hover: return "Hover";
    case SegmentKind::WingClimb: return "WingClimb";
    case SegmentKind::Cruise: return "Cruise";
    case SegmentKind::WingDescent: return "WingDescent";
    case SegmentKind::VerticalDescent: return "VerticalDescent";
    case SegmentKind::Reserve: return "Reserve";
    }
    return "Unknown";
}

bool MissionProfile::has_reserve() const { return find(SegmentKind::Reserve) != nullptr; }

const MissionSegment* MissionProfile::find(SegmentKind kind) const {
    auto it = std::find_if(segments.begin(), segments.end(), [kind](const auto& s) { return s.kind == kind; });
    return it == segments.end() ? nullptr : &*it;
}

double min_feasible_range_mi(const AircraftSpec& spec) {
    validate(spec);
    return units::meters_to_miles(2.0 * wing_leg(spec).distance_m);
}

MissionProfile build_mission(const AircraftSpec& spec, double range_mi, double cruise_speed_mph,
                             bool include_reserve) {
    validate(spec);
    if (!finite_positive(range_mi)) {
        throw ParameterError("range_mi", "range_mi must be > 0 (got " + std::to_string(range_mi) + ")");
    }
    if (!finite_positive(cruise_speed_mph)) {
        throw ParameterError("cruise_speed_mph",
                             "cruise_speed_mph must be > 0 (got " + std::to_string(cruise_speed_mph) + ")");
    }

    const double range_m = units::miles_to_meters(range_mi);
    const WingLeg leg = wing_leg(spec);
    double cruise_m = range_m - 2.0 * leg.distance_m;
    if (std::abs(cruise_m) <= 1e-9 * range_m) cruise_m = 0.0;
    if (cruise_m < 0.0) {
        const double min_range = units::meters_to_miles(2.0 * leg.distance_m);
        std::ostringstream msg;
        msg.precision(6);
        msg << "aircraft '" << spec.name << "': range " << range_mi
            << " mi is too short for climb and descent; minimum feasible range is " << min_range << " mi";
        throw InfeasibleMissionError(min_range, msg.str());
    }

    MissionProfile profile;
    profile.aircraft = spec;
    profile.range_mi = range_mi;
    profile.cruise_speed_mph = cruise_speed_mph;
    auto& segs = profile.segments;
    auto push = [&segs](SegmentKind kind, double duration, double distance, double power) {
        if (duration > 0.0) segs.push_back(make_segment(kind, duration, distance, power));
    };

    const double vertical_duration = spec.hover_altitude_m / spec.vertical_climb_rate_mps;
    // Vertical descent reuses the hover induced term; no descent credit is taken.
    const double hover_W = hover_power(spec, 0.0);
    const double cruise_speed = units::mph_to_mps(cruise_speed_mph);
    const double cruise_W = wing_power(spec, cruise_speed, 0.0,
                                       segment_lift_to_drag(spec, spec.lod_cruise, cruise_speed, leg.density));

    push(SegmentKind::VerticalClimb, vertical_duration, 0.0, hover_power(spec, spec.vertical_climb_rate_mps));
    push(SegmentKind::Hover, spec.hover_time_s, 0.0, hover_W);
    push(SegmentKind::WingClimb, leg.duration_s, leg.distance_m,
         wing_power(spec, leg.speed_mps, spec.wing_climb_rate_mps,
                    segment_lift_to_drag(spec, spec.lod_climb, leg.speed_mps, leg.density)));
    push(SegmentKind::Cruise, cruise_m / cruise_speed, cruise_m, cruise_W);
    push(SegmentKind::WingDescent, leg.duration_s, leg.distance_m,
         std::max(0.0, wing_power(spec, leg.speed_mps, -spec.wing_climb_rate_mps,
                                  segment_lift_to_drag(spec, spec.lod_descent, leg.speed_mps, leg.density))));
    push(SegmentKind::Hover, spec.hover_time_s, 0.0, hover_W);
    push(SegmentKind::VerticalDescent, vertical_duration, 0.0, hover_W);
    if (include_reserve) push(SegmentKind::Reserve, kReserveDurationS, 0.0, cruise_W);

    for (const auto& s : segs) {
        if (s.kind == SegmentKind::Reserve) {
            profile.reserve_energy_Wh += s.energy_Wh;
        } else {
            profile.total_energy_Wh += s.energy_Wh;
        }
        profile.peak_power_W = std::max(profile.peak_power_W, s.power_W);
    }
    return profile;
}

double energy_per_passenger_mile(const AircraftSpec& spec, double range_mi, double cruise_speed_mph,
                                 int occupants) {
    if (occupants < 1 || occupants > spec.seats) {
        throw ParameterError("occupants", "occupants must be in [1, " + std::to_string(spec.seats) + "] for '" +
                                              spec.name + "' (got " + std::to_string(occupants) + ")");
    }
    const MissionProfile profile = build_mission(spec, range_mi, cruise_speed_mph, false);
    return profile.total_energy_Wh / (range_mi * occupants);
}

std::vector<CurvePoint> range_sweep(const AircraftSpec& spec, std::span<const double> ranges_mi,
                                    double cruise_speed_mph, int occupants) {
    if (!std::is_sorted(ranges_mi.begin(), ranges_mi.end())) {
        throw ParameterError("ranges_mi", "range sweep points must be sorted ascending");
    }
    std::vector<CurvePoint> curve;
    curve.reserve(ranges_mi.size());
    for (double r : ranges_mi) {
        curve.push_back({r, energy_per_passenger_mile(spec, r, cruise_speed_mph, occupants)});
    }
    return curve;
}

} // namespace evtol
