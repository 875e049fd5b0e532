#pragma once

#include <string_view>

namespace evtol {

enum class PropulsionKind { OpenRotor, DuctedFan };

std::string_view to_string(PropulsionKind kind);

/// Default fuselage interference correction on rotor thrust.
inline constexpr double kDefaultInterferenceFactor = 1.03;

/// Inputs to momentum-theory vertical flight power. SI units throughout.
struct VerticalFlightParams {
    double weight_N = 0.0;
    double disc_area_m2 = 1.0;
    double fom = 1.0;
    double interference_factor = kDefaultInterferenceFactor;
    double climb_rate_mps = 0.0;  ///< signed; 0 is hover
    double density = 1.225;       ///< kg/m^3
    double efficiency = 1.0;      ///< motors + powertrain in vertical flight
};

struct FixedWingParams {
    double weight_N = 0.0;
    double forward_speed_mps = 0.0;
    double vertical_speed_mps = 0.0;  ///< signed; 0 in cruise
    double lift_to_drag = 1.0;
    double efficiency = 1.0;  ///< includes propeller efficiency
};

/// Parabolic drag polar C_D = C_D0 + k C_L^2 on reference wing area S.
struct DragPolar {
    double zero_lift_drag_coeff = 0.0;
    double induced_factor = 0.0;
    double wing_area_m2 = 0.0;

    friend bool operator==(const DragPolar&, const DragPolar&) = default;
};

void validate(const VerticalFlightParams& p);
void validate(const FixedWingParams& p);
void validate(const DragPolar& polar);

/// Electrical power drawn in vertical flight (W).
///
/// Open rotor:  [ (f W / FoM) sqrt(f (W/A) / (2 rho)) + W Vc / 2 ] / eta
/// Ducted fan:  [ (f W / (2 FoM)) sqrt(f (W/A) / rho) + W Vc / 2 ] / eta
///
/// Throws ParameterError naming the offending field.
double vertical_power(PropulsionKind kind, const VerticalFlightParams& p);

/// [ W V_v + W V / (L/D) ] / eta. May be negative for descent; callers floor.
double fixed_wing_power(const FixedWingParams& p);

/// Level-flight power required (W, aerodynamic) for a drag polar at speed V.
double level_flight_power(const DragPolar& polar, double weight_N, double density, double speed_mps);

/// Speed minimizing level_flight_power (closed form).
double min_power_speed(const DragPolar& polar, double weight_N, double density);

/// Speed maximizing L/D, i.e. the best-range speed of an electric aircraft.
double max_range_speed(const DragPolar& polar, double weight_N, double density);

double lift_to_drag_at(const DragPolar& polar, double speed_mps, double weight_N, double density);

} // namespace evtol
