#include "evtol/powerplant.hpp"

#include "evtol/errors.hpp"

#include <cmath>
#include <sstream>

namespace evtol {
namespace {

void require(bool ok, const char* field, const char* rule, double value) {
    if (!ok) {
        std::ostringstream msg;
        msg << "parameter '" << field << "' must be " << rule << " (got " << value << ")";
        throw ParameterError(field, msg.str());
    }
}

void require_positive(double v, const char* field) { require(std::isfinite(v) && v > 0.0, field, "> 0", v); }

} // namespace

std::string_view to_string(PropulsionKind kind) {
    switch (kind) {
    case PropulsionKind::OpenRotor: return "open_rotor";
    case PropulsionKind::DuctedFan: return "ducted_fan";
    }
    return "unknown";
}

void validate(const VerticalFlightParams& p) {
    require(std::isfinite(p.weight_N) && p.weight_N >= 0.0, "weight_N", ">= 0", p.weight_N);
    require_positive(p.disc_area_m2, "disc_area_m2");
    require(std::isfinite(p.fom) && p.fom > 0.0 && p.fom <= 1.0, "fom", "in (0, 1]", p.fom);
    require(std::isfinite(p.interference_factor) && p.interference_factor >= 1.0, "interference_factor",
            ">= 1", p.interference_factor);
    require(std::isfinite(p.climb_rate_mps), "climb_rate_mps", "finite", p.climb_rate_mps);
    require_positive(p.density, "density");
    require(std::isfinite(p.efficiency) && p.efficiency > 0.0 && p.efficiency <= 1.0, "efficiency",
            "in (0, 1]", p.efficiency);
}

void validate(const FixedWingParams& p) {
    require(std::isfinite(p.weight_N) && p.weight_N >= 0.0, "weight_N", ">= 0", p.weight_N);
    require(std::isfinite(p.forward_speed_mps) && p.forward_speed_mps >= 0.0, "forward_speed_mps", ">= 0",
            p.forward_speed_mps);
    require(std::isfinite(p.vertical_speed_mps), "vertical_speed_mps", "finite", p.vertical_speed_mps);
    require_positive(p.lift_to_drag, "lift_to_drag");
    require(std::isfinite(p.efficiency) && p.efficiency > 0.0 && p.efficiency <= 1.0, "efficiency",
            "in (0, 1]", p.efficiency);
}

void validate(const DragPolar& polar) {
    require_positive(polar.zero_lift_drag_coeff, "zero_lift_drag_coeff");
    require_positive(polar.induced_factor, "induced_factor");
    require_positive(polar.wing_area_m2, "wing_area_m2");
}

double vertical_power(PropulsionKind kind, const VerticalFlightParams& p) {
    validate(p);
    const double f = p.interference_factor;
    const double w = p.weight_N;
    const double disc_loading = w / p.disc_area_m2;  // N/m^2

    double induced = 0.0;
    switch (kind) {
    case PropulsionKind::OpenRotor:
        induced = (f * w / p.fom) * std::sqrt(f * disc_loading / (2.0 * p.density));
        break;
    case PropulsionKind::DuctedFan:
        induced = (f * w / (2.0 * p.fom)) * std::sqrt(f * disc_loading / p.density);
        break;
    }
    const double climb = w * p.climb_rate_mps / 2.0;
    return (induced + climb) / p.efficiency;
}

double fixed_wing_power(const FixedWingParams& p) {
    validate(p);
    const double climb = p.weight_N * p.vertical_speed_mps;
    const double drag = p.weight_N * p.forward_speed_mps / p.lift_to_drag;
    return (climb + drag) / p.efficiency;
}

double level_flight_power(const DragPolar& polar, double weight_N, double density, double speed_mps) {
    validate(polar);
    require_positive(weight_N, "weight_N");
    require_positive(density, "density");
    require_positive(speed_mps, "speed_mps");
    const double s = polar.wing_area_m2;
    const double v = speed_mps;
    return density * v * v * v * s * polar.zero_lift_drag_coeff / 2.0 +
           2.0 * polar.induced_factor * weight_N * weight_N / (density * v * s);
}

double min_power_speed(const DragPolar& polar, double weight_N, double density) {
    validate(polar);
    require_positive(weight_N, "weight_N");
    require_positive(density, "density");
    return std::sqrt(2.0 * weight_N / (density * polar.wing_area_m2)) *
           std::pow(polar.induced_factor / (3.0 * polar.zero_lift_drag_coeff), 0.25);
}

double max_range_speed(const DragPolar& polar, double weight_N, double density) {
    validate(polar);
    require_positive(weight_N, "weight_N");
    require_positive(density, "density");
    return std::sqrt(2.0 * weight_N / (density * polar.wing_area_m2)) *
           std::pow(polar.induced_factor / polar.zero_lift_drag_coeff, 0.25);
}

double lift_to_drag_at(const DragPolar& polar, double speed_mps, double weight_N, double density) {
    validate(polar);
    require_positive(speed_mps, "speed_mps");
    require_positive(weight_N, "weight_N");
    require_positive(density, "density");
    const double cl = 2.0 * weight_N / (density * speed_mps * speed_mps * polar.wing_area_m2);
    return cl / (polar.zero_lift_drag_coeff + polar.induced_factor * cl * cl);
}

} // namespace evtol
