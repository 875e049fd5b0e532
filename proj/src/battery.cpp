#include "evtol/battery.hpp"

#include "evtol/atmosphere.hpp"
#include "evtol/errors.hpp"
#include "evtol/units.hpp"

#include <cmath>
#include <sstream>

namespace evtol {

std::string_view category_label(PackCategory category) {
    switch (category) {
    case PackCategory::CurrentLiIon: return "Current Li-ion";
    case PackCategory::NovelPrototypeLiIon: return "Novel/prototype Li-ion";
    case PackCategory::Advanced: return "Advanced";
    }
    return "";
}

std::optional<PackCategory> parse_category(std::string_view label) {
    for (PackCategory c : kPackCategories) {
        if (category_label(c) == label) return c;
    }
    return std::nullopt;
}

double battery_mass(double mtom_kg, double ewf, double payload_kg) {
    if (!(std::isfinite(mtom_kg) && mtom_kg > 0.0)) {
        throw ParameterError("mtom_kg", "mtom_kg must be > 0");
    }
    if (!(std::isfinite(ewf) && ewf > 0.0 && ewf < 1.0)) {
        throw ParameterError("ewf", "ewf must be in (0, 1) (got " + std::to_string(ewf) + ")");
    }
    if (!(std::isfinite(payload_kg) && payload_kg >= 0.0)) {
        throw ParameterError("payload_kg", "payload_kg must be >= 0");
    }
    const double mass = mtom_kg * (1.0 - ewf) - payload_kg;
    if (mass <= 0.0) {
        std::ostringstream msg;
        msg << "mass budget leaves no battery: mtom " << mtom_kg << " kg at ewf " << ewf << " with payload "
            << payload_kg << " kg is short by " << -mass << " kg";
        throw InfeasibleMassBudgetError(-mass, msg.str());
    }
    return mass;
}

BatteryRequirement size_battery(const AircraftSpec& spec, const MissionProfile& profile, double ewf,
                                double failure_fraction) {
    if (!profile.has_reserve()) {
        throw ContractError("battery sizing requires a mission profile built with the reserve segment");
    }
    if (profile.aircraft.name != spec.name) {
        throw ContractError("mission profile for '" + profile.aircraft.name + "' does not belong to '" +
                            spec.name + "'");
    }
    if (!(std::isfinite(failure_fraction) && failure_fraction >= 0.0 && failure_fraction < 1.0)) {
        throw ParameterError("failure_fraction",
                             "failure_fraction must be in [0, 1) (got " + std::to_string(failure_fraction) + ")");
    }
    BatteryRequirement req;
    req.battery_mass_kg = battery_mass(spec.mtom_kg, ewf, spec.payload_kg());
    req.specific_energy_Wh_per_kg = (profile.total_energy_Wh + profile.reserve_energy_Wh) / req.battery_mass_kg;
    req.specific_power_W_per_kg = profile.peak_power_W / (req.battery_mass_kg * (1.0 - failure_fraction));
    req.ewf_used = ewf;
    req.failure_fraction = failure_fraction;
    return req;
}

std::vector<BatteryRequirement> ewf_sweep(const AircraftSpec& spec, const MissionProfile& profile,
                                          std::span<const double> ewf_values,
                                          std::span<const double> failure_fractions) {
    std::vector<BatteryRequirement> out;
    out.reserve(ewf_values.size() * failure_fractions.size());
    for (double ewf : ewf_values) {
        for (double phi : failure_fractions) {
            try {
                out.push_back(size_battery(spec, profile, ewf, phi));
            } catch (const Error& e) {
                std::ostringstream msg;
                msg << e.what() << " [at ewf=" << ewf << ", failure_fraction=" << phi << "]";
                switch (e.kind()) {
                case ErrorKind::InfeasibleMassBudget:
                    throw InfeasibleMassBudgetError(static_cast<const InfeasibleMassBudgetError&>(e).shortfall_kg(),
                                                    msg.str());
                case ErrorKind::Parameter:
                    throw ParameterError(static_cast<const ParameterError&>(e).field(), msg.str());
                default: throw Error(e.kind(), msg.str());
                }
            }
        }
    }
    return out;
}

double max_range_speed_mph(const AircraftSpec& spec) {
    validate(spec);
    if (!spec.drag_polar) return spec.design_cruise_speed_mph;
    const double v = max_range_speed(*spec.drag_polar, spec.weight_N(), air_density(spec.cruise_altitude_m));
    return units::mps_to_mph(v);
}

MissionProfile build_sizing_mission(const AircraftSpec& spec) {
    return build_mission(spec, spec.design_range_mi, max_range_speed_mph(spec), true);
}

const CategoryVerdict& FeasibilityReport::verdict(PackCategory category) const {
    return verdicts[static_cast<std::size_t>(category)];
}

FeasibilityReport classify_feasibility(const BatteryRequirement& req, std::span<const BatteryPackRecord> packs) {
    if (packs.empty()) throw DataError("battery pack dataset is empty");

    FeasibilityReport report;
    for (std::size_t i = 0; i < kPackCategories.size(); ++i) report.verdicts[i].category = kPackCategories[i];

    for (const auto& pack : packs) {
        auto& v = report.verdicts[static_cast<std::size_t>(pack.category)];
        v.present = true;
        if (pack.specific_energy_Wh_per_kg >= req.specific_energy_Wh_per_kg &&
            pack.specific_power_W_per_kg >= req.specific_power_W_per_kg) {
            v.feasible = true;
            v.dominating_packs.push_back(pack.name);
            report.dominating_packs.push_back(pack.name);
        }
    }
    return report;
}

} // namespace evtol
