#include "evtol/atmosphere.hpp"
#include "evtol/battery.hpp"
#include "evtol/compare.hpp"
#include "evtol/dataio.hpp"
#include "evtol/errors.hpp"
#include "evtol/mission.hpp"
#include "evtol/powerplant.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace evtol;

namespace {

void bind_errors(py::module_& m) {
    auto base = py::register_exception<Error>(m, "EvtolError");
    py::register_exception<ParameterError>(m, "ParameterError", base);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<InfeasibleMissionError>(m, "InfeasibleMissionError", base);
    py::register_exception<InfeasibleMassBudgetError>(m, "InfeasibleMassBudgetError", base);
    py::register_exception<ContractError>(m, "ContractError", base);
    py::register_exception<DataError>(m, "DataError", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<ValidationError>(m, "ValidationError", base);
    py::register_exception<ConfigError>(m, "ConfigError", base);
    py::register_exception<IoError>(m, "IoError", base);
}

void bind_powerplant(py::module_& m) {
    py::enum_<PropulsionKind>(m, "PropulsionKind")
        .value("OpenRotor", PropulsionKind::OpenRotor)
        .value("DuctedFan", PropulsionKind::DuctedFan);

    py::class_<VerticalFlightParams>(m, "VerticalFlightParams")
        .def(py::init<>())
        .def_readwrite("weight_N", &VerticalFlightParams::weight_N)
        .def_readwrite("disc_area_m2", &VerticalFlightParams::disc_area_m2)
        .def_readwrite("fom", &VerticalFlightParams::fom)
        .def_readwrite("interference_factor", &VerticalFlightParams::interference_factor)
        .def_readwrite("climb_rate_mps", &VerticalFlightParams::climb_rate_mps)
        .def_readwrite("density", &VerticalFlightParams::density)
        .def_readwrite("efficiency", &VerticalFlightParams::efficiency);

    py::class_<FixedWingParams>(m, "FixedWingParams")
        .def(py::init<>())
        .def_readwrite("weight_N", &FixedWingParams::weight_N)
        .def_readwrite("forward_speed_mps", &FixedWingParams::forward_speed_mps)
        .def_readwrite("vertical_speed_mps", &FixedWingParams::vertical_speed_mps)
        .def_readwrite("lift_to_drag", &FixedWingParams::lift_to_drag)
        .def_readwrite("efficiency", &FixedWingParams::efficiency);

    py::class_<DragPolar>(m, "DragPolar")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("zero_lift_drag_coeff"), py::arg("induced_factor"),
             py::arg("wing_area_m2"))
        .def_readwrite("zero_lift_drag_coeff", &DragPolar::zero_lift_drag_coeff)
        .def_readwrite("induced_factor", &DragPolar::induced_factor)
        .def_readwrite("wing_area_m2", &DragPolar::wing_area_m2);

    m.def("air_density", &air_density, py::arg("altitude_m"));
    m.def("vertical_power", &vertical_power, py::arg("kind"), py::arg("params"));
    m.def("fixed_wing_power", &fixed_wing_power, py::arg("params"));
    m.def("level_flight_power", &level_flight_power, py::arg("polar"), py::arg("weight_N"), py::arg("density"),
          py::arg("speed_mps"));
    m.def("min_power_speed", &min_power_speed, py::arg("polar"), py::arg("weight_N"), py::arg("density"));
    m.def("max_range_speed", &max_range_speed, py::arg("polar"), py::arg("weight_N"), py::arg("density"));
    m.def("lift_to_drag_at", &lift_to_drag_at, py::arg("polar"), py::arg("speed_mps"), py::arg("weight_N"),
          py::arg("density"));
}

void bind_mission(py::module_& m) {
    py::class_<AircraftSpec>(m, "AircraftSpec")
        .def(py::init<>())
        .def_readwrite("name", &AircraftSpec::name)
        .def_readwrite("propulsion", &AircraftSpec::propulsion)
        .def_readwrite("mtom_kg", &AircraftSpec::mtom_kg)
        .def_readwrite("seats", &AircraftSpec::seats)
        .def_readwrite("payload_per_seat_kg", &AircraftSpec::payload_per_seat_kg)
        .def_readwrite("disc_area_m2", &AircraftSpec::disc_area_m2)
        .def_readwrite("fom", &AircraftSpec::fom)
        .def_readwrite("interference_factor", &AircraftSpec::interference_factor)
        .def_readwrite("eta_vertical", &AircraftSpec::eta_vertical)
        .def_readwrite("eta_fixed_wing", &AircraftSpec::eta_fixed_wing)
        .def_readwrite("lod_climb", &AircraftSpec::lod_climb)
        .def_readwrite("lod_cruise", &AircraftSpec::lod_cruise)
        .def_readwrite("lod_descent", &AircraftSpec::lod_descent)
        .def_readwrite("drag_polar", &AircraftSpec::drag_polar)
        .def_readwrite("design_range_mi", &AircraftSpec::design_range_mi)
        .def_readwrite("design_cruise_speed_mph", &AircraftSpec::design_cruise_speed_mph)
        .def_readwrite("vertical_climb_rate_mps", &AircraftSpec::vertical_climb_rate_mps)
        .def_readwrite("hover_altitude_m", &AircraftSpec::hover_altitude_m)
        .def_readwrite("cruise_altitude_m", &AircraftSpec::cruise_altitude_m)
        .def_readwrite("wing_climb_rate_mps", &AircraftSpec::wing_climb_rate_mps)
        .def_readwrite("hover_time_s", &AircraftSpec::hover_time_s)
        .def_readwrite("ewf", &AircraftSpec::ewf)
        .def_property_readonly("disc_loading_kg_m2", &AircraftSpec::disc_loading_kg_m2)
        .def_property_readonly("payload_kg", &AircraftSpec::payload_kg)
        .def("__eq__", [](const AircraftSpec& a, const AircraftSpec& b) { return a == b; })
        .def("__repr__", [](const AircraftSpec& a) { return "<AircraftSpec '" + a.name + "'>"; });

    py::enum_<SegmentKind>(m, "SegmentKind")
        .value("VerticalClimb", SegmentKind::VerticalClimb)
        .value("Hover", SegmentKind::Hover)
        .value("WingClimb", SegmentKind::WingClimb)
        .value("Cruise", SegmentKind::Cruise)
        .value("WingDescent", SegmentKind::WingDescent)
        .value("VerticalDescent", SegmentKind::VerticalDescent)
        .value("Reserve", SegmentKind::Reserve);

    py::class_<MissionSegment>(m, "MissionSegment")
        .def_readonly("kind", &MissionSegment::kind)
        .def_readonly("duration_s", &MissionSegment::duration_s)
        .def_readonly("distance_m", &MissionSegment::distance_m)
        .def_readonly("power_W", &MissionSegment::power_W)
        .def_readonly("energy_Wh", &MissionSegment::energy_Wh);

    py::class_<MissionProfile>(m, "MissionProfile")
        .def_readonly("aircraft", &MissionProfile::aircraft)
        .def_readonly("range_mi", &MissionProfile::range_mi)
        .def_readonly("cruise_speed_mph", &MissionProfile::cruise_speed_mph)
        .def_readonly("segments", &MissionProfile::segments)
        .def_readonly("total_energy_Wh", &MissionProfile::total_energy_Wh)
        .def_readonly("reserve_energy_Wh", &MissionProfile::reserve_energy_Wh)
        .def_readonly("peak_power_W", &MissionProfile::peak_power_W)
        .def_property_readonly("has_reserve", &MissionProfile::has_reserve);

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("range_mi", &CurvePoint::range_mi)
        .def_readonly("wh_per_passenger_mi", &CurvePoint::wh_per_passenger_mi);

    m.def("validate_aircraft", py::overload_cast<const AircraftSpec&>(&validate), py::arg("spec"));
    m.def("min_feasible_range_mi", &min_feasible_range_mi, py::arg("spec"));
    m.def("build_mission", &build_mission, py::arg("spec"), py::arg("range_mi"), py::arg("cruise_speed_mph"),
          py::arg("include_reserve") = false);
    m.def("energy_per_passenger_mile", &energy_per_passenger_mile, py::arg("spec"), py::arg("range_mi"),
          py::arg("cruise_speed_mph"), py::arg("occupants"));
    m.def(
        "range_sweep",
        [](const AircraftSpec& spec, const std::vector<double>& ranges, double speed, int occupants) {
            return range_sweep(spec, ranges, speed, occupants);
        },
        py::arg("spec"), py::arg("ranges_mi"), py::arg("cruise_speed_mph"), py::arg("occupants"));
}

void bind_battery(py::module_& m) {
    py::enum_<PackCategory>(m, "PackCategory")
        .value("CurrentLiIon", PackCategory::CurrentLiIon)
        .value("NovelPrototypeLiIon", PackCategory::NovelPrototypeLiIon)
        .value("Advanced", PackCategory::Advanced);

    py::class_<BatteryRequirement>(m, "BatteryRequirement")
        .def(py::init<>())
        .def_readwrite("battery_mass_kg", &BatteryRequirement::battery_mass_kg)
        .def_readwrite("specific_energy_Wh_per_kg", &BatteryRequirement::specific_energy_Wh_per_kg)
        .def_readwrite("specific_power_W_per_kg", &BatteryRequirement::specific_power_W_per_kg)
        .def_readwrite("ewf_used", &BatteryRequirement::ewf_used)
        .def_readwrite("failure_fraction", &BatteryRequirement::failure_fraction);

    py::class_<BatteryPackRecord>(m, "BatteryPackRecord")
        .def(py::init<>())
        .def(py::init([](std::string name, PackCategory c, double se, double sp) {
                 return BatteryPackRecord{std::move(name), c, se, sp};
             }),
             py::arg("name"), py::arg("category"), py::arg("specific_energy_Wh_per_kg"),
             py::arg("specific_power_W_per_kg"))
        .def_readwrite("name", &BatteryPackRecord::name)
        .def_readwrite("category", &BatteryPackRecord::category)
        .def_readwrite("specific_energy_Wh_per_kg", &BatteryPackRecord::specific_energy_Wh_per_kg)
        .def_readwrite("specific_power_W_per_kg", &BatteryPackRecord::specific_power_W_per_kg);

    py::class_<CategoryVerdict>(m, "CategoryVerdict")
        .def_readonly("category", &CategoryVerdict::category)
        .def_readonly("present", &CategoryVerdict::present)
        .def_readonly("feasible", &CategoryVerdict::feasible)
        .def_readonly("dominating_packs", &CategoryVerdict::dominating_packs);

    py::class_<FeasibilityReport>(m, "FeasibilityReport")
        .def_readonly("verdicts", &FeasibilityReport::verdicts)
        .def_readonly("dominating_packs", &FeasibilityReport::dominating_packs)
        .def("verdict", &FeasibilityReport::verdict, py::arg("category"), py::return_value_policy::copy);

    m.def("category_label", [](PackCategory c) { return std::string(category_label(c)); });
    m.def("battery_mass", &battery_mass, py::arg("mtom_kg"), py::arg("ewf"), py::arg("payload_kg"));
    m.def("size_battery", &size_battery, py::arg("spec"), py::arg("profile"), py::arg("ewf"),
          py::arg("failure_fraction") = 0.0);
    m.def(
        "ewf_sweep",
        [](const AircraftSpec& spec, const MissionProfile& profile, const std::vector<double>& ewfs,
           const std::vector<double>& failures) { return ewf_sweep(spec, profile, ewfs, failures); },
        py::arg("spec"), py::arg("profile"), py::arg("ewf_values"), py::arg("failure_fractions"));
    m.def("max_range_speed_mph", &max_range_speed_mph, py::arg("spec"));
    m.def("build_sizing_mission", &build_sizing_mission, py::arg("spec"));
    m.def(
        "classify_feasibility",
        [](const BatteryRequirement& req, const std::vector<BatteryPackRecord>& packs) {
            return classify_feasibility(req, packs);
        },
        py::arg("requirement"), py::arg("packs"));
}

void bind_compare(py::module_& m) {
    py::enum_<VehicleKind>(m, "VehicleKind").value("EV", VehicleKind::EV).value("ICEV", VehicleKind::ICEV);

    py::class_<TerrestrialVehicle>(m, "TerrestrialVehicle")
        .def(py::init<>())
        .def_readwrite("name", &TerrestrialVehicle::name)
        .def_readwrite("kind", &TerrestrialVehicle::kind)
        .def_readwrite("road_consumption_Wh_per_mi", &TerrestrialVehicle::road_consumption_Wh_per_mi)
        .def_readwrite("circuity", &TerrestrialVehicle::circuity)
        .def_readwrite("occupancy", &TerrestrialVehicle::occupancy)
        .def_readwrite("max_occupancy", &TerrestrialVehicle::max_occupancy);

    m.def("terrestrial_energy_per_passenger_mile", &terrestrial_energy_per_passenger_mile, py::arg("vehicle"));
    m.def(
        "crossover_range",
        [](const std::vector<std::pair<double, double>>& curve, double baseline) {
            std::vector<CurvePoint> pts;
            pts.reserve(curve.size());
            for (const auto& [r, v] : curve) pts.push_back({r, v});
            return crossover_range(pts, baseline);
        },
        py::arg("curve"), py::arg("baseline"),
        "curve: list of (range_mi, Wh/passenger-mi) pairs; returns None when the baseline is never reached");
}

void bind_dataio(py::module_& m) {
    py::class_<SpecDocument>(m, "SpecDocument")
        .def_readonly("format_version", &SpecDocument::format_version)
        .def_readonly("aircraft", &SpecDocument::aircraft)
        .def_readonly("vehicles", &SpecDocument::vehicles)
        .def(
            "find_aircraft",
            [](const SpecDocument& d, const std::string& name) -> std::optional<AircraftSpec> {
                const AircraftSpec* a = d.find_aircraft(name);
                return a ? std::optional<AircraftSpec>(*a) : std::nullopt;
            },
            py::arg("name"))
        .def("__eq__", [](const SpecDocument& a, const SpecDocument& b) { return a == b; });

    m.def("load_specs", &load_specs, py::arg("path"));
    m.def("parse_specs", &parse_specs, py::arg("text"));
    m.def("serialize_specs", &serialize_specs, py::arg("doc"));
    m.def("load_packs", &load_packs, py::arg("path"));
    m.def("parse_packs", &parse_packs, py::arg("text"));
    m.def(
        "serialize_packs", [](const std::vector<BatteryPackRecord>& p) { return serialize_packs(p); },
        py::arg("packs"));
    m.def("format_number", &format_number, py::arg("value"));
}

} // namespace

PYBIND11_MODULE(_evtol, m) {
    m.doc() = "EVTOL mission energy and battery requirement model";
    bind_errors(m);
    bind_powerplant(m);
    bind_mission(m);
    bind_battery(m);
    bind_compare(m);
    bind_dataio(m);
}
