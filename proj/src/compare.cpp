#include "evtol/compare.hpp"

#include "evtol/errors.hpp"

#include <charconv>
#include <cmath>

namespace evtol {
namespace {

std::string short_number(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, end);
}

} // namespace

std::string_view to_string(VehicleKind kind) { return kind == VehicleKind::EV ? "EV" : "ICEV"; }

void validate(const TerrestrialVehicle& v) {
    auto fail = [&v](const char* field, const char* rule) {
        throw ValidationError(field, "vehicle '" + v.name + "': field '" + field + "' " + rule);
    };
    if (v.name.empty()) fail("name", "must be non-empty");
    if (!(std::isfinite(v.road_consumption_Wh_per_mi) && v.road_consumption_Wh_per_mi > 0.0))
        fail("road_consumption_Wh_per_mi", "must be > 0");
    if (!(std::isfinite(v.circuity) && v.circuity >= 1.0)) fail("circuity", "must be >= 1");
    if (v.max_occupancy < 1) fail("max_occupancy", "must be >= 1");
    if (!(std::isfinite(v.occupancy) && v.occupancy > 0.0 && v.occupancy <= v.max_occupancy))
        fail("occupancy", "must be in (0, max_occupancy]");
}

double terrestrial_energy_per_passenger_mile(const TerrestrialVehicle& v) {
    validate(v);
    return v.road_consumption_Wh_per_mi * v.circuity / v.occupancy;
}

std::vector<Baseline> occupancy_baselines(const TerrestrialVehicle& v) {
    validate(v);
    std::vector<Baseline> out;
    for (double occ : {1.0, v.occupancy, static_cast<double>(v.max_occupancy)}) {
        bool seen = false;
        for (const auto& b : out) seen = seen || b.occupancy == occ;
        if (seen) continue;
        TerrestrialVehicle at = v;
        at.occupancy = occ;
        out.push_back({v.name + "/" + short_number(occ) + "pax", occ, terrestrial_energy_per_passenger_mile(at)});
    }
    return out;
}

std::optional<double> crossover_range(std::span<const CurvePoint> curve, double baseline) {
    if (curve.size() < 2) throw DataError("crossover needs a curve of at least two points");
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (!(curve[i].range_mi > curve[i - 1].range_mi)) {
            throw DataError("crossover curve ranges must be strictly ascending (point " + std::to_string(i) + ")");
        }
        if (!(curve[i].wh_per_passenger_mi < curve[i - 1].wh_per_passenger_mi)) {
            throw DataError("crossover curve must be strictly decreasing (point " + std::to_string(i) + ")");
        }
    }
    if (curve.front().wh_per_passenger_mi <= baseline) return curve.front().range_mi;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        const auto& hi = curve[i - 1];
        const auto& lo = curve[i];
        if (lo.wh_per_passenger_mi <= baseline) {
            const double t = (hi.wh_per_passenger_mi - baseline) / (hi.wh_per_passenger_mi - lo.wh_per_passenger_mi);
            return hi.range_mi + t * (lo.range_mi - hi.range_mi);
        }
    }
    return std::nullopt;
}

} // namespace evtol
