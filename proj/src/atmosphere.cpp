#include "evtol/atmosphere.hpp"

#include "evtol/errors.hpp"
#include "evtol/units.hpp"

#include <cmath>
#include <string>

namespace evtol {

AtmosphereState standard_atmosphere(double altitude_m) {
    if (!(altitude_m >= 0.0 && altitude_m <= isa::kTropopauseAltitude)) {
        throw DomainError("altitude " + std::to_string(altitude_m) +
                          " m is outside the troposphere model range [0, 11000] m");
    }
    const double temperature = isa::kSeaLevelTemperature - isa::kLapseRate * altitude_m;
    const double exponent = units::kStandardGravity / (isa::kLapseRate * isa::kGasConstant) - 1.0;
    const double density =
        isa::kSeaLevelDensity * std::pow(temperature / isa::kSeaLevelTemperature, exponent);
    return {altitude_m, density, temperature};
}

double air_density(double altitude_m) { return standard_atmosphere(altitude_m).density_kg_m3; }

} // namespace evtol
