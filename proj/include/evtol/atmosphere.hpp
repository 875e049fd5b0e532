#pragma once

namespace evtol {

/// International Standard Atmosphere, troposphere layer only (0 to 11 km).
namespace isa {
inline constexpr double kSeaLevelTemperature = 288.15;  // K
inline constexpr double kSeaLevelDensity = 1.225;       // kg/m^3
inline constexpr double kLapseRate = 0.0065;            // K/m
inline constexpr double kGasConstant = 287.053;         // J/(kg K)
inline constexpr double kTropopauseAltitude = 11000.0;  // m
} // namespace isa

struct AtmosphereState {
    double altitude_m = 0.0;
    double density_kg_m3 = isa::kSeaLevelDensity;
    double temperature_K = isa::kSeaLevelTemperature;
};

/// Throws DomainError outside [0, 11000] m.
AtmosphereState standard_atmosphere(double altitude_m);

double air_density(double altitude_m);

} // namespace evtol
