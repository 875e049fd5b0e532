#pragma once

namespace evtol::units {

inline constexpr double kStandardGravity = 9.80665;  // m/s^2
inline constexpr double kMeterPerMile = 1609.344;
inline constexpr double kMeterPerNauticalMile = 1852.0;
inline constexpr double kSecondPerHour = 3600.0;
inline constexpr double kMpsPerMph = kMeterPerMile / kSecondPerHour;

constexpr double miles_to_meters(double mi) { return mi * kMeterPerMile; }
constexpr double meters_to_miles(double m) { return m / kMeterPerMile; }
constexpr double nautical_miles_to_miles(double nmi) { return nmi * kMeterPerNauticalMile / kMeterPerMile; }
constexpr double mph_to_mps(double mph) { return mph * kMpsPerMph; }
constexpr double mps_to_mph(double mps) { return mps / kMpsPerMph; }
constexpr double joules_to_watt_hours(double j) { return j / kSecondPerHour; }

} // namespace evtol::units
