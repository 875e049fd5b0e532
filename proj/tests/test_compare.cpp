#include "evtol/compare.hpp"
#include "evtol/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace evtol;

namespace {

TerrestrialVehicle vehicle(double road, double circuity, double occupancy, int max_occupancy = 4) {
    return {"car", VehicleKind::EV, road, circuity, occupancy, max_occupancy};
}

} // namespace

TEST_CASE("terrestrial energy per passenger mile") {
    CHECK(terrestrial_energy_per_passenger_mile(vehicle(310.3, 1.0, 1.0)) == 310.3);
    // Back-calculated road figures reproduce the published baselines.
    CHECK(std::abs(terrestrial_energy_per_passenger_mile(vehicle(310.3, 1.20, 1.67)) - 223.0) < 1.0);
    CHECK(std::abs(terrestrial_energy_per_passenger_mile(vehicle(1392.0, 1.20, 1.67)) - 1000.0) < 3.0);
    CHECK(std::abs(terrestrial_energy_per_passenger_mile(vehicle(1392.0, 1.20, 4.0)) - 418.0) < 3.0);

    const double one = terrestrial_energy_per_passenger_mile(vehicle(300.0, 1.3, 1.5));
    CHECK(terrestrial_energy_per_passenger_mile(vehicle(300.0, 1.3, 3.0)) == doctest::Approx(one / 2.0).epsilon(1e-15));
    CHECK(terrestrial_energy_per_passenger_mile(vehicle(300.0, 2.6, 1.5)) == doctest::Approx(2.0 * one).epsilon(1e-15));
}

TEST_CASE("terrestrial vehicle validation") {
    CHECK_THROWS_AS(terrestrial_energy_per_passenger_mile(vehicle(0.0, 1.2, 1.0)), ValidationError);
    CHECK_THROWS_AS(terrestrial_energy_per_passenger_mile(vehicle(300.0, 0.9, 1.0)), ValidationError);
    CHECK_THROWS_AS(terrestrial_energy_per_passenger_mile(vehicle(300.0, 1.2, 0.0)), ValidationError);
    CHECK_THROWS_AS(terrestrial_energy_per_passenger_mile(vehicle(300.0, 1.2, 5.0, 4)), ValidationError);
}

TEST_CASE("occupancy baselines cover single, expected and full") {
    const auto b = occupancy_baselines(vehicle(310.3, 1.2, 1.67, 4));
    REQUIRE(b.size() == 3);
    CHECK(b[0].occupancy == 1.0);
    CHECK(b[1].occupancy == 1.67);
    CHECK(b[2].occupancy == 4.0);
    CHECK(b[0].label == "car/1pax");
    CHECK(b[1].label == "car/1.67pax");
    CHECK(occupancy_baselines(vehicle(310.3, 1.2, 1.0, 1)).size() == 1);
}

TEST_CASE("crossover_range interpolation") {
    const std::vector<CurvePoint> curve{{10.0, 300.0}, {20.0, 200.0}};
    CHECK(crossover_range(curve, 250.0) == doctest::Approx(15.0));
    CHECK_FALSE(crossover_range(curve, 150.0).has_value());
    CHECK_FALSE(crossover_range(curve, 0.0).has_value());
    CHECK(*crossover_range(curve, 200.0) == 20.0);
    CHECK(*crossover_range(curve, 400.0) == 10.0);
}

TEST_CASE("crossover_range rejects malformed curves") {
    CHECK_THROWS_AS(crossover_range(std::vector<CurvePoint>{{10.0, 300.0}}, 100.0), DataError);
    CHECK_THROWS_AS(crossover_range(std::vector<CurvePoint>{{20.0, 300.0}, {10.0, 200.0}}, 250.0), DataError);
    CHECK_THROWS_AS(crossover_range(std::vector<CurvePoint>{{10.0, 200.0}, {20.0, 300.0}}, 250.0), DataError);
    CHECK_THROWS_AS(crossover_range(std::vector<CurvePoint>{{10.0, 200.0}, {20.0, 200.0}}, 250.0), DataError);
}

TEST_CASE("crossover monotonic in baseline and contained in its bracket") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<CurvePoint> curve;
        double r = 5.0, v = 500.0 + 500.0 * u(rng);
        for (int i = 0; i < 30; ++i) {
            curve.push_back({r, v});
            r += 0.5 + 3.0 * u(rng);
            v -= 1.0 + 30.0 * u(rng);
        }
        std::optional<double> prev;
        for (double b = curve.back().wh_per_passenger_mi - 10.0; b < curve.front().wh_per_passenger_mi + 10.0;
             b += 7.3) {
            const auto c = crossover_range(curve, b);
            if (!c) {
                REQUIRE(b < curve.back().wh_per_passenger_mi);
                continue;
            }
            if (prev) REQUIRE(*c <= *prev);
            prev = c;
            // Containment: some bracketing pair encloses both the range and the baseline.
            bool contained = *c == curve.front().range_mi;
            for (std::size_t i = 1; i < curve.size() && !contained; ++i) {
                contained = curve[i - 1].range_mi <= *c && *c <= curve[i].range_mi &&
                            curve[i].wh_per_passenger_mi <= b && b <= curve[i - 1].wh_per_passenger_mi;
            }
            REQUIRE(contained);
        }
    }
}
