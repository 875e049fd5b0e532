#include "evtol/errors.hpp"
#include "evtol/powerplant.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace evtol;
using evtol::testing::rel_diff;

namespace {

VerticalFlightParams unit_params() {
    VerticalFlightParams p;
    p.weight_N = 10000.0;
    p.disc_area_m2 = 10.0;
    p.density = 1.225;
    p.fom = 1.0;
    p.interference_factor = 1.0;
    p.climb_rate_mps = 0.0;
    p.efficiency = 1.0;
    return p;
}

} // namespace

TEST_CASE("vertical_power hand-oracle values") {
    // Oracle: W sqrt(W/A / (2 rho)) = 10000 * sqrt(1000 / 2.45)
    CHECK(rel_diff(vertical_power(PropulsionKind::OpenRotor, unit_params()), 10000.0 * std::sqrt(1000.0 / 2.45)) <
          1e-12);
    CHECK(std::abs(vertical_power(PropulsionKind::OpenRotor, unit_params()) - 202031.0) < 1.0);
    CHECK(std::abs(vertical_power(PropulsionKind::DuctedFan, unit_params()) - 142857.1) < 1.0);

    auto p = unit_params();
    p.interference_factor = 1.03;
    // f enters as f^1.5: 202030.5 * 1.03^1.5
    CHECK(std::abs(vertical_power(PropulsionKind::OpenRotor, p) - 211189.73) < 5.0);
}

TEST_CASE("vertical_power climb term and efficiency") {
    auto p = unit_params();
    p.weight_N = 0.0;
    CHECK(vertical_power(PropulsionKind::OpenRotor, p) == 0.0);
    CHECK(vertical_power(PropulsionKind::DuctedFan, p) == 0.0);

    p = unit_params();
    const double hover = vertical_power(PropulsionKind::OpenRotor, p);
    p.climb_rate_mps = 2.0;
    CHECK(vertical_power(PropulsionKind::OpenRotor, p) == doctest::Approx(hover + 10000.0));
    p.efficiency = 0.8;
    CHECK(vertical_power(PropulsionKind::OpenRotor, p) == doctest::Approx((hover + 10000.0) / 0.8));
}

TEST_CASE("vertical_power parameter errors name the field") {
    auto expect_field = [](VerticalFlightParams p, const char* field) {
        try {
            vertical_power(PropulsionKind::OpenRotor, p);
            FAIL("expected ParameterError for " << field);
        } catch (const ParameterError& e) {
            CHECK(e.field() == field);
        }
    };
    auto p = unit_params();
    p.weight_N = -1.0;
    expect_field(p, "weight_N");
    p = unit_params();
    p.disc_area_m2 = 0.0;
    expect_field(p, "disc_area_m2");
    p = unit_params();
    p.fom = 1.2;
    expect_field(p, "fom");
    p = unit_params();
    p.interference_factor = 0.99;
    expect_field(p, "interference_factor");
    p = unit_params();
    p.density = 0.0;
    expect_field(p, "density");
    p = unit_params();
    p.efficiency = 0.0;
    expect_field(p, "efficiency");
}

TEST_CASE("vertical_power properties on random draws") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        VerticalFlightParams p;
        p.weight_N = 500.0 + 40000.0 * u(rng);
        p.disc_area_m2 = 0.5 + 50.0 * u(rng);
        p.fom = 0.3 + 0.69 * u(rng);
        p.interference_factor = 1.0 + 0.1 * u(rng);
        p.density = 0.4 + 0.85 * u(rng);
        p.efficiency = 0.5 + 0.49 * u(rng);
        const double open = vertical_power(PropulsionKind::OpenRotor, p);
        const double ducted = vertical_power(PropulsionKind::DuctedFan, p);
        REQUIRE(rel_diff(ducted / open, 1.0 / std::sqrt(2.0)) < 1e-12);

        auto doubled = p;
        doubled.disc_area_m2 *= 2.0;
        REQUIRE(rel_diff(vertical_power(PropulsionKind::OpenRotor, doubled) / open, 1.0 / std::sqrt(2.0)) < 1e-12);

        auto heavier = p;
        heavier.weight_N *= 1.01;
        REQUIRE(vertical_power(PropulsionKind::OpenRotor, heavier) > open);
        auto better = p;
        better.fom = std::min(1.0, p.fom * 1.01);
        REQUIRE(vertical_power(PropulsionKind::OpenRotor, better) < open);
        auto denser = p;
        denser.density *= 1.01;
        REQUIRE(vertical_power(PropulsionKind::OpenRotor, denser) < open);
        auto efficient = p;
        efficient.efficiency = std::min(1.0, p.efficiency * 1.01);
        REQUIRE(vertical_power(PropulsionKind::OpenRotor, efficient) < open);
    }
}

TEST_CASE("fixed_wing_power hand-oracle values") {
    FixedWingParams p;
    p.weight_N = 10000.0;
    p.forward_speed_mps = 67.056;
    p.lift_to_drag = 14.0;
    p.efficiency = 1.0;
    CHECK(std::abs(fixed_wing_power(p) - 47897.14) < 1.0);
    p.vertical_speed_mps = 2.0;
    CHECK(std::abs(fixed_wing_power(p) - 67897.14) < 1.0);

    p.forward_speed_mps = 0.0;
    p.vertical_speed_mps = 0.0;
    CHECK(fixed_wing_power(p) == 0.0);
}

TEST_CASE("fixed_wing_power is linear in weight with additive climb term") {
    FixedWingParams p;
    p.weight_N = 12345.0;
    p.forward_speed_mps = 55.0;
    p.vertical_speed_mps = 3.0;
    p.lift_to_drag = 13.0;
    p.efficiency = 0.83;
    const double base = fixed_wing_power(p);
    auto twice = p;
    twice.weight_N *= 2.0;
    CHECK(rel_diff(fixed_wing_power(twice), 2.0 * base) < 1e-14);
    auto level = p;
    level.vertical_speed_mps = 0.0;
    CHECK(rel_diff(base - fixed_wing_power(level), p.weight_N * 3.0 / 0.83) < 1e-12);

    p.lift_to_drag = 0.0;
    CHECK_THROWS_AS(fixed_wing_power(p), ParameterError);
}

TEST_CASE("min_power_speed matches golden-section oracle") {
    const DragPolar polar{0.03, 0.045, 10.0};
    const double v = min_power_speed(polar, 10000.0, 1.225);
    // Oracle: golden-section search on P(V) over (1, 200) gives 33.9773 m/s.
    CHECK(std::abs(v - 33.977) < 0.05);
    const double oracle = testing::golden_section_minimize(
        [](double x) { return testing::polar_power(0.03, 0.045, 10.0, 10000.0, 1.225, x); }, 1.0, 200.0);
    CHECK(rel_diff(v, oracle) < 1e-6);
    CHECK(rel_diff(min_power_speed(polar, 20000.0, 1.225), std::sqrt(2.0) * v) < 1e-12);
}

TEST_CASE("level_flight_power agrees with direct polar evaluation") {
    const DragPolar polar{0.028, 0.04, 14.0};
    for (double v : {20.0, 40.0, 70.0}) {
        CHECK(rel_diff(level_flight_power(polar, 15000.0, 1.19, v),
                       testing::polar_power(0.028, 0.04, 14.0, 15000.0, 1.19, v)) < 1e-12);
    }
}

TEST_CASE("lift_to_drag_at direct evaluation") {
    const DragPolar polar{0.03, 0.045, 10.0};
    // C_L = 2W/(rho V^2 S) at 35.53 m/s is 1.2933; L/D = 12.2857.
    CHECK(std::abs(lift_to_drag_at(polar, 35.53, 10000.0, 1.225) - 12.2857) < 0.05);
    const double vmp = min_power_speed(polar, 10000.0, 1.225);
    // At the minimum-power speed C_L = sqrt(3 C_D0 / k) and L/D = (sqrt(3)/2) L/D_max.
    const double ld_max = 1.0 / (2.0 * std::sqrt(0.03 * 0.045));
    CHECK(rel_diff(lift_to_drag_at(polar, vmp, 10000.0, 1.225), std::sqrt(3.0) / 2.0 * ld_max) < 1e-12);

    // Vanishing induced drag: L/D -> C_L / C_D0.
    const DragPolar clean{0.03, 1e-12, 10.0};
    const double cl = 2.0 * 10000.0 / (1.225 * 50.0 * 50.0 * 10.0);
    CHECK(rel_diff(lift_to_drag_at(clean, 50.0, 10000.0, 1.225), cl / 0.03) < 1e-9);

    CHECK_THROWS_AS(lift_to_drag_at(polar, 0.0, 10000.0, 1.225), ParameterError);
    CHECK_THROWS_AS(lift_to_drag_at(DragPolar{0.0, 0.04, 10.0}, 30.0, 10000.0, 1.225), ParameterError);
}

TEST_CASE("max L/D speed exceeds min power speed on random polars") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double cd0 = 0.01 + 0.05 * u(rng);
        const double k = 0.02 + 0.08 * u(rng);
        const double s = 2.0 + 40.0 * u(rng);
        const double w = 1000.0 + 40000.0 * u(rng);
        const double rho = 0.5 + 0.7 * u(rng);
        const DragPolar polar{cd0, k, s};
        // Oracle: numeric maximization of L/D(V).
        const double v_ld = testing::golden_section_minimize(
            [&](double v) { return -testing::polar_lift_to_drag(cd0, k, s, w, rho, v); }, 1.0, 500.0);
        const double vmp = min_power_speed(polar, w, rho);
        REQUIRE(v_ld > vmp);
        REQUIRE(rel_diff(max_range_speed(polar, w, rho), v_ld) < 1e-6);
    }
}

TEST_CASE("min_power_speed rejects non-positive input") {
    CHECK_THROWS_AS(min_power_speed(DragPolar{0.03, 0.045, 10.0}, 0.0, 1.2), ParameterError);
    CHECK_THROWS_AS(min_power_speed(DragPolar{0.03, 0.045, 10.0}, 100.0, -1.0), ParameterError);
    CHECK_THROWS_AS(min_power_speed(DragPolar{0.03, 0.0, 10.0}, 100.0, 1.2), ParameterError);
    CHECK_THROWS_AS(min_power_speed(DragPolar{0.03, 0.045, -3.0}, 100.0, 1.2), ParameterError);
}
