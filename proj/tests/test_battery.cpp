#include "evtol/battery.hpp"
#include "evtol/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace evtol;
using evtol::testing::rel_diff;

namespace {

// 1000 kg aircraft, one 100 kg seat, hand-built profile: 90 kWh trip + reserve, 250 kW peak.
AircraftSpec sizing_spec() {
    auto s = testing::synthetic_spec();
    s.seats = 1;
    return s;
}

MissionProfile hand_profile(const AircraftSpec& spec) {
    MissionProfile p;
    p.aircraft = spec;
    p.range_mi = 50.0;
    p.segments = {
        {SegmentKind::VerticalClimb, 3600.0, 0.0, 250000.0, 250000.0},
        {SegmentKind::Reserve, 1800.0, 0.0, 20000.0, 10000.0},
    };
    p.total_energy_Wh = 80000.0;
    p.reserve_energy_Wh = 10000.0;
    p.peak_power_W = 250000.0;
    return p;
}

} // namespace

TEST_CASE("battery_mass is the remainder of the mass split") {
    CHECK(battery_mass(2000.0, 0.5, 200.0) == 800.0);
    CHECK(battery_mass(2000.0, 0.55, 200.0) == doctest::Approx(700.0).epsilon(1e-15));
    CHECK_THROWS_AS(battery_mass(2000.0, 0.5, 1000.0), InfeasibleMassBudgetError);
    try {
        battery_mass(2000.0, 0.5, 1100.0);
    } catch (const InfeasibleMassBudgetError& e) {
        CHECK(e.shortfall_kg() == doctest::Approx(100.0));
    }
    CHECK_THROWS_AS(battery_mass(2000.0, 1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(battery_mass(2000.0, 0.0, 0.0), ParameterError);
    CHECK_THROWS_AS(battery_mass(2000.0, 0.5, -1.0), ParameterError);
}

TEST_CASE("size_battery end-to-end hand arithmetic") {
    const auto spec = sizing_spec();
    const auto req = size_battery(spec, hand_profile(spec), 0.5, 0.0);
    CHECK(req.battery_mass_kg == 400.0);
    CHECK(req.specific_energy_Wh_per_kg == 225.0);
    CHECK(req.specific_power_W_per_kg == 625.0);
    CHECK(req.ewf_used == 0.5);

    const auto failed = size_battery(spec, hand_profile(spec), 0.5, 0.5);
    CHECK(failed.specific_power_W_per_kg == 2.0 * req.specific_power_W_per_kg);
    CHECK(failed.specific_energy_Wh_per_kg == req.specific_energy_Wh_per_kg);
}

TEST_CASE("size_battery contract errors") {
    const auto spec = sizing_spec();
    const auto no_reserve = build_mission(spec, 50.0, 100.0, false);
    CHECK_THROWS_AS(size_battery(spec, no_reserve, 0.5, 0.0), ContractError);
    auto other = spec;
    other.name = "other";
    CHECK_THROWS_AS(size_battery(other, hand_profile(spec), 0.5, 0.0), ContractError);
    CHECK_THROWS_AS(size_battery(spec, hand_profile(spec), 0.5, 1.0), ParameterError);
    CHECK_THROWS_AS(size_battery(spec, hand_profile(spec), 0.5, -0.1), ParameterError);
    CHECK_THROWS_AS(size_battery(spec, hand_profile(spec), 0.95, 0.0), InfeasibleMassBudgetError);
}

TEST_CASE("ewf_sweep is the Cartesian product of size_battery") {
    const auto spec = sizing_spec();
    const auto profile = build_sizing_mission(spec);
    const std::vector<double> ewfs{0.45, 0.5, 0.55};
    const std::vector<double> phis{0.0, 0.5};
    const auto reqs = ewf_sweep(spec, profile, ewfs, phis);
    REQUIRE(reqs.size() == 6);
    std::size_t i = 0;
    for (double e : ewfs) {
        for (double phi : phis) {
            CHECK(reqs[i] == size_battery(spec, profile, e, phi));
            ++i;
        }
    }
    CHECK(reqs[0].specific_energy_Wh_per_kg < reqs[2].specific_energy_Wh_per_kg);
    CHECK(reqs[2].specific_energy_Wh_per_kg < reqs[4].specific_energy_Wh_per_kg);
    CHECK(reqs[3].specific_energy_Wh_per_kg == reqs[2].specific_energy_Wh_per_kg);

    const std::vector<double> one_e{0.5};
    const std::vector<double> one_phi{0.0};
    CHECK(ewf_sweep(spec, profile, one_e, one_phi).front() == size_battery(spec, profile, 0.5, 0.0));

    const std::vector<double> bad{0.5, 0.95};
    try {
        ewf_sweep(spec, profile, bad, one_phi);
        FAIL("expected InfeasibleMassBudgetError");
    } catch (const InfeasibleMassBudgetError& e) {
        CHECK(std::string(e.what()).find("ewf=0.95") != std::string::npos);
    }
}

TEST_CASE("failure scaling and ewf monotonicity on random specs") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const auto spec = testing::random_spec(rng, true);
        const auto profile = build_sizing_mission(spec);
        const auto base = size_battery(spec, profile, spec.ewf, 0.0);
        for (double phi : {0.1, 0.25, 0.5, 0.9}) {
            const auto r = size_battery(spec, profile, spec.ewf, phi);
            REQUIRE(rel_diff(r.specific_power_W_per_kg * (1.0 - phi), base.specific_power_W_per_kg) < 1e-12);
        }
        const auto higher = size_battery(spec, profile, spec.ewf + 0.01, 0.3);
        const auto lower = size_battery(spec, profile, spec.ewf - 0.01, 0.3);
        REQUIRE(higher.specific_energy_Wh_per_kg > lower.specific_energy_Wh_per_kg);
        REQUIRE(higher.specific_power_W_per_kg > lower.specific_power_W_per_kg);
    }
}

TEST_CASE("sizing mission flies at best-range speed with reserve") {
    auto spec = sizing_spec();
    CHECK(max_range_speed_mph(spec) == spec.design_cruise_speed_mph);
    spec.drag_polar = DragPolar{0.025, 0.04, 12.0};
    const double rho = 1.190105684486101;
    const double v = std::sqrt(2.0 * spec.weight_N() / (rho * 12.0)) * std::pow(0.04 / 0.025, 0.25);
    CHECK(max_range_speed_mph(spec) == doctest::Approx(v / 0.44704).epsilon(1e-12));
    const auto p = build_sizing_mission(spec);
    CHECK(p.has_reserve());
    CHECK(p.range_mi == spec.design_range_mi);
    CHECK(p.cruise_speed_mph == doctest::Approx(v / 0.44704).epsilon(1e-12));
}

TEST_CASE("pack category labels are exact and case-sensitive") {
    CHECK(category_label(PackCategory::CurrentLiIon) == "Current Li-ion");
    CHECK(category_label(PackCategory::NovelPrototypeLiIon) == "Novel/prototype Li-ion");
    CHECK(category_label(PackCategory::Advanced) == "Advanced");
    CHECK(parse_category("Advanced") == PackCategory::Advanced);
    CHECK_FALSE(parse_category("current li-ion").has_value());
    CHECK_FALSE(parse_category("Current Li-ion ").has_value());
}

TEST_CASE("classify_feasibility synthetic datasets") {
    const std::vector<BatteryPackRecord> packs{
        {"A", PackCategory::CurrentLiIon, 250.0, 500.0},
        {"B", PackCategory::NovelPrototypeLiIon, 150.0, 2000.0},
    };
    BatteryRequirement req;
    req.specific_energy_Wh_per_kg = 200.0;
    req.specific_power_W_per_kg = 1000.0;
    auto report = classify_feasibility(req, packs);
    CHECK(report.dominating_packs.empty());
    for (const auto& v : report.verdicts) CHECK_FALSE(v.feasible);
    CHECK(report.verdict(PackCategory::CurrentLiIon).present);
    CHECK_FALSE(report.verdict(PackCategory::Advanced).present);

    req.specific_energy_Wh_per_kg = 140.0;
    req.specific_power_W_per_kg = 400.0;
    report = classify_feasibility(req, packs);
    CHECK(report.dominating_packs == std::vector<std::string>{"A", "B"});
    CHECK(report.verdict(PackCategory::CurrentLiIon).feasible);
    CHECK(report.verdict(PackCategory::NovelPrototypeLiIon).feasible);
    CHECK_FALSE(report.verdict(PackCategory::Advanced).feasible);

    req.specific_energy_Wh_per_kg = 1e-9;
    req.specific_power_W_per_kg = 1e-9;
    report = classify_feasibility(req, packs);
    for (const auto& v : report.verdicts) CHECK(v.feasible == v.present);

    CHECK_THROWS_AS(classify_feasibility(req, std::vector<BatteryPackRecord>{}), DataError);
}

TEST_CASE("classify_feasibility agrees with brute force, ties included") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> grid(1, 20);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<BatteryPackRecord> packs;
        const int n = 1 + trial % 60;
        for (int i = 0; i < n; ++i) {
            packs.push_back({"p" + std::to_string(i), kPackCategories[static_cast<std::size_t>(i % 3)],
                             25.0 * grid(rng), 250.0 * grid(rng)});
        }
        BatteryRequirement req;
        req.specific_energy_Wh_per_kg = 25.0 * grid(rng);
        req.specific_power_W_per_kg = 250.0 * grid(rng);
        const auto report = classify_feasibility(req, packs);
        REQUIRE(report.dominating_packs == testing::brute_force_dominators(req, packs));
        for (PackCategory c : kPackCategories) {
            const auto expected = testing::brute_force_dominators(req, packs, c);
            REQUIRE(report.verdict(c).feasible == !expected.empty());
            REQUIRE(report.verdict(c).dominating_packs == expected);
        }
    }
}
