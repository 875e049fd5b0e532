import math
from pathlib import Path

import pytest

import evtol

DATA = Path(__file__).resolve().parents[2] / "data"


def synthetic():
    s = evtol.AircraftSpec()
    s.name = "synthetic"
    s.propulsion = evtol.PropulsionKind.OpenRotor
    s.mtom_kg = 1000.0
    s.seats = 2
    s.disc_area_m2 = 20.0
    s.fom = 0.7
    s.eta_vertical = 0.85
    s.eta_fixed_wing = 0.9
    s.lod_cruise = 12.0
    s.design_range_mi = 100.0
    s.design_cruise_speed_mph = 100.0
    s.vertical_climb_rate_mps = 2.0
    s.hover_altitude_m = 15.0
    s.ewf = 0.5
    return s


def test_hover_power_hand_value():
    p = evtol.VerticalFlightParams()
    p.weight_N = 10000.0
    p.disc_area_m2 = 10.0
    p.fom = 1.0
    p.interference_factor = 1.0
    p.efficiency = 1.0
    p.density = 1.225
    assert evtol.vertical_power(evtol.PropulsionKind.OpenRotor, p) == pytest.approx(10000.0 * math.sqrt(1000.0 / 2.45))
    ratio = evtol.vertical_power(evtol.PropulsionKind.DuctedFan, p) / evtol.vertical_power(evtol.PropulsionKind.OpenRotor, p)
    assert ratio == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-12)


def test_sea_level_density():
    assert evtol.air_density(0.0) == pytest.approx(1.225)
    with pytest.raises(evtol.DomainError):
        evtol.air_density(20000.0)


def test_mission_matches_oracle():
    profile = evtol.build_mission(synthetic(), 50.0, 100.0, False)
    kinds = [s.kind for s in profile.segments]
    assert kinds[0] == evtol.SegmentKind.VerticalClimb
    assert kinds[-1] == evtol.SegmentKind.VerticalDescent
    assert profile.total_energy_Wh == pytest.approx(21556.38376, rel=1e-9)
    assert not profile.has_reserve
    assert evtol.energy_per_passenger_mile(synthetic(), 50.0, 100.0, 1) == pytest.approx(431.1276752, rel=1e-8)


def test_validation_error_names_field():
    s = synthetic()
    s.ewf = 1.2
    with pytest.raises(evtol.ValidationError, match="ewf"):
        evtol.validate_aircraft(s)
    with pytest.raises(evtol.EvtolError):
        evtol.build_mission(s, 50.0, 100.0, False)


def test_battery_sizing_and_feasibility():
    s = synthetic()
    profile = evtol.build_sizing_mission(s)
    base = evtol.size_battery(s, profile, 0.5, 0.0)
    failed = evtol.size_battery(s, profile, 0.5, 0.5)
    assert failed.specific_power_W_per_kg == 2.0 * base.specific_power_W_per_kg
    assert evtol.battery_mass(2000.0, 0.5, 200.0) == 800.0
    packs = [
        evtol.BatteryPackRecord("A", evtol.PackCategory.CurrentLiIon, 250.0, 500.0),
        evtol.BatteryPackRecord("B", evtol.PackCategory.NovelPrototypeLiIon, 150.0, 2000.0),
    ]
    req = evtol.BatteryRequirement()
    req.specific_energy_Wh_per_kg = 140.0
    req.specific_power_W_per_kg = 400.0
    report = evtol.classify_feasibility(req, packs)
    assert report.dominating_packs == ["A", "B"]
    assert not report.verdict(evtol.PackCategory.Advanced).feasible


def test_crossover():
    assert evtol.crossover_range([(10.0, 300.0), (20.0, 200.0)], 250.0) == pytest.approx(15.0)
    assert evtol.crossover_range([(10.0, 300.0), (20.0, 200.0)], 0.0) is None


def test_shipped_files_round_trip():
    doc = evtol.load_specs(str(DATA / "evtol_aircraft.spec"))
    assert doc.find_aircraft("Archer Maker").seats == 2
    assert evtol.parse_specs(evtol.serialize_specs(doc)) == doc
    packs = evtol.load_packs(str(DATA / "battery_packs.csv"))
    again = evtol.parse_packs(evtol.serialize_packs(packs))
    assert [p.name for p in again] == [p.name for p in packs]
    assert evtol.format_number(0.1) == "0.10000000000000001"
