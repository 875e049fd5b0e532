#include "evtol/dataio.hpp"

#include "evtol/errors.hpp"
#include "evtol/units.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace evtol {
namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    if (!lines.empty() && !lines.back().empty() && lines.back().back() == '\r') lines.back().remove_suffix(1);
    return lines;
}

constexpr std::string_view kWhitespace = " \t";

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(kWhitespace);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(kWhitespace);
    return s.substr(b, e - b + 1);
}

std::optional<double> parse_double(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::optional<long long> parse_integer(std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::string shortest(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string at_line(int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// --- spec document -----------------------------------------------------------

enum class SectionKind { TopLevel, Defaults, Aircraft, Vehicle };

struct Entry {
    std::string key;
    std::string value;
    int line = 0;
    int value_column = 0;
};

struct RawSection {
    SectionKind kind = SectionKind::TopLevel;
    std::string name;
    int line = 0;
    std::vector<Entry> entries;
};

const std::set<std::string, std::less<>> kAircraftKeys = {
    "propulsion",          "mtom_kg",          "seats",
    "payload_per_seat_kg", "disc_area_m2",     "fom",
    "interference_factor", "eta_vertical",     "eta_fixed_wing",
    "lod_climb",           "lod_cruise",       "lod_descent",
    "drag_cd0",            "drag_k",           "wing_area_m2",
    "design_range_mi",     "design_range_nmi", "design_cruise_speed_mph",
    "vertical_climb_rate_mps", "hover_altitude_m", "cruise_altitude_m",
    "wing_climb_rate_mps", "hover_time_s",     "ewf",
};

const std::set<std::string, std::less<>> kVehicleKeys = {
    "kind", "road_consumption_Wh_per_mi", "circuity", "occupancy", "max_occupancy",
};

const std::set<std::string, std::less<>> kDefaultsKeys = {
    "payload_per_seat_kg", "hover_altitude_m",    "cruise_altitude_m",   "vertical_climb_rate_mps",
    "wing_climb_rate_mps", "hover_time_s",        "interference_factor",
};

const std::set<std::string, std::less<>> kTopLevelKeys = {"format_version"};

const std::set<std::string, std::less<>>& keys_for(SectionKind kind) {
    switch (kind) {
    case SectionKind::TopLevel: return kTopLevelKeys;
    case SectionKind::Defaults: return kDefaultsKeys;
    case SectionKind::Aircraft: return kAircraftKeys;
    case SectionKind::Vehicle: return kVehicleKeys;
    }
    return kTopLevelKeys;
}

RawSection parse_section_header(std::string_view line, int line_no) {
    // line is trimmed and bracketed
    std::string_view inner = trim(line.substr(1, line.size() - 2));
    RawSection sec;
    sec.line = line_no;
    if (inner == "defaults") {
        sec.kind = SectionKind::Defaults;
        return sec;
    }
    const auto space = inner.find_first_of(kWhitespace);
    const std::string_view word = inner.substr(0, space);
    if (word == "aircraft") {
        sec.kind = SectionKind::Aircraft;
    } else if (word == "vehicle") {
        sec.kind = SectionKind::Vehicle;
    } else {
        throw ParseError(line_no, 1, "unknown section '[" + std::string(inner) + "]' at " + at_line(line_no, 1));
    }
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(inner.substr(space));
    if (rest.size() < 3 || rest.front() != '"' || rest.back() != '"' ||
        rest.substr(1, rest.size() - 2).find('"') != std::string_view::npos) {
        throw ParseError(line_no, 1,
                         "section '" + std::string(word) + "' needs a quoted, non-empty name at " +
                             at_line(line_no, 1));
    }
    sec.name = std::string(rest.substr(1, rest.size() - 2));
    return sec;
}

std::vector<RawSection> tokenize(std::string_view text) {
    std::vector<RawSection> sections(1);
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string_view raw = lines[i];
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError(line_no, static_cast<int>(raw.size()),
                                 "unterminated section header at " + at_line(line_no, static_cast<int>(raw.size())));
            }
            sections.push_back(parse_section_header(line, line_no));
            continue;
        }
        const auto eq = raw.find('=');
        const int key_col = static_cast<int>(raw.find_first_not_of(kWhitespace)) + 1;
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, key_col, "expected 'key = value' at " + at_line(line_no, key_col));
        }
        const std::string key(trim(raw.substr(0, eq)));
        const std::string_view value_part = raw.substr(eq + 1);
        const std::string_view value = trim(value_part);
        const auto value_offset = value_part.find_first_not_of(kWhitespace);
        const int value_col =
            static_cast<int>(eq) + 2 + static_cast<int>(value_offset == std::string_view::npos ? 0 : value_offset);
        if (key.empty()) throw ParseError(line_no, key_col, "missing key at " + at_line(line_no, key_col));
        if (value.empty()) {
            throw ParseError(line_no, value_col, "missing value for '" + key + "' at " + at_line(line_no, value_col));
        }
        auto& sec = sections.back();
        if (!keys_for(sec.kind).contains(key)) {
            throw ParseError(line_no, key_col, "unknown key '" + key + "' at " + at_line(line_no, key_col));
        }
        for (const auto& e : sec.entries) {
            if (e.key == key) {
                throw ParseError(line_no, key_col,
                                 "duplicate key '" + key + "' at " + at_line(line_no, key_col) +
                                     " (first set at line " + std::to_string(e.line) + ")");
            }
        }
        sec.entries.push_back({key, std::string(value), line_no, value_col});
    }
    return sections;
}

class EntryReader {
public:
    explicit EntryReader(const RawSection& sec) : sec_(sec) {}

    const Entry* find(std::string_view key) const {
        for (const auto& e : sec_.entries) {
            if (e.key == key) return &e;
        }
        return nullptr;
    }

    std::optional<double> number(std::string_view key) const {
        const Entry* e = find(key);
        if (!e) return std::nullopt;
        auto v = parse_double(e->value);
        if (!v || !std::isfinite(*v)) {
            throw ParseError(e->line, e->value_column,
                             "'" + e->key + "' expects a finite number, got '" + e->value + "' at " +
                                 at_line(e->line, e->value_column));
        }
        return v;
    }

    std::optional<long long> integer(std::string_view key) const {
        const Entry* e = find(key);
        if (!e) return std::nullopt;
        auto v = parse_integer(e->value);
        if (!v) {
            throw ParseError(e->line, e->value_column,
                             "'" + e->key + "' expects an integer, got '" + e->value + "' at " +
                                 at_line(e->line, e->value_column));
        }
        return v;
    }

    [[noreturn]] void missing(std::string_view key) const {
        throw ValidationError(std::string(key), section_label() + ": missing required field '" + std::string(key) +
                                                    "' (section at line " + std::to_string(sec_.line) + ")");
    }

    template <typename T>
    T required(std::optional<T> v, std::string_view key) const {
        if (!v) missing(key);
        return *v;
    }

    std::string section_label() const {
        switch (sec_.kind) {
        case SectionKind::Aircraft: return "aircraft '" + sec_.name + "'";
        case SectionKind::Vehicle: return "vehicle '" + sec_.name + "'";
        case SectionKind::Defaults: return "[defaults]";
        case SectionKind::TopLevel: return "document";
        }
        return "document";
    }

private:
    const RawSection& sec_;
};

SpecDefaults build_defaults(const RawSection& sec) {
    EntryReader r(sec);
    SpecDefaults d;
    d.payload_per_seat_kg = r.number("payload_per_seat_kg");
    d.hover_altitude_m = r.number("hover_altitude_m");
    d.cruise_altitude_m = r.number("cruise_altitude_m");
    d.vertical_climb_rate_mps = r.number("vertical_climb_rate_mps");
    d.wing_climb_rate_mps = r.number("wing_climb_rate_mps");
    d.hover_time_s = r.number("hover_time_s");
    d.interference_factor = r.number("interference_factor");
    return d;
}

AircraftSpec build_aircraft(const RawSection& sec, const SpecDefaults& defaults) {
    EntryReader r(sec);
    AircraftSpec a;
    a.name = sec.name;

    const Entry* prop = r.find("propulsion");
    if (!prop) r.missing("propulsion");
    if (prop->value == "open_rotor") {
        a.propulsion = PropulsionKind::OpenRotor;
    } else if (prop->value == "ducted_fan") {
        a.propulsion = PropulsionKind::DuctedFan;
    } else {
        throw ParseError(prop->line, prop->value_column,
                         "'propulsion' must be open_rotor or ducted_fan, got '" + prop->value + "' at " +
                             at_line(prop->line, prop->value_column));
    }

    auto or_default = [](std::optional<double> own, std::optional<double> section, std::optional<double> builtin) {
        return own ? own : (section ? section : builtin);
    };

    a.mtom_kg = r.required(r.number("mtom_kg"), "mtom_kg");
    const long long seats = r.required(r.integer("seats"), "seats");
    if (seats < 1 || seats > 10000) {
        throw ValidationError("seats", r.section_label() + ": field 'seats' must be >= 1");
    }
    a.seats = static_cast<int>(seats);
    a.payload_per_seat_kg = *or_default(r.number("payload_per_seat_kg"), defaults.payload_per_seat_kg,
                                        kDefaultPayloadPerSeatKg);
    a.disc_area_m2 = r.required(r.number("disc_area_m2"), "disc_area_m2");
    a.fom = r.required(r.number("fom"), "fom");
    a.interference_factor = *or_default(r.number("interference_factor"), defaults.interference_factor,
                                        kDefaultInterferenceFactor);
    a.eta_vertical = r.required(r.number("eta_vertical"), "eta_vertical");
    a.eta_fixed_wing = r.required(r.number("eta_fixed_wing"), "eta_fixed_wing");
    a.lod_climb = r.number("lod_climb");
    a.lod_cruise = r.number("lod_cruise");
    a.lod_descent = r.number("lod_descent");

    const auto cd0 = r.number("drag_cd0");
    const auto k = r.number("drag_k");
    const auto wing = r.number("wing_area_m2");
    if (cd0 || k || wing) {
        a.drag_polar = DragPolar{r.required(cd0, "drag_cd0"), r.required(k, "drag_k"),
                                 r.required(wing, "wing_area_m2")};
    }

    const auto range_mi = r.number("design_range_mi");
    const auto range_nmi = r.number("design_range_nmi");
    if (range_mi && range_nmi) {
        throw ValidationError("design_range_mi",
                              r.section_label() + ": give design_range_mi or design_range_nmi, not both");
    }
    a.design_range_mi = range_nmi ? units::nautical_miles_to_miles(*range_nmi)
                                  : r.required(range_mi, "design_range_mi");
    a.design_cruise_speed_mph = r.required(r.number("design_cruise_speed_mph"), "design_cruise_speed_mph");
    a.vertical_climb_rate_mps = r.required(
        or_default(r.number("vertical_climb_rate_mps"), defaults.vertical_climb_rate_mps, std::nullopt),
        "vertical_climb_rate_mps");
    a.hover_altitude_m =
        r.required(or_default(r.number("hover_altitude_m"), defaults.hover_altitude_m, std::nullopt),
                   "hover_altitude_m");
    a.cruise_altitude_m =
        *or_default(r.number("cruise_altitude_m"), defaults.cruise_altitude_m, kDefaultCruiseAltitudeM);
    a.wing_climb_rate_mps =
        *or_default(r.number("wing_climb_rate_mps"), defaults.wing_climb_rate_mps, kDefaultWingClimbRateMps);
    a.hover_time_s = *or_default(r.number("hover_time_s"), defaults.hover_time_s, 0.0);
    a.ewf = r.required(r.number("ewf"), "ewf");

    validate(a);
    return a;
}

TerrestrialVehicle build_vehicle(const RawSection& sec) {
    EntryReader r(sec);
    TerrestrialVehicle v;
    v.name = sec.name;
    const Entry* kind = r.find("kind");
    if (!kind) r.missing("kind");
    if (kind->value == "EV") {
        v.kind = VehicleKind::EV;
    } else if (kind->value == "ICEV") {
        v.kind = VehicleKind::ICEV;
    } else {
        throw ParseError(kind->line, kind->value_column,
                         "'kind' must be EV or ICEV, got '" + kind->value + "' at " +
                             at_line(kind->line, kind->value_column));
    }
    v.road_consumption_Wh_per_mi = r.required(r.number("road_consumption_Wh_per_mi"), "road_consumption_Wh_per_mi");
    v.circuity = r.number("circuity").value_or(kUsAverageCircuity);
    v.occupancy = r.number("occupancy").value_or(kUsAverageOccupancy);
    const long long max_occ = r.required(r.integer("max_occupancy"), "max_occupancy");
    if (max_occ < 1 || max_occ > 10000) {
        throw ValidationError("max_occupancy", r.section_label() + ": field 'max_occupancy' must be >= 1");
    }
    v.max_occupancy = static_cast<int>(max_occ);
    validate(v);
    return v;
}

void require_unique(const std::vector<std::string>& names, const char* what) {
    std::set<std::string, std::less<>> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) {
            throw ValidationError("name", std::string("duplicate ") + what + " name '" + n + "'");
        }
    }
}

void put(std::ostringstream& out, std::string_view key, double v) { out << key << " = " << shortest(v) << '\n'; }

void check_section_name(const std::string& name) {
    if (name.empty() || name.find_first_of("\"\r\n") != std::string::npos) {
        throw DataError("name '" + name + "' cannot be written to a spec file (empty or contains '\"' or newline)");
    }
}

// --- delimited text ------------------------------------------------------------

std::vector<std::string> split_record(std::string_view line, char delimiter, int line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty() && !was_quoted) {
            quoted = true;
            was_quoted = true;
        } else if (c == delimiter) {
            fields.push_back(std::move(cur));
            cur.clear();
            was_quoted = false;
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) {
        throw ParseError(line_no, static_cast<int>(line.size()), "unterminated quoted field on line " +
                                                                     std::to_string(line_no));
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string quote_if_needed(const std::string& s, char delimiter) {
    if (s.find_first_of(std::string{delimiter, '"', '\n', '\r'}) == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

// --- spec document -----------------------------------------------------------

const AircraftSpec* SpecDocument::find_aircraft(std::string_view name) const {
    for (const auto& a : aircraft) {
        if (a.name == name) return &a;
    }
    return nullptr;
}

SpecDocument parse_specs(std::string_view text) {
    const auto sections = tokenize(text);

    SpecDocument doc;
    EntryReader top(sections.front());
    const long long version = top.required(top.integer("format_version"), "format_version");
    if (version != kSpecFormatVersion) {
        throw ValidationError("format_version", "unsupported format_version " + std::to_string(version) +
                                                    " (expected " + std::to_string(kSpecFormatVersion) + ")");
    }
    doc.format_version = static_cast<int>(version);

    int defaults_seen = 0;
    for (const auto& sec : sections) {
        if (sec.kind != SectionKind::Defaults) continue;
        if (++defaults_seen > 1) {
            throw ParseError(sec.line, 1, "second [defaults] section at " + at_line(sec.line, 1));
        }
        doc.defaults = build_defaults(sec);
    }

    std::vector<std::string> aircraft_names;
    std::vector<std::string> vehicle_names;
    for (const auto& sec : sections) {
        if (sec.kind == SectionKind::Aircraft) aircraft_names.push_back(sec.name);
        if (sec.kind == SectionKind::Vehicle) vehicle_names.push_back(sec.name);
    }
    require_unique(aircraft_names, "aircraft");
    require_unique(vehicle_names, "vehicle");

    for (const auto& sec : sections) {
        if (sec.kind == SectionKind::Aircraft) doc.aircraft.push_back(build_aircraft(sec, doc.defaults));
        if (sec.kind == SectionKind::Vehicle) doc.vehicles.push_back(build_vehicle(sec));
    }
    return doc;
}

SpecDocument load_specs(const std::filesystem::path& path) { return parse_specs(read_file(path)); }

std::string serialize_specs(const SpecDocument& doc) {
    std::ostringstream out;
    out << "format_version = " << doc.format_version << '\n';

    const auto& d = doc.defaults;
    std::ostringstream defaults;
    auto put_opt = [&defaults](std::string_view key, const std::optional<double>& v) {
        if (v) put(defaults, key, *v);
    };
    put_opt("payload_per_seat_kg", d.payload_per_seat_kg);
    put_opt("hover_altitude_m", d.hover_altitude_m);
    put_opt("cruise_altitude_m", d.cruise_altitude_m);
    put_opt("vertical_climb_rate_mps", d.vertical_climb_rate_mps);
    put_opt("wing_climb_rate_mps", d.wing_climb_rate_mps);
    put_opt("hover_time_s", d.hover_time_s);
    put_opt("interference_factor", d.interference_factor);
    if (!defaults.str().empty()) out << "\n[defaults]\n" << defaults.str();

    for (const auto& a : doc.aircraft) {
        check_section_name(a.name);
        out << "\n[aircraft \"" << a.name << "\"]\n";
        out << "propulsion = " << to_string(a.propulsion) << '\n';
        put(out, "mtom_kg", a.mtom_kg);
        out << "seats = " << a.seats << '\n';
        put(out, "payload_per_seat_kg", a.payload_per_seat_kg);
        put(out, "disc_area_m2", a.disc_area_m2);
        put(out, "fom", a.fom);
        put(out, "interference_factor", a.interference_factor);
        put(out, "eta_vertical", a.eta_vertical);
        put(out, "eta_fixed_wing", a.eta_fixed_wing);
        if (a.lod_climb) put(out, "lod_climb", *a.lod_climb);
        if (a.lod_cruise) put(out, "lod_cruise", *a.lod_cruise);
        if (a.lod_descent) put(out, "lod_descent", *a.lod_descent);
        if (a.drag_polar) {
            put(out, "drag_cd0", a.drag_polar->zero_lift_drag_coeff);
            put(out, "drag_k", a.drag_polar->induced_factor);
            put(out, "wing_area_m2", a.drag_polar->wing_area_m2);
        }
        put(out, "design_range_mi", a.design_range_mi);
        put(out, "design_cruise_speed_mph", a.design_cruise_speed_mph);
        put(out, "vertical_climb_rate_mps", a.vertical_climb_rate_mps);
        put(out, "hover_altitude_m", a.hover_altitude_m);
        put(out, "cruise_altitude_m", a.cruise_altitude_m);
        put(out, "wing_climb_rate_mps", a.wing_climb_rate_mps);
        put(out, "hover_time_s", a.hover_time_s);
        put(out, "ewf", a.ewf);
    }
    for (const auto& v : doc.vehicles) {
        check_section_name(v.name);
        out << "\n[vehicle \"" << v.name << "\"]\n";
        out << "kind = " << to_string(v.kind) << '\n';
        put(out, "road_consumption_Wh_per_mi", v.road_consumption_Wh_per_mi);
        put(out, "circuity", v.circuity);
        put(out, "occupancy", v.occupancy);
        out << "max_occupancy = " << v.max_occupancy << '\n';
    }
    return out.str();
}

void save_specs(const SpecDocument& doc, const std::filesystem::path& path) {
    write_file(path, serialize_specs(doc));
}

// --- packs ---------------------------------------------------------------------

std::vector<BatteryPackRecord> parse_packs(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front() != kPackHeader) {
        throw DataError("battery pack file must start with the header '" + std::string(kPackHeader) + "'");
    }
    std::vector<BatteryPackRecord> packs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const int row_no = static_cast<int>(i);
        if (trim(lines[i]).empty()) continue;
        const auto fields = split_record(lines[i], ',', line_no);
        const std::string where = "data row " + std::to_string(row_no) + " (line " + std::to_string(line_no) + ")";
        if (fields.size() != 4) {
            throw DataError(where + ": expected 4 fields, got " + std::to_string(fields.size()));
        }
        BatteryPackRecord rec;
        rec.name = fields[0];
        if (rec.name.empty()) throw DataError(where + ": empty pack name");
        const auto category = parse_category(fields[1]);
        if (!category) {
            throw DataError(where + ": unknown category \"" + fields[1] +
                            "\" (expected \"Current Li-ion\", \"Novel/prototype Li-ion\" or \"Advanced\")");
        }
        rec.category = *category;
        const auto se = parse_double(trim(fields[2]));
        const auto sp = parse_double(trim(fields[3]));
        if (!se || !std::isfinite(*se) || *se <= 0.0) {
            throw DataError(where + ": specific_energy_Wh_per_kg must be a positive number, got '" + fields[2] + "'");
        }
        if (!sp || !std::isfinite(*sp) || *sp <= 0.0) {
            throw DataError(where + ": specific_power_W_per_kg must be a positive number, got '" + fields[3] + "'");
        }
        rec.specific_energy_Wh_per_kg = *se;
        rec.specific_power_W_per_kg = *sp;
        packs.push_back(std::move(rec));
    }
    return packs;
}

std::vector<BatteryPackRecord> load_packs(const std::filesystem::path& path) { return parse_packs(read_file(path)); }

std::string serialize_packs(std::span<const BatteryPackRecord> packs) {
    std::string out(kPackHeader);
    out.push_back('\n');
    for (const auto& p : packs) {
        out += quote_if_needed(p.name, ',');
        out.push_back(',');
        out += category_label(p.category);
        out.push_back(',');
        out += shortest(p.specific_energy_Wh_per_kg);
        out.push_back(',');
        out += shortest(p.specific_power_W_per_kg);
        out.push_back('\n');
    }
    return out;
}

// --- tables --------------------------------------------------------------------

void ResultTable::add_column(std::string name, std::string unit, ColumnType type) {
    columns.push_back({std::move(name), std::move(unit), type});
}

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw DataError("row has " + std::to_string(row.size()) + " cells but the table has " +
                        std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::size_t ResultTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i].name == name) return i;
    }
    throw DataError("no column named '" + std::string(name) + "'");
}

void validate(const ResultTable& table) {
    for (const auto& c : table.columns) {
        if (c.unit.empty()) throw DataError("column '" + c.name + "' has an empty unit");
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != table.columns.size()) {
            throw DataError("row " + std::to_string(r) + " does not have every column");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto& col = table.columns[c];
            if (const double* v = std::get_if<double>(&row[c])) {
                if (col.type != ColumnType::Numeric) {
                    throw DataError("numeric cell in identifier column '" + col.name + "'");
                }
                if (!std::isfinite(*v)) {
                    throw DataError("non-finite value in column '" + col.name + "', row " + std::to_string(r));
                }
            } else if (std::holds_alternative<std::string>(row[c]) && col.type != ColumnType::Identifier) {
                throw DataError("text cell in numeric column '" + col.name + "'");
            }
        }
    }
}

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, end);
}

std::string format_table(const ResultTable& table, char delimiter) {
    validate(table);
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out.push_back(delimiter);
        out += quote_if_needed(table.columns[c].name + "(" + table.columns[c].unit + ")", delimiter);
    }
    out.push_back('\n');
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out.push_back(delimiter);
            if (const double* v = std::get_if<double>(&row[c])) {
                out += format_number(*v);
            } else if (const std::string* s = std::get_if<std::string>(&row[c])) {
                out += quote_if_needed(*s, delimiter);
            }
        }
        out.push_back('\n');
    }
    return out;
}

void write_table(const ResultTable& table, const std::filesystem::path& path, char delimiter) {
    write_file(path, format_table(table, delimiter));
}

ResultTable parse_table(std::string_view text, char delimiter) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "table has no header row");
    ResultTable table;
    for (const auto& cell : split_record(lines.front(), delimiter, 1)) {
        const auto open = cell.rfind('(');
        if (open == std::string::npos || cell.size() < open + 3 || cell.back() != ')') {
            throw ParseError(1, 1, "header cell '" + cell + "' is not of the form name(unit)");
        }
        std::string unit = cell.substr(open + 1, cell.size() - open - 2);
        const ColumnType type = unit == kIdentifierUnit ? ColumnType::Identifier : ColumnType::Numeric;
        table.add_column(cell.substr(0, open), std::move(unit), type);
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        auto fields = split_record(lines[i], delimiter, line_no);
        if (fields.size() != table.columns.size()) {
            throw ParseError(line_no, 1, "line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                                             " cells, expected " + std::to_string(table.columns.size()));
        }
        std::vector<Cell> row;
        row.reserve(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (fields[c].empty()) {
                row.emplace_back(std::monostate{});
            } else if (table.columns[c].type == ColumnType::Identifier) {
                row.emplace_back(std::move(fields[c]));
            } else {
                const auto v = parse_double(fields[c]);
                if (!v) {
                    throw ParseError(line_no, static_cast<int>(c) + 1,
                                     "non-numeric cell '" + fields[c] + "' in column '" + table.columns[c].name +
                                         "' at line " + std::to_string(line_no));
                }
                row.emplace_back(*v);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace evtol
