#include "eventf/spacetime.hpp"
#include "eventf/error.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace eventf {

namespace {

[[noreturn]] void bad_literal(std::string_view what, std::string_view text) {
    throw Error(Errc::InvalidLiteral, std::string(what) + " '" + std::string(text) + "'");
}

// Reads exactly `width` digits at `pos`.
bool read_digits(std::string_view s, std::size_t pos, std::size_t width, int& out) {
    if (pos + width > s.size()) return false;
    int v = 0;
    for (std::size_t i = 0; i < width; ++i) {
        char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

int sign(std::int64_t a, std::int64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

struct SignPattern {
    // start-start, start-end, end-start, end-end
    std::array<int, 4> cmp;
    AllenRelation relation;
};

constexpr std::array<SignPattern, 13> kPatterns = {{
    {{-1, -1, -1, -1}, AllenRelation::before},
    {{-1, -1, 0, -1}, AllenRelation::meets},
    {{-1, -1, 1, -1}, AllenRelation::overlaps},
    {{0, -1, 1, -1}, AllenRelation::starts},
    {{1, -1, 1, -1}, AllenRelation::during},
    {{1, -1, 1, 0}, AllenRelation::finishes},
    {{0, -1, 1, 0}, AllenRelation::equals},
    {{1, 1, 1, 1}, AllenRelation::after},
    {{1, 0, 1, 1}, AllenRelation::met_by},
    {{1, -1, 1, 1}, AllenRelation::overlapped_by},
    {{0, -1, 1, 1}, AllenRelation::started_by},
    {{-1, -1, 1, 1}, AllenRelation::contains},
    {{-1, -1, 1, 0}, AllenRelation::finished_by},
}};

constexpr std::array<std::string_view, 13> kAllenNames = {
    "before", "meets", "overlaps", "starts", "during", "finishes", "equals",
    "after", "metBy", "overlappedBy", "startedBy", "contains", "finishedBy",
};

double parse_number(std::string_view text, std::string_view whole) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        bad_literal("malformed coordinate in box", whole);
    }
    return v;
}

std::string format_number(double v) {
    if (v == 0) v = 0; // folds -0
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

} // namespace

Instant parse_instant(std::string_view s) {
    int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0, millis = 0;
    if (!read_digits(s, 0, 4, year) || s.size() < 10 || s[4] != '-' || !read_digits(s, 5, 2, month) ||
        s[7] != '-' || !read_digits(s, 8, 2, day)) {
        bad_literal("malformed instant", s);
    }
    std::size_t pos = 10;
    if (pos < s.size()) {
        if (s[pos] != 'T' || !read_digits(s, pos + 1, 2, hour) || pos + 3 >= s.size() ||
            s[pos + 3] != ':' || !read_digits(s, pos + 4, 2, minute)) {
            bad_literal("malformed instant", s);
        }
        pos += 6;
        if (pos < s.size() && s[pos] == ':') {
            if (!read_digits(s, pos + 1, 2, second)) bad_literal("malformed instant", s);
            pos += 3;
            if (pos < s.size() && s[pos] == '.') {
                if (!read_digits(s, pos + 1, 3, millis)) bad_literal("malformed instant", s);
                pos += 4;
            }
        }
        if (pos + 1 != s.size() || s[pos] != 'Z') bad_literal("instant must end in Z", s);
    }
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                       std::chrono::day{static_cast<unsigned>(day)}};
    if (!ymd.ok() || hour > 23 || minute > 59 || second > 59) bad_literal("instant out of range", s);
    auto days = sys_days{ymd}.time_since_epoch().count();
    std::int64_t ms = ((static_cast<std::int64_t>(days) * 24 + hour) * 60 + minute) * 60 + second;
    return Instant{ms * 1000 + millis};
}

std::string format_instant(Instant t) {
    using namespace std::chrono;
    constexpr std::int64_t kDayMs = 86'400'000;
    std::int64_t days = t.ms / kDayMs;
    std::int64_t rem = t.ms % kDayMs;
    if (rem < 0) {
        rem += kDayMs;
        --days;
    }
    year_month_day ymd{sys_days{std::chrono::days{days}}};
    int hour = static_cast<int>(rem / 3'600'000);
    int minute = static_cast<int>(rem / 60'000 % 60);
    int second = static_cast<int>(rem / 1000 % 60);
    int millis = static_cast<int>(rem % 1000);
    char buf[40];
    if (millis != 0) {
        std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ", static_cast<int>(ymd.year()),
                      static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), hour, minute,
                      second, millis);
    } else {
        std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                      static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), hour, minute,
                      second);
    }
    return buf;
}

TimeInterval TimeInterval::make(Instant start, Instant end) {
    if (end < start) {
        throw Error(Errc::InvalidInterval, "interval ends before it starts: " + format_instant(start) + "/" +
                                               format_instant(end));
    }
    return TimeInterval{start, end};
}

TimeInterval parse_time_interval(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) bad_literal("time interval needs start/end", text);
    return TimeInterval::make(parse_instant(text.substr(0, slash)), parse_instant(text.substr(slash + 1)));
}

std::string format_time_interval(const TimeInterval& t) {
    return format_instant(t.start) + "/" + format_instant(t.end);
}

bool intervals_intersect(const TimeInterval& a, const TimeInterval& b) noexcept {
    return a.start <= b.end && b.start <= a.end;
}

GeoBox GeoBox::make(double min_lat, double min_lon, double max_lat, double max_lon) {
    auto in = [](double v, double lim) { return std::isfinite(v) && v >= -lim && v <= lim; };
    if (!in(min_lat, 90) || !in(max_lat, 90) || !in(min_lon, 180) || !in(max_lon, 180)) {
        throw Error(Errc::InvalidBox, "box coordinates out of range");
    }
    if (min_lat > max_lat || min_lon > max_lon) {
        throw Error(Errc::InvalidBox, "box minimum exceeds maximum");
    }
    return GeoBox{min_lat, min_lon, max_lat, max_lon};
}

GeoBox parse_geo_box(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) bad_literal("box needs min;max corners", text);
    auto corner = [&](std::string_view c, double& lat, double& lon) {
        auto comma = c.find(',');
        if (comma == std::string_view::npos) bad_literal("box corner needs lat,lon", text);
        lat = parse_number(c.substr(0, comma), text);
        lon = parse_number(c.substr(comma + 1), text);
    };
    double a = 0, b = 0, c = 0, d = 0;
    corner(text.substr(0, semi), a, b);
    corner(text.substr(semi + 1), c, d);
    return GeoBox::make(a, b, c, d);
}

std::string format_geo_box(const GeoBox& b) {
    return format_number(b.min_lat) + "," + format_number(b.min_lon) + ";" + format_number(b.max_lat) + "," +
           format_number(b.max_lon);
}

bool box_contains(const GeoBox& outer, const GeoBox& inner) noexcept {
    return outer.min_lat <= inner.min_lat && inner.max_lat <= outer.max_lat && outer.min_lon <= inner.min_lon &&
           inner.max_lon <= outer.max_lon;
}

Trajectory Trajectory::make(std::vector<TrajectoryLeg> legs) {
    if (legs.empty()) throw Error(Errc::InvalidTrajectory, "trajectory has no legs");
    for (std::size_t i = 1; i < legs.size(); ++i) {
        if (!(legs[i - 1].interval.end < legs[i].interval.start)) {
            throw Error(Errc::InvalidTrajectory, "trajectory legs overlap or are out of order");
        }
    }
    return Trajectory{std::move(legs)};
}

Trajectory parse_trajectory(std::string_view text) {
    std::vector<TrajectoryLeg> legs;
    std::size_t pos = 0;
    while (true) {
        auto bar = text.find('|', pos);
        auto leg = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
        auto at = leg.find('@');
        if (at == std::string_view::npos) bad_literal("trajectory leg needs interval@box", text);
        legs.push_back({parse_time_interval(leg.substr(0, at)), parse_geo_box(leg.substr(at + 1))});
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    return Trajectory::make(std::move(legs));
}

std::string format_trajectory(const Trajectory& t) {
    std::string out;
    for (const auto& leg : t.legs) {
        if (!out.empty()) out += '|';
        out += format_time_interval(leg.interval);
        out += '@';
        out += format_geo_box(leg.box);
    }
    return out;
}

std::string_view allen_name(AllenRelation r) noexcept { return kAllenNames[static_cast<std::size_t>(r)]; }

std::optional<AllenRelation> parse_allen_relation(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kAllenNames.size(); ++i) {
        if (kAllenNames[i] == name) return static_cast<AllenRelation>(i);
    }
    return std::nullopt;
}

AllenRelation inverse(AllenRelation r) noexcept {
    switch (r) {
    case AllenRelation::before: return AllenRelation::after;
    case AllenRelation::meets: return AllenRelation::met_by;
    case AllenRelation::overlaps: return AllenRelation::overlapped_by;
    case AllenRelation::starts: return AllenRelation::started_by;
    case AllenRelation::during: return AllenRelation::contains;
    case AllenRelation::finishes: return AllenRelation::finished_by;
    case AllenRelation::equals: return AllenRelation::equals;
    case AllenRelation::after: return AllenRelation::before;
    case AllenRelation::met_by: return AllenRelation::meets;
    case AllenRelation::overlapped_by: return AllenRelation::overlaps;
    case AllenRelation::started_by: return AllenRelation::starts;
    case AllenRelation::contains: return AllenRelation::during;
    case AllenRelation::finished_by: return AllenRelation::finishes;
    }
    return r;
}

AllenRelation allen_relation(const TimeInterval& a, const TimeInterval& b) {
    std::array<int, 4> cmp = {sign(a.start.ms, b.start.ms), sign(a.start.ms, b.end.ms),
                              sign(a.end.ms, b.start.ms), sign(a.end.ms, b.end.ms)};
    for (const auto& p : kPatterns) {
        if (p.cmp == cmp) return p.relation;
    }
    throw Error(Errc::DegenerateInterval, "no Allen relation between " + format_time_interval(a) + " and " +
                                              format_time_interval(b));
}

} // namespace eventf
