#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eventf {

/// UTC instant with millisecond precision.
struct Instant {
    std::int64_t ms = 0;
    auto operator<=>(const Instant&) const = default;
};

/// Accepts `YYYY-MM-DD`, `YYYY-MM-DDTHH:MM[:SS[.mmm]]Z`. Malformed text
/// throws InvalidLiteral, as do the other lexical parsers below.
Instant parse_instant(std::string_view text);
/// Canonical form `YYYY-MM-DDTHH:MM:SSZ`, with `.mmm` only when non-zero.
std::string format_instant(Instant t);

struct TimeInterval {
    Instant start;
    Instant end;

    /// Throws InvalidInterval when start > end.
    static TimeInterval make(Instant start, Instant end);
    static TimeInterval make(std::int64_t start_ms, std::int64_t end_ms) {
        return make(Instant{start_ms}, Instant{end_ms});
    }
    bool degenerate() const noexcept { return start == end; }

    bool operator==(const TimeInterval&) const = default;
};

/// `start/end` with both ends ISO-8601.
TimeInterval parse_time_interval(std::string_view text);
std::string format_time_interval(const TimeInterval& t);

/// Closed intervals share at least one instant.
bool intervals_intersect(const TimeInterval& a, const TimeInterval& b) noexcept;

/// Flat latitude/longitude rectangle, closed bounds, no antimeridian wrap.
struct GeoBox {
    double min_lat = 0;
    double min_lon = 0;
    double max_lat = 0;
    double max_lon = 0;

    /// Throws InvalidBox on out-of-range or inverted bounds.
    static GeoBox make(double min_lat, double min_lon, double max_lat, double max_lon);

    bool operator==(const GeoBox&) const = default;
};

/// `lat,lon;lat,lon` (min corner; max corner).
GeoBox parse_geo_box(std::string_view text);
std::string format_geo_box(const GeoBox& b);

bool box_contains(const GeoBox& outer, const GeoBox& inner) noexcept;

struct TrajectoryLeg {
    TimeInterval interval;
    GeoBox box;
    bool operator==(const TrajectoryLeg&) const = default;
};

struct Trajectory {
    std::vector<TrajectoryLeg> legs;

    /// Legs must be non-empty, ascending by start and pairwise disjoint.
    static Trajectory make(std::vector<TrajectoryLeg> legs);

    bool operator==(const Trajectory&) const = default;
};

/// `|`-joined `interval@box` legs.
Trajectory parse_trajectory(std::string_view text);
std::string format_trajectory(const Trajectory& t);

using RegionValue = std::variant<TimeInterval, GeoBox, Trajectory>;

enum class AllenRelation : std::uint8_t {
    before,
    meets,
    overlaps,
    starts,
    during,
    finishes,
    equals,
    after,
    met_by,
    overlapped_by,
    started_by,
    contains,
    finished_by,
};

inline constexpr AllenRelation kAllAllenRelations[] = {
    AllenRelation::before,        AllenRelation::meets,      AllenRelation::overlaps,
    AllenRelation::starts,        AllenRelation::during,     AllenRelation::finishes,
    AllenRelation::equals,        AllenRelation::after,      AllenRelation::met_by,
    AllenRelation::overlapped_by, AllenRelation::started_by, AllenRelation::contains,
    AllenRelation::finished_by,
};

/// Lexical names: before, meets, ..., metBy, overlappedBy, startedBy, contains, finishedBy.
std::string_view allen_name(AllenRelation r) noexcept;
std::optional<AllenRelation> parse_allen_relation(std::string_view name) noexcept;
AllenRelation inverse(AllenRelation r) noexcept;

/// The relation holding between `a` and `b` (in that argument order).
///
/// Point intervals are classified with the same endpoint comparisons as
/// proper ones; when the resulting sign pattern is not one of the thirteen
/// proper-interval patterns, DegenerateInterval is thrown.
AllenRelation allen_relation(const TimeInterval& a, const TimeInterval& b);

} // namespace eventf
