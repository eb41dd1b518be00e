#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace eventf {

/// Prefix of the built-in vocabulary (kinds, properties, pattern concepts).
inline constexpr std::string_view kVocabPrefix = "f";
inline constexpr std::string_view kVocabNamespace = "urn:eventf:vocab#";
/// Prefix used by builders for minted individuals.
inline constexpr std::string_view kInstancePrefix = "f-inst";
inline constexpr std::string_view kInstanceNamespace = "urn:eventf:instance#";

/// Identity of a node: a qualified name such as `ex:power-outage-1`.
struct EntityRef {
    std::string iri;

    EntityRef() = default;
    explicit EntityRef(std::string qname) : iri(std::move(qname)) {}

    bool empty() const noexcept { return iri.empty(); }
    std::string_view prefix() const noexcept;
    std::string_view local() const noexcept;

    auto operator<=>(const EntityRef&) const = default;
};

/// Splits `prefix:local`; nullopt when the name is not a well-formed
/// qualified name.
struct QName {
    std::string_view prefix;
    std::string_view local;
};
std::optional<QName> split_qname(std::string_view text) noexcept;
bool valid_prefix_name(std::string_view prefix) noexcept;

enum class Kind : std::uint8_t {
    Event,
    Object,
    Description,
    Situation,
    Quality,
    EventType,
    Role,
    Parameter,
    TimeInterval,
    SpaceRegion,
    SpatioTemporalRegion,
};

inline constexpr Kind kAllKinds[] = {
    Kind::Event,     Kind::Object,       Kind::Description, Kind::Situation,
    Kind::Quality,   Kind::EventType,    Kind::Role,        Kind::Parameter,
    Kind::TimeInterval, Kind::SpaceRegion, Kind::SpatioTemporalRegion,
};

constexpr bool is_concept(Kind k) noexcept {
    return k == Kind::EventType || k == Kind::Role || k == Kind::Parameter;
}
constexpr bool is_region(Kind k) noexcept {
    return k == Kind::TimeInterval || k == Kind::SpaceRegion || k == Kind::SpatioTemporalRegion;
}

std::string_view kind_name(Kind k) noexcept;
std::optional<Kind> parse_kind(std::string_view name) noexcept;

/// Object properties, declared in canonical serialization order.
enum class Property : std::uint8_t {
    classifies,
    satisfies,
    defines,
    includesEvent,
    includesObject,
    includesSituation,
    parametrizes,
    isParameterFor,
    hasQuality,
    hasRegion,
    hasJustification,
    specializes,
};

inline constexpr Property kAllProperties[] = {
    Property::classifies,     Property::satisfies,      Property::defines,
    Property::includesEvent,  Property::includesObject, Property::includesSituation,
    Property::parametrizes,   Property::isParameterFor, Property::hasQuality,
    Property::hasRegion,      Property::hasJustification, Property::specializes,
};

std::string_view property_name(Property p) noexcept;
std::optional<Property> parse_property(std::string_view name) noexcept;

/// Domain/range table. Both checks are by Kind only.
bool in_domain(Property p, Kind subject) noexcept;
bool in_range(Property p, Kind subject, Kind object) noexcept;
/// Human readable lists for error messages, e.g. "Event|Object".
std::string domain_description(Property p);
std::string range_description(Property p, Kind subject);

/// Built-in pattern concepts that pattern individuals specialize.
/// They always exist and are never serialized.
enum class Vocab : std::uint8_t {
    DescribedEvent,
    Participant,
    TimeParameter,
    LocationParameter,
    Composite,
    Component,
    EventCompositionConstraint,
    Cause,
    Effect,
    Correlate,
    DocumentedEvent,
    Documenter,
    Interpretant,
    RelevantSituation,
};

EntityRef vocab_ref(Vocab v);
Kind vocab_kind(Vocab v) noexcept;
std::optional<Vocab> parse_vocab(const EntityRef& ref) noexcept;

} // namespace eventf
