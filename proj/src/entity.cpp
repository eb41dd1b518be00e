#include "eventf/entity.hpp"
#include "eventf/error.hpp"

#include <array>

namespace eventf {

namespace {

bool is_alpha(unsigned char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_local_char(unsigned char c) {
    return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.' || c >= 0x80;
}

constexpr std::array<std::string_view, 11> kKindNames = {
    "Event", "Object", "Description", "Situation", "Quality", "EventType",
    "Role", "Parameter", "TimeInterval", "SpaceRegion", "SpatioTemporalRegion",
};

constexpr std::array<std::string_view, 12> kPropertyNames = {
    "classifies", "satisfies", "defines", "includesEvent", "includesObject",
    "includesSituation", "parametrizes", "isParameterFor", "hasQuality",
    "hasRegion", "hasJustification", "specializes",
};

struct VocabEntry {
    std::string_view name;
    Kind kind;
};

constexpr std::array<VocabEntry, 14> kVocab = {{
    {"DescribedEvent", Kind::EventType},
    {"Participant", Kind::Role},
    {"TimeParameter", Kind::Parameter},
    {"LocationParameter", Kind::Parameter},
    {"Composite", Kind::EventType},
    {"Component", Kind::EventType},
    {"EventCompositionConstraint", Kind::Parameter},
    {"Cause", Kind::EventType},
    {"Effect", Kind::EventType},
    {"Correlate", Kind::EventType},
    {"DocumentedEvent", Kind::EventType},
    {"Documenter", Kind::Role},
    {"Interpretant", Kind::EventType},
    {"RelevantSituation", Kind::Role},
}};

using KindMask = unsigned;
constexpr KindMask bit(Kind k) { return 1u << static_cast<unsigned>(k); }
constexpr KindMask kConcepts = bit(Kind::EventType) | bit(Kind::Role) | bit(Kind::Parameter);
constexpr KindMask kRegions =
    bit(Kind::TimeInterval) | bit(Kind::SpaceRegion) | bit(Kind::SpatioTemporalRegion);

KindMask domain_mask(Property p) {
    switch (p) {
    case Property::classifies: return kConcepts;
    case Property::satisfies: return bit(Kind::Situation);
    case Property::defines: return bit(Kind::Description);
    case Property::includesEvent:
    case Property::includesObject:
    case Property::includesSituation: return bit(Kind::Situation);
    case Property::parametrizes:
    case Property::isParameterFor: return bit(Kind::Parameter);
    case Property::hasQuality: return bit(Kind::Event) | bit(Kind::Object);
    case Property::hasRegion: return bit(Kind::Quality);
    case Property::hasJustification: return bit(Kind::Description);
    case Property::specializes: return kConcepts;
    }
    return 0;
}

KindMask range_mask(Property p, Kind subject) {
    switch (p) {
    case Property::classifies:
        switch (subject) {
        case Kind::EventType: return bit(Kind::Event);
        case Kind::Role: return bit(Kind::Object) | bit(Kind::Situation);
        default: return 0;
        }
    case Property::satisfies: return bit(Kind::Description);
    case Property::defines: return kConcepts;
    case Property::includesEvent: return bit(Kind::Event);
    case Property::includesObject: return bit(Kind::Object);
    case Property::includesSituation: return bit(Kind::Situation);
    case Property::parametrizes: return kRegions;
    case Property::isParameterFor: return kConcepts;
    case Property::hasQuality: return bit(Kind::Quality);
    case Property::hasRegion: return kRegions;
    case Property::hasJustification: return bit(Kind::Description);
    case Property::specializes: return kConcepts;
    }
    return 0;
}

std::string describe(KindMask mask) {
    if (mask == 0) return "nothing";
    std::string out;
    for (Kind k : kAllKinds) {
        if (mask & bit(k)) {
            if (!out.empty()) out += '|';
            out += kind_name(k);
        }
    }
    return out;
}

} // namespace

std::string_view EntityRef::prefix() const noexcept {
    auto pos = iri.find(':');
    return pos == std::string::npos ? std::string_view{} : std::string_view(iri).substr(0, pos);
}

std::string_view EntityRef::local() const noexcept {
    auto pos = iri.find(':');
    return pos == std::string::npos ? std::string_view(iri) : std::string_view(iri).substr(pos + 1);
}

bool valid_prefix_name(std::string_view prefix) noexcept {
    if (prefix.empty()) return true;
    if (!is_alpha(static_cast<unsigned char>(prefix.front()))) return false;
    for (unsigned char c : prefix) {
        if (!(is_alpha(c) || is_digit(c) || c == '_' || c == '-')) return false;
    }
    return prefix.back() != '-';
}

std::optional<QName> split_qname(std::string_view text) noexcept {
    auto pos = text.find(':');
    if (pos == std::string_view::npos) return std::nullopt;
    QName q{text.substr(0, pos), text.substr(pos + 1)};
    if (!valid_prefix_name(q.prefix) || q.local.empty()) return std::nullopt;
    auto first = static_cast<unsigned char>(q.local.front());
    if (first == '-' || first == '.') return std::nullopt;
    if (q.local.back() == '.') return std::nullopt;
    for (unsigned char c : q.local) {
        if (!is_local_char(c)) return std::nullopt;
    }
    return q;
}

std::string_view kind_name(Kind k) noexcept { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<Kind> parse_kind(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) return static_cast<Kind>(i);
    }
    return std::nullopt;
}

std::string_view property_name(Property p) noexcept {
    return kPropertyNames[static_cast<std::size_t>(p)];
}

std::optional<Property> parse_property(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
        if (kPropertyNames[i] == name) return static_cast<Property>(i);
    }
    return std::nullopt;
}

bool in_domain(Property p, Kind subject) noexcept { return (domain_mask(p) & bit(subject)) != 0; }

bool in_range(Property p, Kind subject, Kind object) noexcept {
    return (range_mask(p, subject) & bit(object)) != 0;
}

std::string domain_description(Property p) { return describe(domain_mask(p)); }

std::string range_description(Property p, Kind subject) { return describe(range_mask(p, subject)); }

EntityRef vocab_ref(Vocab v) {
    std::string iri(kVocabPrefix);
    iri += ':';
    iri += kVocab[static_cast<std::size_t>(v)].name;
    return EntityRef(std::move(iri));
}

Kind vocab_kind(Vocab v) noexcept { return kVocab[static_cast<std::size_t>(v)].kind; }

std::optional<Vocab> parse_vocab(const EntityRef& ref) noexcept {
    if (ref.prefix() != kVocabPrefix) return std::nullopt;
    auto local = ref.local();
    for (std::size_t i = 0; i < kVocab.size(); ++i) {
        if (kVocab[i].name == local) return static_cast<Vocab>(i);
    }
    return std::nullopt;
}

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidIri: return "InvalidIri";
    case Errc::UndeclaredPrefix: return "UndeclaredPrefix";
    case Errc::ReservedIri: return "ReservedIri";
    case Errc::PrefixConflict: return "PrefixConflict";
    case Errc::DuplicateIri: return "DuplicateIri";
    case Errc::KindConflict: return "KindConflict";
    case Errc::UnknownEntity: return "UnknownEntity";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::InvalidLiteral: return "InvalidLiteral";
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::InvalidBox: return "InvalidBox";
    case Errc::InvalidTrajectory: return "InvalidTrajectory";
    case Errc::DegenerateInterval: return "DegenerateInterval";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::EmptyParticipants: return "EmptyParticipants";
    case Errc::DuplicateRole: return "DuplicateRole";
    case Errc::UnknownRole: return "UnknownRole";
    case Errc::CompositeAmongComponents: return "CompositeAmongComponents";
    case Errc::EmptyComponents: return "EmptyComponents";
    case Errc::DuplicateComponent: return "DuplicateComponent";
    case Errc::InvalidConstraint: return "InvalidConstraint";
    case Errc::SelfCause: return "SelfCause";
    case Errc::TooFewCorrelates: return "TooFewCorrelates";
    case Errc::SelfDocumentation: return "SelfDocumentation";
    case Errc::EmptyDocumenters: return "EmptyDocumenters";
    case Errc::NonPatternSituation: return "NonPatternSituation";
    case Errc::EmptySituations: return "EmptySituations";
    case Errc::NotAPatternSituation: return "NotAPatternSituation";
    case Errc::NotAComponent: return "NotAComponent";
    case Errc::NotAnInterpretation: return "NotAnInterpretation";
    case Errc::DifferentInterpretedEvents: return "DifferentInterpretedEvents";
    }
    return "Unknown";
}

} // namespace eventf
