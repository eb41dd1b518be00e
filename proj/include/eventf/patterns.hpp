#pragma once

#include "eventf/graph.hpp"
#include "eventf/spacetime.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eventf {

enum class PatternKind : std::uint8_t {
    Participation,
    Composition,
    Causality,
    Correlation,
    Documentation,
    Interpretation,
};

std::string_view pattern_name(PatternKind k) noexcept;

/// Optional IRIs for the situation and description a builder creates.
/// Missing names are minted as `f-inst:<pattern>-<n>[-description]`.
struct PatternNames {
    std::optional<std::string> situation;
    std::optional<std::string> description;
};

struct ParticipantSpec {
    EntityRef object;
    /// IRI of the role individual classifying the object.
    std::string role_iri;
    /// Domain concept the role specializes, e.g. `dom:Citizen`.
    std::optional<std::string> specializes;
};

struct LocationParameterSpec {
    std::string role_iri;
    GeoBox box;
    std::optional<std::string> iri;
};

struct ParticipationSpec {
    EntityRef described_event;
    std::vector<ParticipantSpec> participants;
    std::optional<TimeInterval> time_parameter;
    std::vector<LocationParameterSpec> location_parameters;
    std::optional<std::string> described_event_concept;
    PatternNames names;
};

struct CompositeTarget {
    bool operator==(const CompositeTarget&) const = default;
};
struct ComponentTarget {
    EntityRef event;
    bool operator==(const ComponentTarget&) const = default;
};

/// relation(constrained component, target).
struct TemporalConstraint {
    AllenRelation relation;
    std::variant<CompositeTarget, ComponentTarget, TimeInterval> target;
    bool operator==(const TemporalConstraint&) const = default;
};
struct SpatialWithin {
    GeoBox box;
    bool operator==(const SpatialWithin&) const = default;
};
struct SpatioTemporalWithin {
    Trajectory trajectory;
    bool operator==(const SpatioTemporalWithin&) const = default;
};

struct ConstraintSpec {
    std::variant<TemporalConstraint, SpatialWithin, SpatioTemporalWithin> body;
    /// Restricts the constraint to one component; otherwise it applies to
    /// every component except a ComponentTarget's own event.
    std::optional<EntityRef> applies_to;
    std::optional<std::string> iri;
};

struct CompositionSpec {
    EntityRef composite;
    std::vector<EntityRef> components;
    std::vector<ConstraintSpec> constraints;
    std::optional<std::string> composite_concept;
    std::optional<std::string> component_concept;
    PatternNames names;
};

/// Either an existing Description or a label for a freshly minted one.
struct Justification {
    std::optional<EntityRef> description;
    std::string label;

    static Justification of(EntityRef d) { return Justification{std::move(d), {}}; }
    static Justification text(std::string label) { return Justification{std::nullopt, std::move(label)}; }
};

struct CausalitySpec {
    EntityRef cause;
    EntityRef effect;
    Justification justification;
    std::optional<std::string> cause_concept;
    std::optional<std::string> effect_concept;
    PatternNames names;
};

struct CorrelationSpec {
    std::vector<EntityRef> correlates;
    Justification justification;
    std::optional<std::string> correlate_concept;
    PatternNames names;
};

struct DocumentationSpec {
    EntityRef documented_event;
    /// Objects or Events.
    std::vector<EntityRef> documenters;
    std::optional<std::string> documented_event_concept;
    PatternNames names;
};

struct InterpretationSpec {
    EntityRef interpreted_event;
    std::string interpretant_iri;
    std::optional<std::string> specializes;
    std::vector<EntityRef> relevant_situations;
    std::optional<std::string> relevant_situation_concept;
    PatternNames names;
};

/// Typed reconstruction of one situation/description pair. The carried spec
/// has every IRI filled in and list fields sorted.
struct PatternView {
    PatternKind kind;
    EntityRef situation;
    EntityRef description;
    std::variant<ParticipationSpec, CompositionSpec, CausalitySpec, CorrelationSpec, DocumentationSpec,
                 InterpretationSpec>
        spec;

    const ParticipationSpec& participation() const { return std::get<ParticipationSpec>(spec); }
    const CompositionSpec& composition() const { return std::get<CompositionSpec>(spec); }
    const CausalitySpec& causality() const { return std::get<CausalitySpec>(spec); }
    const CorrelationSpec& correlation() const { return std::get<CorrelationSpec>(spec); }
    const DocumentationSpec& documentation() const { return std::get<DocumentationSpec>(spec); }
    const InterpretationSpec& interpretation() const { return std::get<InterpretationSpec>(spec); }
};

PatternView build_participation(Store& store, const ParticipationSpec& spec);
PatternView build_composition(Store& store, const CompositionSpec& spec);
PatternView build_causality(Store& store, const CausalitySpec& spec);
PatternView build_correlation(Store& store, const CorrelationSpec& spec);
PatternView build_documentation(Store& store, const DocumentationSpec& spec);
PatternView build_interpretation(Store& store, const InterpretationSpec& spec);

/// Throws UnknownEntity or NotAPatternSituation.
PatternView view_of(const Graph& graph, const EntityRef& situation);

/// Pattern of a description, inferred from the vocabulary concepts its
/// defined concepts specialize. nullopt when none or several match.
std::optional<PatternKind> description_pattern(const Graph& graph, const EntityRef& description);
/// Pattern of a situation satisfying exactly one pattern description.
std::optional<PatternKind> situation_pattern(const Graph& graph, const EntityRef& situation);
/// Every situation with a recognizable pattern, sorted by IRI.
std::vector<EntityRef> pattern_situations(const Graph& graph);

/// Concepts defined by `description` that specialize `marker`.
std::vector<EntityRef> concepts_marked(const Graph& graph, const EntityRef& description, Vocab marker);
/// Entities classified by any of `concepts` and included in `situation`.
std::vector<EntityRef> classified_members(const Graph& graph, const EntityRef& situation,
                                          const std::vector<EntityRef>& concepts);

/// Decodes a composition-constraint parameter; nullopt when malformed.
std::optional<ConstraintSpec> read_constraint(const Graph& graph, const EntityRef& parameter,
                                              const EntityRef& composite);

/// Attaches an absolute time to an event via a Quality and a TimeInterval
/// region named `<event>-time` / `<event>-time-region`.
EntityRef assign_time(Store& store, const EntityRef& event, const TimeInterval& interval);
/// Same for an object's location, named `<object>-location[-region]`.
EntityRef assign_location(Store& store, const EntityRef& object, const GeoBox& box);

} // namespace eventf
