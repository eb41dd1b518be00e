#include "eventf/patterns.hpp"
#include "eventf/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace eventf {

namespace {

std::string quote(const EntityRef& e) { return "'" + e.iri + "'"; }

Kind kind_or_throw(const Graph& g, const EntityRef& e) {
    auto k = g.kind_of(e);
    if (!k) throw Error(Errc::UnknownEntity, "unknown entity " + quote(e));
    return *k;
}

void expect_kind(const Graph& g, const EntityRef& e, Kind want, std::string_view what) {
    Kind k = kind_or_throw(g, e);
    if (k != want) {
        throw Error(Errc::KindMismatch, std::string(what) + " " + quote(e) + " must be a " +
                                            std::string(kind_name(want)) + ", not a " + std::string(kind_name(k)));
    }
}

// A name the builder will create or reuse with `kind`: must be a valid,
// resolvable qualified name that is not bound to another kind.
void check_reusable(const Store& store, const std::string& iri, Kind kind) {
    auto q = split_qname(iri);
    if (!q) throw Error(Errc::InvalidIri, "not a qualified name: '" + iri + "'");
    if (q->prefix == kVocabPrefix) throw Error(Errc::ReservedIri, "the f: namespace is reserved: '" + iri + "'");
    if (!store.has_prefix(q->prefix)) {
        throw Error(Errc::UndeclaredPrefix, "undeclared prefix '" + std::string(q->prefix) + "' in '" + iri + "'");
    }
    if (auto k = store.graph().kind_of(EntityRef{iri}); k && *k != kind) {
        throw Error(Errc::KindMismatch,
                    "'" + iri + "' is a " + std::string(kind_name(*k)) + ", not a " + std::string(kind_name(kind)));
    }
}

// A name the builder must create fresh.
void check_fresh(const Store& store, const std::string& iri, Kind kind) {
    check_reusable(store, iri, kind);
    if (store.graph().contains(EntityRef{iri})) throw Error(Errc::DuplicateIri, "'" + iri + "' already exists");
}

void check_names(const Store& store, const PatternNames& names) {
    if (names.situation) check_fresh(store, *names.situation, Kind::Situation);
    if (names.description) check_fresh(store, *names.description, Kind::Description);
    if (names.situation && names.description && *names.situation == *names.description) {
        throw Error(Errc::DuplicateIri, "situation and description share the IRI '" + *names.situation + "'");
    }
}

template <class T>
bool has_duplicates(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

std::vector<EntityRef> sorted_unique(std::vector<EntityRef> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Creates the situation/description pair and hands out derived names.
class Frame {
public:
    Frame(Store& store, std::string_view pattern, const PatternNames& names) : store_(store), pattern_(pattern) {
        situation = store_.ensure_entity(names.situation ? *names.situation : base(), Kind::Situation);
        description =
            store_.ensure_entity(names.description ? *names.description : base() + "-description", Kind::Description);
        store_.assert_edge(situation, Property::satisfies, description);
    }

    /// Supplied name or `<base>-<suffix>`.
    std::string name(const std::optional<std::string>& given, std::string_view suffix) {
        return given ? *given : base() + "-" + std::string(suffix);
    }

    /// Concept defined by the description, marked with a vocabulary concept.
    EntityRef concept_node(const std::string& iri, Kind kind, Vocab marker) {
        EntityRef c = store_.ensure_entity(iri, kind);
        store_.assert_edge(description, Property::defines, c);
        store_.assert_edge(c, Property::specializes, vocab_ref(marker));
        return c;
    }

    void member(const EntityRef& concept_ref, const EntityRef& e) {
        store_.assert_edge(concept_ref, Property::classifies, e);
        Kind k = *store_.graph().kind_of(e);
        Property include = k == Kind::Event    ? Property::includesEvent
                           : k == Kind::Object ? Property::includesObject
                                               : Property::includesSituation;
        store_.assert_edge(situation, include, e);
    }

    EntityRef region(const std::string& iri, const RegionValue& value) {
        Kind kind = std::holds_alternative<TimeInterval>(value) ? Kind::TimeInterval
                    : std::holds_alternative<GeoBox>(value)     ? Kind::SpaceRegion
                                                                : Kind::SpatioTemporalRegion;
        EntityRef r = store_.ensure_entity(iri, kind);
        store_.set_value(r, value);
        return r;
    }

    EntityRef situation;
    EntityRef description;

private:
    const std::string& base() {
        if (base_.empty()) base_ = store_.mint(pattern_);
        return base_;
    }

    Store& store_;
    std::string pattern_;
    std::string base_;
};

void check_justification(const Store& store, const Justification& j) {
    if (j.description) expect_kind(store.graph(), *j.description, Kind::Description, "justification");
}

void attach_justification(Store& store, Frame& frame, const Justification& j) {
    EntityRef target;
    if (j.description) {
        target = *j.description;
    } else {
        target = store.ensure_entity(frame.name(std::nullopt, "justification"), Kind::Description);
        store.set_label(target, j.label);
    }
    store.assert_edge(frame.description, Property::hasJustification, target);
}

Justification read_justification(const Graph& g, const EntityRef& description) {
    Justification j;
    auto targets = g.objects(description, Property::hasJustification);
    if (targets.empty()) return j;
    j.description = targets.front();
    if (const auto* a = g.attributes_of(targets.front()); a && a->label) j.label = *a->label;
    return j;
}

std::optional<PatternKind> marker_pattern(Vocab v) {
    switch (v) {
    case Vocab::DescribedEvent:
    case Vocab::Participant:
    case Vocab::TimeParameter:
    case Vocab::LocationParameter: return PatternKind::Participation;
    case Vocab::Composite:
    case Vocab::Component:
    case Vocab::EventCompositionConstraint: return PatternKind::Composition;
    case Vocab::Cause:
    case Vocab::Effect: return PatternKind::Causality;
    case Vocab::Correlate: return PatternKind::Correlation;
    case Vocab::DocumentedEvent:
    case Vocab::Documenter: return PatternKind::Documentation;
    case Vocab::Interpretant:
    case Vocab::RelevantSituation: return PatternKind::Interpretation;
    }
    return std::nullopt;
}

// First specialization target outside the built-in vocabulary.
std::optional<std::string> domain_specialization(const Graph& g, const EntityRef& c) {
    for (const auto& t : g.objects(c, Property::specializes)) {
        if (!parse_vocab(t)) return t.iri;
    }
    return std::nullopt;
}

std::optional<EntityRef> first(const std::vector<EntityRef>& v) {
    if (v.empty()) return std::nullopt;
    return v.front();
}

std::optional<RegionValue> region_value(const Graph& g, const EntityRef& parameter) {
    for (const auto& r : g.objects(parameter, Property::parametrizes)) {
        if (const auto* a = g.attributes_of(r); a && a->value) return a->value;
    }
    return std::nullopt;
}

} // namespace

std::string_view pattern_name(PatternKind k) noexcept {
    switch (k) {
    case PatternKind::Participation: return "participation";
    case PatternKind::Composition: return "composition";
    case PatternKind::Causality: return "causality";
    case PatternKind::Correlation: return "correlation";
    case PatternKind::Documentation: return "documentation";
    case PatternKind::Interpretation: return "interpretation";
    }
    return "?";
}

std::vector<EntityRef> concepts_marked(const Graph& g, const EntityRef& description, Vocab marker) {
    std::vector<EntityRef> out;
    EntityRef m = vocab_ref(marker);
    for (const auto& c : g.objects(description, Property::defines)) {
        if (g.has_edge(c, Property::specializes, m)) out.push_back(c);
    }
    return out;
}

std::vector<EntityRef> classified_members(const Graph& g, const EntityRef& situation,
                                          const std::vector<EntityRef>& concepts) {
    std::vector<EntityRef> out;
    for (const auto& c : concepts) {
        for (const auto& e : g.objects(c, Property::classifies)) {
            if (g.has_edge(situation, Property::includesEvent, e) ||
                g.has_edge(situation, Property::includesObject, e) ||
                g.has_edge(situation, Property::includesSituation, e)) {
                out.push_back(e);
            }
        }
    }
    return sorted_unique(std::move(out));
}

std::optional<PatternKind> description_pattern(const Graph& g, const EntityRef& description) {
    std::set<PatternKind> kinds;
    for (const auto& c : g.objects(description, Property::defines)) {
        for (const auto& t : g.objects(c, Property::specializes)) {
            if (auto v = parse_vocab(t)) {
                if (auto k = marker_pattern(*v)) kinds.insert(*k);
            }
        }
    }
    if (kinds.size() != 1) return std::nullopt;
    return *kinds.begin();
}

std::optional<PatternKind> situation_pattern(const Graph& g, const EntityRef& situation) {
    if (g.kind_of(situation) != Kind::Situation) return std::nullopt;
    auto descriptions = g.objects(situation, Property::satisfies);
    if (descriptions.size() != 1) return std::nullopt;
    return description_pattern(g, descriptions.front());
}

std::vector<EntityRef> pattern_situations(const Graph& g) {
    std::vector<EntityRef> out;
    for (const auto& s : g.entities_of_kind(Kind::Situation)) {
        if (situation_pattern(g, s)) out.push_back(s);
    }
    return out;
}

PatternView build_participation(Store& store, const ParticipationSpec& spec) {
    const Graph& g = store.graph();
    expect_kind(g, spec.described_event, Kind::Event, "described event");
    if (spec.participants.empty()) throw Error(Errc::EmptyParticipants, "participation needs a participant");
    std::vector<std::string> roles;
    for (const auto& p : spec.participants) {
        expect_kind(g, p.object, Kind::Object, "participant");
        check_reusable(store, p.role_iri, Kind::Role);
        if (p.specializes) check_reusable(store, *p.specializes, Kind::Role);
        roles.push_back(p.role_iri);
    }
    if (has_duplicates(roles)) throw Error(Errc::DuplicateRole, "participant roles must be distinct");
    for (const auto& lp : spec.location_parameters) {
        if (std::find(roles.begin(), roles.end(), lp.role_iri) == roles.end()) {
            throw Error(Errc::UnknownRole, "location parameter refers to unknown role '" + lp.role_iri + "'");
        }
        if (lp.iri) {
            check_fresh(store, *lp.iri, Kind::Parameter);
            check_fresh(store, *lp.iri + "-region", Kind::SpaceRegion);
        }
    }
    if (spec.described_event_concept) check_reusable(store, *spec.described_event_concept, Kind::EventType);
    check_names(store, spec.names);

    Frame f(store, "participation", spec.names);
    EntityRef described = f.concept_node(f.name(spec.described_event_concept, "described-event"),
                                         Kind::EventType, Vocab::DescribedEvent);
    f.member(described, spec.described_event);
    for (const auto& p : spec.participants) {
        EntityRef role = f.concept_node(p.role_iri, Kind::Role, Vocab::Participant);
        if (p.specializes) {
            store.assert_edge(role, Property::specializes, store.ensure_entity(*p.specializes, Kind::Role));
        }
        f.member(role, p.object);
    }
    if (spec.time_parameter) {
        EntityRef tp = f.concept_node(f.name(std::nullopt, "time-parameter"), Kind::Parameter, Vocab::TimeParameter);
        store.assert_edge(tp, Property::isParameterFor, described);
        store.assert_edge(tp, Property::parametrizes, f.region(tp.iri + "-region", *spec.time_parameter));
    }
    std::size_t n = 0;
    for (const auto& lp : spec.location_parameters) {
        ++n;
        EntityRef param = f.concept_node(f.name(lp.iri, "location-parameter-" + std::to_string(n)), Kind::Parameter,
                                         Vocab::LocationParameter);
        store.assert_edge(param, Property::isParameterFor, EntityRef{lp.role_iri});
        store.assert_edge(param, Property::parametrizes, f.region(param.iri + "-region", lp.box));
    }
    return view_of(store.graph(), f.situation);
}

PatternView build_composition(Store& store, const CompositionSpec& spec) {
    const Graph& g = store.graph();
    expect_kind(g, spec.composite, Kind::Event, "composite");
    if (spec.components.empty()) throw Error(Errc::EmptyComponents, "composition needs a component");
    for (const auto& c : spec.components) expect_kind(g, c, Kind::Event, "component");
    if (std::find(spec.components.begin(), spec.components.end(), spec.composite) != spec.components.end()) {
        throw Error(Errc::CompositeAmongComponents, quote(spec.composite) + " is listed as its own component");
    }
    if (has_duplicates(spec.components)) throw Error(Errc::DuplicateComponent, "components must be distinct");
    auto is_component = [&](const EntityRef& e) {
        return std::find(spec.components.begin(), spec.components.end(), e) != spec.components.end();
    };
    for (const auto& c : spec.constraints) {
        if (c.applies_to && !is_component(*c.applies_to)) {
            throw Error(Errc::InvalidConstraint, "constraint applies to non-component " + quote(*c.applies_to));
        }
        if (const auto* t = std::get_if<TemporalConstraint>(&c.body)) {
            if (const auto* ct = std::get_if<ComponentTarget>(&t->target); ct && !is_component(ct->event)) {
                throw Error(Errc::InvalidConstraint, "constraint target " + quote(ct->event) + " is not a component");
            }
        }
        if (c.iri) check_fresh(store, *c.iri, Kind::Parameter);
    }
    if (spec.composite_concept) check_reusable(store, *spec.composite_concept, Kind::EventType);
    if (spec.component_concept) check_reusable(store, *spec.component_concept, Kind::EventType);
    check_names(store, spec.names);

    Frame f(store, "composition", spec.names);
    EntityRef composite =
        f.concept_node(f.name(spec.composite_concept, "composite"), Kind::EventType, Vocab::Composite);
    f.member(composite, spec.composite);
    EntityRef component =
        f.concept_node(f.name(spec.component_concept, "component"), Kind::EventType, Vocab::Component);
    for (const auto& c : spec.components) f.member(component, c);

    std::size_t n = 0;
    for (const auto& c : spec.constraints) {
        ++n;
        EntityRef param = f.concept_node(f.name(c.iri, "constraint-" + std::to_string(n)), Kind::Parameter,
                                         Vocab::EventCompositionConstraint);
        store.assert_edge(param, Property::isParameterFor, component);
        std::string region_iri = param.iri + "-region";
        std::visit(
            [&](const auto& body) {
                using T = std::decay_t<decltype(body)>;
                if constexpr (std::is_same_v<T, TemporalConstraint>) {
                    store.set_relation(param, body.relation);
                    if (std::holds_alternative<CompositeTarget>(body.target)) {
                        store.set_relative_to(param, spec.composite);
                    } else if (const auto* ct = std::get_if<ComponentTarget>(&body.target)) {
                        store.set_relative_to(param, ct->event);
                    } else {
                        store.assert_edge(param, Property::parametrizes,
                                          f.region(region_iri, std::get<TimeInterval>(body.target)));
                    }
                } else if constexpr (std::is_same_v<T, SpatialWithin>) {
                    store.assert_edge(param, Property::parametrizes, f.region(region_iri, body.box));
                } else {
                    store.assert_edge(param, Property::parametrizes, f.region(region_iri, body.trajectory));
                }
            },
            c.body);
        if (c.applies_to) store.set_applies_to(param, *c.applies_to);
    }
    return view_of(store.graph(), f.situation);
}

PatternView build_causality(Store& store, const CausalitySpec& spec) {
    const Graph& g = store.graph();
    expect_kind(g, spec.cause, Kind::Event, "cause");
    expect_kind(g, spec.effect, Kind::Event, "effect");
    if (spec.cause == spec.effect) throw Error(Errc::SelfCause, quote(spec.cause) + " cannot cause itself");
    check_justification(store, spec.justification);
    if (spec.cause_concept) check_reusable(store, *spec.cause_concept, Kind::EventType);
    if (spec.effect_concept) check_reusable(store, *spec.effect_concept, Kind::EventType);
    check_names(store, spec.names);

    Frame f(store, "causality", spec.names);
    f.member(f.concept_node(f.name(spec.cause_concept, "cause"), Kind::EventType, Vocab::Cause), spec.cause);
    f.member(f.concept_node(f.name(spec.effect_concept, "effect"), Kind::EventType, Vocab::Effect), spec.effect);
    attach_justification(store, f, spec.justification);
    return view_of(store.graph(), f.situation);
}

PatternView build_correlation(Store& store, const CorrelationSpec& spec) {
    const Graph& g = store.graph();
    auto correlates = sorted_unique(spec.correlates);
    for (const auto& c : correlates) expect_kind(g, c, Kind::Event, "correlate");
    if (correlates.size() < 2) throw Error(Errc::TooFewCorrelates, "correlation needs at least two events");
    check_justification(store, spec.justification);
    if (spec.correlate_concept) check_reusable(store, *spec.correlate_concept, Kind::EventType);
    check_names(store, spec.names);

    Frame f(store, "correlation", spec.names);
    EntityRef correlate =
        f.concept_node(f.name(spec.correlate_concept, "correlate"), Kind::EventType, Vocab::Correlate);
    for (const auto& c : correlates) f.member(correlate, c);
    attach_justification(store, f, spec.justification);
    return view_of(store.graph(), f.situation);
}

PatternView build_documentation(Store& store, const DocumentationSpec& spec) {
    const Graph& g = store.graph();
    expect_kind(g, spec.documented_event, Kind::Event, "documented event");
    if (spec.documenters.empty()) throw Error(Errc::EmptyDocumenters, "documentation needs a documenter");
    bool any_object = false, any_event = false;
    for (const auto& d : spec.documenters) {
        Kind k = kind_or_throw(g, d);
        if (k != Kind::Object && k != Kind::Event) {
            throw Error(Errc::KindMismatch, "documenter " + quote(d) + " must be an Object or an Event");
        }
        (k == Kind::Object ? any_object : any_event) = true;
        if (d == spec.documented_event) {
            throw Error(Errc::SelfDocumentation, quote(d) + " cannot document itself");
        }
    }
    if (spec.documented_event_concept) check_reusable(store, *spec.documented_event_concept, Kind::EventType);
    check_names(store, spec.names);

    Frame f(store, "documentation", spec.names);
    f.member(f.concept_node(f.name(spec.documented_event_concept, "documented-event"), Kind::EventType,
                            Vocab::DocumentedEvent),
             spec.documented_event);
    // Documenter concepts are split by kind: a Role classifies objects, an
    // EventType classifies events.
    std::optional<EntityRef> object_documenter, event_documenter;
    if (any_object) {
        object_documenter = f.concept_node(f.name(std::nullopt, "documenter"), Kind::Role, Vocab::Documenter);
    }
    if (any_event) {
        event_documenter =
            f.concept_node(f.name(std::nullopt, "event-documenter"), Kind::EventType, Vocab::Documenter);
    }
    for (const auto& d : sorted_unique(spec.documenters)) {
        f.member(*g.kind_of(d) == Kind::Object ? *object_documenter : *event_documenter, d);
    }
    return view_of(store.graph(), f.situation);
}

PatternView build_interpretation(Store& store, const InterpretationSpec& spec) {
    const Graph& g = store.graph();
    expect_kind(g, spec.interpreted_event, Kind::Event, "interpreted event");
    check_reusable(store, spec.interpretant_iri, Kind::EventType);
    if (spec.specializes) check_reusable(store, *spec.specializes, Kind::EventType);
    if (spec.relevant_situations.empty()) {
        throw Error(Errc::EmptySituations, "interpretation needs a relevant situation");
    }
    for (const auto& s : spec.relevant_situations) {
        expect_kind(g, s, Kind::Situation, "relevant situation");
        auto k = situation_pattern(g, s);
        if (!k || *k == PatternKind::Interpretation) {
            throw Error(Errc::NonPatternSituation, quote(s) + " is not a participation, composition, causality, "
                                                              "correlation or documentation situation");
        }
    }
    if (spec.relevant_situation_concept) check_reusable(store, *spec.relevant_situation_concept, Kind::Role);
    check_names(store, spec.names);

    Frame f(store, "interpretation", spec.names);
    EntityRef interpretant = f.concept_node(spec.interpretant_iri, Kind::EventType, Vocab::Interpretant);
    if (spec.specializes) {
        store.assert_edge(interpretant, Property::specializes,
                          store.ensure_entity(*spec.specializes, Kind::EventType));
    }
    f.member(interpretant, spec.interpreted_event);
    EntityRef relevant = f.concept_node(f.name(spec.relevant_situation_concept, "relevant-situation"), Kind::Role,
                                        Vocab::RelevantSituation);
    for (const auto& s : sorted_unique(spec.relevant_situations)) f.member(relevant, s);
    return view_of(store.graph(), f.situation);
}

std::optional<ConstraintSpec> read_constraint(const Graph& g, const EntityRef& parameter, const EntityRef& composite) {
    const Attributes* a = g.attributes_of(parameter);
    ConstraintSpec c;
    c.iri = parameter.iri;
    if (a && a->applies_to) c.applies_to = a->applies_to;
    auto value = region_value(g, parameter);
    if (a && a->relation) {
        TemporalConstraint t{*a->relation, CompositeTarget{}};
        if (a->relative_to) {
            if (value) return std::nullopt;
            if (*a->relative_to == composite) {
                t.target = CompositeTarget{};
            } else {
                t.target = ComponentTarget{*a->relative_to};
            }
        } else if (value && std::holds_alternative<TimeInterval>(*value)) {
            t.target = std::get<TimeInterval>(*value);
        } else {
            return std::nullopt;
        }
        c.body = t;
        return c;
    }
    if (!value || (a && a->relative_to)) return std::nullopt;
    if (const auto* box = std::get_if<GeoBox>(&*value)) {
        c.body = SpatialWithin{*box};
    } else if (const auto* traj = std::get_if<Trajectory>(&*value)) {
        c.body = SpatioTemporalWithin{*traj};
    } else {
        return std::nullopt;
    }
    return c;
}

PatternView view_of(const Graph& g, const EntityRef& situation) {
    Kind k = kind_or_throw(g, situation);
    auto pattern = situation_pattern(g, situation);
    if (k != Kind::Situation || !pattern) {
        throw Error(Errc::NotAPatternSituation, quote(situation) + " is not a pattern situation");
    }
    PatternView view;
    view.kind = *pattern;
    view.situation = situation;
    view.description = g.objects(situation, Property::satisfies).front();
    const EntityRef& d = view.description;
    PatternNames names{situation.iri, d.iri};
    auto members = [&](Vocab v) { return classified_members(g, situation, concepts_marked(g, d, v)); };
    auto first_concept = [&](Vocab v) -> std::optional<std::string> {
        auto cs = concepts_marked(g, d, v);
        if (cs.empty()) return std::nullopt;
        return cs.front().iri;
    };

    switch (*pattern) {
    case PatternKind::Participation: {
        ParticipationSpec s;
        s.names = names;
        s.described_event = first(members(Vocab::DescribedEvent)).value_or(EntityRef{});
        s.described_event_concept = first_concept(Vocab::DescribedEvent);
        for (const auto& role : concepts_marked(g, d, Vocab::Participant)) {
            for (const auto& obj : classified_members(g, situation, {role})) {
                s.participants.push_back({obj, role.iri, domain_specialization(g, role)});
            }
        }
        std::sort(s.participants.begin(), s.participants.end(), [](const auto& a, const auto& b) {
            return std::tie(a.role_iri, a.object) < std::tie(b.role_iri, b.object);
        });
        for (const auto& tp : concepts_marked(g, d, Vocab::TimeParameter)) {
            auto v = region_value(g, tp);
            if (v && std::holds_alternative<TimeInterval>(*v)) {
                s.time_parameter = std::get<TimeInterval>(*v);
                break;
            }
        }
        for (const auto& lp : concepts_marked(g, d, Vocab::LocationParameter)) {
            auto v = region_value(g, lp);
            auto roles = g.objects(lp, Property::isParameterFor);
            if (!v || !std::holds_alternative<GeoBox>(*v) || roles.empty()) continue;
            s.location_parameters.push_back({roles.front().iri, std::get<GeoBox>(*v), lp.iri});
        }
        view.spec = std::move(s);
        break;
    }
    case PatternKind::Composition: {
        CompositionSpec s;
        s.names = names;
        s.composite = first(members(Vocab::Composite)).value_or(EntityRef{});
        s.components = members(Vocab::Component);
        s.composite_concept = first_concept(Vocab::Composite);
        s.component_concept = first_concept(Vocab::Component);
        for (const auto& p : concepts_marked(g, d, Vocab::EventCompositionConstraint)) {
            if (auto c = read_constraint(g, p, s.composite)) s.constraints.push_back(std::move(*c));
        }
        view.spec = std::move(s);
        break;
    }
    case PatternKind::Causality: {
        CausalitySpec s;
        s.names = names;
        s.cause = first(members(Vocab::Cause)).value_or(EntityRef{});
        s.effect = first(members(Vocab::Effect)).value_or(EntityRef{});
        s.cause_concept = first_concept(Vocab::Cause);
        s.effect_concept = first_concept(Vocab::Effect);
        s.justification = read_justification(g, d);
        view.spec = std::move(s);
        break;
    }
    case PatternKind::Correlation: {
        CorrelationSpec s;
        s.names = names;
        s.correlates = members(Vocab::Correlate);
        s.correlate_concept = first_concept(Vocab::Correlate);
        s.justification = read_justification(g, d);
        view.spec = std::move(s);
        break;
    }
    case PatternKind::Documentation: {
        DocumentationSpec s;
        s.names = names;
        s.documented_event = first(members(Vocab::DocumentedEvent)).value_or(EntityRef{});
        s.documented_event_concept = first_concept(Vocab::DocumentedEvent);
        s.documenters = members(Vocab::Documenter);
        view.spec = std::move(s);
        break;
    }
    case PatternKind::Interpretation: {
        InterpretationSpec s;
        s.names = names;
        s.interpreted_event = first(members(Vocab::Interpretant)).value_or(EntityRef{});
        auto interpretants = concepts_marked(g, d, Vocab::Interpretant);
        if (!interpretants.empty()) {
            s.interpretant_iri = interpretants.front().iri;
            s.specializes = domain_specialization(g, interpretants.front());
        }
        s.relevant_situations = members(Vocab::RelevantSituation);
        s.relevant_situation_concept = first_concept(Vocab::RelevantSituation);
        view.spec = std::move(s);
        break;
    }
    }
    return view;
}

EntityRef assign_time(Store& store, const EntityRef& event, const TimeInterval& interval) {
    EntityRef quality = store.ensure_entity(event.iri + "-time", Kind::Quality);
    EntityRef region = store.ensure_entity(event.iri + "-time-region", Kind::TimeInterval);
    store.set_value(region, interval);
    store.assert_edge(event, Property::hasQuality, quality);
    store.assert_edge(quality, Property::hasRegion, region);
    return region;
}

EntityRef assign_location(Store& store, const EntityRef& object, const GeoBox& box) {
    EntityRef quality = store.ensure_entity(object.iri + "-location", Kind::Quality);
    EntityRef region = store.ensure_entity(object.iri + "-location-region", Kind::SpaceRegion);
    store.set_value(region, box);
    store.assert_edge(object, Property::hasQuality, quality);
    store.assert_edge(quality, Property::hasRegion, region);
    return region;
}

} // namespace eventf
