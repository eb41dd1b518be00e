#include "mutations.hpp"
#include "eventf/patterns.hpp"
#include "scenarios.hpp"

namespace eventf::testing {

namespace {

EntityRef ref(const char* iri) { return EntityRef{iri}; }

EntityRef description_of(const Store& s, const char* situation) {
    return s.graph().objects(ref(situation), Property::satisfies).at(0);
}

// The concept of `situation`'s description marked with `marker`.
EntityRef marked(const Store& s, const char* situation, Vocab marker) {
    auto cs = concepts_marked(s.graph(), description_of(s, situation), marker);
    if (cs.size() != 1) throw std::logic_error(std::string("no single marked concept in ") + situation);
    return cs.front();
}

void retract(Store& s, const EntityRef& subject, Property p, const EntityRef& object) {
    if (!s.retract_edge(subject, p, object)) {
        throw std::logic_error("mutation target missing: " + subject.iri + " " + std::string(property_name(p)) + " " +
                               object.iri);
    }
}

void unclassify(Store& s, const char* situation, Vocab marker, const char* member) {
    retract(s, marked(s, situation, marker), Property::classifies, ref(member));
}

void drop_justification(Store& s, const char* situation) {
    EntityRef d = description_of(s, situation);
    retract(s, d, Property::hasJustification, s.graph().objects(d, Property::hasJustification).at(0));
}

} // namespace

Store mutation_base() {
    Store s = build_emergency();
    add_event(s, "ex:storm-damage-1");
    add_event(s, "ex:tree-fall-1");
    add_object(s, "ex:tree-1");

    ParticipationSpec p;
    p.described_event = ex("tree-fall-1");
    p.participants = {{ex("tree-1"), "ex:fallen-tree", std::nullopt}};
    p.time_parameter = parse_time_interval("2009-06-08T01:00:00Z/2009-06-08T01:05:00Z");
    p.location_parameters = {{"ex:fallen-tree", parse_geo_box("50.90,7.05;50.95,7.10"), "ex:tree-area"}};
    p.names = named("ex:tree-participation");
    build_participation(s, p);

    CompositionSpec c;
    c.composite = ex("storm-damage-1");
    c.components = {ex("tree-fall-1")};
    c.names = named("ex:storm-damage");
    build_composition(s, c);

    InterpretationSpec i;
    i.interpreted_event = ex("tree-fall-1");
    i.interpretant_iri = "ex:storm-victim";
    i.relevant_situations = {ex("tree-participation")};
    i.names = named("ex:tree-view");
    build_interpretation(s, i);
    return s;
}

std::vector<Mutation> error_rule_mutations() {
    using P = Property;
    return {
        {"CAUS-001", "drop the classification of the cause", ref("ex:pole-causes-outage"),
         [](Store& s) { unclassify(s, "ex:pole-causes-outage", Vocab::Cause, "ex:snapped-power-pole-1"); }},
        {"CAUS-002", "drop the classification of the effect", ref("ex:pole-causes-outage"),
         [](Store& s) { unclassify(s, "ex:pole-causes-outage", Vocab::Effect, "ex:power-outage-1"); }},
        {"CAUS-003", "drop the justification link", ref("ex:pole-causes-outage"),
         [](Store& s) { drop_justification(s, "ex:pole-causes-outage"); }},
        {"COMP-001", "drop the classification of the composite", ref("ex:storm-damage"),
         [](Store& s) { unclassify(s, "ex:storm-damage", Vocab::Composite, "ex:storm-damage-1"); }},
        {"COMP-002", "drop the classification of the only component", ref("ex:storm-damage"),
         [](Store& s) { unclassify(s, "ex:storm-damage", Vocab::Component, "ex:tree-fall-1"); }},
        {"COMP-003", "classify the composite as a component as well", ref("ex:storm-damage"),
         [](Store& s) {
             s.assert_edge(marked(s, "ex:storm-damage", Vocab::Component), P::classifies, ref("ex:storm-damage-1"));
         }},
        {"COMP-004", "move the absolute interval of a temporal constraint out of June", ref("ex:flooding-composition"),
         [](Store& s) {
             s.set_value(ref("ex:second-week-of-june-region"), parse_time_interval("2009-07-01/2009-07-07"));
         }},
        {"COMP-006", "drop the target region of a temporal constraint", ref("ex:flooding-composition"),
         [](Store& s) {
             retract(s, ref("ex:second-week-of-june"), P::parametrizes, ref("ex:second-week-of-june-region"));
         }},
        {"CORR-001", "drop the classification of one correlate", ref("ex:cellar-rescue-correlation"),
         [](Store& s) { unclassify(s, "ex:cellar-rescue-correlation", Vocab::Correlate, "ex:rescue-1"); }},
        {"CORR-002", "drop the justification link", ref("ex:cellar-rescue-correlation"),
         [](Store& s) { drop_justification(s, "ex:cellar-rescue-correlation"); }},
        {"DOC-001", "drop the classification of the documented event", ref("ex:cellar-photo"),
         [](Store& s) { unclassify(s, "ex:cellar-photo", Vocab::DocumentedEvent, "ex:flooded-cellar-1"); }},
        {"DOC-002", "drop the classification of the only documenter", ref("ex:cellar-photo"),
         [](Store& s) { unclassify(s, "ex:cellar-photo", Vocab::Documenter, "ex:photo-1"); }},
        {"INT-001", "drop the classification of the interpreted event", ref("ex:officer-A"),
         [](Store& s) { unclassify(s, "ex:officer-A", Vocab::Interpretant, "ex:power-outage-1"); }},
        {"INT-002", "detach a relevant situation from its description", ref("ex:officer-A"),
         [](Store& s) {
             retract(s, ref("ex:pole-causes-outage"), P::satisfies, ref("ex:pole-causes-outage-description"));
         }},
        {"INT-003", "drop the classification of the only relevant situation", ref("ex:tree-view"),
         [](Store& s) { unclassify(s, "ex:tree-view", Vocab::RelevantSituation, "ex:tree-participation"); }},
        {"PART-001", "drop the classification of the described event", ref("ex:outage-participation"),
         [](Store& s) { unclassify(s, "ex:outage-participation", Vocab::DescribedEvent, "ex:power-outage-1"); }},
        {"PART-002", "drop the classification of the only participant", ref("ex:tree-participation"),
         [](Store& s) { retract(s, ref("ex:fallen-tree"), P::classifies, ref("ex:tree-1")); }},
        {"PART-003", "let a participant role classify a situation", ref("ex:outage-participation"),
         [](Store& s) { s.assert_edge(ref("ex:citizen-1"), P::classifies, ref("ex:cellar-photo")); }},
        {"PART-005", "mark the location parameter as a time parameter too", ref("ex:tree-participation"),
         [](Store& s) { s.assert_edge(ref("ex:tree-area"), P::specializes, ref("f:TimeParameter")); }},
        {"SIT-001", "detach the situation from its description", ref("ex:cellar-photo"),
         [](Store& s) { retract(s, ref("ex:cellar-photo"), P::satisfies, ref("ex:cellar-photo-description")); }},
        {"SIT-002", "mark the cause concept as a correlate too", ref("ex:pole-causes-outage"),
         [](Store& s) {
             s.assert_edge(marked(s, "ex:pole-causes-outage", Vocab::Cause), P::specializes, ref("f:Correlate"));
         }},
    };
}

} // namespace eventf::testing
