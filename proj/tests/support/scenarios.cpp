#include "scenarios.hpp"

#include <functional>

namespace eventf::testing {

namespace {

PatternView once(Store& store, const std::string& situation, const std::function<PatternView()>& build) {
    EntityRef s{situation};
    if (store.graph().contains(s)) return view_of(store.graph(), s);
    return build();
}

TimeInterval interval(const char* lex) { return parse_time_interval(lex); }
GeoBox box(const char* lex) { return parse_geo_box(lex); }

void emergency_entities(Store& store) {
    for (const char* e : {"heavy-storm-1", "flooding-1", "power-outage-1", "flooded-cellar-1", "rescue-1",
                          "pumping-1", "snapped-power-pole-1", "power-plant-problem-1", "hotline-call-1"}) {
        add_event(store, std::string("ex:") + e);
    }
    for (const char* o : {"person-1", "house-1", "firefighter-1", "photo-1", "call-recording-1"}) {
        add_object(store, std::string("ex:") + o);
    }
}

} // namespace

Store scenario_store() {
    Store store;
    store.declare_prefix("ex", kExNamespace);
    store.declare_prefix("dom", kDomNamespace);
    return store;
}

EntityRef add_event(Store& store, const std::string& iri) { return store.ensure_entity(iri, Kind::Event); }
EntityRef add_object(Store& store, const std::string& iri) { return store.ensure_entity(iri, Kind::Object); }

PatternNames named(const std::string& iri) { return PatternNames{iri, iri + "-description"}; }

EntityRef ex(const std::string& local) { return EntityRef{"ex:" + local}; }

FigG build_fig_g() {
    FigG out{scenario_store(), {}, {}};
    Store& s = out.store;
    add_event(s, "ex:snapped-power-pole-1");
    add_event(s, "ex:power-outage-1");
    add_object(s, "ex:person-1");
    add_object(s, "ex:house-1");

    CausalitySpec c;
    c.cause = ex("snapped-power-pole-1");
    c.effect = ex("power-outage-1");
    c.justification = Justification::text("laws of physics");
    c.cause_concept = "ex:cause-1";
    c.effect_concept = "ex:effect-1";
    c.names = named("ex:causality-1");
    out.causality = build_causality(s, c);

    ParticipationSpec p;
    p.described_event = ex("power-outage-1");
    p.participants = {{ex("person-1"), "ex:citizen-1", "dom:Citizen"},
                      {ex("house-1"), "ex:affected-bldg-1", "dom:AffectedBuilding"}};
    p.described_event_concept = "ex:described-event-1";
    p.names = named("ex:participation-1");
    out.participation = build_participation(s, p);
    return out;
}

PatternView req1_participation(Store& store) {
    emergency_entities(store);
    once(store, "ex:call-participation", [&] {
        ParticipationSpec p;
        p.described_event = ex("hotline-call-1");
        p.participants = {{ex("person-1"), "ex:caller-1", "dom:Caller"}};
        p.names = named("ex:call-participation");
        return build_participation(store, p);
    });
    return once(store, "ex:outage-participation", [&] {
        ParticipationSpec p;
        p.described_event = ex("power-outage-1");
        p.participants = {{ex("person-1"), "ex:citizen-1", "dom:Citizen"},
                          {ex("house-1"), "ex:affected-bldg-1", "dom:AffectedBuilding"}};
        p.time_parameter = interval("2009-06-09T08:00:00Z/2009-06-09T20:00:00Z");
        p.names = named("ex:outage-participation");
        return build_participation(store, p);
    });
}

PatternView req2_time(Store& store) {
    emergency_entities(store);
    assign_time(store, ex("heavy-storm-1"), interval("2009-06-07T18:00:00Z/2009-06-08T06:00:00Z"));
    assign_time(store, ex("flooding-1"), interval("2009-06-08/2009-06-14"));
    assign_time(store, ex("snapped-power-pole-1"), interval("2009-06-09T07:50:00Z/2009-06-09T07:55:00Z"));
    assign_time(store, ex("power-outage-1"), interval("2009-06-09T08:00:00Z/2009-06-09T20:00:00Z"));
    assign_time(store, ex("hotline-call-1"), interval("2009-06-09T08:30:00Z/2009-06-09T08:40:00Z"));
    assign_time(store, ex("flooded-cellar-1"), interval("2009-06-09T10:00:00Z/2009-06-09T12:00:00Z"));
    assign_time(store, ex("rescue-1"), interval("2009-06-10T09:00:00Z/2009-06-10T11:00:00Z"));
    assign_time(store, ex("pumping-1"), interval("2009-06-10T13:00:00Z/2009-06-10T16:00:00Z"));
    return req1_participation(store);
}

PatternView req3_space(Store& store) {
    emergency_entities(store);
    assign_location(store, ex("house-1"), box("50.92,7.06;50.93,7.07"));
    assign_location(store, ex("person-1"), box("50.925,7.065;50.926,7.066"));
    assign_location(store, ex("firefighter-1"), box("50.924,7.064;50.927,7.067"));
    return once(store, "ex:rescue-participation", [&] {
        ParticipationSpec p;
        p.described_event = ex("rescue-1");
        p.participants = {{ex("firefighter-1"), "ex:rescuer-1", "dom:Rescuer"},
                          {ex("person-1"), "ex:rescued-1", "dom:EmergencySubject"}};
        p.location_parameters = {{"ex:rescuer-1", box("50.90,7.05;50.95,7.10"), "ex:rescue-area"}};
        p.names = named("ex:rescue-participation");
        return build_participation(store, p);
    });
}

StructuralViews req4_structure(Store& store) {
    req2_time(store);
    req3_space(store);
    StructuralViews v;
    v.composition = once(store, "ex:flooding-composition", [&] {
        CompositionSpec c;
        c.composite = ex("flooding-1");
        c.components = {ex("flooded-cellar-1"), ex("power-outage-1"), ex("rescue-1"), ex("pumping-1")};
        c.constraints.push_back(
            {TemporalConstraint{AllenRelation::during, interval("2009-06-08/2009-06-14")}, std::nullopt,
             "ex:second-week-of-june"});
        c.constraints.push_back({TemporalConstraint{AllenRelation::during, CompositeTarget{}}, ex("power-outage-1"),
                                 "ex:outage-within-flooding"});
        c.constraints.push_back({TemporalConstraint{AllenRelation::before, ComponentTarget{ex("pumping-1")}},
                                 ex("flooded-cellar-1"), "ex:cellar-before-pumping"});
        c.constraints.push_back(
            {SpatialWithin{box("50.90,7.05;50.95,7.10")}, ex("rescue-1"), "ex:rescue-in-town"});
        c.constraints.push_back(
            {SpatioTemporalWithin{parse_trajectory("2009-06-10T00:00:00Z/2009-06-10T12:00:00Z@50.90,7.05;50.95,7.10|"
                                                   "2009-06-10T12:00:01Z/2009-06-10T23:59:59Z@50.80,7.00;51.00,7.20")},
             ex("rescue-1"), "ex:rescue-route"});
        c.composite_concept = "ex:flooding-composite";
        c.component_concept = "ex:flooding-component";
        c.names = named("ex:flooding-composition");
        return build_composition(store, c);
    });
    auto causality = [&](const char* name, const char* cause, const char* effect, const char* why) {
        return once(store, name, [&] {
            CausalitySpec c;
            c.cause = ex(cause);
            c.effect = ex(effect);
            c.justification = Justification::text(why);
            c.names = named(name);
            return build_causality(store, c);
        });
    };
    v.storm_flooding = causality("ex:storm-causes-flooding", "heavy-storm-1", "flooding-1", "meteorology");
    v.flooding_cellar = causality("ex:flooding-causes-cellar", "flooding-1", "flooded-cellar-1", "hydrology");
    v.flooding_rescue = causality("ex:flooding-causes-rescue", "flooding-1", "rescue-1", "hydrology");
    v.correlation = once(store, "ex:cellar-rescue-correlation", [&] {
        CorrelationSpec c;
        c.correlates = {ex("rescue-1"), ex("flooded-cellar-1")};
        c.justification = Justification::text("common cause: flooding");
        c.names = named("ex:cellar-rescue-correlation");
        return build_correlation(store, c);
    });
    return v;
}

DocumentationViews req5_documentation(Store& store) {
    emergency_entities(store);
    DocumentationViews v;
    v.photo = once(store, "ex:cellar-photo", [&] {
        DocumentationSpec d;
        d.documented_event = ex("flooded-cellar-1");
        d.documenters = {ex("photo-1")};
        d.names = named("ex:cellar-photo");
        return build_documentation(store, d);
    });
    v.call = once(store, "ex:outage-report", [&] {
        DocumentationSpec d;
        d.documented_event = ex("power-outage-1");
        d.documenters = {ex("hotline-call-1"), ex("call-recording-1")};
        d.names = named("ex:outage-report");
        return build_documentation(store, d);
    });
    return v;
}

InterpretationViews req6_interpretations(Store& store) {
    PatternView participation = req1_participation(store);
    InterpretationViews v;
    auto causality = [&](const char* name, const char* cause, const char* why) {
        return once(store, name, [&] {
            CausalitySpec c;
            c.cause = ex(cause);
            c.effect = ex("power-outage-1");
            c.justification = Justification::text(why);
            c.names = named(name);
            return build_causality(store, c);
        });
    };
    v.pole_causality = causality("ex:pole-causes-outage", "snapped-power-pole-1", "laws of physics");
    v.plant_causality = causality("ex:plant-causes-outage", "power-plant-problem-1", "grid operator report");
    auto interpretation = [&](const char* name, const char* interpretant, const PatternView& cause) {
        return once(store, name, [&] {
            InterpretationSpec i;
            i.interpreted_event = ex("power-outage-1");
            i.interpretant_iri = interpretant;
            i.specializes = "dom:PowerOutage";
            i.relevant_situations = {cause.situation, participation.situation};
            i.names = named(name);
            return build_interpretation(store, i);
        });
    };
    v.officer_a = interpretation("ex:officer-A", "ex:pole-outage", v.pole_causality);
    v.officer_b = interpretation("ex:officer-B", "ex:plant-outage", v.plant_causality);
    return v;
}

Store build_emergency() {
    Store store = scenario_store();
    req1_participation(store);
    req2_time(store);
    req3_space(store);
    req4_structure(store);
    req5_documentation(store);
    req6_interpretations(store);
    return store;
}

} // namespace eventf::testing
