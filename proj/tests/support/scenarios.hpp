#pragma once

#include "eventf/patterns.hpp"

#include <string>

namespace eventf::testing {

inline constexpr const char* kExNamespace = "http://example.org/emergency#";
inline constexpr const char* kDomNamespace = "http://example.org/domain#";

/// Store with `ex:` and `dom:` declared.
Store scenario_store();

EntityRef add_event(Store& store, const std::string& iri);
EntityRef add_object(Store& store, const std::string& iri);
/// Situation `iri`, description `iri-description`.
PatternNames named(const std::string& iri);

EntityRef ex(const std::string& local);

struct FigG {
    Store store;
    PatternView causality;
    PatternView participation;
};

/// The snapped power pole causing the power outage, with person-1 and
/// house-1 taking part in the outage.
FigG build_fig_g();

/// Builders for each requirement of the emergency scenario. Each one adds
/// to `store` whatever it needs that is not there yet, so they compose.
PatternView req1_participation(Store& store);
/// Absolute event times plus a time parameter; returns the participation.
PatternView req2_time(Store& store);
/// Object locations and a participation with a location parameter.
PatternView req3_space(Store& store);
struct StructuralViews {
    PatternView composition;
    PatternView storm_flooding;
    PatternView flooding_cellar;
    PatternView flooding_rescue;
    PatternView correlation;
};
StructuralViews req4_structure(Store& store);
struct DocumentationViews {
    PatternView photo;
    PatternView call;
};
DocumentationViews req5_documentation(Store& store);
struct InterpretationViews {
    PatternView pole_causality;
    PatternView plant_causality;
    PatternView officer_a;
    PatternView officer_b;
};
InterpretationViews req6_interpretations(Store& store);

/// All six requirements in one store.
Store build_emergency();

} // namespace eventf::testing
