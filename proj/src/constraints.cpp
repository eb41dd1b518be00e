#include "eventf/constraints.hpp"
#include "eventf/error.hpp"

#include <algorithm>

namespace eventf {

namespace {

template <class T>
std::vector<T> region_values(const Graph& g, const EntityRef& e) {
    std::vector<T> out;
    for (const auto& q : g.objects(e, Property::hasQuality)) {
        for (const auto& r : g.objects(q, Property::hasRegion)) {
            const Attributes* a = g.attributes_of(r);
            if (a && a->value) {
                if (const auto* v = std::get_if<T>(&*a->value)) out.push_back(*v);
            }
        }
    }
    return out;
}

ConstraintResult inapplicable(std::string detail, std::vector<EntityRef> missing) {
    return {ConstraintStatus::Inapplicable, std::move(detail), std::move(missing)};
}

// Single time of an entity, or an Inapplicable result explaining why not.
std::variant<TimeInterval, ConstraintResult> single_time(const Graph& g, const EntityRef& e) {
    auto times = event_times(g, e);
    times.erase(std::unique(times.begin(), times.end()), times.end());
    if (times.empty()) return inapplicable(e.iri + " has no time quality", {e});
    if (times.size() > 1) return inapplicable(e.iri + " has several time qualities", {e});
    return times.front();
}

// Checks every participant location against `box`.
ConstraintResult check_locations(const Graph& g, const EntityRef& component, const GeoBox& box,
                                 const std::string& where) {
    auto objects = participants_of(g, component);
    if (objects.empty()) return inapplicable(component.iri + " has no participating objects", {component});
    std::vector<EntityRef> outside, missing;
    for (const auto& o : objects) {
        auto boxes = locations(g, o);
        if (boxes.empty()) {
            missing.push_back(o);
            continue;
        }
        bool inside = std::all_of(boxes.begin(), boxes.end(), [&](const GeoBox& b) { return box_contains(box, b); });
        if (!inside) outside.push_back(o);
    }
    if (!outside.empty()) {
        return {ConstraintStatus::Violated, "participants outside " + where, std::move(outside)};
    }
    if (!missing.empty()) return inapplicable("participants without location", std::move(missing));
    return {ConstraintStatus::Satisfied, "participants within " + where, {}};
}

} // namespace

std::string_view constraint_status_name(ConstraintStatus s) noexcept {
    switch (s) {
    case ConstraintStatus::Satisfied: return "SATISFIED";
    case ConstraintStatus::Violated: return "VIOLATED";
    case ConstraintStatus::Inapplicable: return "INAPPLICABLE";
    }
    return "?";
}

std::vector<TimeInterval> event_times(const Graph& g, const EntityRef& e) {
    auto out = region_values<TimeInterval>(g, e);
    std::sort(out.begin(), out.end(), [](const TimeInterval& a, const TimeInterval& b) {
        return std::tie(a.start, a.end) < std::tie(b.start, b.end);
    });
    return out;
}

std::vector<GeoBox> locations(const Graph& g, const EntityRef& o) { return region_values<GeoBox>(g, o); }

std::vector<EntityRef> participants_of(const Graph& g, const EntityRef& event) {
    std::vector<EntityRef> out;
    for (const auto& s : g.subjects(Property::includesEvent, event)) {
        if (situation_pattern(g, s) != PatternKind::Participation) continue;
        auto view = view_of(g, s);
        const auto& p = view.participation();
        if (p.described_event != event) continue;
        for (const auto& part : p.participants) out.push_back(part.object);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EntityRef> constrained_components(const CompositionSpec& composition, const ConstraintSpec& c) {
    if (c.applies_to) return {*c.applies_to};
    std::vector<EntityRef> out;
    const ComponentTarget* self = nullptr;
    if (const auto* t = std::get_if<TemporalConstraint>(&c.body)) self = std::get_if<ComponentTarget>(&t->target);
    for (const auto& e : composition.components) {
        if (self && self->event == e) continue;
        out.push_back(e);
    }
    return out;
}

ConstraintResult check_constraint(const Graph& g, const PatternView& view, const EntityRef& component,
                                  const ConstraintSpec& c) {
    const auto& comp = view.composition();
    if (std::find(comp.components.begin(), comp.components.end(), component) == comp.components.end()) {
        throw Error(Errc::NotAComponent, "'" + component.iri + "' is not a component of " + view.situation.iri);
    }

    if (const auto* t = std::get_if<TemporalConstraint>(&c.body)) {
        auto own = single_time(g, component);
        if (auto* r = std::get_if<ConstraintResult>(&own)) return *r;
        TimeInterval target;
        std::string target_name;
        if (const auto* abs = std::get_if<TimeInterval>(&t->target)) {
            target = *abs;
            target_name = format_time_interval(*abs);
        } else {
            EntityRef other = std::holds_alternative<CompositeTarget>(t->target)
                                  ? comp.composite
                                  : std::get<ComponentTarget>(t->target).event;
            auto theirs = single_time(g, other);
            if (auto* r = std::get_if<ConstraintResult>(&theirs)) return *r;
            target = std::get<TimeInterval>(theirs);
            target_name = other.iri;
        }
        AllenRelation actual;
        try {
            actual = allen_relation(std::get<TimeInterval>(own), target);
        } catch (const Error& e) {
            return inapplicable(e.what(), {component});
        }
        std::string detail = component.iri + " " + std::string(allen_name(actual)) + " " + target_name;
        if (actual == t->relation) return {ConstraintStatus::Satisfied, detail, {}};
        return {ConstraintStatus::Violated, detail + ", expected " + std::string(allen_name(t->relation)), {component}};
    }

    if (const auto* s = std::get_if<SpatialWithin>(&c.body)) {
        return check_locations(g, component, s->box, format_geo_box(s->box));
    }

    const auto& traj = std::get<SpatioTemporalWithin>(c.body).trajectory;
    auto own = single_time(g, component);
    if (auto* r = std::get_if<ConstraintResult>(&own)) return *r;
    const TimeInterval& when = std::get<TimeInterval>(own);
    bool any_leg = false;
    std::optional<ConstraintResult> pending;
    for (const auto& leg : traj.legs) {
        if (!intervals_intersect(leg.interval, when)) continue;
        any_leg = true;
        auto r = check_locations(g, component, leg.box, "leg " + format_time_interval(leg.interval));
        if (r.status == ConstraintStatus::Violated) return r;
        if (r.status == ConstraintStatus::Inapplicable && !pending) pending = std::move(r);
    }
    if (!any_leg) {
        return {ConstraintStatus::Violated, component.iri + " occurs outside every trajectory leg", {component}};
    }
    if (pending) return *pending;
    return {ConstraintStatus::Satisfied, "participants follow the trajectory", {}};
}

} // namespace eventf
