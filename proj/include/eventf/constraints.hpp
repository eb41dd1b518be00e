#pragma once

#include "eventf/graph.hpp"
#include "eventf/patterns.hpp"

#include <string>
#include <vector>

namespace eventf {

enum class ConstraintStatus : std::uint8_t { Satisfied, Violated, Inapplicable };

std::string_view constraint_status_name(ConstraintStatus s) noexcept;

struct ConstraintResult {
    ConstraintStatus status;
    std::string detail;
    /// Offending entities when Violated, missing ones when Inapplicable.
    std::vector<EntityRef> entities;
};

/// Time regions reachable through hasQuality/hasRegion, sorted.
std::vector<TimeInterval> event_times(const Graph& graph, const EntityRef& entity);
/// Space regions reachable through hasQuality/hasRegion.
std::vector<GeoBox> locations(const Graph& graph, const EntityRef& object);
/// Objects taking part in `event` according to any participation situation.
std::vector<EntityRef> participants_of(const Graph& graph, const EntityRef& event);

/// Components a constraint applies to within its composition.
std::vector<EntityRef> constrained_components(const CompositionSpec& composition, const ConstraintSpec& c);

/// Evaluates one composition constraint for one component. Missing
/// qualities give Inapplicable, never Satisfied. Throws NotAComponent.
ConstraintResult check_constraint(const Graph& graph, const PatternView& composition, const EntityRef& component,
                                  const ConstraintSpec& c);

} // namespace eventf
