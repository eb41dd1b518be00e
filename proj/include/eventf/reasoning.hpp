#pragma once

#include "eventf/graph.hpp"
#include "eventf/patterns.hpp"

#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace eventf {

/// Restricts reasoning to the relevant situations of one interpretation.
/// An empty scope sees every pattern situation.
struct Scope {
    std::optional<EntityRef> interpretation;

    static Scope all() { return {}; }
    static Scope of(EntityRef interpretation) { return Scope{std::move(interpretation)}; }
};

/// Pattern situations visible in `scope`, sorted. Throws NotAnInterpretation
/// when the scope names something that is not an interpretation situation.
std::vector<EntityRef> visible_situations(const Graph& graph, const Scope& scope);

enum class PartsDirection : std::uint8_t { Parts, Wholes };

/// Transitive parts (or wholes) of `event`, excluding the event itself.
std::set<EntityRef> parts_closure(const Graph& graph, const EntityRef& event, const Scope& scope,
                                  PartsDirection direction);

struct CausalEdge {
    EntityRef cause;
    EntityRef effect;
    /// Justification description, empty when missing.
    EntityRef justification;
    EntityRef situation;

    auto operator<=>(const CausalEdge&) const = default;
};

struct CausalGraph {
    EntityRef root;
    /// Reached events, excluding the root.
    std::set<EntityRef> nodes;
    /// Edges traversed, sorted.
    std::vector<CausalEdge> edges;
    bool has_cycle = false;
};

enum class CausalDirection : std::uint8_t { Ancestors, Descendants };

/// Every causal edge of the visible causality situations, sorted.
std::vector<CausalEdge> causal_edges(const Graph& graph, const Scope& scope);

CausalGraph causal_chain(const Graph& graph, const EntityRef& event, const Scope& scope, CausalDirection direction);

struct InferredCorrelation {
    /// first < second
    EntityRef first;
    EntityRef second;
    std::set<EntityRef> common_causes;
    /// A visible correlation situation already lists both events.
    bool already_asserted = false;

    bool operator==(const InferredCorrelation&) const = default;
};

/// Unordered pairs of distinct events with a common causal ancestor and no
/// direct causality between them, sorted by (first, second).
std::vector<InferredCorrelation> infer_correlations(const Graph& graph, const Scope& scope);

struct CausalConflict {
    EntityRef effect;
    EntityRef cause_a;
    EntityRef situation_a;
    EntityRef cause_b;
    EntityRef situation_b;

    auto operator<=>(const CausalConflict&) const = default;
};

struct InterpretationDiff {
    std::vector<EntityRef> shared;
    std::vector<EntityRef> only_a;
    std::vector<EntityRef> only_b;
    std::vector<CausalConflict> conflicts;
};

/// Throws NotAnInterpretation or DifferentInterpretedEvents.
InterpretationDiff diff_interpretations(const Graph& graph, const EntityRef& a, const EntityRef& b);

struct ByParticipant {
    EntityRef object;
};
struct ByInterpretant {
    /// An interpretant concept or a domain concept it specializes.
    EntityRef concept_ref;
};
struct ByDocumenter {
    EntityRef documenter;
};
struct ByTimeOverlap {
    TimeInterval interval;
};
using EventQuery = std::variant<ByParticipant, ByInterpretant, ByDocumenter, ByTimeOverlap>;

/// Sorted, duplicate-free events matching the query.
std::vector<EntityRef> find_events(const Graph& graph, const EventQuery& query);

} // namespace eventf
