#pragma once

#include "eventf/entity.hpp"
#include "eventf/spacetime.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace eventf {

struct Triple {
    EntityRef subject;
    Property property;
    EntityRef object;

    bool operator==(const Triple&) const = default;
};

/// Lexicographic by subject, property name, object.
bool operator<(const Triple& a, const Triple& b) noexcept;

/// Literal-valued annotations carried by an entity.
///
/// `label` may sit on any entity; `value` only on regions (and must match
/// the region kind); the remaining three describe composition constraints
/// and only sit on Parameters.
struct Attributes {
    std::optional<std::string> label;
    std::optional<RegionValue> value;
    std::optional<AllenRelation> relation;
    std::optional<EntityRef> relative_to;
    std::optional<EntityRef> applies_to;

    bool empty() const noexcept {
        return !label && !value && !relation && !relative_to && !applies_to;
    }
    bool operator==(const Attributes&) const = default;
};

/// Read side of the typed property graph. Instances obtained through
/// Store::snapshot() are immutable and may be shared between threads.
class Graph {
public:
    const std::map<std::string, std::string>& prefixes() const noexcept { return prefixes_; }
    const std::map<EntityRef, Kind>& entities() const noexcept { return entities_; }
    const std::set<Triple>& edges() const noexcept { return edges_; }
    const std::map<EntityRef, Attributes>& attributes() const noexcept { return attributes_; }

    /// Kind of a stored entity or built-in vocabulary concept.
    std::optional<Kind> kind_of(const EntityRef& e) const;
    bool contains(const EntityRef& e) const { return kind_of(e).has_value(); }

    /// Wildcard match; nullopt positions match anything. Sorted.
    std::vector<Triple> query(const std::optional<EntityRef>& subject,
                              std::optional<Property> property,
                              const std::optional<EntityRef>& object) const;
    bool has_edge(const EntityRef& s, Property p, const EntityRef& o) const;
    /// Sorted objects of (s, p, *).
    std::vector<EntityRef> objects(const EntityRef& s, Property p) const;
    /// Sorted subjects of (*, p, o).
    std::vector<EntityRef> subjects(Property p, const EntityRef& o) const;

    const Attributes* attributes_of(const EntityRef& e) const;
    std::vector<EntityRef> entities_of_kind(Kind k) const;

    /// Namespace + local name; vocabulary names expand under kVocabNamespace.
    std::string expand(const EntityRef& e) const;

    std::size_t entity_count() const noexcept { return entities_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return entities_.empty() && prefixes_.empty(); }

    bool operator==(const Graph& other) const;

private:
    friend class Store;

    std::map<std::string, std::string> prefixes_;
    std::map<EntityRef, Kind> entities_;
    std::set<Triple> edges_;
    // object -> triples with that object, for reverse lookups
    std::map<EntityRef, std::set<Triple>> by_object_;
    std::map<EntityRef, Attributes> attributes_;
};

using Snapshot = std::shared_ptr<const Graph>;

/// Single-writer mutable store. All assertions are checked against the
/// domain/range table; a rejected assertion leaves the store unchanged.
class Store {
public:
    Store() = default;
    explicit Store(Graph g) : graph_(std::move(g)) {}

    /// Declaring an identical binding twice is a no-op; rebinding throws
    /// PrefixConflict. The `f` prefix is reserved.
    void declare_prefix(const std::string& prefix, const std::string& ns);
    bool has_prefix(std::string_view prefix) const;

    /// Throws DuplicateIri, UndeclaredPrefix, InvalidIri or ReservedIri.
    EntityRef new_entity(std::string_view iri, Kind kind);
    /// Returns the existing entity when it already has `kind`, creates it
    /// when absent, throws KindConflict otherwise.
    EntityRef ensure_entity(std::string_view iri, Kind kind);

    /// Idempotent. Throws UnknownEntity, DomainViolation, RangeViolation.
    Triple assert_edge(const EntityRef& s, Property p, const EntityRef& o);
    /// Removes an edge if present; returns whether it was present.
    bool retract_edge(const EntityRef& s, Property p, const EntityRef& o);

    void set_label(const EntityRef& e, std::string label);
    /// The variant must match the region kind (TimeInterval, GeoBox, Trajectory).
    void set_value(const EntityRef& region, RegionValue value);
    void set_relation(const EntityRef& parameter, AllenRelation r);
    void set_relative_to(const EntityRef& parameter, const EntityRef& event);
    void set_applies_to(const EntityRef& parameter, const EntityRef& event);

    /// Copies every prefix, entity, edge and attribute of `other`. Throws
    /// PrefixConflict or KindConflict on incompatible content, and
    /// InvalidLiteral when an attribute differs; the store is untouched then.
    void merge(const Graph& other);

    std::vector<Triple> query_edges(const std::optional<EntityRef>& subject = std::nullopt,
                                    std::optional<Property> property = std::nullopt,
                                    const std::optional<EntityRef>& object = std::nullopt) const {
        return graph_.query(subject, property, object);
    }

    const Graph& graph() const noexcept { return graph_; }
    Snapshot snapshot() const { return std::make_shared<const Graph>(graph_); }

    /// Next unused `f-inst:<pattern>-<n>` base name; declares `f-inst`.
    std::string mint(std::string_view pattern);

private:
    Kind require(const EntityRef& e) const;
    Attributes& attrs(const EntityRef& e);

    Graph graph_;
    std::unordered_map<std::string, std::uint64_t> counters_;
};

} // namespace eventf
