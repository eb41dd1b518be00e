#include "eventf/graph.hpp"
#include "eventf/error.hpp"

#include <algorithm>

namespace eventf {

bool operator<(const Triple& a, const Triple& b) noexcept {
    if (a.subject != b.subject) return a.subject < b.subject;
    if (a.property != b.property) return property_name(a.property) < property_name(b.property);
    return a.object < b.object;
}

std::optional<Kind> Graph::kind_of(const EntityRef& e) const {
    if (auto it = entities_.find(e); it != entities_.end()) return it->second;
    if (auto v = parse_vocab(e)) return vocab_kind(*v);
    return std::nullopt;
}

std::vector<Triple> Graph::query(const std::optional<EntityRef>& subject, std::optional<Property> property,
                                 const std::optional<EntityRef>& object) const {
    std::vector<Triple> out;
    auto matches = [&](const Triple& t) {
        return (!property || t.property == *property) && (!object || t.object == *object) &&
               (!subject || t.subject == *subject);
    };
    if (subject) {
        // "classifies" sorts first among property names, the empty object first among objects.
        auto first = edges_.lower_bound(Triple{*subject, Property::classifies, EntityRef{}});
        for (auto i = first; i != edges_.end() && i->subject == *subject; ++i) {
            if (matches(*i)) out.push_back(*i);
        }
        return out;
    }
    if (object) {
        auto it = by_object_.find(*object);
        if (it == by_object_.end()) return out;
        for (const auto& t : it->second) {
            if (matches(t)) out.push_back(t);
        }
        return out;
    }
    for (const auto& t : edges_) {
        if (matches(t)) out.push_back(t);
    }
    return out;
}

bool Graph::has_edge(const EntityRef& s, Property p, const EntityRef& o) const {
    return edges_.count(Triple{s, p, o}) != 0;
}

std::vector<EntityRef> Graph::objects(const EntityRef& s, Property p) const {
    std::vector<EntityRef> out;
    for (auto& t : query(s, p, std::nullopt)) out.push_back(std::move(t.object));
    return out;
}

std::vector<EntityRef> Graph::subjects(Property p, const EntityRef& o) const {
    std::vector<EntityRef> out;
    for (auto& t : query(std::nullopt, p, o)) out.push_back(std::move(t.subject));
    return out;
}

const Attributes* Graph::attributes_of(const EntityRef& e) const {
    auto it = attributes_.find(e);
    return it == attributes_.end() ? nullptr : &it->second;
}

std::vector<EntityRef> Graph::entities_of_kind(Kind k) const {
    std::vector<EntityRef> out;
    for (const auto& [e, kind] : entities_) {
        if (kind == k) out.push_back(e);
    }
    return out;
}

std::string Graph::expand(const EntityRef& e) const {
    auto prefix = e.prefix();
    if (prefix == kVocabPrefix) return std::string(kVocabNamespace) + std::string(e.local());
    auto it = prefixes_.find(std::string(prefix));
    if (it == prefixes_.end()) return e.iri;
    return it->second + std::string(e.local());
}

bool Graph::operator==(const Graph& other) const {
    return prefixes_ == other.prefixes_ && entities_ == other.entities_ && edges_ == other.edges_ &&
           attributes_ == other.attributes_;
}

void Store::declare_prefix(const std::string& prefix, const std::string& ns) {
    if (!valid_prefix_name(prefix)) throw Error(Errc::InvalidIri, "invalid prefix name '" + prefix + "'");
    if (prefix == kVocabPrefix) {
        if (ns == kVocabNamespace) return;
        throw Error(Errc::ReservedIri, "prefix 'f' is reserved for <" + std::string(kVocabNamespace) + ">");
    }
    auto [it, inserted] = graph_.prefixes_.emplace(prefix, ns);
    if (!inserted && it->second != ns) {
        throw Error(Errc::PrefixConflict,
                    "prefix '" + prefix + "' already bound to <" + it->second + ">, not <" + ns + ">");
    }
}

bool Store::has_prefix(std::string_view prefix) const {
    return prefix == kVocabPrefix || graph_.prefixes_.count(std::string(prefix)) != 0;
}

EntityRef Store::new_entity(std::string_view iri, Kind kind) {
    auto q = split_qname(iri);
    if (!q) throw Error(Errc::InvalidIri, "not a qualified name: '" + std::string(iri) + "'");
    if (q->prefix == kVocabPrefix) {
        throw Error(Errc::ReservedIri, "the f: namespace is reserved: '" + std::string(iri) + "'");
    }
    if (!has_prefix(q->prefix)) {
        throw Error(Errc::UndeclaredPrefix, "undeclared prefix '" + std::string(q->prefix) + "' in '" +
                                                std::string(iri) + "'");
    }
    EntityRef ref{std::string(iri)};
    auto [it, inserted] = graph_.entities_.emplace(ref, kind);
    if (!inserted) {
        throw Error(Errc::DuplicateIri, "entity '" + ref.iri + "' already exists as " +
                                            std::string(kind_name(it->second)));
    }
    return ref;
}

EntityRef Store::ensure_entity(std::string_view iri, Kind kind) {
    EntityRef ref{std::string(iri)};
    if (auto existing = graph_.kind_of(ref)) {
        if (*existing != kind) {
            throw Error(Errc::KindConflict, "'" + ref.iri + "' is a " + std::string(kind_name(*existing)) +
                                                ", not a " + std::string(kind_name(kind)));
        }
        return ref;
    }
    return new_entity(iri, kind);
}

Kind Store::require(const EntityRef& e) const {
    auto k = graph_.kind_of(e);
    if (!k) throw Error(Errc::UnknownEntity, "unknown entity '" + e.iri + "'");
    return *k;
}

Triple Store::assert_edge(const EntityRef& s, Property p, const EntityRef& o) {
    Kind sk = require(s);
    if (parse_vocab(s)) throw Error(Errc::ReservedIri, "vocabulary concept " + s.iri + " cannot be a subject");
    Kind ok = require(o);
    if (!in_domain(p, sk)) {
        throw Error(Errc::DomainViolation, std::string(property_name(p)) + " expects a subject of kind " +
                                               domain_description(p) + ", got " + s.iri + " (" +
                                               std::string(kind_name(sk)) + ")");
    }
    if (!in_range(p, sk, ok)) {
        throw Error(Errc::RangeViolation, std::string(property_name(p)) + " from " +
                                              std::string(kind_name(sk)) + " expects an object of kind " +
                                              range_description(p, sk) + ", got " + o.iri + " (" +
                                              std::string(kind_name(ok)) + ")");
    }
    Triple t{s, p, o};
    if (graph_.edges_.insert(t).second) graph_.by_object_[o].insert(t);
    return t;
}

bool Store::retract_edge(const EntityRef& s, Property p, const EntityRef& o) {
    Triple t{s, p, o};
    if (graph_.edges_.erase(t) == 0) return false;
    auto it = graph_.by_object_.find(o);
    it->second.erase(t);
    if (it->second.empty()) graph_.by_object_.erase(it);
    return true;
}

Attributes& Store::attrs(const EntityRef& e) {
    require(e);
    if (parse_vocab(e)) throw Error(Errc::ReservedIri, "vocabulary concepts carry no literals");
    return graph_.attributes_[e];
}

void Store::set_label(const EntityRef& e, std::string label) { attrs(e).label = std::move(label); }

void Store::set_value(const EntityRef& region, RegionValue value) {
    Kind k = require(region);
    bool fits = (k == Kind::TimeInterval && std::holds_alternative<TimeInterval>(value)) ||
                (k == Kind::SpaceRegion && std::holds_alternative<GeoBox>(value)) ||
                (k == Kind::SpatioTemporalRegion && std::holds_alternative<Trajectory>(value));
    if (!fits) {
        throw Error(Errc::InvalidLiteral, "value literal does not fit " + region.iri + " (" +
                                              std::string(kind_name(k)) + ")");
    }
    attrs(region).value = std::move(value);
}

void Store::set_relation(const EntityRef& parameter, AllenRelation r) {
    if (require(parameter) != Kind::Parameter) {
        throw Error(Errc::DomainViolation, "allenRelation applies to Parameters only: " + parameter.iri);
    }
    attrs(parameter).relation = r;
}

void Store::set_relative_to(const EntityRef& parameter, const EntityRef& event) {
    if (require(parameter) != Kind::Parameter) {
        throw Error(Errc::DomainViolation, "relativeTo applies to Parameters only: " + parameter.iri);
    }
    if (require(event) != Kind::Event) {
        throw Error(Errc::RangeViolation, "relativeTo expects an Event, got " + event.iri);
    }
    attrs(parameter).relative_to = event;
}

void Store::set_applies_to(const EntityRef& parameter, const EntityRef& event) {
    if (require(parameter) != Kind::Parameter) {
        throw Error(Errc::DomainViolation, "appliesTo applies to Parameters only: " + parameter.iri);
    }
    if (require(event) != Kind::Event) {
        throw Error(Errc::RangeViolation, "appliesTo expects an Event, got " + event.iri);
    }
    attrs(parameter).applies_to = event;
}

void Store::merge(const Graph& other) {
    for (const auto& [prefix, ns] : other.prefixes_) {
        auto it = graph_.prefixes_.find(prefix);
        if (it != graph_.prefixes_.end() && it->second != ns) {
            throw Error(Errc::PrefixConflict,
                        "prefix '" + prefix + "' bound to both <" + it->second + "> and <" + ns + ">");
        }
    }
    for (const auto& [e, k] : other.entities_) {
        auto it = graph_.entities_.find(e);
        if (it != graph_.entities_.end() && it->second != k) {
            throw Error(Errc::KindConflict, "'" + e.iri + "' is a " + std::string(kind_name(it->second)) +
                                                " here and a " + std::string(kind_name(k)) + " there");
        }
    }
    for (const auto& [e, a] : other.attributes_) {
        auto it = graph_.attributes_.find(e);
        if (it == graph_.attributes_.end()) continue;
        const Attributes& mine = it->second;
        bool clash = (mine.label && a.label && *mine.label != *a.label) ||
                     (mine.value && a.value && *mine.value != *a.value) ||
                     (mine.relation && a.relation && *mine.relation != *a.relation) ||
                     (mine.relative_to && a.relative_to && *mine.relative_to != *a.relative_to) ||
                     (mine.applies_to && a.applies_to && *mine.applies_to != *a.applies_to);
        if (clash) throw Error(Errc::InvalidLiteral, "conflicting literal values on '" + e.iri + "'");
    }
    for (const auto& [prefix, ns] : other.prefixes_) graph_.prefixes_.emplace(prefix, ns);
    for (const auto& [e, k] : other.entities_) graph_.entities_.emplace(e, k);
    for (const auto& t : other.edges_) {
        if (graph_.edges_.insert(t).second) graph_.by_object_[t.object].insert(t);
    }
    for (const auto& [e, a] : other.attributes_) {
        Attributes& mine = graph_.attributes_[e];
        if (a.label) mine.label = a.label;
        if (a.value) mine.value = a.value;
        if (a.relation) mine.relation = a.relation;
        if (a.relative_to) mine.relative_to = a.relative_to;
        if (a.applies_to) mine.applies_to = a.applies_to;
    }
}

std::string Store::mint(std::string_view pattern) {
    declare_prefix(std::string(kInstancePrefix), std::string(kInstanceNamespace));
    auto& n = counters_[std::string(pattern)];
    while (true) {
        ++n;
        std::string base = std::string(kInstancePrefix) + ":" + std::string(pattern) + "-" + std::to_string(n);
        EntityRef probe{base};
        EntityRef probe_desc{base + "-description"};
        if (!graph_.contains(probe) && !graph_.contains(probe_desc)) return base;
    }
}

} // namespace eventf
