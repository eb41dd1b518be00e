#include "eventf/reasoning.hpp"
#include "eventf/constraints.hpp"
#include "eventf/error.hpp"
#include "eventf/validation.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace eventf {

namespace {

void require_entity(const Graph& g, const EntityRef& e) {
    if (!g.contains(e)) throw Error(Errc::UnknownEntity, "unknown entity '" + e.iri + "'");
}

PatternView interpretation_view(const Graph& g, const EntityRef& s) {
    if (situation_pattern(g, s) != PatternKind::Interpretation) {
        throw Error(Errc::NotAnInterpretation, "'" + s.iri + "' is not an interpretation situation");
    }
    return view_of(g, s);
}

std::vector<PatternView> views_of_kind(const Graph& g, const Scope& scope, PatternKind kind) {
    std::vector<PatternView> out;
    for (const auto& s : visible_situations(g, scope)) {
        if (situation_pattern(g, s) == kind) out.push_back(view_of(g, s));
    }
    return out;
}

using Adjacency = std::map<EntityRef, std::vector<EntityRef>>;

std::set<EntityRef> reach(const Adjacency& adj, const EntityRef& seed) {
    std::set<EntityRef> seen;
    std::deque<EntityRef> queue{seed};
    while (!queue.empty()) {
        EntityRef u = std::move(queue.front());
        queue.pop_front();
        auto it = adj.find(u);
        if (it == adj.end()) continue;
        for (const auto& v : it->second) {
            if (seen.insert(v).second) queue.push_back(v);
        }
    }
    seen.erase(seed);
    return seen;
}

bool has_cycle(const Adjacency& adj) {
    enum class Mark { White, Grey, Black };
    std::map<EntityRef, Mark> mark;
    for (const auto& [start, _] : adj) {
        if (mark[start] != Mark::White) continue;
        // iterative DFS: (node, next child index)
        std::vector<std::pair<EntityRef, std::size_t>> stack{{start, 0}};
        mark[start] = Mark::Grey;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            auto it = adj.find(u);
            if (it == adj.end() || i >= it->second.size()) {
                mark[u] = Mark::Black;
                stack.pop_back();
                continue;
            }
            const EntityRef& v = it->second[i++];
            Mark& m = mark[v];
            if (m == Mark::Grey) return true;
            if (m == Mark::White) {
                m = Mark::Grey;
                stack.emplace_back(v, 0);
            }
        }
    }
    return false;
}

} // namespace

std::vector<EntityRef> visible_situations(const Graph& g, const Scope& scope) {
    if (!scope.interpretation) return pattern_situations(g);
    auto view = interpretation_view(g, *scope.interpretation);
    std::vector<EntityRef> out;
    for (const auto& s : view.interpretation().relevant_situations) {
        if (situation_pattern(g, s)) out.push_back(s);
    }
    return out;
}

std::set<EntityRef> parts_closure(const Graph& g, const EntityRef& event, const Scope& scope,
                                  PartsDirection direction) {
    require_entity(g, event);
    Adjacency adj;
    for (const auto& v : views_of_kind(g, scope, PatternKind::Composition)) {
        const auto& c = v.composition();
        if (c.composite.empty()) continue;
        for (const auto& part : c.components) {
            if (direction == PartsDirection::Parts) {
                adj[c.composite].push_back(part);
            } else {
                adj[part].push_back(c.composite);
            }
        }
    }
    return reach(adj, event);
}

std::vector<CausalEdge> causal_edges(const Graph& g, const Scope& scope) {
    std::vector<CausalEdge> out;
    for (const auto& v : views_of_kind(g, scope, PatternKind::Causality)) {
        const auto& c = v.causality();
        if (c.cause.empty() || c.effect.empty()) continue;
        out.push_back({c.cause, c.effect, c.justification.description.value_or(EntityRef{}), v.situation});
    }
    std::sort(out.begin(), out.end());
    return out;
}

CausalGraph causal_chain(const Graph& g, const EntityRef& event, const Scope& scope, CausalDirection direction) {
    require_entity(g, event);
    auto edges = causal_edges(g, scope);
    // Edges keyed by the endpoint traversal starts from.
    std::map<EntityRef, std::vector<const CausalEdge*>> out_edges;
    for (const auto& e : edges) {
        const EntityRef& from = direction == CausalDirection::Ancestors ? e.effect : e.cause;
        out_edges[from].push_back(&e);
    }
    CausalGraph result;
    result.root = event;
    std::set<EntityRef> seen{event};
    std::deque<EntityRef> queue{event};
    Adjacency sub;
    while (!queue.empty()) {
        EntityRef u = std::move(queue.front());
        queue.pop_front();
        auto it = out_edges.find(u);
        if (it == out_edges.end()) continue;
        for (const CausalEdge* e : it->second) {
            result.edges.push_back(*e);
            const EntityRef& v = direction == CausalDirection::Ancestors ? e->cause : e->effect;
            sub[u].push_back(v);
            if (seen.insert(v).second) queue.push_back(v);
        }
    }
    seen.erase(event);
    result.nodes = std::move(seen);
    std::sort(result.edges.begin(), result.edges.end());
    result.has_cycle = has_cycle(sub);
    return result;
}

std::vector<InferredCorrelation> infer_correlations(const Graph& g, const Scope& scope) {
    auto edges = causal_edges(g, scope);
    Adjacency parents;
    std::set<EntityRef> events;
    std::set<std::pair<EntityRef, EntityRef>> direct;
    for (const auto& e : edges) {
        parents[e.effect].push_back(e.cause);
        events.insert(e.cause);
        events.insert(e.effect);
        direct.emplace(std::min(e.cause, e.effect), std::max(e.cause, e.effect));
    }
    std::map<EntityRef, std::set<EntityRef>> ancestors;
    for (const auto& e : events) ancestors[e] = reach(parents, e);

    std::vector<std::set<EntityRef>> asserted;
    for (const auto& v : views_of_kind(g, scope, PatternKind::Correlation)) {
        const auto& c = v.correlation().correlates;
        asserted.emplace_back(c.begin(), c.end());
    }

    std::vector<InferredCorrelation> out;
    for (auto a = events.begin(); a != events.end(); ++a) {
        for (auto b = std::next(a); b != events.end(); ++b) {
            if (direct.count({*a, *b})) continue;
            const auto& aa = ancestors[*a];
            const auto& ab = ancestors[*b];
            std::set<EntityRef> common;
            std::set_intersection(aa.begin(), aa.end(), ab.begin(), ab.end(), std::inserter(common, common.end()));
            if (common.empty()) continue;
            bool known = std::any_of(asserted.begin(), asserted.end(),
                                     [&](const std::set<EntityRef>& s) { return s.count(*a) && s.count(*b); });
            out.push_back({*a, *b, std::move(common), known});
        }
    }
    return out;
}

InterpretationDiff diff_interpretations(const Graph& g, const EntityRef& a, const EntityRef& b) {
    auto va = interpretation_view(g, a);
    auto vb = interpretation_view(g, b);
    const auto& ia = va.interpretation();
    const auto& ib = vb.interpretation();
    if (ia.interpreted_event != ib.interpreted_event) {
        throw Error(Errc::DifferentInterpretedEvents, "'" + a.iri + "' interprets '" + ia.interpreted_event.iri +
                                                          "' but '" + b.iri + "' interprets '" +
                                                          ib.interpreted_event.iri + "'");
    }
    InterpretationDiff diff;
    const auto& ra = ia.relevant_situations;
    const auto& rb = ib.relevant_situations;
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(diff.shared));
    std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(diff.only_a));
    std::set_difference(rb.begin(), rb.end(), ra.begin(), ra.end(), std::back_inserter(diff.only_b));

    auto sound_causality = [&](const EntityRef& s) -> std::optional<CausalitySpec> {
        if (situation_pattern(g, s) != PatternKind::Causality) return std::nullopt;
        if (validate_situation(g, s).has_errors()) return std::nullopt;
        return view_of(g, s).causality();
    };
    for (const auto& sa : ra) {
        auto ca = sound_causality(sa);
        if (!ca) continue;
        for (const auto& sb : rb) {
            auto cb = sound_causality(sb);
            if (!cb || ca->effect != cb->effect || ca->cause == cb->cause) continue;
            diff.conflicts.push_back({ca->effect, ca->cause, sa, cb->cause, sb});
        }
    }
    std::sort(diff.conflicts.begin(), diff.conflicts.end());
    return diff;
}

std::vector<EntityRef> find_events(const Graph& g, const EventQuery& query) {
    std::vector<EntityRef> out;
    Scope all;
    std::visit(
        [&](const auto& q) {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, ByParticipant>) {
                for (const auto& v : views_of_kind(g, all, PatternKind::Participation)) {
                    const auto& p = v.participation();
                    for (const auto& part : p.participants) {
                        if (part.object == q.object) out.push_back(p.described_event);
                    }
                }
            } else if constexpr (std::is_same_v<T, ByInterpretant>) {
                for (const auto& v : views_of_kind(g, all, PatternKind::Interpretation)) {
                    const auto& i = v.interpretation();
                    if (i.interpretant_iri == q.concept_ref.iri || i.specializes == q.concept_ref.iri) {
                        out.push_back(i.interpreted_event);
                    }
                }
            } else if constexpr (std::is_same_v<T, ByDocumenter>) {
                for (const auto& v : views_of_kind(g, all, PatternKind::Documentation)) {
                    const auto& d = v.documentation();
                    if (std::binary_search(d.documenters.begin(), d.documenters.end(), q.documenter)) {
                        out.push_back(d.documented_event);
                    }
                }
            } else {
                for (const auto& e : g.entities_of_kind(Kind::Event)) {
                    auto times = event_times(g, e);
                    if (std::any_of(times.begin(), times.end(),
                                    [&](const TimeInterval& t) { return intervals_intersect(t, q.interval); })) {
                        out.push_back(e);
                    }
                }
            }
        },
        query);
    out.erase(std::remove_if(out.begin(), out.end(), [](const EntityRef& e) { return e.empty(); }), out.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace eventf
