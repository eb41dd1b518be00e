#include "eventf/validation.hpp"
#include "eventf/constraints.hpp"
#include "eventf/error.hpp"
#include "eventf/patterns.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <set>

namespace eventf {

namespace {

constexpr std::array<RuleInfo, 27> kRules = {{
    {"CAUS-001", Severity::Error, "cause count is not one"},
    {"CAUS-002", Severity::Error, "effect count is not one"},
    {"CAUS-003", Severity::Error, "causality has no justification"},
    {"COMP-001", Severity::Error, "composite count is not one"},
    {"COMP-002", Severity::Error, "composition has no component"},
    {"COMP-003", Severity::Error, "composite is also a component"},
    {"COMP-004", Severity::Error, "composition constraint violated"},
    {"COMP-005", Severity::Warning, "composition constraint not applicable (missing data)"},
    {"COMP-006", Severity::Error, "composition constraint is malformed"},
    {"CONC-001", Severity::Warning, "concept is neither defined nor specialized"},
    {"CORR-001", Severity::Error, "fewer than two correlates"},
    {"CORR-002", Severity::Error, "correlation has no justification"},
    {"CORR-003", Severity::Warning, "correlates are directly causally related"},
    {"DESC-001", Severity::Warning, "description satisfied by no situation"},
    {"DOC-001", Severity::Error, "no documented event"},
    {"DOC-002", Severity::Error, "no documenter"},
    {"INT-001", Severity::Error, "no interpreted event"},
    {"INT-002", Severity::Error, "relevant situation is not a pattern situation"},
    {"INT-003", Severity::Error, "interpretation has no relevant situation"},
    {"PART-001", Severity::Error, "no described event"},
    {"PART-002", Severity::Error, "no participants"},
    {"PART-003", Severity::Error, "participant is not an Object"},
    {"PART-004", Severity::Warning, "participant located outside its location parameter"},
    {"PART-005", Severity::Error, "more than one time parameter"},
    {"SIT-001", Severity::Error, "situation does not satisfy exactly one description"},
    {"SIT-002", Severity::Error, "description matches no single pattern"},
    {"XREUSE-001", Severity::Warning, "concept individual shared across descriptions"},
}};

Severity severity_of(std::string_view code) {
    for (const auto& r : kRules) {
        if (r.code == code) return r.severity;
    }
    throw std::logic_error("undocumented rule " + std::string(code));
}

std::string join(const std::vector<EntityRef>& v) {
    std::string out;
    for (const auto& e : v) {
        if (!out.empty()) out += ", ";
        out += e.iri;
    }
    return out;
}

// Store-wide facts some rules consult; computed once per report.
struct Context {
    explicit Context(const Graph& g) : graph(g) {}

    const std::set<std::pair<EntityRef, EntityRef>>& causal_pairs() {
        if (!causal_loaded) {
            causal_loaded = true;
            for (const auto& s : pattern_situations(graph)) {
                if (situation_pattern(graph, s) != PatternKind::Causality) continue;
                auto v = view_of(graph, s);
                const auto& c = v.causality();
                if (!c.cause.empty() && !c.effect.empty()) {
                    causal.emplace(c.cause, c.effect);
                    causal_situation.emplace(std::make_pair(c.cause, c.effect), s);
                }
            }
        }
        return causal;
    }

    const Graph& graph;
    bool causal_loaded = false;
    std::set<std::pair<EntityRef, EntityRef>> causal;
    std::map<std::pair<EntityRef, EntityRef>, EntityRef> causal_situation;
};

class Checker {
public:
    Checker(Context& ctx, const EntityRef& situation, std::vector<Violation>& out)
        : ctx_(ctx), g_(ctx.graph), s_(situation), out_(out) {}

    void run() {
        auto descriptions = g_.objects(s_, Property::satisfies);
        if (descriptions.size() != 1) {
            emit("SIT-001", s_.iri + " satisfies " + std::to_string(descriptions.size()) + " descriptions", {});
            return;
        }
        d_ = descriptions.front();
        auto kind = description_pattern(g_, d_);
        if (!kind) {
            emit("SIT-002", d_.iri + " defines no concepts of exactly one pattern", {d_});
            return;
        }
        switch (*kind) {
        case PatternKind::Participation: participation(); break;
        case PatternKind::Composition: composition(); break;
        case PatternKind::Causality: causality(); break;
        case PatternKind::Correlation: correlation(); break;
        case PatternKind::Documentation: documentation(); break;
        case PatternKind::Interpretation: interpretation(); break;
        }
        reuse();
    }

private:
    void emit(std::string_view code, std::string message, std::vector<EntityRef> more) {
        std::vector<EntityRef> entities{s_};
        entities.insert(entities.end(), more.begin(), more.end());
        out_.push_back({std::string(code), severity_of(code), std::move(message), std::move(entities)});
    }

    std::vector<EntityRef> members(Vocab v) const {
        return classified_members(g_, s_, concepts_marked(g_, d_, v));
    }

    void participation() {
        if (members(Vocab::DescribedEvent).empty()) {
            emit("PART-001", s_.iri + " has no event classified as described event", {});
        }
        auto roles = concepts_marked(g_, d_, Vocab::Participant);
        if (classified_members(g_, s_, roles).empty()) emit("PART-002", s_.iri + " has no participants", {});
        for (const auto& role : roles) {
            for (const auto& e : g_.objects(role, Property::classifies)) {
                if (g_.kind_of(e) != Kind::Object) {
                    emit("PART-003", "participant role " + role.iri + " classifies non-Object " + e.iri, {e, role});
                }
            }
        }
        auto times = concepts_marked(g_, d_, Vocab::TimeParameter);
        if (times.size() > 1) emit("PART-005", d_.iri + " defines several time parameters", times);
        for (const auto& lp : concepts_marked(g_, d_, Vocab::LocationParameter)) {
            std::optional<GeoBox> box;
            for (const auto& r : g_.objects(lp, Property::parametrizes)) {
                const Attributes* a = g_.attributes_of(r);
                if (a && a->value && std::holds_alternative<GeoBox>(*a->value)) box = std::get<GeoBox>(*a->value);
            }
            if (!box) continue;
            for (const auto& role : g_.objects(lp, Property::isParameterFor)) {
                for (const auto& obj : classified_members(g_, s_, {role})) {
                    for (const auto& where : locations(g_, obj)) {
                        if (!box_contains(*box, where)) {
                            emit("PART-004",
                                 obj.iri + " at " + format_geo_box(where) + " lies outside " + format_geo_box(*box),
                                 {obj, lp});
                            break;
                        }
                    }
                }
            }
        }
    }

    void composition() {
        auto composites = members(Vocab::Composite);
        auto components = members(Vocab::Component);
        if (composites.size() != 1) {
            emit("COMP-001", s_.iri + " has " + std::to_string(composites.size()) + " composites", composites);
        }
        if (components.empty()) emit("COMP-002", s_.iri + " has no components", {});
        for (const auto& e : composites) {
            if (std::binary_search(components.begin(), components.end(), e)) {
                emit("COMP-003", e.iri + " is both composite and component", {e});
            }
        }
        PatternView view = view_of(g_, s_);
        const EntityRef composite = composites.empty() ? EntityRef{} : composites.front();
        for (const auto& p : concepts_marked(g_, d_, Vocab::EventCompositionConstraint)) {
            auto c = read_constraint(g_, p, composite);
            bool ok = c.has_value();
            if (c && c->applies_to) ok = std::binary_search(components.begin(), components.end(), *c->applies_to);
            if (c) {
                if (const auto* t = std::get_if<TemporalConstraint>(&c->body)) {
                    if (const auto* ct = std::get_if<ComponentTarget>(&t->target)) {
                        ok = ok && std::binary_search(components.begin(), components.end(), ct->event);
                    }
                }
            }
            if (!ok) {
                emit("COMP-006", "constraint " + p.iri + " is malformed", {p});
                continue;
            }
            for (const auto& component : constrained_components(view.composition(), *c)) {
                auto r = check_constraint(g_, view, component, *c);
                std::vector<EntityRef> ents{p};
                ents.insert(ents.end(), r.entities.begin(), r.entities.end());
                if (r.status == ConstraintStatus::Violated) {
                    emit("COMP-004", "constraint " + p.iri + " violated: " + r.detail, ents);
                } else if (r.status == ConstraintStatus::Inapplicable) {
                    emit("COMP-005", "constraint " + p.iri + " not applicable: " + r.detail, ents);
                }
            }
        }
    }

    void causality() {
        auto causes = members(Vocab::Cause);
        auto effects = members(Vocab::Effect);
        if (causes.size() != 1) emit("CAUS-001", s_.iri + " has " + std::to_string(causes.size()) + " causes", causes);
        if (effects.size() != 1) {
            emit("CAUS-002", s_.iri + " has " + std::to_string(effects.size()) + " effects", effects);
        }
        if (g_.objects(d_, Property::hasJustification).empty()) {
            emit("CAUS-003", d_.iri + " has no justification", {d_});
        }
    }

    void correlation() {
        auto correlates = members(Vocab::Correlate);
        if (correlates.size() < 2) {
            emit("CORR-001", s_.iri + " has " + std::to_string(correlates.size()) + " correlates", correlates);
        }
        if (g_.objects(d_, Property::hasJustification).empty()) {
            emit("CORR-002", d_.iri + " has no justification", {d_});
        }
        const auto& pairs = ctx_.causal_pairs();
        for (const auto& a : correlates) {
            for (const auto& b : correlates) {
                if (a == b || !pairs.count({a, b})) continue;
                emit("CORR-003", a.iri + " directly causes correlate " + b.iri, {a, b, ctx_.causal_situation.at({a, b})});
            }
        }
    }

    void documentation() {
        if (members(Vocab::DocumentedEvent).empty()) emit("DOC-001", s_.iri + " documents no event", {});
        if (members(Vocab::Documenter).empty()) emit("DOC-002", s_.iri + " has no documenter", {});
    }

    void interpretation() {
        if (members(Vocab::Interpretant).empty()) emit("INT-001", s_.iri + " interprets no event", {});
        auto relevant = members(Vocab::RelevantSituation);
        if (relevant.empty()) emit("INT-003", s_.iri + " bundles no relevant situation", {});
        for (const auto& r : relevant) {
            auto k = situation_pattern(g_, r);
            if (!k || *k == PatternKind::Interpretation) {
                emit("INT-002", r.iri + " is not a participation, composition, causality, correlation or "
                                        "documentation situation",
                     {r});
            }
        }
    }

    void reuse() {
        for (const auto& c : g_.objects(d_, Property::defines)) {
            auto definers = g_.subjects(Property::defines, c);
            if (definers.size() > 1) {
                emit("XREUSE-001", c.iri + " is defined by " + join(definers), {c});
            }
        }
    }

    Context& ctx_;
    const Graph& g_;
    EntityRef s_;
    EntityRef d_;
    std::vector<Violation>& out_;
};

void finish(std::vector<Violation>& v) {
    std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.code, a.entities.front(), a.message, a.entities) <
               std::tie(b.code, b.entities.front(), b.message, b.entities);
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_situation(Context& ctx, const EntityRef& situation, std::vector<Violation>& out) {
    auto kind = ctx.graph.kind_of(situation);
    if (!kind) throw Error(Errc::UnknownEntity, "unknown entity '" + situation.iri + "'");
    if (*kind != Kind::Situation) {
        out.push_back({"SIT-001", Severity::Error, situation.iri + " is not a Situation", {situation}});
        return;
    }
    Checker(ctx, situation, out).run();
}

} // namespace

std::string_view severity_name(Severity s) noexcept { return s == Severity::Error ? "ERROR" : "WARNING"; }

std::size_t ValidationReport::count(Severity s) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.severity == s; }));
}

std::span<const RuleInfo> rule_catalog() noexcept { return kRules; }

ValidationReport validate_situation(const Graph& g, const EntityRef& situation) {
    Context ctx(g);
    ValidationReport report;
    report.target = situation;
    check_situation(ctx, situation, report.violations);
    finish(report.violations);
    return report;
}

ValidationReport validate_store(const Graph& g) {
    Context ctx(g);
    ValidationReport report;
    auto& out = report.violations;
    for (const auto& s : g.entities_of_kind(Kind::Situation)) check_situation(ctx, s, out);
    for (const auto& d : g.entities_of_kind(Kind::Description)) {
        if (g.subjects(Property::satisfies, d).empty() && g.subjects(Property::hasJustification, d).empty()) {
            out.push_back({"DESC-001", Severity::Warning, d.iri + " is satisfied by no situation", {d}});
        }
    }
    for (const auto& [e, k] : g.entities()) {
        if (!is_concept(k)) continue;
        if (g.subjects(Property::defines, e).empty() && g.subjects(Property::specializes, e).empty()) {
            out.push_back({"CONC-001", Severity::Warning, e.iri + " is neither defined nor specialized", {e}});
        }
    }
    finish(out);
    return report;
}

std::string format_report(const ValidationReport& report) {
    std::string out;
    for (const auto& v : report.violations) {
        out += severity_name(v.severity);
        out += ' ';
        out += v.code;
        out += ' ';
        out += v.entities.front().iri;
        out += ' ';
        out += v.message;
        out += '\n';
    }
    return out;
}

std::string format_report_json(const ValidationReport& report) {
    nlohmann::ordered_json doc;
    doc["target"] = report.target ? nlohmann::ordered_json(report.target->iri) : nlohmann::ordered_json(nullptr);
    auto& list = doc["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
        nlohmann::ordered_json item;
        item["code"] = v.code;
        item["severity"] = severity_name(v.severity);
        item["message"] = v.message;
        auto& ents = item["entities"] = nlohmann::ordered_json::array();
        for (const auto& e : v.entities) ents.push_back(e.iri);
        list.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

} // namespace eventf
