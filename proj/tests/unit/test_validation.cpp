#include "eventf/interchange.hpp"
#include "eventf/validation.hpp"

#include "generators.hpp"
#include "mutations.hpp"
#include "scenarios.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>

using namespace eventf;
using namespace eventf::testing;

namespace {

std::set<std::string> codes(const ValidationReport& r) {
    std::set<std::string> out;
    for (const auto& v : r.violations) out.insert(v.code);
    return out;
}

} // namespace

TEST_SUITE("validation") {

TEST_CASE("the power outage example is conformant") {
    FigG fig = build_fig_g();
    CHECK(validate_situation(fig.store.graph(), fig.causality.situation).conformant());
    CHECK(validate_situation(fig.store.graph(), fig.participation.situation).conformant());
    CHECK(validate_store(fig.store.graph()).conformant());
}

TEST_CASE("an empty store is conformant") { CHECK(validate_store(Graph{}).conformant()); }

TEST_CASE("the emergency scenario and the mutation base are conformant") {
    auto report = validate_store(build_emergency().graph());
    CHECK_MESSAGE(report.conformant(), format_report(report));
    auto base = validate_store(mutation_base().graph());
    CHECK_MESSAGE(base.conformant(), format_report(base));
}

TEST_CASE("a description with no situation is reported") {
    Store s = scenario_store();
    s.new_entity("ex:lonely", Kind::Description);
    auto report = validate_store(s.graph());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].code == "DESC-001");
    CHECK(report.violations[0].severity == Severity::Warning);
    CHECK_FALSE(report.has_errors());
}

TEST_CASE("removing the effect classification gives CAUS-002") {
    FigG fig = build_fig_g();
    fig.store.retract_edge(EntityRef{"ex:effect-1"}, Property::classifies, ex("power-outage-1"));
    auto report = validate_situation(fig.store.graph(), fig.causality.situation);
    CHECK(codes(report) == std::set<std::string>{"CAUS-002"});
}

TEST_CASE("correlating two causally linked events warns") {
    Store s = scenario_store();
    auto a = add_event(s, "ex:a");
    auto b = add_event(s, "ex:b");
    build_causality(s, CausalitySpec{a, b, Justification::text("t"), {}, {}, {}});
    auto v = build_correlation(s, CorrelationSpec{{a, b}, Justification::text("u"), {}, {}});
    auto report = validate_situation(s.graph(), v.situation);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].code == "CORR-003");
    CHECK(report.violations[0].severity == Severity::Warning);
}

TEST_CASE("a correlation over a causal chain does not warn") {
    Store s = scenario_store();
    auto a = add_event(s, "ex:a");
    auto b = add_event(s, "ex:b");
    auto c = add_event(s, "ex:c");
    build_causality(s, CausalitySpec{a, b, Justification::text("t"), {}, {}, {}});
    build_causality(s, CausalitySpec{b, c, Justification::text("t"), {}, {}, {}});
    auto v = build_correlation(s, CorrelationSpec{{a, c}, Justification::text("u"), {}, {}});
    CHECK(validate_situation(s.graph(), v.situation).conformant());
}

TEST_CASE("every Error rule has a single mutation triggering exactly it") {
    std::set<std::string> covered;
    for (const auto& m : error_rule_mutations()) {
        CAPTURE(m.code);
        Store s = mutation_base();
        REQUIRE(validate_situation(s.graph(), m.situation).conformant());
        m.apply(s);
        auto report = validate_situation(s.graph(), m.situation);
        CHECK_MESSAGE(codes(report) == std::set<std::string>{m.code}, m.description << "\n" << format_report(report));
        covered.insert(m.code);
    }
    for (const auto& rule : rule_catalog()) {
        if (rule.severity == Severity::Error) CHECK_MESSAGE(covered.count(std::string(rule.code)), rule.code);
    }
}

TEST_CASE("warning rules") {
    SUBCASE("PART-004 participant outside its location parameter") {
        Store s = scenario_store();
        auto e = add_event(s, "ex:e");
        auto o = add_object(s, "ex:o");
        assign_location(s, o, GeoBox::make(10, 10, 11, 11));
        auto v = build_participation(
            s, ParticipationSpec{e, {{o, "ex:r", std::nullopt}}, std::nullopt,
                                 {{"ex:r", GeoBox::make(50, 7, 51, 8), std::nullopt}}, std::nullopt, {}});
        auto report = validate_situation(s.graph(), v.situation);
        CHECK(codes(report) == std::set<std::string>{"PART-004"});
        CHECK_FALSE(report.has_errors());
    }
    SUBCASE("XREUSE-001 concept defined by two descriptions") {
        Store s = scenario_store();
        auto a = add_event(s, "ex:a");
        auto b = add_event(s, "ex:b");
        auto c = add_event(s, "ex:c");
        auto v1 = build_causality(s, CausalitySpec{a, b, Justification::text("t"), "ex:shared-cause", {}, {}});
        auto v2 = build_causality(s, CausalitySpec{a, c, Justification::text("t"), "ex:shared-cause", {}, {}});
        CHECK(codes(validate_situation(s.graph(), v1.situation)) == std::set<std::string>{"XREUSE-001"});
        // shared cause concept now classifies a in both, but each situation only includes its own members
        CHECK_FALSE(validate_situation(s.graph(), v2.situation).has_errors());
    }
    SUBCASE("CONC-001 stray concept") {
        Store s = scenario_store();
        s.new_entity("ex:stray", Kind::Role);
        CHECK(codes(validate_store(s.graph())) == std::set<std::string>{"CONC-001"});
    }
    SUBCASE("COMP-005 missing time") {
        Store s = scenario_store();
        auto w = add_event(s, "ex:w");
        auto p = add_event(s, "ex:p");
        auto v = build_composition(
            s, CompositionSpec{w, {p}, {{TemporalConstraint{AllenRelation::during, CompositeTarget{}}, {}, {}}}, {}, {}, {}});
        auto report = validate_situation(s.graph(), v.situation);
        CHECK(codes(report) == std::set<std::string>{"COMP-005"});
        CHECK_FALSE(report.has_errors());
    }
}

TEST_CASE("every emitted code is in the catalog with its severity") {
    std::map<std::string, Severity> catalog;
    for (const auto& r : rule_catalog()) catalog[std::string(r.code)] = r.severity;
    CHECK(catalog.size() == rule_catalog().size());
    for (const auto& m : error_rule_mutations()) {
        Store s = mutation_base();
        m.apply(s);
        for (const auto& v : validate_store(s.graph()).violations) {
            REQUIRE(catalog.count(v.code));
            CHECK(catalog[v.code] == v.severity);
            CHECK_FALSE(v.entities.empty());
        }
    }
}

TEST_CASE("reports are sorted and deterministic") {
    for (const auto& m : error_rule_mutations()) {
        Store s = mutation_base();
        m.apply(s);
        auto r1 = validate_store(s.graph());
        auto r2 = validate_store(parse(serialize(s.graph())).graph());
        CHECK(format_report(r1) == format_report(r2));
        CHECK(format_report_json(r1) == format_report_json(r2));
        for (std::size_t i = 1; i < r1.violations.size(); ++i) {
            const auto& a = r1.violations[i - 1];
            const auto& b = r1.violations[i];
            CHECK(std::tie(a.code, a.entities.front().iri) <= std::tie(b.code, b.entities.front().iri));
        }
    }
}

TEST_CASE("unrelated growth leaves a situation report unchanged") {
    Rng rng(4);
    for (const auto& m : error_rule_mutations()) {
        Store s = mutation_base();
        m.apply(s);
        auto before = validate_situation(s.graph(), m.situation);
        for (int i = 0; i < 10; ++i) {
            auto e = add_event(s, "ex:extra-" + std::to_string(i));
            auto o = add_object(s, "ex:extra-object-" + std::to_string(i));
            assign_time(s, e, random_interval(rng));
            build_participation(s, ParticipationSpec{e, {{o, "ex:extra-role-" + std::to_string(i), "dom:Extra"}},
                                                     std::nullopt, {}, std::nullopt, {}});
        }
        CHECK(validate_situation(s.graph(), m.situation).violations == before.violations);
    }
}

TEST_CASE("text and JSON report formats") {
    Store s = mutation_base();
    error_rule_mutations()[1].apply(s);
    auto report = validate_situation(s.graph(), EntityRef{"ex:pole-causes-outage"});
    std::string text = format_report(report);
    CHECK(text.rfind("ERROR CAUS-002 ex:pole-causes-outage ", 0) == 0);
    CHECK(text.back() == '\n');
    auto json = nlohmann::json::parse(format_report_json(report));
    CHECK(json["target"] == "ex:pole-causes-outage");
    REQUIRE(json["violations"].size() == 1);
    CHECK(json["violations"][0]["code"] == "CAUS-002");
    CHECK(json["violations"][0]["severity"] == "ERROR");
    CHECK(json["violations"][0]["entities"][0] == "ex:pole-causes-outage");
    CHECK(format_report(ValidationReport{}).empty());
}

TEST_CASE("validate_situation rejects unknown entities") {
    CHECK_THROWS_AS(validate_situation(Graph{}, EntityRef{"ex:x"}), Error);
}

}
