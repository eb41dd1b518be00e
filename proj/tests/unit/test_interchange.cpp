#include "eventf/interchange.hpp"
#include "eventf/validation.hpp"

#include "corpus.hpp"
#include "generators.hpp"
#include "scenarios.hpp"

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <functional>

using namespace eventf;
using namespace eventf::testing;

namespace {

constexpr const char* kHeader =
    "@prefix ex: <http://example.org/emergency#> .\n"
    "@prefix dom: <http://example.org/domain#> .\n";

struct Failure {
    bool parse = false;
    SourcePos pos;
    std::string text;
};

std::optional<Failure> try_parse(const std::string& text) {
    try {
        Store s = parse(text);
        serialize(s.graph());
        return std::nullopt;
    } catch (const ParseError& e) {
        return Failure{true, e.pos(), e.what()};
    } catch (const LoadError& e) {
        return Failure{false, e.pos(), e.what()};
    }
}

SourcePos parse_error_at(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.pos();
    }
    FAIL("no ParseError for: " << text);
    return {};
}

Errc load_error_code(const std::string& text) {
    try {
        parse(text);
    } catch (const LoadError& e) {
        return e.code();
    }
    FAIL("no LoadError for: " << text);
    return Errc::InvalidIri;
}

std::size_t word_start(const std::string& text, std::size_t offset) {
    while (offset > 0 && !std::isspace(static_cast<unsigned char>(text[offset - 1]))) --offset;
    return offset;
}

} // namespace

TEST_SUITE("interchange") {

TEST_CASE("empty documents") {
    CHECK(parse("").graph().empty());
    CHECK(parse("# only a comment\n\n   \n").graph().empty());
    CHECK(serialize(Graph{}).empty());
}

TEST_CASE("hand-written statements") {
    std::string text = std::string(kHeader) +
                       "ex:snapped-power-pole-1 a f:Event .\n"
                       "ex:power-outage-1 a f:Event.\n"
                       "ex:cause-1 a f:EventType ; f:classifies ex:snapped-power-pole-1 .\n"
                       "ex:effect-1 a f:EventType ;\n"
                       "    f:label \"the \\\"effect\\\"\\n\\u00e9\" ;\n"
                       "    f:classifies ex:power-outage-1 . # trailing comment\n";
    Store s = parse(text);
    const Graph& g = s.graph();
    CHECK(g.kind_of(ex("snapped-power-pole-1")) == Kind::Event);
    CHECK(g.kind_of(ex("power-outage-1")) == Kind::Event);
    CHECK(g.has_edge(ex("cause-1"), Property::classifies, ex("snapped-power-pole-1")));
    CHECK(g.attributes_of(ex("effect-1"))->label == std::string("the \"effect\"\n\xc3\xa9"));
    CHECK(g.entity_count() == 4);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("object lists and repeated predicates") {
    std::string text = std::string(kHeader) +
                       "ex:e1 a f:Event . ex:e2 a f:Event .\n"
                       "ex:s a f:Situation ; f:includesEvent ex:e1, ex:e2 ; ; f:includesEvent ex:e1 .\n";
    Store s = parse(text);
    CHECK(s.graph().objects(ex("s"), Property::includesEvent) == std::vector<EntityRef>{ex("e1"), ex("e2")});
}

TEST_CASE("typed literals") {
    std::string text = std::string(kHeader) +
                       "ex:t a f:TimeInterval ; f:value \"2009-06-08T00:00:00Z/2009-06-14T00:00:00Z\"^^f:timeInterval .\n"
                       "ex:b a f:SpaceRegion ; f:value \"50.9,7.05;50.95,7.1\"^^f:geoBox .\n";
    Store s = parse(text);
    const auto& t = std::get<TimeInterval>(*s.graph().attributes_of(ex("t"))->value);
    CHECK(t == parse_time_interval("2009-06-08/2009-06-14"));
    CHECK(std::holds_alternative<GeoBox>(*s.graph().attributes_of(ex("b"))->value));
    CHECK(load_error_code(std::string(kHeader) + "ex:t a f:TimeInterval ; f:value \"nope\"^^f:timeInterval .") ==
          Errc::InvalidLiteral);
    CHECK(load_error_code(std::string(kHeader) + "ex:t a f:TimeInterval ; f:value \"50,7;51,8\"^^f:geoBox .") ==
          Errc::InvalidLiteral);
    CHECK(load_error_code(std::string(kHeader) + "ex:t a f:TimeInterval ; f:value \"x\"^^f:colour .") ==
          Errc::InvalidLiteral);
}

TEST_CASE("kind conflict is a LoadError") {
    CHECK(load_error_code(std::string(kHeader) + "ex:x a f:Event . ex:x a f:Object .") == Errc::KindConflict);
}

TEST_CASE("load errors carry positions") {
    std::string text = std::string(kHeader) + "ex:o a f:Object .\nex:s a f:Situation ;\n  f:includesEvent ex:o .\n";
    try {
        parse(text);
        FAIL("accepted");
    } catch (const LoadError& e) {
        CHECK(e.code() == Errc::RangeViolation);
        CHECK(e.pos().line == 5);
        CHECK(e.pos().column == 19);
        CHECK(std::string(e.what()).rfind("5:19: ", 0) == 0);
    }
    CHECK(load_error_code(std::string(kHeader) + "ex:r a f:Role ; f:satisfies ex:r .") == Errc::DomainViolation);
    CHECK(load_error_code(std::string(kHeader) + "ex:s a f:Situation ; f:includesEvent ex:missing .") ==
          Errc::UnknownEntity);
    CHECK(load_error_code("zz:a a f:Event .") == Errc::UndeclaredPrefix);
    CHECK(load_error_code(std::string(kHeader) + "ex:a a f:Widget .") == Errc::UnknownEntity);
    CHECK(load_error_code(std::string(kHeader) + "ex:a a f:Event ; f:unknownProp ex:a .") == Errc::UnknownEntity);
    CHECK(load_error_code(std::string(kHeader) + "ex:a a f:Event ; f:label \"x\", \"y\" .") == Errc::InvalidLiteral);
    CHECK(load_error_code("@prefix ex: <http://a#> .\n@prefix ex: <http://b#> .") == Errc::PrefixConflict);
    CHECK(load_error_code("@prefix f: <http://a#> .") == Errc::ReservedIri);
}

TEST_CASE("syntax errors point at the first offending byte") {
    struct Case {
        std::string text;
        std::size_t line, column;
    };
    std::vector<Case> cases{
        {"ex:a a f:Event", 1, 15},
        {"ex:a a f:Event .\nex:b a", 2, 7},
        {"ex:a a f:Event ;; .\nex:b f:label \"unterminated\n\" .", 2, 27},
        {"@prefix ex <http://a#> .", 1, 9},
        {"@prefx ex: <http://a#> .", 1, 1},
        {"@prefix ex: <http://a b> .", 1, 22},
        {"ex:a f:label \"bad \\q escape\" .", 1, 19},
        {"ex:a f:label \"x\"^f:timeInterval .", 1, 18},
        {"ex:a f:label \"\\u00G0\" .", 1, 19},
        {"ex:a a f:Event . }", 1, 18},
        {"ex:a f:label \"caf\xc3\xa9\" ; f:label \xff .", 1, 31},
        {"\"subject\" a f:Event .", 1, 1},
        {"ex:a a f:Event , .", 1, 18},
    };
    for (const auto& c : cases) {
        CAPTURE(c.text);
        SourcePos p = parse_error_at(c.text);
        CHECK(p.line == c.line);
        CHECK(p.column == c.column);
    }
    try {
        parse_document("ex:a a f:Event");
    } catch (const ParseError& e) {
        CHECK(e.expected().find("'.'") != std::string::npos);
        CHECK(e.found() == "end of input");
    }
}

TEST_CASE("fig-g text validates with zero errors") {
    std::string text = serialize(build_fig_g().store.graph());
    Store s = parse(text);
    CHECK_FALSE(validate_store(s.graph()).has_errors());
    CHECK(s.graph().has_edge(ex("cause-1"), Property::classifies, ex("snapped-power-pole-1")));
}

TEST_CASE("golden files match the programmatic stores") {
    CHECK(read_corpus_file("fig-g.f.ttl") == serialize(build_fig_g().store.graph()));
    CHECK(read_corpus_file("emergency.f.ttl") == serialize(build_emergency().graph()));
}

TEST_CASE("canonical layout") {
    std::string text = serialize(build_fig_g().store.graph());
    CHECK(text.back() == '\n');
    CHECK(text.substr(text.size() - 2) != "\n\n");
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.rfind("@prefix", 0) == 0);
    // prefixes sorted, then subject blocks sorted by expanded IRI
    Store s = parse(text);
    std::vector<std::string> subjects;
    std::size_t at = 0;
    while ((at = text.find("\n\n", at)) != std::string::npos) {
        at += 2;
        subjects.push_back(s.graph().expand(EntityRef{text.substr(at, text.find(' ', at) - at)}));
    }
    CHECK(subjects.size() == s.graph().entity_count());
    CHECK(std::is_sorted(subjects.begin(), subjects.end()));
}

TEST_CASE("round-trip and idempotence on random stores") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        CAPTURE(seed);
        Rng rng(seed);
        World w = random_world(rng);
        for (int i = 0; i < 10; ++i) build_random(rng, w, static_cast<PatternKind>(rng.uniform(0, 5)));
        if (rng.coin()) w.store.set_label(w.events.front(), "tab\there \"q\" \\ \x01 \xe2\x82\xac");
        std::string once = serialize(w.store.graph());
        Store back = parse(once);
        CHECK(back.graph() == w.store.graph());
        CHECK(serialize(back.graph()) == once);
    }
}

TEST_CASE("serialization ignores construction order") {
    auto build = [](bool reversed) {
        Store s = scenario_store();
        std::vector<std::function<void()>> steps{
            [&] { add_event(s, "ex:a"); },
            [&] { add_event(s, "ex:b"); },
            [&] { add_object(s, "ex:o"); },
            [&] { s.declare_prefix("zz", "http://z.example/#"); },
        };
        if (reversed) std::reverse(steps.begin(), steps.end());
        for (auto& f : steps) f();
        auto p = [&] {
            build_participation(s, ParticipationSpec{ex("a"), {{ex("o"), "ex:r", "dom:R"}}, {}, {}, {}, named("ex:p")});
        };
        auto c = [&] {
            build_causality(s, CausalitySpec{ex("a"), ex("b"), Justification::text("j"), "ex:c", "ex:e", named("ex:k")});
        };
        if (reversed) {
            c();
            p();
        } else {
            p();
            c();
        }
        return serialize(s.graph());
    };
    CHECK(build(false) == build(true));
}

TEST_CASE("corpus round-trips") {
    auto files = corpus_files();
    CHECK(files.size() >= 10);
    for (const auto& f : files) {
        CAPTURE(f);
        std::string text = read_corpus_file(f);
        Store s = parse(text);
        std::string canonical = serialize(s.graph());
        CHECK(parse(canonical).graph() == s.graph());
        CHECK(serialize(parse(canonical).graph()) == canonical);
    }
}

TEST_CASE("byte deletion and corruption fuzz") {
    Rng rng(2024);
    std::size_t parse_errors = 0, load_errors = 0;
    for (const auto& f : corpus_files()) {
        std::string text = read_corpus_file(f);
        for (int i = 0; i < 150; ++i) {
            std::string mutated = text;
            auto at = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(text.size()) - 1));
            if (i % 2 == 0) {
                mutated.erase(at, 1);
            } else {
                mutated[at] = static_cast<char>(rng.uniform(0, 255));
            }
            auto fail = try_parse(mutated);
            if (!fail) continue;
            CAPTURE(f);
            CAPTURE(at);
            CAPTURE(fail->text);
            CHECK(fail->pos.line >= 1);
            CHECK(fail->pos.column >= 1);
            CHECK(fail->pos.offset <= mutated.size());
            if (fail->parse) {
                ++parse_errors;
                CHECK(fail->pos.offset >= word_start(mutated, std::min(at, mutated.size())));
            } else {
                ++load_errors;
            }
        }
    }
    CHECK(parse_errors > 0);
    MESSAGE("parse errors: " << parse_errors << ", load errors: " << load_errors);
}

}
