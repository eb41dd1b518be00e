#include "eventf/cli.hpp"
#include "eventf/constraints.hpp"
#include "eventf/interchange.hpp"
#include "eventf/reasoning.hpp"
#include "eventf/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

namespace eventf {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadFailure(path + ": error: cannot open file");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Store load_file(const std::string& path) {
    std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw LoadFailure(path + ":" + std::to_string(e.pos().line) + ":" + std::to_string(e.pos().column) +
                          ": error: expected " + e.expected() + ", found " + e.found());
    } catch (const LoadError& e) {
        // what() already starts with "line:column: "
        std::string msg = e.what();
        auto colon = msg.find(": ");
        throw LoadFailure(path + ":" + msg.substr(0, colon) + ": error: " + errc_name(e.code()) + ": " +
                          msg.substr(colon + 2));
    }
}

EntityRef entity_arg(const Graph& g, const std::string& text, const char* flag) {
    EntityRef e{text};
    if (!split_qname(text) || !g.contains(e)) {
        throw UsageError(std::string(flag) + ": unknown entity '" + text + "'");
    }
    return e;
}

Scope scope_arg(const Graph& g, const std::string& text) {
    if (text.empty()) return Scope::all();
    return Scope::of(entity_arg(g, text, "--interpretation"));
}

void print_list(std::ostream& out, const auto& refs) {
    for (const auto& r : refs) out << r.iri << '\n';
}

std::string join(const std::set<EntityRef>& refs) {
    std::string s;
    for (const auto& r : refs) {
        if (!s.empty()) s += ' ';
        s += r.iri;
    }
    return s;
}

struct Options {
    std::vector<std::string> files;
    std::string file;
    bool strict = false;
    std::string format = "text";
    std::string participant, interpretant, documenter, time_overlap;
    std::string event, interpretation, direction, a, b, composition;
    bool edges = false;
    bool to_stdout = false;
    bool check = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
    Store store;
    for (const auto& f : o.files) {
        Store part = load_file(f);
        try {
            store.merge(part.graph());
        } catch (const Error& e) {
            throw LoadFailure(f + ": error: " + errc_name(e.code()) + ": " + e.what());
        }
    }
    ValidationReport report = validate_store(store.graph());
    out << (o.format == "json" ? format_report_json(report) : format_report(report));
    if (report.has_errors()) return kExitFindings;
    if (o.strict && report.count(Severity::Warning) != 0) return kExitFindings;
    return kExitOk;
}

int cmd_query(const Options& o, std::ostream& out) {
    Store store = load_file(o.file);
    const Graph& g = store.graph();
    int given = !o.participant.empty() + !o.interpretant.empty() + !o.documenter.empty() + !o.time_overlap.empty();
    if (given != 1) {
        throw UsageError("query: exactly one of --participant, --interpretant, --documenter, --time-overlap");
    }
    EventQuery q;
    if (!o.participant.empty()) {
        q = ByParticipant{entity_arg(g, o.participant, "--participant")};
    } else if (!o.interpretant.empty()) {
        // domain concepts the interpretant specializes need not exist in the store
        if (!split_qname(o.interpretant)) throw UsageError("--interpretant: not a qualified name");
        q = ByInterpretant{EntityRef{o.interpretant}};
    } else if (!o.documenter.empty()) {
        q = ByDocumenter{entity_arg(g, o.documenter, "--documenter")};
    } else {
        try {
            q = ByTimeOverlap{parse_time_interval(o.time_overlap)};
        } catch (const Error& e) {
            throw UsageError(std::string("--time-overlap: ") + e.what());
        }
    }
    print_list(out, find_events(g, q));
    return kExitOk;
}

int cmd_parts(const Options& o, std::ostream& out) {
    Store store = load_file(o.file);
    const Graph& g = store.graph();
    auto dir = o.direction == "wholes" ? PartsDirection::Wholes : PartsDirection::Parts;
    print_list(out, parts_closure(g, entity_arg(g, o.event, "--event"), scope_arg(g, o.interpretation), dir));
    return kExitOk;
}

int cmd_causes(const Options& o, std::ostream& out) {
    Store store = load_file(o.file);
    const Graph& g = store.graph();
    auto dir = o.direction == "descendants" ? CausalDirection::Descendants : CausalDirection::Ancestors;
    CausalGraph cg = causal_chain(g, entity_arg(g, o.event, "--event"), scope_arg(g, o.interpretation), dir);
    if (o.edges) {
        for (const auto& e : cg.edges) {
            out << e.cause.iri << " -> " << e.effect.iri << " [" << e.justification.iri << "]\n";
        }
    } else {
        print_list(out, cg.nodes);
    }
    return kExitOk;
}

int cmd_infer(const Options& o, std::ostream& out) {
    Store store = load_file(o.file);
    const Graph& g = store.graph();
    for (const auto& c : infer_correlations(g, scope_arg(g, o.interpretation))) {
        out << c.first.iri << ' ' << c.second.iri << " common-causes: " << join(c.common_causes);
        if (c.already_asserted) out << " (asserted)";
        out << '\n';
    }
    return kExitOk;
}

int cmd_diff(const Options& o, std::ostream& out) {
    Store store = load_file(o.file);
    const Graph& g = store.graph();
    auto d = diff_interpretations(g, entity_arg(g, o.a, "--a"), entity_arg(g, o.b, "--b"));
    for (const auto& s : d.shared) out << "shared " << s.iri << '\n';
    for (const auto& s : d.only_a) out << "only-a " << s.iri << '\n';
    for (const auto& s : d.only_b) out << "only-b " << s.iri << '\n';
    for (const auto& c : d.conflicts) {
        out << "conflict " << c.effect.iri << " a: " << c.cause_a.iri << " (" << c.situation_a.iri << ") b: "
            << c.cause_b.iri << " (" << c.situation_b.iri << ")\n";
    }
    return kExitOk;
}

int cmd_fmt(const Options& o, std::ostream& out) {
    std::string original = read_file(o.file);
    Store store = load_file(o.file);
    std::string canonical = serialize(store.graph());
    if (o.check) return canonical == original ? kExitOk : kExitFindings;
    if (o.to_stdout) {
        out << canonical;
        return kExitOk;
    }
    if (canonical != original) {
        std::ofstream f(o.file, std::ios::binary | std::ios::trunc);
        f << canonical;
        if (!f) throw LoadFailure(o.file + ": error: cannot write file");
    }
    return kExitOk;
}

int cmd_check_constraints(const Options& o, std::ostream& out) {
    Store store = load_file(o.file);
    const Graph& g = store.graph();
    EntityRef s = entity_arg(g, o.composition, "--composition");
    if (situation_pattern(g, s) != PatternKind::Composition) {
        throw UsageError("--composition: '" + s.iri + "' is not a composition situation");
    }
    PatternView view = view_of(g, s);
    bool violated = false;
    for (const auto& c : view.composition().constraints) {
        for (const auto& component : constrained_components(view.composition(), c)) {
            ConstraintResult r = check_constraint(g, view, component, c);
            violated |= r.status == ConstraintStatus::Violated;
            out << constraint_status_name(r.status) << ' ' << c.iri.value_or("") << ' ' << component.iri;
            if (!r.detail.empty()) out << ' ' << r.detail;
            out << '\n';
        }
    }
    return violated ? kExitFindings : kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Event description tooling: validate, query and format .f.ttl files", "eventf"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "Validate and merge files, printing findings");
    validate->add_option("files", o.files, "Input files")->required();
    validate->add_flag("--strict", o.strict, "Treat warnings as failures");
    validate->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    auto* query = app.add_subcommand("query", "Find events");
    query->add_option("file", o.file)->required();
    query->add_option("--participant", o.participant, "Object taking part");
    query->add_option("--interpretant", o.interpretant, "Interpretant or a concept it specializes");
    query->add_option("--documenter", o.documenter, "Documenting object or event");
    query->add_option("--time-overlap", o.time_overlap, "START/END interval");

    auto* parts = app.add_subcommand("parts", "Transitive parts of a composite event");
    parts->add_option("file", o.file)->required();
    parts->add_option("--event", o.event)->required();
    parts->add_option("--interpretation", o.interpretation);
    parts->add_option("--direction", o.direction)->check(CLI::IsMember({"parts", "wholes"}));

    auto* causes = app.add_subcommand("causes", "Causal ancestors or descendants of an event");
    causes->add_option("file", o.file)->required();
    causes->add_option("--event", o.event)->required();
    causes->add_option("--direction", o.direction)->check(CLI::IsMember({"ancestors", "descendants"}));
    causes->add_option("--interpretation", o.interpretation);
    causes->add_flag("--edges", o.edges, "Print traversed edges instead of events");

    auto* infer = app.add_subcommand("infer-correlations", "Event pairs sharing a causal ancestor");
    infer->add_option("file", o.file)->required();
    infer->add_option("--interpretation", o.interpretation);

    auto* diff = app.add_subcommand("diff", "Compare two interpretations of one event");
    diff->add_option("file", o.file)->required();
    diff->add_option("--a", o.a)->required();
    diff->add_option("--b", o.b)->required();

    auto* fmt = app.add_subcommand("fmt", "Rewrite a file in canonical form");
    fmt->add_option("file", o.file)->required();
    fmt->add_flag("--stdout", o.to_stdout, "Print instead of rewriting");
    fmt->add_flag("--check", o.check, "Exit 1 when the file is not canonical");

    auto* check = app.add_subcommand("check-constraints", "Evaluate composition constraints");
    check->add_option("file", o.file)->required();
    check->add_option("--composition", o.composition)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "eventf: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out);
        if (query->parsed()) return cmd_query(o, out);
        if (parts->parsed()) return cmd_parts(o, out);
        if (causes->parsed()) return cmd_causes(o, out);
        if (infer->parsed()) return cmd_infer(o, out);
        if (diff->parsed()) return cmd_diff(o, out);
        if (fmt->parsed()) return cmd_fmt(o, out);
        if (check->parsed()) return cmd_check_constraints(o, out);
    } catch (const LoadFailure& e) {
        err << e.what() << '\n';
        return kExitLoadFailure;
    } catch (const UsageError& e) {
        err << "eventf: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "eventf: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace eventf
