#include "eventf/constraints.hpp"
#include "eventf/interchange.hpp"
#include "eventf/reasoning.hpp"
#include "eventf/validation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace eventf;

namespace {

EntityRef entity(const std::string& iri) { return EntityRef{iri}; }

std::vector<EntityRef> refs(const std::vector<std::string>& iris) {
    std::vector<EntityRef> out;
    for (const auto& i : iris) out.push_back(entity(i));
    return out;
}

template <class C>
std::vector<std::string> iris(const C& refs) {
    std::vector<std::string> out;
    for (const auto& r : refs) out.push_back(r.iri);
    return out;
}

Kind kind_arg(const std::string& name) {
    auto k = parse_kind(name);
    if (!k) throw py::value_error("unknown kind '" + name + "'");
    return *k;
}

Property property_arg(const std::string& name) {
    auto p = parse_property(name);
    if (!p) throw py::value_error("unknown property '" + name + "'");
    return *p;
}

Scope scope_arg(const std::optional<std::string>& interpretation) {
    return interpretation ? Scope::of(entity(*interpretation)) : Scope::all();
}

PatternNames names_arg(const std::optional<std::string>& name) {
    if (!name) return {};
    return PatternNames{*name, *name + "-description"};
}

Justification justification_arg(const std::string& text, bool existing) {
    return existing ? Justification::of(entity(text)) : Justification::text(text);
}

py::dict violation_dict(const Violation& v) {
    py::dict d;
    d["code"] = v.code;
    d["severity"] = std::string(severity_name(v.severity));
    d["message"] = v.message;
    d["entities"] = iris(v.entities);
    return d;
}

py::list report_list(const ValidationReport& r) {
    py::list out;
    for (const auto& v : r.violations) out.append(violation_dict(v));
    return out;
}

ConstraintSpec constraint_arg(const py::dict& d) {
    ConstraintSpec c;
    if (d.contains("box")) {
        c.body = SpatialWithin{parse_geo_box(d["box"].cast<std::string>())};
    } else if (d.contains("trajectory")) {
        c.body = SpatioTemporalWithin{parse_trajectory(d["trajectory"].cast<std::string>())};
    } else {
        auto name = d["relation"].cast<std::string>();
        auto r = parse_allen_relation(name);
        if (!r) throw py::value_error("unknown Allen relation '" + name + "'");
        TemporalConstraint t{*r, CompositeTarget{}};
        if (d.contains("event")) t.target = ComponentTarget{entity(d["event"].cast<std::string>())};
        if (d.contains("interval")) t.target = parse_time_interval(d["interval"].cast<std::string>());
        c.body = t;
    }
    if (d.contains("applies_to")) c.applies_to = entity(d["applies_to"].cast<std::string>());
    if (d.contains("iri")) c.iri = d["iri"].cast<std::string>();
    return c;
}

} // namespace

PYBIND11_MODULE(_eventf, m) {
    m.doc() = "Event descriptions as situations, descriptions and concepts";

    py::object error = py::exception<Error>(m, "Error", PyExc_ValueError);
    py::exception<LoadError>(m, "LoadError", error.ptr());
    py::exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        auto raise = [](const char* type_name, const std::string& msg, const char* code, const SourcePos* pos) {
            py::object type = py::module_::import("eventf._eventf").attr(type_name);
            py::object exc = type(msg);
            if (code) exc.attr("code") = code;
            if (pos) {
                exc.attr("line") = pos->line;
                exc.attr("column") = pos->column;
                exc.attr("offset") = pos->offset;
            }
            PyErr_SetObject(type.ptr(), exc.ptr());
        };
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            raise("ParseError", e.what(), nullptr, &e.pos());
        } catch (const LoadError& e) {
            raise("LoadError", e.what(), errc_name(e.code()), &e.pos());
        } catch (const Error& e) {
            raise("Error", e.what(), errc_name(e.code()), nullptr);
        }
    });

    py::class_<Store>(m, "Store")
        .def(py::init<>())
        .def("declare_prefix", &Store::declare_prefix, py::arg("prefix"), py::arg("namespace"))
        .def(
            "new_entity", [](Store& s, const std::string& iri, const std::string& kind) {
                return s.new_entity(iri, kind_arg(kind)).iri;
            },
            py::arg("iri"), py::arg("kind"))
        .def(
            "ensure_entity", [](Store& s, const std::string& iri, const std::string& kind) {
                return s.ensure_entity(iri, kind_arg(kind)).iri;
            },
            py::arg("iri"), py::arg("kind"))
        .def(
            "assert_edge", [](Store& s, const std::string& sub, const std::string& p, const std::string& o) {
                s.assert_edge(entity(sub), property_arg(p), entity(o));
            },
            py::arg("subject"), py::arg("property"), py::arg("object"))
        .def(
            "retract_edge", [](Store& s, const std::string& sub, const std::string& p, const std::string& o) {
                return s.retract_edge(entity(sub), property_arg(p), entity(o));
            },
            py::arg("subject"), py::arg("property"), py::arg("object"))
        .def("set_label", [](Store& s, const std::string& e, std::string label) { s.set_label(entity(e), std::move(label)); })
        .def("merge", [](Store& s, const Store& other) { s.merge(other.graph()); })
        .def(
            "assign_time", [](Store& s, const std::string& e, const std::string& interval) {
                return assign_time(s, entity(e), parse_time_interval(interval)).iri;
            },
            py::arg("event"), py::arg("interval"))
        .def(
            "assign_location", [](Store& s, const std::string& o, const std::string& box) {
                return assign_location(s, entity(o), parse_geo_box(box)).iri;
            },
            py::arg("object"), py::arg("box"))
        .def("kind_of",
             [](const Store& s, const std::string& e) -> std::optional<std::string> {
                 auto k = s.graph().kind_of(entity(e));
                 if (!k) return std::nullopt;
                 return std::string(kind_name(*k));
             })
        .def("entities",
             [](const Store& s) {
                 std::map<std::string, std::string> out;
                 for (const auto& [e, k] : s.graph().entities()) out[e.iri] = std::string(kind_name(k));
                 return out;
             })
        .def(
            "edges",
            [](const Store& s, std::optional<std::string> sub, std::optional<std::string> p, std::optional<std::string> o) {
                std::optional<EntityRef> qs, qo;
                std::optional<Property> qp;
                if (sub) qs = entity(*sub);
                if (p) qp = property_arg(*p);
                if (o) qo = entity(*o);
                std::vector<std::tuple<std::string, std::string, std::string>> out;
                for (const auto& t : s.query_edges(qs, qp, qo)) {
                    out.emplace_back(t.subject.iri, std::string(property_name(t.property)), t.object.iri);
                }
                return out;
            },
            py::arg("subject") = py::none(), py::arg("property") = py::none(), py::arg("object") = py::none())
        .def("__eq__", [](const Store& a, const Store& b) { return a.graph() == b.graph(); })
        .def("__len__", [](const Store& s) { return s.graph().entity_count(); })

        .def(
            "build_participation",
            [](Store& s, const std::string& event, const std::vector<std::tuple<std::string, std::string, std::optional<std::string>>>& participants,
               std::optional<std::string> time_parameter, std::optional<std::string> name) {
                ParticipationSpec p;
                p.described_event = entity(event);
                for (const auto& [obj, role, spec] : participants) p.participants.push_back({entity(obj), role, spec});
                if (time_parameter) p.time_parameter = parse_time_interval(*time_parameter);
                p.names = names_arg(name);
                return build_participation(s, p).situation.iri;
            },
            py::arg("event"), py::arg("participants"), py::arg("time_parameter") = py::none(),
            py::arg("name") = py::none())
        .def(
            "build_composition",
            [](Store& s, const std::string& composite, const std::vector<std::string>& components,
               const std::vector<py::dict>& constraints, std::optional<std::string> name) {
                CompositionSpec c;
                c.composite = entity(composite);
                c.components = refs(components);
                for (const auto& d : constraints) c.constraints.push_back(constraint_arg(d));
                c.names = names_arg(name);
                return build_composition(s, c).situation.iri;
            },
            py::arg("composite"), py::arg("components"), py::arg("constraints") = std::vector<py::dict>{},
            py::arg("name") = py::none())
        .def(
            "build_causality",
            [](Store& s, const std::string& cause, const std::string& effect, const std::string& justification,
               bool existing, std::optional<std::string> name) {
                CausalitySpec c{entity(cause), entity(effect), justification_arg(justification, existing), {}, {}, names_arg(name)};
                return build_causality(s, c).situation.iri;
            },
            py::arg("cause"), py::arg("effect"), py::arg("justification"), py::arg("existing_justification") = false,
            py::arg("name") = py::none())
        .def(
            "build_correlation",
            [](Store& s, const std::vector<std::string>& correlates, const std::string& justification, bool existing,
               std::optional<std::string> name) {
                CorrelationSpec c{refs(correlates), justification_arg(justification, existing), {}, names_arg(name)};
                return build_correlation(s, c).situation.iri;
            },
            py::arg("correlates"), py::arg("justification"), py::arg("existing_justification") = false,
            py::arg("name") = py::none())
        .def(
            "build_documentation",
            [](Store& s, const std::string& event, const std::vector<std::string>& documenters,
               std::optional<std::string> name) {
                DocumentationSpec d{entity(event), refs(documenters), {}, names_arg(name)};
                return build_documentation(s, d).situation.iri;
            },
            py::arg("event"), py::arg("documenters"), py::arg("name") = py::none())
        .def(
            "build_interpretation",
            [](Store& s, const std::string& event, const std::string& interpretant,
               const std::vector<std::string>& relevant_situations, std::optional<std::string> specializes,
               std::optional<std::string> name) {
                InterpretationSpec i{entity(event), interpretant, specializes, refs(relevant_situations), {}, names_arg(name)};
                return build_interpretation(s, i).situation.iri;
            },
            py::arg("event"), py::arg("interpretant"), py::arg("relevant_situations"),
            py::arg("specializes") = py::none(), py::arg("name") = py::none())

        .def("validate", [](const Store& s) { return report_list(validate_store(s.graph())); })
        .def("validate_situation",
             [](const Store& s, const std::string& sit) { return report_list(validate_situation(s.graph(), entity(sit))); })
        .def("situations", [](const Store& s) { return iris(pattern_situations(s.graph())); })
        .def(
            "parts",
            [](const Store& s, const std::string& event, const std::string& direction,
               std::optional<std::string> interpretation) {
                if (direction != "parts" && direction != "wholes") throw py::value_error("direction: parts or wholes");
                auto dir = direction == "parts" ? PartsDirection::Parts : PartsDirection::Wholes;
                return iris(parts_closure(s.graph(), entity(event), scope_arg(interpretation), dir));
            },
            py::arg("event"), py::arg("direction") = "parts", py::arg("interpretation") = py::none())
        .def(
            "causes",
            [](const Store& s, const std::string& event, const std::string& direction,
               std::optional<std::string> interpretation) {
                if (direction != "ancestors" && direction != "descendants") {
                    throw py::value_error("direction: ancestors or descendants");
                }
                auto dir = direction == "ancestors" ? CausalDirection::Ancestors : CausalDirection::Descendants;
                return iris(causal_chain(s.graph(), entity(event), scope_arg(interpretation), dir).nodes);
            },
            py::arg("event"), py::arg("direction") = "ancestors", py::arg("interpretation") = py::none())
        .def(
            "infer_correlations",
            [](const Store& s, std::optional<std::string> interpretation) {
                py::list out;
                for (const auto& c : infer_correlations(s.graph(), scope_arg(interpretation))) {
                    py::dict d;
                    d["first"] = c.first.iri;
                    d["second"] = c.second.iri;
                    d["common_causes"] = iris(c.common_causes);
                    d["asserted"] = c.already_asserted;
                    out.append(d);
                }
                return out;
            },
            py::arg("interpretation") = py::none())
        .def("diff",
             [](const Store& s, const std::string& a, const std::string& b) {
                 auto d = diff_interpretations(s.graph(), entity(a), entity(b));
                 py::dict out;
                 out["shared"] = iris(d.shared);
                 out["only_a"] = iris(d.only_a);
                 out["only_b"] = iris(d.only_b);
                 py::list conflicts;
                 for (const auto& c : d.conflicts) {
                     py::dict x;
                     x["effect"] = c.effect.iri;
                     x["cause_a"] = c.cause_a.iri;
                     x["situation_a"] = c.situation_a.iri;
                     x["cause_b"] = c.cause_b.iri;
                     x["situation_b"] = c.situation_b.iri;
                     conflicts.append(x);
                 }
                 out["conflicts"] = conflicts;
                 return out;
             })
        .def(
            "find_events",
            [](const Store& s, std::optional<std::string> participant, std::optional<std::string> interpretant,
               std::optional<std::string> documenter, std::optional<std::string> time_overlap) {
                int given = participant.has_value() + interpretant.has_value() + documenter.has_value() +
                            time_overlap.has_value();
                if (given != 1) throw py::value_error("give exactly one query keyword");
                EventQuery q;
                if (participant) q = ByParticipant{entity(*participant)};
                if (interpretant) q = ByInterpretant{entity(*interpretant)};
                if (documenter) q = ByDocumenter{entity(*documenter)};
                if (time_overlap) q = ByTimeOverlap{parse_time_interval(*time_overlap)};
                return iris(find_events(s.graph(), q));
            },
            py::kw_only(), py::arg("participant") = py::none(), py::arg("interpretant") = py::none(),
            py::arg("documenter") = py::none(), py::arg("time_overlap") = py::none())
        .def("check_constraints", [](const Store& s, const std::string& composition) {
            const Graph& g = s.graph();
            PatternView view = view_of(g, entity(composition));
            if (view.kind != PatternKind::Composition) throw py::value_error(composition + " is not a composition");
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& c : view.composition().constraints) {
                for (const auto& e : constrained_components(view.composition(), c)) {
                    auto r = check_constraint(g, view, e, c);
                    out.emplace_back(std::string(constraint_status_name(r.status)), c.iri.value_or(""), e.iri);
                }
            }
            return out;
        });

    m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
    m.def("serialize", [](const Store& s) { return serialize(s.graph()); }, py::arg("store"));
    m.def("allen_relation", [](const std::string& a, const std::string& b) {
        return std::string(allen_name(allen_relation(parse_time_interval(a), parse_time_interval(b))));
    });
    m.def("rule_catalog", [] {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& r : rule_catalog()) {
            out.emplace_back(std::string(r.code), std::string(severity_name(r.severity)), std::string(r.summary));
        }
        return out;
    });
}
