#pragma once

#include "eventf/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eventf {

enum class Severity : std::uint8_t { Error, Warning };

std::string_view severity_name(Severity s) noexcept;

struct Violation {
    std::string code;
    Severity severity;
    std::string message;
    /// First entry is the subject (the situation for per-pattern rules).
    std::vector<EntityRef> entities;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    /// Situation the report covers; nullopt for a whole-store report.
    std::optional<EntityRef> target;
    /// Sorted by code, then subject IRI.
    std::vector<Violation> violations;

    bool conformant() const noexcept { return violations.empty(); }
    std::size_t count(Severity s) const noexcept;
    bool has_errors() const noexcept { return count(Severity::Error) != 0; }
};

struct RuleInfo {
    std::string_view code;
    Severity severity;
    std::string_view summary;
};

/// Every rule the validator can emit.
std::span<const RuleInfo> rule_catalog() noexcept;

/// Closed-world check of one situation. Throws UnknownEntity.
ValidationReport validate_situation(const Graph& graph, const EntityRef& situation);

/// All situations plus store-global checks.
ValidationReport validate_store(const Graph& graph);

/// One `SEVERITY CODE subject-iri message` line per violation.
std::string format_report(const ValidationReport& report);
/// JSON document: {"target": ..., "violations": [{code, severity, message, entities}]}.
std::string format_report_json(const ValidationReport& report);

} // namespace eventf
