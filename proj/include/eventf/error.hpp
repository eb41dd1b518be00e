#pragma once

#include <stdexcept>
#include <string>

namespace eventf {

enum class Errc {
    // graph
    InvalidIri,
    UndeclaredPrefix,
    ReservedIri,
    PrefixConflict,
    DuplicateIri,
    KindConflict,
    UnknownEntity,
    DomainViolation,
    RangeViolation,
    InvalidLiteral,
    // regions
    InvalidInterval,
    InvalidBox,
    InvalidTrajectory,
    DegenerateInterval,
    // builders
    KindMismatch,
    EmptyParticipants,
    DuplicateRole,
    UnknownRole,
    CompositeAmongComponents,
    EmptyComponents,
    DuplicateComponent,
    InvalidConstraint,
    SelfCause,
    TooFewCorrelates,
    SelfDocumentation,
    EmptyDocumenters,
    NonPatternSituation,
    EmptySituations,
    NotAPatternSituation,
    // reasoning
    NotAComponent,
    NotAnInterpretation,
    DifferentInterpretedEvents,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace eventf
