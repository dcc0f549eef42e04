#pragma once

#include <optional>
#include <string>

#include "credal/compose.hpp"
#include "credal/credal.hpp"

namespace credal {

/// A parsed credal file: always a scope, plus either a credal set (V files)
/// or a raw constraint system over the scope's cells (H files). `declared`
/// keeps every variable the file defines, including ones outside the scope
/// (extension targets).
struct CredalDocument {
    Scope declared;
    Scope scope;
    std::optional<CredalSet> set;           // representation "V"
    std::optional<HalfspaceSystem> system;  // representation "H"
};

/// Exact parse of the JSON credal-file format. Number strings are parsed as
/// exact rationals ("1/3", "0.25"); JSON integers are accepted, JSON floats
/// are rejected. Throws ParseError with row/column diagnostics on malformed
/// input and InvariantViolationError on distribution-invariant failures.
CredalDocument parse_credal(const std::string& text);

/// Serialize a credal set as a V file. Default emission is exact; `digits`
/// switches to rounded decimals for table-style display. Byte-deterministic.
std::string emit_credal(const CredalSet& m, std::optional<int> digits = std::nullopt);

/// Serialize an H file over the given scope.
std::string emit_credal(const Scope& scope, const HalfspaceSystem& h);

/// Serialize a composition trace; an empty core is written as the explicit
/// marker "EMPTY" rather than an empty vertex list.
std::string emit_trace(const CompositionTrace& t, std::optional<int> digits = std::nullopt);

}  // namespace credal
