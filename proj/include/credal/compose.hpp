#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "credal/credal.hpp"

namespace credal {

/// One step-(ii) decision: the projection of a vertex marginal and which rule
/// of the composition definition it triggered.
struct ProjectionRecord {
    Distribution p1;   // vertex of the first operand
    Distribution q2;   // projection of p1's common marginal onto the second's
    char rule;         // 'a' (fiber products) or 'b' (vacuous extension)
};

/// Intermediates of one composition run, for diagnostics and table replication.
struct CompositionTrace {
    std::optional<CredalSet> core;  // nullopt records an empty intersection
    std::optional<CredalSet> m1_projective;
    std::optional<CredalSet> m2_projective;
    std::vector<std::pair<Distribution, Distribution>> projective_pairs;
    std::vector<ProjectionRecord> projection_records;
    std::optional<CredalSet> result;
};

/// Intersection of the two common-variable marginals, over the common scope.
/// nullopt means the intersection is empty (a legal outcome, not an error).
std::optional<CredalSet> common_marginal_core(const CredalSet& m1, const CredalSet& m2);

/// The parts of m1 and m2 whose common marginal lies in the (nonempty) core.
std::pair<CredalSet, CredalSet> projective_parts(const CredalSet& m1, const CredalSet& m2,
                                                 const CredalSet& core);

/// The composition m1 |> m2 over the union scope (m1's variables first).
/// Total: an empty core or failed absolute continuity selects other rules
/// rather than failing.
CredalSet compose(const CredalSet& m1, const CredalSet& m2);
CredalSet compose(const CredalSet& m1, const CredalSet& m2, CompositionTrace& trace);

/// True iff m1 |> m2 and m2 |> m1 describe the same set (after reordering the
/// second onto the first's scope order).
bool commutes(const CredalSet& m1, const CredalSet& m2);

}  // namespace credal
