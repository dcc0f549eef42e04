#include "credal/compose.hpp"

namespace credal {

std::optional<CredalSet> common_marginal_core(const CredalSet& m1, const CredalSet& m2) {
    const Scope common = scope_intersection(m1.scope(), m2.scope());
    const CredalSet a = marginalize(m1, common);
    const CredalSet b = marginalize(m2, common);
    const HalfspaceSystem sys = intersect(v_to_h(a.hull()), v_to_h(b.hull()));
    std::optional<VertexSet> verts = try_h_to_v(sys);
    if (!verts) return std::nullopt;
    return CredalSet(common, *verts);
}

std::pair<CredalSet, CredalSet> projective_parts(const CredalSet& m1, const CredalSet& m2,
                                                 const CredalSet& core) {
    auto part = [&core](const CredalSet& m) {
        const CredalSet band = vacuous_extend(core, m.scope());
        return CredalSet(m.scope(),
                         h_to_v(intersect(v_to_h(band.hull()), v_to_h(m.hull()))));
    };
    return {part(m1), part(m2)};
}

CredalSet compose(const CredalSet& m1, const CredalSet& m2, CompositionTrace& trace) {
    const Scope common = scope_intersection(m1.scope(), m2.scope());
    const Scope uni = scope_union(m1.scope(), m2.scope());
    std::vector<Point> candidates;

    trace = CompositionTrace{};
    trace.core = common_marginal_core(m1, m2);

    // Step (i): conditional products of projective-part vertex pairs whose
    // common marginals agree exactly. Skipped entirely on an empty core.
    if (trace.core) {
        auto [p1_part, p2_part] = projective_parts(m1, m2, *trace.core);
        for (const auto& p1 : p1_part.vertices()) {
            const Distribution p1c = marginalize_dist(p1, common);
            for (const auto& p2 : p2_part.vertices()) {
                if (!(marginalize_dist(p2, common) == p1c)) continue;
                candidates.push_back(conditional_product(p1, p2).masses);
                trace.projective_pairs.emplace_back(p1, p2);
            }
        }
        trace.m1_projective = std::move(p1_part);
        trace.m2_projective = std::move(p2_part);
    }

    // Step (ii): per vertex of m1, project its common marginal onto the
    // second operand's marginal set and apply rule [a] or [b].
    const CredalSet m2_common = marginalize(m2, common);
    for (const auto& p1 : m1.vertices()) {
        const Distribution p1c = marginalize_dist(p1, common);
        const Distribution q2(common, euclidean_project(p1c.masses, m2_common.hull()));
        if (abs_continuous(p1c, q2)) {
            for (const auto& p2 : fiber(m2, q2).vertices())
                candidates.push_back(conditional_product(p1, p2).masses);
            trace.projection_records.push_back({p1, q2, 'a'});
        } else {
            // Named: the range-for must not bind into a destroyed temporary.
            const CredalSet extension = vacuous_extend_dist(p1, uni);
            for (const auto& ext : extension.hull().points) candidates.push_back(ext);
            trace.projection_records.push_back({p1, q2, 'b'});
        }
    }

    trace.result = CredalSet(uni, std::move(candidates));
    return *trace.result;
}

CredalSet compose(const CredalSet& m1, const CredalSet& m2) {
    CompositionTrace trace;
    return compose(m1, m2, trace);
}

bool commutes(const CredalSet& m1, const CredalSet& m2) {
    const CredalSet fwd = compose(m1, m2);
    const CredalSet rev = compose(m2, m1);
    // Reorder the reverse result onto the forward scope; the marginal map of a
    // full sub-scope is a permutation matrix.
    const VertexSet reordered = image(rev.hull(), marginal_map(rev.scope(), fwd.scope()));
    return equal(fwd.hull(), reordered);
}

}  // namespace credal
