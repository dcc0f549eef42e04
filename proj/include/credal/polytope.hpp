#pragma once

#include <optional>
#include <vector>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

/// Convex hull of a finite, nonempty set of points (V-representation).
/// `points` is kept exactly as given; canonical (minimal, lexicographically
/// sorted) form is produced by minimal_v / canonical_v.
struct VertexSet {
    int dim = 0;
    std::vector<Point> points;

    VertexSet() = default;
    VertexSet(int dim, std::vector<Point> pts);
};

/// One linear condition `normal · x (<=|=) offset`.
struct Constraint {
    Point normal;
    Rational offset;

    friend bool operator==(const Constraint& a, const Constraint& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

/// Intersection of half-spaces and hyperplanes (H-representation).
struct HalfspaceSystem {
    int dim = 0;
    std::vector<Constraint> inequalities;  // normal · x <= offset
    std::vector<Constraint> equalities;    // normal · x == offset
};

/// Rational matrix mapping source coordinates (cols) to target (rows).
struct LinearMap {
    int rows = 0, cols = 0;
    std::vector<Point> entries;  // rows x cols

    Point apply(const Point& x) const;
};

/// Exact facet/affine-hull enumeration of conv(v.points) via the double
/// description method run on the cone of valid inequalities. Inequalities are
/// irredundant; lower-dimensional hulls carry their affine hull as equalities.
HalfspaceSystem v_to_h(const VertexSet& v);

/// Exact vertex enumeration. Throws EmptySetError / UnboundedError.
VertexSet h_to_v(const HalfspaceSystem& h);

/// As h_to_v, but an empty set is a value (nullopt), not an error.
/// Unboundedness still throws: every set in this library lives inside a
/// probability simplex, so a recession direction is always a caller bug.
std::optional<VertexSet> try_h_to_v(const HalfspaceSystem& h);

/// The extreme points of conv(v.points), deduplicated and sorted: the unique
/// minimal V-representation, used as the canonical form everywhere.
VertexSet minimal_v(const VertexSet& v);

/// Same set, no removable inequality (LP redundancy test per row), rows in
/// canonical integer-coprime scaling and sorted. Throws EmptySetError.
HalfspaceSystem minimal_h(const HalfspaceSystem& h);

/// Constraint-list concatenation followed by redundancy reduction. An
/// infeasible intersection is returned unreduced; emptiness surfaces at the
/// next h_to_v, matching how the composition pipeline consumes it.
HalfspaceSystem intersect(const HalfspaceSystem& a, const HalfspaceSystem& b);

/// conv({m · p : p in v.points}) in canonical form.
VertexSet image(const VertexSet& v, const LinearMap& m);

/// {x : m·x in set(h)} — each constraint normal a becomes aᵀm.
HalfspaceSystem preimage_constraints(const HalfspaceSystem& h, const LinearMap& m);

bool contains(const VertexSet& v, const Point& x);
bool contains(const HalfspaceSystem& h, const Point& x);

/// Hull equality via canonical forms (§ the minimal V-representation is unique).
bool equal(const VertexSet& a, const VertexSet& b);

/// The unique Euclidean projection of x onto conv(v.points): Wolfe's min-norm
/// point algorithm over the shifted vertex set, entirely in exact arithmetic.
Point euclidean_project(const Point& x, const VertexSet& v);

namespace detail {

/// Generators of the cone {y : row·y = 0 (eq), row·y >= 0 (ineq)}:
/// a lineality basis plus the extreme rays modulo lineality.
struct ConeGenerators {
    std::vector<Point> lineality;
    std::vector<Point> rays;
};

ConeGenerators double_description(int dim, const std::vector<Point>& eq_rows,
                                  const std::vector<Point>& ineq_rows);

/// Scale to coprime integer entries (positive multiple only).
void scale_primitive(Point& p);

/// Min-norm point of conv(points); exposed for direct testing.
Point min_norm_point(const std::vector<Point>& points);

}  // namespace detail

}  // namespace credal
