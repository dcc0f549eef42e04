#pragma once

#include <vector>

#include "credal/rational.hpp"

namespace credal::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Rational objective;  // valid when optimal
    Point x;             // valid when optimal
};

/// min c·x  s.t.  A x = b, x >= 0.
/// Dense two-phase primal simplex with Bland's rule; every pivot is exact, so
/// termination is guaranteed and the reported optimum is the true one.
Result solve_standard(const std::vector<Point>& A, const Point& b, const Point& c);

/// One general-form problem: max obj·x over { x : ineq_normal·x <= ineq_offset,
/// eq_normal·x = eq_offset }, x free. Internally rewritten in standard form.
struct GeneralLP {
    int dim = 0;
    std::vector<Point> ineq_normals;
    Point ineq_offsets;
    std::vector<Point> eq_normals;
    Point eq_offsets;
    Point objective;
};

Result maximize(const GeneralLP& p);

/// Feasibility of the general system alone (phase 1 only).
bool feasible(const GeneralLP& p);

/// Is x a convex combination of the given points? (LP feasibility over the
/// combination weights; exact.)
bool in_convex_hull(const Point& x, const std::vector<Point>& points);

}  // namespace credal::lp
