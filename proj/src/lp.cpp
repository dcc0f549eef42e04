#include "credal/lp.hpp"

#include <cassert>

#include "credal/errors.hpp"

namespace credal::lp {

namespace {

// Tableau rows: m constraint rows (columns 0..n-1 plus rhs at column n),
// row m holds the reduced objective (minimization). basis[i] is the variable
// basic in row i.
struct Tableau {
    int m = 0, n = 0;
    std::vector<Point> t;  // (m+1) x (n+1)
    std::vector<int> basis;

    void pivot(int row, int col) {
        Rational piv = t[row][col];
        assert(!piv.is_zero());
        for (int j = 0; j <= n; ++j) t[row][j] /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == row || t[i][col].is_zero()) continue;
            Rational f = t[i][col];
            for (int j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Bland: entering = lowest-index column with negative reduced cost;
    // leaving = lexicographically safe min-ratio row with lowest basis index.
    Status iterate(int ncols) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols; ++j) {
                if (t[m][j].sign() < 0) { enter = j; break; }
            }
            if (enter < 0) return Status::optimal;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter].sign() <= 0) continue;
                Rational ratio = t[i][n] / t[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return Status::unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

Result solve_standard(const std::vector<Point>& A, const Point& b, const Point& c) {
    const int m = static_cast<int>(A.size());
    const int n = m == 0 ? static_cast<int>(c.size()) : static_cast<int>(A[0].size());

    Tableau tab;
    tab.m = m;
    tab.n = n + m;  // structural + artificial columns
    tab.t.assign(m + 1, Point(tab.n + 1));
    tab.basis.assign(m, 0);

    for (int i = 0; i < m; ++i) {
        int flip = b[i].sign() < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) tab.t[i][j] = Rational(flip) * A[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][tab.n] = Rational(flip) * b[i];
        tab.basis[i] = n + i;
    }
    // Phase 1: minimize the sum of artificials.
    for (int j = 0; j <= tab.n; ++j) {
        Rational s;
        for (int i = 0; i < m; ++i) s += tab.t[i][j];
        tab.t[m][j] = (j >= n && j < tab.n) ? Rational(0) : -s;
    }
    Status s1 = tab.iterate(tab.n);
    assert(s1 != Status::unbounded);
    (void)s1;
    Rational phase1 = -tab.t[m][tab.n];
    if (!phase1.is_zero()) return {Status::infeasible, {}, {}};

    // Drive remaining artificials out of the basis; a row with no structural
    // pivot is redundant and stays put (its artificial is zero-valued).
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        for (int j = 0; j < n; ++j) {
            if (!tab.t[i][j].is_zero()) { tab.pivot(i, j); break; }
        }
    }

    // Phase 2 objective: reduced costs of c against the current basis.
    for (int j = 0; j <= tab.n; ++j) tab.t[m][j] = 0;
    for (int j = 0; j < n; ++j) tab.t[m][j] = c[j];
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) continue;
        Rational f = tab.t[m][tab.basis[i]];
        if (f.is_zero()) continue;
        for (int j = 0; j <= tab.n; ++j) tab.t[m][j] -= f * tab.t[i][j];
    }
    Status s2 = tab.iterate(n);  // artificials are never re-entered
    if (s2 == Status::unbounded) return {Status::unbounded, {}, {}};

    Result res;
    res.status = Status::optimal;
    res.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.n];
    res.objective = dot(c, res.x);
    return res;
}

namespace {

// x free -> x = u - v with u, v >= 0; one slack per inequality.
struct StandardForm {
    std::vector<Point> A;
    Point b;
    int nvars = 0;  // columns
    int dim = 0;

    explicit StandardForm(const GeneralLP& p) {
        dim = p.dim;
        const int ni = static_cast<int>(p.ineq_normals.size());
        const int ne = static_cast<int>(p.eq_normals.size());
        nvars = 2 * dim + ni;
        A.assign(ni + ne, Point(nvars, Rational(0)));
        b.assign(ni + ne, Rational(0));
        for (int i = 0; i < ni; ++i) {
            for (int j = 0; j < dim; ++j) {
                A[i][j] = p.ineq_normals[i][j];
                A[i][dim + j] = -p.ineq_normals[i][j];
            }
            A[i][2 * dim + i] = 1;
            b[i] = p.ineq_offsets[i];
        }
        for (int e = 0; e < ne; ++e) {
            for (int j = 0; j < dim; ++j) {
                A[ni + e][j] = p.eq_normals[e][j];
                A[ni + e][dim + j] = -p.eq_normals[e][j];
            }
            b[ni + e] = p.eq_offsets[e];
        }
    }

    Point objective(const GeneralLP& p) const {
        Point c(nvars, Rational(0));
        for (int j = 0; j < dim; ++j) {
            c[j] = -p.objective[j];  // minimize -obj
            c[dim + j] = p.objective[j];
        }
        return c;
    }

    Point recover(const Point& x) const {
        Point out(dim);
        for (int j = 0; j < dim; ++j) out[j] = x[j] - x[dim + j];
        return out;
    }
};

}  // namespace

Result maximize(const GeneralLP& p) {
    StandardForm sf(p);
    Result r = solve_standard(sf.A, sf.b, sf.objective(p));
    if (r.status != Status::optimal) return r;
    r.x = sf.recover(r.x);
    r.objective = dot(p.objective, r.x);
    return r;
}

bool feasible(const GeneralLP& p) {
    StandardForm sf(p);
    Point zero(sf.nvars, Rational(0));
    return solve_standard(sf.A, sf.b, zero).status == Status::optimal;
}

bool in_convex_hull(const Point& x, const std::vector<Point>& points) {
    if (points.empty()) return false;
    const int d = static_cast<int>(x.size());
    const int n = static_cast<int>(points.size());
    std::vector<Point> A(d + 1, Point(n));
    Point b(d + 1);
    for (int j = 0; j < n; ++j) {
        if (static_cast<int>(points[j].size()) != d)
            throw DimensionMismatchError("convex-hull membership: point dimensions differ");
        for (int i = 0; i < d; ++i) A[i][j] = points[j][i];
        A[d][j] = 1;
    }
    for (int i = 0; i < d; ++i) b[i] = x[i];
    b[d] = 1;
    Point zero(n, Rational(0));
    return solve_standard(A, b, zero).status == Status::optimal;
}

}  // namespace credal::lp
