#include "credal/polytope.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "credal/lp.hpp"

namespace credal {

namespace {

// Zero-set bitmask over the inequality rows processed so far.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t nbits) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
};

Bits bits_and(const Bits& a, const Bits& b) {
    Bits r(0);
    r.w.resize(a.w.size());
    for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
}

bool bits_subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.w.size(); ++i)
        if (a.w[i] & ~b.w[i]) return false;
    return true;
}

struct RayRec {
    Point y;
    Bits zero;
};

bool is_zero_vec(const Point& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

bool constraint_less(const Constraint& a, const Constraint& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
}

void canonicalize_row(Constraint& c, bool equality) {
    Point row = c.normal;
    row.push_back(c.offset);
    detail::scale_primitive(row);
    if (equality) {
        // Sign convention: first nonzero entry of the normal is positive.
        for (const auto& e : row) {
            if (e.is_zero()) continue;
            if (e.sign() < 0)
                for (auto& f : row) f = -f;
            break;
        }
    }
    c.offset = row.back();
    row.pop_back();
    c.normal = std::move(row);
}

void validate_system(const HalfspaceSystem& h) {
    for (const auto& c : h.inequalities)
        if (static_cast<int>(c.normal.size()) != h.dim)
            throw DimensionMismatchError("constraint normal has size " +
                                         std::to_string(c.normal.size()) + ", system dimension is " +
                                         std::to_string(h.dim));
    for (const auto& c : h.equalities)
        if (static_cast<int>(c.normal.size()) != h.dim)
            throw DimensionMismatchError("constraint normal has size " +
                                         std::to_string(c.normal.size()) + ", system dimension is " +
                                         std::to_string(h.dim));
}

// Reduced row echelon form of [normal | offset] rows; zero rows dropped.
// Returns rows with pivot entry 1; pivot_cols[i] is the pivot column of row i.
std::vector<Point> rref(std::vector<Point> rows, std::vector<int>& pivot_cols) {
    pivot_cols.clear();
    if (rows.empty()) return rows;
    const std::size_t width = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!rows[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rational lead = rows[r][col];
        for (auto& e : rows[r]) e = e / lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            Rational f = rows[i][col];
            for (std::size_t j = 0; j < width; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_cols.push_back(static_cast<int>(col));
        ++r;
    }
    rows.resize(r);
    return rows;
}

lp::GeneralLP to_lp(const HalfspaceSystem& h) {
    lp::GeneralLP prob;
    prob.dim = h.dim;
    for (const auto& c : h.inequalities) {
        prob.ineq_normals.push_back(c.normal);
        prob.ineq_offsets.push_back(c.offset);
    }
    for (const auto& c : h.equalities) {
        prob.eq_normals.push_back(c.normal);
        prob.eq_offsets.push_back(c.offset);
    }
    prob.objective.assign(h.dim, Rational(0));
    return prob;
}

}  // namespace

VertexSet::VertexSet(int dim_, std::vector<Point> pts) : dim(dim_), points(std::move(pts)) {
    if (dim < 0) throw InvariantViolationError("vertex set dimension is negative");
    if (points.empty()) throw InvariantViolationError("vertex set has no points");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw DimensionMismatchError("point has size " + std::to_string(p.size()) +
                                         ", vertex set dimension is " + std::to_string(dim));
    // Exact duplicates are dropped on construction, preserving first-seen order.
    std::vector<Point> unique_pts;
    unique_pts.reserve(points.size());
    for (auto& p : points)
        if (std::find(unique_pts.begin(), unique_pts.end(), p) == unique_pts.end())
            unique_pts.push_back(std::move(p));
    points = std::move(unique_pts);
}

Point LinearMap::apply(const Point& x) const {
    if (static_cast<int>(x.size()) != cols)
        throw DimensionMismatchError("map expects size " + std::to_string(cols) + ", point has size " +
                                     std::to_string(x.size()));
    Point out(rows, Rational(0));
    for (int i = 0; i < rows; ++i) out[i] = dot(entries[i], x);
    return out;
}

namespace detail {

void scale_primitive(Point& p) {
    mpz_class den_lcm = 1;
    bool any = false;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        any = true;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den().get_mpz_t());
    }
    if (!any) return;
    mpz_class g = 0;
    std::vector<mpz_class> ints(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        mpq_class scaled = p[i].raw() * mpq_class(den_lcm);
        ints[i] = scaled.get_num();  // canonical mpq with den 1
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = Rational(mpq_class(ints[i] / g));
}

ConeGenerators double_description(int dim, const std::vector<Point>& eq_rows,
                                  const std::vector<Point>& ineq_rows) {
    std::vector<Point> lin;
    for (int i = 0; i < dim; ++i) {
        Point e(dim, Rational(0));
        e[i] = Rational(1);
        lin.push_back(std::move(e));
    }
    std::vector<RayRec> rays;
    const std::size_t nbits = ineq_rows.size();

    auto process = [&](const Point& row, bool is_eq, std::size_t bit) {
        // If some lineality vector violates the row, trade it for the row.
        std::size_t hit = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (!dot(row, lin[i]).is_zero()) {
                hit = i;
                break;
            }
        if (hit < lin.size()) {
            Point pivot = lin[hit];
            lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(hit));
            const Rational dp = dot(row, pivot);
            for (auto& l : lin) {
                const Rational dl = dot(row, l);
                if (dl.is_zero()) continue;
                const Rational f = dl / dp;
                for (int k = 0; k < dim; ++k) l[k] = l[k] - f * pivot[k];
                scale_primitive(l);
            }
            for (auto& r : rays) {
                const Rational dr = dot(row, r.y);
                if (!dr.is_zero()) {
                    const Rational f = dr / dp;
                    for (int k = 0; k < dim; ++k) r.y[k] = r.y[k] - f * pivot[k];
                    scale_primitive(r.y);
                }
                if (!is_eq) r.zero.set(bit);
            }
            if (!is_eq) {
                RayRec nr{pivot, Bits(nbits)};
                if (dp.sign() < 0)
                    for (auto& c : nr.y) c = -c;
                scale_primitive(nr.y);
                for (std::size_t j = 0; j < bit; ++j) nr.zero.set(j);
                rays.push_back(std::move(nr));
            }
            return;
        }

        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(row, rays[i].y);
            const int s = val[i].sign();
            if (s > 0) pos.push_back(i);
            else if (s < 0) neg.push_back(i);
        }
        if (neg.empty() && (!is_eq || pos.empty())) {
            if (!is_eq)
                for (auto& r : rays)
                    if (val[&r - rays.data()].is_zero()) r.zero.set(bit);
            return;
        }

        std::vector<RayRec> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const int s = val[i].sign();
            if (s == 0) {
                RayRec keep = rays[i];
                if (!is_eq) keep.zero.set(bit);
                next.push_back(std::move(keep));
            } else if (s > 0 && !is_eq) {
                next.push_back(rays[i]);
            }
        }
        for (const std::size_t p : pos)
            for (const std::size_t n : neg) {
                const Bits common = bits_and(rays[p].zero, rays[n].zero);
                bool adjacent = true;
                for (std::size_t s = 0; s < rays.size() && adjacent; ++s) {
                    if (s == p || s == n) continue;
                    if (bits_subset(common, rays[s].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                RayRec combo{Point(dim), common};
                for (int k = 0; k < dim; ++k)
                    combo.y[k] = val[p] * rays[n].y[k] - val[n] * rays[p].y[k];
                if (is_zero_vec(combo.y)) continue;
                scale_primitive(combo.y);
                if (!is_eq) combo.zero.set(bit);
                next.push_back(std::move(combo));
            }
        rays = std::move(next);
    };

    for (const auto& row : eq_rows) process(row, true, 0);
    for (std::size_t i = 0; i < ineq_rows.size(); ++i) process(ineq_rows[i], false, i);

    ConeGenerators out;
    out.lineality = std::move(lin);
    out.rays.reserve(rays.size());
    for (auto& r : rays) out.rays.push_back(std::move(r.y));
    return out;
}

Point min_norm_point(const std::vector<Point>& points) {
    const std::size_t d = points[0].size();
    const Rational zero(0);

    // Exact solve of the corral KKT system: weights mu with sum 1 and all
    // Gram-row values equal; the corral stays affinely independent, so the
    // system is nonsingular.
    auto affine_weights = [&](const std::vector<std::size_t>& corral) {
        const std::size_t k = corral.size();
        std::vector<Point> m(k, Point(k + 1, zero));
        for (std::size_t j = 0; j < k; ++j) m[0][j] = Rational(1);
        m[0][k] = Rational(1);
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m[i][j] = dot(points[corral[i]], points[corral[j]]) -
                          dot(points[corral[0]], points[corral[j]]);
        // Gaussian elimination with first-nonzero pivoting.
        std::vector<Rational> mu(k, zero);
        std::vector<int> where(k, -1);
        std::size_t r = 0;
        for (std::size_t col = 0; col < k && r < k; ++col) {
            std::size_t piv = k;
            for (std::size_t i = r; i < k; ++i)
                if (!m[i][col].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == k) continue;
            std::swap(m[r], m[piv]);
            const Rational lead = m[r][col];
            for (auto& e : m[r]) e = e / lead;
            for (std::size_t i = 0; i < k; ++i) {
                if (i == r || m[i][col].is_zero()) continue;
                const Rational f = m[i][col];
                for (std::size_t j = 0; j <= k; ++j) m[i][j] = m[i][j] - f * m[r][j];
            }
            where[col] = static_cast<int>(r);
            ++r;
        }
        for (std::size_t col = 0; col < k; ++col) {
            if (where[col] < 0) throw InvariantViolationError("corral lost affine independence");
            mu[col] = m[static_cast<std::size_t>(where[col])][k];
        }
        return mu;
    };

    // Deterministic start: the first point of minimum squared norm.
    std::size_t best = 0;
    Rational best_norm = dot(points[0], points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
        const Rational n = dot(points[i], points[i]);
        if (n < best_norm) {
            best_norm = n;
            best = i;
        }
    }
    std::vector<std::size_t> corral{best};
    std::vector<Rational> lambda{Rational(1)};

    while (true) {
        Point w(d, zero);
        for (std::size_t i = 0; i < corral.size(); ++i)
            for (std::size_t k = 0; k < d; ++k) w[k] = w[k] + lambda[i] * points[corral[i]][k];

        const Rational ww = dot(w, w);
        std::size_t star = points.size();
        Rational star_val = ww;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const Rational v = dot(w, points[i]);
            if (v < star_val) {
                star_val = v;
                star = i;
            }
        }
        if (star == points.size()) return w;

        corral.push_back(star);
        lambda.push_back(zero);
        while (true) {
            const std::vector<Rational> mu = affine_weights(corral);
            bool nonneg = true;
            for (const auto& m : mu)
                if (m.sign() < 0) {
                    nonneg = false;
                    break;
                }
            if (nonneg) {
                std::vector<std::size_t> kept;
                std::vector<Rational> kl;
                for (std::size_t i = 0; i < corral.size(); ++i)
                    if (mu[i].sign() > 0) {
                        kept.push_back(corral[i]);
                        kl.push_back(mu[i]);
                    }
                corral = std::move(kept);
                lambda = std::move(kl);
                break;
            }
            bool have_theta = false;
            Rational theta(0);
            for (std::size_t i = 0; i < corral.size(); ++i) {
                if (mu[i].sign() >= 0) continue;
                const Rational t = lambda[i] / (lambda[i] - mu[i]);
                if (!have_theta || t < theta) {
                    theta = t;
                    have_theta = true;
                }
            }
            if (!have_theta || theta.sign() <= 0)
                throw InvariantViolationError("min-norm line search stalled");
            std::vector<std::size_t> kept;
            std::vector<Rational> kl;
            const Rational one_m = Rational(1) - theta;
            for (std::size_t i = 0; i < corral.size(); ++i) {
                const Rational z = one_m * lambda[i] + theta * mu[i];
                if (z.sign() > 0) {
                    kept.push_back(corral[i]);
                    kl.push_back(z);
                }
            }
            corral = std::move(kept);
            lambda = std::move(kl);
        }
    }
}

}  // namespace detail

HalfspaceSystem v_to_h(const VertexSet& v) {
    const int d = v.dim;
    const int cd = d + 1;  // cone coordinates (beta, a_1..a_d)
    std::vector<Point> rows;
    rows.reserve(v.points.size());
    for (const auto& p : v.points) {
        Point row(cd);
        row[0] = Rational(1);
        for (int k = 0; k < d; ++k) row[k + 1] = -p[k];
        rows.push_back(std::move(row));
    }
    detail::ConeGenerators gen = detail::double_description(cd, {}, rows);

    // Lineality vectors are the valid equalities; canonicalize the affine
    // hull by reduced row echelon form over [normal | offset].
    std::vector<Point> eq_rows;
    for (const auto& l : gen.lineality) {
        Point row(d + 1);
        for (int k = 0; k < d; ++k) row[k] = l[k + 1];
        row[d] = l[0];
        eq_rows.push_back(std::move(row));
    }
    std::vector<int> pivot_cols;
    eq_rows = rref(std::move(eq_rows), pivot_cols);

    HalfspaceSystem out;
    out.dim = d;
    for (const auto& row : eq_rows) {
        Constraint c;
        c.normal.assign(row.begin(), row.begin() + d);
        c.offset = row[d];
        canonicalize_row(c, true);
        out.equalities.push_back(std::move(c));
    }
    for (const auto& ray : gen.rays) {
        Point row(d + 1);
        for (int k = 0; k < d; ++k) row[k] = ray[k + 1];
        row[d] = ray[0];
        // Canonical representative modulo the affine hull: zero out the
        // pivot coordinates of the equality system.
        for (std::size_t i = 0; i < eq_rows.size(); ++i) {
            const int pc = pivot_cols[i];
            if (row[pc].is_zero()) continue;
            const Rational f = row[pc];
            for (int j = 0; j <= d; ++j) row[j] = row[j] - f * eq_rows[i][j];
        }
        Constraint c;
        c.normal.assign(row.begin(), row.begin() + d);
        c.offset = row[d];
        if (is_zero_vec(c.normal)) continue;  // trivial inequality
        canonicalize_row(c, false);
        out.inequalities.push_back(std::move(c));
    }
    std::sort(out.equalities.begin(), out.equalities.end(), constraint_less);
    std::sort(out.inequalities.begin(), out.inequalities.end(), constraint_less);
    out.inequalities.erase(std::unique(out.inequalities.begin(), out.inequalities.end()),
                           out.inequalities.end());
    return out;
}

std::optional<VertexSet> try_h_to_v(const HalfspaceSystem& h) {
    validate_system(h);
    const int d = h.dim;
    const int cd = d + 1;  // homogenization coordinates (x_1..x_d, t)
    std::vector<Point> eq_rows, ineq_rows;
    for (const auto& c : h.equalities) {
        Point row(cd);
        for (int k = 0; k < d; ++k) row[k] = -c.normal[k];
        row[d] = c.offset;
        eq_rows.push_back(std::move(row));
    }
    for (const auto& c : h.inequalities) {
        Point row(cd);
        for (int k = 0; k < d; ++k) row[k] = -c.normal[k];
        row[d] = c.offset;
        ineq_rows.push_back(std::move(row));
    }
    {
        Point t_row(cd, Rational(0));
        t_row[d] = Rational(1);
        ineq_rows.push_back(std::move(t_row));
    }
    detail::ConeGenerators gen = detail::double_description(cd, eq_rows, ineq_rows);

    std::vector<Point> verts;
    bool recession = !gen.lineality.empty();
    for (const auto& ray : gen.rays) {
        if (ray[d].is_zero()) {
            recession = true;
            continue;
        }
        Point x(d);
        for (int k = 0; k < d; ++k) x[k] = ray[k] / ray[d];
        verts.push_back(std::move(x));
    }
    if (verts.empty()) return std::nullopt;
    if (recession) throw UnboundedError("system has a recession direction");
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return VertexSet(d, std::move(verts));
}

VertexSet h_to_v(const HalfspaceSystem& h) {
    std::optional<VertexSet> v = try_h_to_v(h);
    if (!v) throw EmptySetError("system has no feasible point");
    return *std::move(v);
}

VertexSet minimal_v(const VertexSet& v) {
    std::vector<Point> pts = v.points;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return VertexSet(v.dim, std::move(pts));
    std::vector<Point> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Point> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!lp::in_convex_hull(pts[i], others)) keep.push_back(pts[i]);
    }
    return VertexSet(v.dim, std::move(keep));
}

HalfspaceSystem minimal_h(const HalfspaceSystem& h) {
    validate_system(h);
    if (!lp::feasible(to_lp(h))) throw EmptySetError("system has no feasible point");

    std::vector<std::pair<Constraint, bool>> rows;  // (row, is_equality)
    for (const auto& c : h.equalities) {
        Constraint r = c;
        canonicalize_row(r, true);
        if (is_zero_vec(r.normal) && r.offset.is_zero()) continue;
        rows.emplace_back(std::move(r), true);
    }
    for (const auto& c : h.inequalities) {
        Constraint r = c;
        canonicalize_row(r, false);
        if (is_zero_vec(r.normal) && r.offset.sign() >= 0) continue;
        rows.emplace_back(std::move(r), false);
    }
    auto row_less = [](const std::pair<Constraint, bool>& a, const std::pair<Constraint, bool>& b) {
        if (a.second != b.second) return a.second;  // equalities first
        return constraint_less(a.first, b.first);
    };
    std::sort(rows.begin(), rows.end(), row_less);
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const auto& a, const auto& b) {
                               return a.second == b.second && a.first == b.first;
                           }),
               rows.end());

    // Drop each row implied by the remainder. The probe LPs are capped at
    // offset +/- 1 so they stay bounded even for an unbounded feasible set.
    for (std::size_t i = 0; i < rows.size();) {
        lp::GeneralLP prob;
        prob.dim = h.dim;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j == i) continue;
            if (rows[j].second) {
                prob.eq_normals.push_back(rows[j].first.normal);
                prob.eq_offsets.push_back(rows[j].first.offset);
            } else {
                prob.ineq_normals.push_back(rows[j].first.normal);
                prob.ineq_offsets.push_back(rows[j].first.offset);
            }
        }
        const Point& a = rows[i].first.normal;
        const Rational& beta = rows[i].first.offset;
        bool redundant = true;

        lp::GeneralLP up = prob;
        up.objective = a;
        up.ineq_normals.push_back(a);
        up.ineq_offsets.push_back(beta + Rational(1));
        lp::Result rmax = lp::maximize(up);
        if (rmax.status != lp::Status::optimal || rmax.objective > beta) redundant = false;

        if (redundant && rows[i].second) {
            lp::GeneralLP down = prob;
            down.objective.assign(a.size(), Rational(0));
            for (std::size_t k = 0; k < a.size(); ++k) down.objective[k] = -a[k];
            down.ineq_normals.push_back(down.objective);
            down.ineq_offsets.push_back(Rational(1) - beta);
            lp::Result rmin = lp::maximize(down);
            if (rmin.status != lp::Status::optimal || rmin.objective > -beta) redundant = false;
        }
        if (redundant)
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }

    HalfspaceSystem out;
    out.dim = h.dim;
    for (auto& [row, eq] : rows)
        (eq ? out.equalities : out.inequalities).push_back(std::move(row));
    return out;
}

HalfspaceSystem intersect(const HalfspaceSystem& a, const HalfspaceSystem& b) {
    if (a.dim != b.dim)
        throw DimensionMismatchError("intersecting systems of dimension " + std::to_string(a.dim) +
                                     " and " + std::to_string(b.dim));
    validate_system(a);
    validate_system(b);
    HalfspaceSystem cat;
    cat.dim = a.dim;
    cat.inequalities = a.inequalities;
    cat.inequalities.insert(cat.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
    cat.equalities = a.equalities;
    cat.equalities.insert(cat.equalities.end(), b.equalities.begin(), b.equalities.end());
    if (!lp::feasible(to_lp(cat))) return cat;
    return minimal_h(cat);
}

VertexSet image(const VertexSet& v, const LinearMap& m) {
    if (m.cols != v.dim)
        throw DimensionMismatchError("map expects dimension " + std::to_string(m.cols) +
                                     ", vertex set has dimension " + std::to_string(v.dim));
    std::vector<Point> pts;
    pts.reserve(v.points.size());
    for (const auto& p : v.points) pts.push_back(m.apply(p));
    return minimal_v(VertexSet(m.rows, std::move(pts)));
}

HalfspaceSystem preimage_constraints(const HalfspaceSystem& h, const LinearMap& m) {
    if (m.rows != h.dim)
        throw DimensionMismatchError("map produces dimension " + std::to_string(m.rows) +
                                     ", system has dimension " + std::to_string(h.dim));
    validate_system(h);
    HalfspaceSystem out;
    out.dim = m.cols;
    auto pull = [&](const Constraint& c) {
        Constraint r;
        r.normal.assign(m.cols, Rational(0));
        for (int j = 0; j < m.cols; ++j)
            for (int i = 0; i < m.rows; ++i) r.normal[j] = r.normal[j] + c.normal[i] * m.entries[i][j];
        r.offset = c.offset;
        return r;
    };
    for (const auto& c : h.inequalities) out.inequalities.push_back(pull(c));
    for (const auto& c : h.equalities) out.equalities.push_back(pull(c));
    return out;
}

bool contains(const VertexSet& v, const Point& x) {
    if (static_cast<int>(x.size()) != v.dim)
        throw DimensionMismatchError("point has size " + std::to_string(x.size()) +
                                     ", vertex set dimension is " + std::to_string(v.dim));
    return lp::in_convex_hull(x, v.points);
}

bool contains(const HalfspaceSystem& h, const Point& x) {
    if (static_cast<int>(x.size()) != h.dim)
        throw DimensionMismatchError("point has size " + std::to_string(x.size()) +
                                     ", system dimension is " + std::to_string(h.dim));
    validate_system(h);
    for (const auto& c : h.inequalities)
        if (dot(c.normal, x) > c.offset) return false;
    for (const auto& c : h.equalities)
        if (dot(c.normal, x) != c.offset) return false;
    return true;
}

bool equal(const VertexSet& a, const VertexSet& b) {
    if (a.dim != b.dim)
        throw DimensionMismatchError("comparing vertex sets of dimension " + std::to_string(a.dim) +
                                     " and " + std::to_string(b.dim));
    return minimal_v(a).points == minimal_v(b).points;
}

Point euclidean_project(const Point& x, const VertexSet& v) {
    if (static_cast<int>(x.size()) != v.dim)
        throw DimensionMismatchError("point has size " + std::to_string(x.size()) +
                                     ", vertex set dimension is " + std::to_string(v.dim));
    if (lp::in_convex_hull(x, v.points)) return x;
    std::vector<Point> shifted = v.points;
    for (auto& p : shifted)
        for (int k = 0; k < v.dim; ++k) p[k] = p[k] - x[k];
    const Point w = detail::min_norm_point(shifted);
    Point out(x);
    for (int k = 0; k < v.dim; ++k) out[k] = out[k] + w[k];
    return out;
}

}  // namespace credal
