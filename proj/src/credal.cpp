#include "credal/credal.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace credal {

namespace {

// Positions of sub's variables inside big, by name. Scope containment (with
// identical level lists) must already be verified.
std::vector<std::size_t> positions_in(const Scope& sub, const Scope& big) {
    std::vector<std::size_t> pos(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) pos[i] = big.index_of(sub.variables()[i].name);
    return pos;
}

int project_cell(const std::vector<int>& big_digits, const Scope& sub,
                 const std::vector<std::size_t>& pos) {
    std::vector<int> d(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) d[i] = big_digits[pos[i]];
    return sub.cell_of(d);
}

void require_sub_scope(const Scope& sub, const Scope& k, const char* what) {
    for (const auto& v : sub.variables()) {
        const std::size_t i = k.index_of(v.name);
        if (i == Scope::npos)
            throw ScopeMismatchError(std::string(what) + ": variable '" + v.name +
                                     "' is not in the enclosing scope");
        if (!(k.variables()[i] == v))
            throw ScopeMismatchError(std::string(what) + ": variable '" + v.name +
                                     "' has conflicting level lists");
    }
}

void validate_distribution(const Scope& s, const Point& masses, const char* what) {
    if (static_cast<int>(masses.size()) != s.cell_count())
        throw DimensionMismatchError(std::string(what) + ": mass vector has size " +
                                     std::to_string(masses.size()) + ", scope has " +
                                     std::to_string(s.cell_count()) + " cells");
    Rational sum(0);
    for (const auto& m : masses) {
        if (m.sign() < 0)
            throw InvariantViolationError(std::string(what) + ": negative mass " + m.str());
        sum += m;
    }
    if (!(sum == Rational(1)))
        throw InvariantViolationError(std::string(what) + ": masses sum to " + sum.str() +
                                      ", expected 1");
}

}  // namespace

Scope::Scope(std::vector<Variable> vars) : vars_(std::move(vars)) {
    std::set<std::string> names;
    for (const auto& v : vars_) {
        if (v.name.empty()) throw InvariantViolationError("scope has a variable with empty name");
        if (!names.insert(v.name).second)
            throw InvariantViolationError("scope has duplicate variable '" + v.name + "'");
        if (v.levels.empty())
            throw InvariantViolationError("variable '" + v.name + "' has no levels");
        std::set<std::string> lv(v.levels.begin(), v.levels.end());
        if (lv.size() != v.levels.size())
            throw InvariantViolationError("variable '" + v.name + "' has duplicate levels");
        cells_ *= static_cast<int>(v.levels.size());
    }
}

std::size_t Scope::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return npos;
}

std::vector<int> Scope::digits_of(int cell) const {
    std::vector<int> d(vars_.size(), 0);
    for (std::size_t i = vars_.size(); i-- > 0;) {
        const int card = static_cast<int>(vars_[i].levels.size());
        d[i] = cell % card;
        cell /= card;
    }
    return d;
}

int Scope::cell_of(const std::vector<int>& digits) const {
    int cell = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        cell = cell * static_cast<int>(vars_[i].levels.size()) + digits[i];
    return cell;
}

Scope sub_scope(const Scope& k, const std::vector<std::string>& names) {
    std::vector<Variable> vars;
    for (const auto& n : names) {
        const std::size_t i = k.index_of(n);
        if (i == Scope::npos)
            throw ScopeMismatchError("variable '" + n + "' is not in the scope");
        vars.push_back(k.variables()[i]);
    }
    return Scope(std::move(vars));
}

Scope scope_union(const Scope& k, const Scope& l) {
    std::vector<Variable> vars = k.variables();
    for (const auto& v : l.variables()) {
        const std::size_t i = k.index_of(v.name);
        if (i == Scope::npos) {
            vars.push_back(v);
        } else if (!(k.variables()[i] == v)) {
            throw ScopeMismatchError("variable '" + v.name +
                                     "' has conflicting level lists in the two scopes");
        }
    }
    return Scope(std::move(vars));
}

Scope scope_intersection(const Scope& k, const Scope& l) {
    std::vector<Variable> vars;
    for (const auto& v : k.variables()) {
        const std::size_t i = l.index_of(v.name);
        if (i == Scope::npos) continue;
        if (!(l.variables()[i] == v))
            throw ScopeMismatchError("variable '" + v.name +
                                     "' has conflicting level lists in the two scopes");
        vars.push_back(v);
    }
    return Scope(std::move(vars));
}

bool is_sub_scope(const Scope& sub, const Scope& k) {
    for (const auto& v : sub.variables()) {
        const std::size_t i = k.index_of(v.name);
        if (i == Scope::npos || !(k.variables()[i] == v)) return false;
    }
    return true;
}

Distribution::Distribution(Scope s, Point m) : scope(std::move(s)), masses(std::move(m)) {
    validate_distribution(scope, masses, "distribution");
}

CredalSet::CredalSet(Scope s, std::vector<Point> vertices)
    : scope_(std::move(s)), hull_(minimal_v(VertexSet(scope_.cell_count(), std::move(vertices)))) {
    for (const auto& p : hull_.points) validate_distribution(scope_, p, "credal set vertex");
}

CredalSet::CredalSet(Scope s, const VertexSet& hull) : CredalSet(std::move(s), hull.points) {}

std::vector<Distribution> CredalSet::vertices() const {
    std::vector<Distribution> out;
    out.reserve(hull_.points.size());
    for (const auto& p : hull_.points) out.emplace_back(scope_, p);
    return out;
}

LinearMap marginal_map(const Scope& k, const Scope& l) {
    require_sub_scope(l, k, "marginal_map");
    LinearMap m;
    m.rows = l.cell_count();
    m.cols = k.cell_count();
    m.entries.assign(m.rows, Point(m.cols, Rational(0)));
    const std::vector<std::size_t> pos = positions_in(l, k);
    for (int c = 0; c < m.cols; ++c) {
        const int row = project_cell(k.digits_of(c), l, pos);
        m.entries[row][c] = Rational(1);
    }
    return m;
}

HalfspaceSystem simplex_system(const Scope& k) {
    const int n = k.cell_count();
    HalfspaceSystem h;
    h.dim = n;
    for (int i = 0; i < n; ++i) {
        Constraint c;
        c.normal.assign(n, Rational(0));
        c.normal[i] = Rational(-1);
        c.offset = Rational(0);
        h.inequalities.push_back(std::move(c));
    }
    Constraint ones;
    ones.normal.assign(n, Rational(1));
    ones.offset = Rational(1);
    h.equalities.push_back(std::move(ones));
    return h;
}

CredalSet marginalize(const CredalSet& m, const Scope& l) {
    return CredalSet(l, image(m.hull(), marginal_map(m.scope(), l)));
}

Distribution marginalize_dist(const Distribution& p, const Scope& l) {
    return Distribution(l, marginal_map(p.scope, l).apply(p.masses));
}

CredalSet vacuous_extend(const CredalSet& m, const Scope& k) {
    require_sub_scope(m.scope(), k, "vacuous_extend");
    const HalfspaceSystem band =
        preimage_constraints(v_to_h(m.hull()), marginal_map(k, m.scope()));
    return CredalSet(k, h_to_v(intersect(band, simplex_system(k))));
}

CredalSet vacuous_extend_dist(const Distribution& p, const Scope& k) {
    return vacuous_extend(CredalSet(p.scope, std::vector<Point>{p.masses}), k);
}

bool is_projective(const CredalSet& m1, const CredalSet& m2) {
    const Scope common = scope_intersection(m1.scope(), m2.scope());
    return equal(marginalize(m1, common).hull(), marginalize(m2, common).hull());
}

bool abs_continuous(const Distribution& p, const Distribution& q) {
    if (!(p.scope == q.scope))
        throw ScopeMismatchError("abs_continuous requires identical scopes");
    for (std::size_t i = 0; i < p.masses.size(); ++i)
        if (q.masses[i].is_zero() && !p.masses[i].is_zero()) return false;
    return true;
}

Distribution conditional_product(const Distribution& p1, const Distribution& p2) {
    const Scope common = scope_intersection(p1.scope, p2.scope);
    const Distribution q2 = marginalize_dist(p2, common);
    if (!abs_continuous(marginalize_dist(p1, common), q2))
        throw NotAbsolutelyContinuousError(
            "common marginal of the first factor is not absolutely continuous with respect to "
            "the second's");
    const Scope uni = scope_union(p1.scope, p2.scope);
    const std::vector<std::size_t> pos1 = positions_in(p1.scope, uni);
    const std::vector<std::size_t> pos2 = positions_in(p2.scope, uni);
    const std::vector<std::size_t> posc = positions_in(common, uni);
    Point masses(uni.cell_count(), Rational(0));
    for (int c = 0; c < uni.cell_count(); ++c) {
        const std::vector<int> digits = uni.digits_of(c);
        const Rational& div = q2.masses[project_cell(digits, common, posc)];
        if (div.is_zero()) continue;  // numerator is 0 by absolute continuity
        masses[c] = p1.masses[project_cell(digits, p1.scope, pos1)] *
                    p2.masses[project_cell(digits, p2.scope, pos2)] / div;
    }
    return Distribution(uni, std::move(masses));
}

CredalSet strong_product(const CredalSet& m1, const CredalSet& m2) {
    for (const auto& v : m2.scope().variables())
        if (m1.scope().index_of(v.name) != Scope::npos)
            throw ScopesOverlapError("strong_product requires disjoint scopes; variable '" +
                                     v.name + "' is shared");
    std::vector<Point> products;
    for (const auto& p1 : m1.vertices())
        for (const auto& p2 : m2.vertices())
            products.push_back(conditional_product(p1, p2).masses);
    return CredalSet(scope_union(m1.scope(), m2.scope()), std::move(products));
}

CredalSet fiber(const CredalSet& m, const Distribution& q) {
    require_sub_scope(q.scope, m.scope(), "fiber");
    HalfspaceSystem pin;
    pin.dim = q.scope.cell_count();
    for (int i = 0; i < pin.dim; ++i) {
        Constraint c;
        c.normal.assign(pin.dim, Rational(0));
        c.normal[i] = Rational(1);
        c.offset = q.masses[i];
        pin.equalities.push_back(std::move(c));
    }
    const HalfspaceSystem sys =
        intersect(v_to_h(m.hull()), preimage_constraints(pin, marginal_map(m.scope(), q.scope)));
    std::optional<VertexSet> verts = try_h_to_v(sys);
    if (!verts)
        throw EmptyFiberError("no member of the credal set has the prescribed marginal");
    return CredalSet(m.scope(), *verts);
}

}  // namespace credal
