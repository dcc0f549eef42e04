#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "credal/errors.hpp"
#include "credal/polytope.hpp"
#include "credal/rational.hpp"

namespace credal {

/// A finite-valued variable X_i with its ordered level labels.
struct Variable {
    std::string name;
    std::vector<std::string> levels;

    friend bool operator==(const Variable& a, const Variable& b) {
        return a.name == b.name && a.levels == b.levels;
    }
};

/// An ordered group of variables X_K. Cells of the joint space are indexed
/// lexicographically with the LAST variable varying fastest, so for binary
/// X1,X2 the cell order is x1x2, x1~x2, ~x1x2, ~x1~x2.
class Scope {
public:
    Scope() = default;  // the empty scope; its single cell carries mass 1
    explicit Scope(std::vector<Variable> vars);

    const std::vector<Variable>& variables() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    int cell_count() const { return cells_; }

    /// Position of the named variable, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(std::string_view name) const;

    std::vector<int> digits_of(int cell) const;
    int cell_of(const std::vector<int>& digits) const;

    friend bool operator==(const Scope& a, const Scope& b) { return a.vars_ == b.vars_; }

private:
    std::vector<Variable> vars_;
    int cells_ = 1;
};

/// Variables of `k` whose names appear in `names`, in the order of `names`.
Scope sub_scope(const Scope& k, const std::vector<std::string>& names);

/// K's variables followed by L's variables not in K. Shared names must carry
/// identical level lists.
Scope scope_union(const Scope& k, const Scope& l);

/// Variables of K that also appear in L, in K's order.
Scope scope_intersection(const Scope& k, const Scope& l);

/// True iff every variable of `sub` appears in `k` with identical levels.
bool is_sub_scope(const Scope& sub, const Scope& k);

/// A single probability distribution P(X_K) as a mass vector over the cells.
struct Distribution {
    Scope scope;
    Point masses;

    Distribution(Scope s, Point m);

    friend bool operator==(const Distribution& a, const Distribution& b) {
        return a.scope == b.scope && a.masses == b.masses;
    }
};

/// A credal set: a polytope of distributions over a common scope, stored in
/// canonical form (extreme points only, lexicographically sorted).
class CredalSet {
public:
    CredalSet(Scope s, std::vector<Point> vertices);
    CredalSet(Scope s, const VertexSet& hull);

    const Scope& scope() const { return scope_; }
    const VertexSet& hull() const { return hull_; }

    /// The stored extreme points as Distributions.
    std::vector<Distribution> vertices() const;

private:
    Scope scope_;
    VertexSet hull_;
};

/// The 0-1 aggregation matrix of shape |cells(l)| x |cells(k)| mapping a mass
/// vector over k to its marginal over l; every column has exactly one 1.
LinearMap marginal_map(const Scope& k, const Scope& l);

/// {all masses >= 0, sum = 1} over the cells of k.
HalfspaceSystem simplex_system(const Scope& k);

CredalSet marginalize(const CredalSet& m, const Scope& l);
Distribution marginalize_dist(const Distribution& p, const Scope& l);

/// The maximal credal set over k whose l-marginal is m.
CredalSet vacuous_extend(const CredalSet& m, const Scope& k);
CredalSet vacuous_extend_dist(const Distribution& p, const Scope& k);

/// True iff the two sets' marginals on their common variables coincide;
/// disjoint scopes are always projective.
bool is_projective(const CredalSet& m1, const CredalSet& m2);

/// True iff support(p) is contained in support(q) (p << q), decided exactly.
bool abs_continuous(const Distribution& p, const Distribution& q);

/// The probabilistic composition P(x) = p1(x_K) p2(x_L) / p2(x_{K&L}), with
/// 0/0 cells defined as 0. Result scope is K followed by L minus K.
Distribution conditional_product(const Distribution& p1, const Distribution& p2);

/// Convex hull of the element-wise products of extreme points; the strong
/// extension of two credal sets over disjoint scopes.
CredalSet strong_product(const CredalSet& m1, const CredalSet& m2);

/// The members of m whose marginal on q's scope equals q exactly.
CredalSet fiber(const CredalSet& m, const Distribution& q);

}  // namespace credal
