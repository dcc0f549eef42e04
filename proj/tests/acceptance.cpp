// Acceptance driver: exercises the ten release criteria end to end and prints
// exactly one PASS/FAIL line per criterion. Exits nonzero if any fails.
//
// Usage: acceptance <path-to-cli-binary>
//
// The CLI path is needed by criterion 10, which runs the installed binary on
// the worked-example files and checks its exit codes.

#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "credal/compose.hpp"
#include "credal/credal.hpp"
#include "credal/io.hpp"
#include "credal/polytope.hpp"
#include "testutil.hpp"

using namespace credal;
using namespace testutil;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CredalSet load_fixture_set(const std::string& name) {
    const CredalDocument doc = parse_credal(slurp(fixture_path(name)));
    if (doc.set) return *doc.set;
    return CredalSet(doc.scope, h_to_v(*doc.system));
}

/// Reorder `m` onto `target`, a permutation of its scope.
CredalSet reordered(const CredalSet& m, const Scope& target) {
    return marginalize(m, target);
}

const Rational kTableTol(1, 200);  // 5e-3, matching the printed tables' rounding

// ---------------------------------------------------------------------------
// Criteria 1-2: the three-variable worked example, forward and reverse.

Outcome criterion1(const CredalSet& m1, const CredalSet& m2, CredalSet& fwd_out) {
    Outcome r;
    const auto t0 = std::chrono::steady_clock::now();
    CredalSet fwd = compose(m1, m2);
    const double secs = seconds_since(t0);
    r.require(secs < 10.0, "composition took " + std::to_string(secs) + "s (budget 10s)");
    r.require(fwd.scope() == scope_union(m1.scope(), m2.scope()), "unexpected result scope");
    r.require(fwd.hull().points.size() == 23,
              "expected 23 extreme points, got " + std::to_string(fwd.hull().points.size()));
    r.require(rows_match(hull_points(fwd), load_table("ex2_forward.json"), kTableTol),
              "vertex table mismatch against the expected forward table");
    fwd_out = fwd;
    return r;
}

Outcome criterion2(const CredalSet& m1, const CredalSet& m2, CredalSet& rev_out) {
    Outcome r;
    const auto t0 = std::chrono::steady_clock::now();
    CredalSet rev = compose(m2, m1);
    const double secs = seconds_since(t0);
    r.require(secs < 10.0, "composition took " + std::to_string(secs) + "s (budget 10s)");
    r.require(rev.hull().points.size() == 16,
              "expected 16 extreme points, got " + std::to_string(rev.hull().points.size()));
    const CredalSet printed = reordered(rev, scope_union(m1.scope(), m2.scope()));
    r.require(rows_match(hull_points(printed), load_table("ex2_reverse.json"), kTableTol),
              "vertex table mismatch against the expected reverse table");
    rev_out = rev;
    return r;
}

Outcome criterion3(const CredalSet& m1, const CredalSet& m2, const CredalSet& fwd,
                   const CredalSet& rev) {
    Outcome r;
    const CredalSet rev_12 = marginalize(rev, sub_scope(rev.scope(), {"X1", "X2"}));
    const CredalSet fwd_23 = marginalize(fwd, sub_scope(fwd.scope(), {"X2", "X3"}));
    r.require(rows_match(hull_points(rev_12), load_table("ex2_reverse_marg_x1x2.json"), kTableTol),
              "reverse-composition marginal does not match its reference table");
    r.require(rows_match(hull_points(fwd_23), load_table("ex2_forward_marg_x2x3.json"), kTableTol),
              "forward-composition marginal does not match its reference table");
    // Exact containments: the second operand sits inside the forward marginal,
    // and the reverse marginal sits inside the first operand.
    for (const Point& v : m2.hull().points)
        r.require(contains(fwd_23.hull(), v), "second operand escapes the forward marginal");
    for (const Point& v : rev_12.hull().points)
        r.require(contains(m1.hull(), v), "reverse marginal escapes the first operand");
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 4: non-projective pair resolved by vacuous extension.

Outcome criterion4() {
    Outcome r;
    const CredalSet m1 = load_fixture_set("ex3_m1.json");
    const CredalSet m2 = load_fixture_set("ex3_m2.json");
    CompositionTrace trace;
    const CredalSet result = compose(m1, m2, trace);
    r.require(!trace.core.has_value(), "expected an empty common-marginal core");
    r.require(trace.projective_pairs.empty(), "no equal-marginal vertex pairs should exist");
    r.require(trace.projection_records.size() == 1, "expected a single projection record");
    if (!trace.projection_records.empty())
        r.require(trace.projection_records[0].rule == 'b',
                  "the projection should have triggered the extension rule");
    r.require(result.hull().points.size() == 16,
              "expected 16 extreme points, got " + std::to_string(result.hull().points.size()));
    r.require(rows_match(hull_points(result), load_table("ex3_extension.json"), Rational(0)),
              "extension vertices differ from the reference table");
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 5: the projective two-variable example.

Outcome criterion5() {
    Outcome r;
    const CredalSet m1 = load_fixture_set("ex1_m1.json");
    const CredalSet m2 = load_fixture_set("ex1_m2.json");
    const Scope x2 = sub_scope(m1.scope(), {"X2"});
    const CredalSet expected(x2, std::vector<Point>{{Rational(1, 5), Rational(4, 5)},
                                                    {Rational(1, 2), Rational(1, 2)}});
    r.require(credal_equal(marginalize(m1, x2), expected),
              "first operand's shared marginal is not the expected segment");
    r.require(credal_equal(marginalize(m2, sub_scope(m2.scope(), {"X2"})), expected),
              "second operand's shared marginal is not the expected segment");
    r.require(is_projective(m1, m2), "the pair should be projective");
    r.require(commutes(m1, m2), "a projective pair must compose commutatively");
    const CredalSet fwd = compose(m1, m2);
    r.require(credal_equal(marginalize(fwd, m1.scope()), m1),
              "composition must preserve the first marginal");
    r.require(credal_equal(marginalize(fwd, m2.scope()), m2),
              "composition must preserve the second marginal on a projective pair");
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 6: randomized marginal-preservation / commutativity law.

Outcome criterion6() {
    Outcome r;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260819);
    const Scope x1x2 = binary_scope({"X1", "X2"});
    const Scope x2x3 = binary_scope({"X2", "X3"});
    const Scope x3x4 = binary_scope({"X3", "X4"});
    const Scope x2x1 = binary_scope({"X2", "X1"});
    int projective_seen = 0, nonprojective_seen = 0;
    for (int i = 0; i < 105 && r.ok; ++i) {
        Scope k = x1x2;
        Scope l;
        switch (i % 3) {
            case 0: l = x3x4; break;                       // disjoint scopes
            case 1: l = x2x3; break;                       // one shared variable
            default: l = (i % 2 == 0) ? x1x2 : x2x1; break;  // identical variable sets
        }
        const CredalSet m1 = random_credal(rng, k, 5);
        const CredalSet m2 = random_credal(rng, l, 5);
        const CredalSet result = compose(m1, m2);  // constructor validates every vertex
        r.require(result.scope() == scope_union(k, l), "result scope must be the union");
        r.require(credal_equal(marginalize(result, k), m1),
                  "composition must reproduce the first operand exactly");
        const bool proj = is_projective(m1, m2);
        (proj ? projective_seen : nonprojective_seen)++;
        r.require(commutes(m1, m2) == proj,
                  "commutativity must hold exactly on the projective pairs");
    }
    r.require(projective_seen > 0 && nonprojective_seen > 0,
              "sample must include projective and non-projective pairs");
    const double secs = seconds_since(t0);
    r.require(secs < 120.0, "law suite took " + std::to_string(secs) + "s (budget 120s)");
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 7: singleton composition agrees with the pointwise formula.

Outcome criterion7() {
    Outcome r;
    std::mt19937_64 rng(7719);
    const Scope k = binary_scope({"X1", "X2"});
    const Scope l = binary_scope({"X2", "X3"});
    const Scope u = scope_union(k, l);
    std::uniform_int_distribution<int> sixth(1, 5);
    std::uniform_int_distribution<int> quarter(0, 4);
    for (int i = 0; i < 50 && r.ok; ++i) {
        // Satisfying pair: p2 splits p1's shared marginal, so the marginals
        // agree and p1's shared marginal dominates itself.
        const Point p1m = random_masses(rng, 4, /*allow_zero=*/false);
        const Rational mt = p1m[0] + p1m[2], mf = p1m[1] + p1m[3];
        const Rational wt(sixth(rng), 6), wf(sixth(rng), 6);
        const Point p2m = {mt * wt, mt * (Rational(1) - wt), mf * wf, mf * (Rational(1) - wf)};
        const Distribution p1(k, p1m), p2(l, p2m);
        const CredalSet result = compose(CredalSet(k, {p1m}), CredalSet(l, {p2m}));
        r.require(result.hull().points.size() == 1, "satisfying pair must compose to a point");
        r.require(credal_equal(result, CredalSet(u, {conditional_product(p1, p2).masses})),
                  "singleton composition must equal the pointwise product formula");
    }
    for (int i = 0; i < 50 && r.ok; ++i) {
        // Violating pair: p2 puts no mass on X2=t while p1 does, killing
        // absolute continuity, so the extension rule must fire.
        const Point p1m = random_masses(rng, 4, /*allow_zero=*/false);
        const Rational b(quarter(rng), 4);
        const Point p2m = {Rational(0), Rational(0), b, Rational(1) - b};
        const CredalSet result = compose(CredalSet(k, {p1m}), CredalSet(l, {p2m}));
        const CredalSet expected = vacuous_extend_dist(Distribution(k, p1m), u);
        r.require(credal_equal(result, expected),
                  "violating pair must compose to the vacuous extension");
        r.require(result.hull().points.size() > 1,
                  "the extension must not be a single point here");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 8: factorization recovery over disjoint scopes.

Outcome criterion8() {
    Outcome r;
    std::mt19937_64 rng(8855);
    const Scope k = binary_scope({"X1", "X2"});
    const Scope l = binary_scope({"X3", "X4"});
    for (int i = 0; i < 50 && r.ok; ++i) {
        const CredalSet ma = random_credal(rng, k, 4);
        const CredalSet mb = random_credal(rng, l, 4);
        const CredalSet m = strong_product(ma, mb);
        const CredalSet recomposed = compose(marginalize(m, k), marginalize(m, l));
        r.require(credal_equal(recomposed, m),
                  "composing the marginals of a product must recover the product");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 9: representation round trips and exact projections.

Outcome criterion9() {
    Outcome r;
    std::mt19937_64 rng(9901);
    std::uniform_int_distribution<int> dim_rt(1, 8), npts_rt(1, 10);
    for (int i = 0; i < 200 && r.ok; ++i) {
        const int dim = dim_rt(rng);
        const int n = npts_rt(rng);
        std::vector<Point> pts;
        pts.reserve(n);
        for (int j = 0; j < n; ++j) pts.push_back(random_point(rng, dim, 6, 4));
        const VertexSet v = minimal_v(VertexSet(dim, pts));
        const HalfspaceSystem h = v_to_h(v);
        const VertexSet back = h_to_v(h);
        r.require(equal(v, back), "facet enumeration then vertex enumeration must round-trip");
        for (const Point& p : pts)
            r.require(contains(h, p), "every generator must satisfy the facet system");
    }
    std::uniform_int_distribution<int> dim_pr(1, 5), npts_pr(1, 6);
    for (int i = 0; i < 200 && r.ok; ++i) {
        const int dim = dim_pr(rng);
        const int n = npts_pr(rng);
        std::vector<Point> pts;
        pts.reserve(n);
        for (int j = 0; j < n; ++j) pts.push_back(random_point(rng, dim, 8, 5));
        const VertexSet v(dim, pts);
        const Point x = random_point(rng, dim, 8, 5);
        const Point z = euclidean_project(x, v);
        r.require(contains(v, z), "the projection must land inside the set");
        // Variational inequality: (x - z) . (y - z) <= 0 for all y in the set;
        // checking it on the generators suffices by linearity.
        Point gap(dim);
        for (int d = 0; d < dim; ++d) gap[d] = x[d] - z[d];
        for (const Point& p : pts) {
            Point edge(dim);
            for (int d = 0; d < dim; ++d) edge[d] = p[d] - z[d];
            r.require(dot(gap, edge) <= Rational(0),
                      "the projection must satisfy the variational inequality");
        }
    }
    for (int i = 0; i < 40 && r.ok; ++i) {
        // One-dimensional faces have a closed form: clamp the line parameter.
        const int dim = dim_pr(rng);
        const Point a = random_point(rng, dim, 8, 5), b = random_point(rng, dim, 8, 5);
        const Point x = random_point(rng, dim, 8, 5);
        Point d(dim), ax(dim);
        for (int j = 0; j < dim; ++j) {
            d[j] = b[j] - a[j];
            ax[j] = x[j] - a[j];
        }
        const Rational den = dot(d, d);
        Rational t = den.is_zero() ? Rational(0) : dot(ax, d) / den;
        if (t < Rational(0)) t = Rational(0);
        if (t > Rational(1)) t = Rational(1);
        Point expect(dim);
        for (int j = 0; j < dim; ++j) expect[j] = a[j] + t * d[j];
        r.require(euclidean_project(x, VertexSet(dim, {a, b})) == expect,
                  "segment projection must match the closed form");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 10: file-format identity and CLI exit codes.

int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
#ifndef _WIN32
    if (raw == -1 || !WIFEXITED(raw)) return -1;
    return WEXITSTATUS(raw);
#else
    return raw;
#endif
}

Outcome criterion10(const std::string& cli) {
    Outcome r;
    const std::vector<std::string> fixtures = {"ex1_m1.json", "ex1_m2.json", "ex2_m1.json",
                                               "ex2_m2.json", "ex3_m1.json", "ex3_m2.json",
                                               "core_x2_h.json"};
    for (const std::string& name : fixtures) {
        const CredalDocument doc = parse_credal(slurp(fixture_path(name)));
        const std::string once = doc.set ? emit_credal(*doc.set)
                                         : emit_credal(doc.scope, *doc.system);
        const CredalDocument doc2 = parse_credal(once);
        const std::string twice = doc2.set ? emit_credal(*doc2.set)
                                           : emit_credal(doc2.scope, *doc2.system);
        r.require(once == twice, name + ": parse-then-emit must be a fixed point");
        r.require(doc.scope == doc2.scope, name + ": scope must survive the round trip");
        if (doc.set)
            r.require(credal_equal(*doc.set, *doc2.set),
                      name + ": the set must survive the round trip");
    }
    const std::string q = "check projective ";
    const int ex1 = run_cli(cli, q + "\"" + fixture_path("ex1_m1.json") + "\" \"" +
                                     fixture_path("ex1_m2.json") + "\"");
    const int ex2 = run_cli(cli, q + "\"" + fixture_path("ex2_m1.json") + "\" \"" +
                                     fixture_path("ex2_m2.json") + "\"");
    r.require(ex1 == 0, "CLI should exit 0 on the projective pair, got " + std::to_string(ex1));
    r.require(ex2 == 1, "CLI should exit 1 on the non-projective pair, got " + std::to_string(ex2));
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];

    struct Row {
        int id;
        std::string label;
        Outcome outcome;
        double secs = 0.0;
    };
    std::vector<Row> rows;

    CredalSet ex2_m1 = load_fixture_set("ex2_m1.json");
    CredalSet ex2_m2 = load_fixture_set("ex2_m2.json");
    CredalSet fwd = ex2_m1;  // placeholders, overwritten by criteria 1-2
    CredalSet rev = ex2_m1;

    const std::vector<std::pair<std::string, std::function<Outcome()>>> plan = {
        {"forward worked-example composition", [&] { return criterion1(ex2_m1, ex2_m2, fwd); }},
        {"reverse worked-example composition", [&] { return criterion2(ex2_m1, ex2_m2, rev); }},
        {"worked-example marginals and containments",
         [&] { return criterion3(ex2_m1, ex2_m2, fwd, rev); }},
        {"extension rule on a non-projective pair", [] { return criterion4(); }},
        {"projective pair commutes and preserves marginals", [] { return criterion5(); }},
        {"randomized marginal/commutativity law", [] { return criterion6(); }},
        {"singleton composition pointwise formula", [] { return criterion7(); }},
        {"factorization recovery over disjoint scopes", [] { return criterion8(); }},
        {"representation round trips and projections", [] { return criterion9(); }},
        {"format identity and CLI exit codes", [&] { return criterion10(cli); }},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        Row row{static_cast<int>(i) + 1, plan[i].first, Outcome{}, 0.0};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            row.outcome = plan[i].second();
        } catch (const std::exception& e) {
            row.outcome.ok = false;
            row.outcome.note = std::string("exception: ") + e.what();
        }
        row.secs = seconds_since(t0);
        all_ok = all_ok && row.outcome.ok;
        std::ostringstream line;
        line << (row.outcome.ok ? "PASS" : "FAIL") << " criterion " << row.id << ": " << row.label
             << " (" << std::fixed << std::setprecision(2) << row.secs << "s)";
        if (!row.outcome.ok) line << " -- " << row.outcome.note;
        std::cout << line.str() << "\n" << std::flush;
    }
    std::cout << (all_ok ? "ACCEPTANCE: all criteria passed"
                         : "ACCEPTANCE: at least one criterion failed")
              << "\n";
    return all_ok ? 0 : 1;
}
