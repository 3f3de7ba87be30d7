#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghmod/annihilator.hpp"

#include <set>

using namespace ghmod;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long fact(int n) {
    return n <= 1 ? 1 : n * fact(n - 1);
}

Monomial mono(const char* s, int n) {
    return parse_monomial(s, n);
}

// Exact check of op = sum c_i m_i after application to delta.
bool agrees_on_delta(const Monomial& op, const std::vector<std::pair<mpq_class, Monomial>>& terms,
                     const DeltaPolynomial& delta) {
    std::map<std::string, mpq_class> acc;
    for (const auto& [m, c] : apply_diff(op, delta.value).terms()) acc[m.to_string()] += mpq_class(c);
    for (const auto& [c, m] : terms)
        for (const auto& [mm, v] : apply_diff(m, delta.value).terms()) acc[mm.to_string()] -= c * mpq_class(v);
    for (const auto& [k, v] : acc)
        if (v != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("generator families") {
    const auto gs = generators(1, 1);
    CHECK(gs.generators.size() == 15);
    std::set<std::string> polys;
    for (const auto& g : gs.generators) polys.insert(format(g.poly));
    CHECK(polys.count(format(parse_polynomial("x1 + x2 + x3", 3))));
    CHECK(polys.count(format(parse_polynomial("x2*y2", 3))));
    CHECK(polys.count(format(parse_polynomial("x1*x3", 3))));
    CHECK(polys.count(format(parse_polynomial("y2*y3", 3))));

    std::set<std::string> g00;
    for (const auto& g : generators(0, 0).generators) g00.insert(format(g.poly));
    CHECK(g00 == std::set<std::string>{"x1", "y1", "x1*y1"});

    for (int K = 0; K <= 4; ++K)
        for (int L = 0; L <= 4; ++L) {
            const int n = K + L + 1;
            CHECK(static_cast<long>(generators(K, L).generators.size()) ==
                  2 * n + n + binom(n, L + 1) + binom(n, K + 1));
        }
}

TEST_CASE("annihilation") {
    const auto d = build_delta(Partition({2, 1}));
    CHECK(annihilates(parse_polynomial("x1 + x2 + x3", 3), d));
    CHECK_FALSE(annihilates(parse_polynomial("x1", 3), d));
    CHECK(annihilates(parse_polynomial("x1*y1", 3), d));
    for (int n = 1; n <= 6; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            const auto delta = build_delta(hook_partition(K, L));
            for (const auto& g : generators(K, L).generators) CHECK(apply_diff_poly(g.poly, delta.value).is_zero());
        }
}

TEST_CASE("proposition instances") {
    // h_2(y1,y2) exceeds the y-degree of delta, so it lies outside the enumerated range.
    const auto d11 = build_delta(hook_partition(1, 1));
    CHECK(annihilates(complete_homogeneous(3, 2, {0, 1}, true), d11));
    bool found = false;
    for (const auto& i : proposition_instances(3, 1, 1, 1))
        found = found || i.product() == complete_homogeneous(3, 1, {0, 1, 2}, true);
    CHECK(found);

    const auto p2 = proposition_instances(3, 1, 1, 2);
    const auto want = mul(parse_polynomial("y1", 3), complete_homogeneous(3, 1, {0, 1}, true));
    found = false;
    for (const auto& i : p2) found = found || i.product() == want;
    CHECK(found);

    // Instances are checked on the expanded product, independently of factor-wise application.
    for (int n = 1; n <= 4; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            const auto delta = build_delta(hook_partition(K, L));
            for (int w = 1; w <= 4; ++w)
                for (const auto& i : proposition_instances(n, K, L, w)) {
                    INFO(i.description);
                    CHECK(apply_diff_poly(i.product(), delta.value).is_zero());
                    CHECK(annihilates(i, delta));
                }
        }
    CHECK_THROWS_AS(proposition_instances(7, 3, 3, 1), SizeLimitError);
}

TEST_CASE("classification") {
    CHECK(classify_diagram(mono("y1", 3), 1, 1).kind == Anomaly::ValidDrawing);
    const auto c = classify_diagram(mono("y1^2", 3), 1, 1).kind;
    CHECK((c == Anomaly::Case1a || c == Anomaly::Case1b || c == Anomaly::Case1c || c == Anomaly::Case1d));
    CHECK(classify_diagram(mono("x1*y1", 3), 1, 1).kind == Anomaly::NullOperator);
    // ValidDrawing exactly on drawing operators.
    for (int n = 1; n <= 5; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            std::set<std::string> ops;
            for (const auto& d : enumerate_drawings(K, L)) ops.insert(diff_op(d).to_string());
            const auto A = n_stat(hook_partition(K, L)), B = n_stat(conjugate(hook_partition(K, L)));
            for (int a = 0; a <= A; ++a)
                for (int b = 0; b <= B; ++b)
                    for (const auto& op : monomials_of_bidegree(n, a, b))
                        CHECK((classify_diagram(op, K, L).kind == Anomaly::ValidDrawing) == (ops.count(op.to_string()) == 1));
        }
}

TEST_CASE("single steps") {
    const auto s = reduce_step(mono("x3", 3), 1, 1);
    std::map<std::string, mpq_class> got;
    for (const auto& [c, m] : s.terms) got[m.to_string()] = c;
    CHECK(got == std::map<std::string, mpq_class>{{"x1", -1}, {"x2", -1}});
    CHECK(reduce_step(mono("y1^2", 3), 1, 1).terms.empty());
    CHECK_THROWS_AS(reduce_step(mono("y1", 3), 1, 1), NotAnAnomaly);
}

TEST_CASE("every emitted step is sound and descending") {
    for (int n = 1; n <= 4; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            const auto delta = build_delta(hook_partition(K, L));
            Rewriter rw(K, L, &delta);
            const auto [A, B] = delta.bidegree;
            for (int a = 0; a <= A + 1; ++a)
                for (int b = 0; b <= B + 1; ++b)
                    for (const auto& op : monomials_of_bidegree(n, a, b)) {
                        const auto k = classify_diagram(op, K, L).kind;
                        if (k == Anomaly::ValidDrawing) {
                            CHECK_THROWS_AS(rw.reduce_step(op), NotAnAnomaly);
                            continue;
                        }
                        const auto step = rw.reduce_step(op);
                        INFO(op.to_string(), " via ", step.relation);
                        CHECK(agrees_on_delta(op, step.terms, delta));
                        for (const auto& [c, m] : step.terms) CHECK(mono_less(m, op));
                    }
        }
}

TEST_CASE("normal forms") {
    const auto d11 = build_delta(hook_partition(1, 1));
    const auto nf = normal_form(mono("x3", 3), 1, 1, d11);
    std::map<std::string, mpq_class> got;
    for (const auto& [d, c] : nf) got[diff_op(d).to_string()] = c;
    CHECK(got == std::map<std::string, mpq_class>{{"x1", -1}, {"x2", -1}});
    CHECK(normal_form(mono("x1*y1", 3), 1, 1, d11).empty());
    for (const auto& d : enumerate_drawings(1, 2)) {
        const auto delta = build_delta(hook_partition(1, 2));
        const auto f = normal_form(diff_op(d), 1, 2, delta);
        REQUIRE(f.size() == 1);
        CHECK(f.begin()->first == d);
        CHECK(f.begin()->second == 1);
    }
    // Exhaustive agreement on delta for n <= 4.
    for (int n = 1; n <= 4; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            const auto delta = build_delta(hook_partition(K, L));
            Rewriter rw(K, L, &delta);
            const auto [A, B] = delta.bidegree;
            for (int a = 0; a <= A; ++a)
                for (int b = 0; b <= B; ++b)
                    for (const auto& op : monomials_of_bidegree(n, a, b)) {
                        std::vector<std::pair<mpq_class, Monomial>> terms;
                        for (const auto& [d, c] : rw.normal_form(op)) terms.emplace_back(c, diff_op(d));
                        CHECK(agrees_on_delta(op, terms, delta));
                    }
            CHECK(rw.stats().steps <= rw.budget());
        }
}

TEST_CASE("quotient dimensions") {
    const auto q11 = quotient_hilbert(1, 1);
    CHECK(q11.table == GradedTable{{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 2}, {{1, 1}, 1}});
    CHECK(q11.total == 6);
    CHECK(q11.shell_zero);
    const auto q00 = quotient_hilbert(0, 0);
    CHECK(q00.table == GradedTable{{{0, 0}, 1}});
    CHECK(q00.total == 1);
    for (int K = 0; K <= 3; ++K) CHECK(static_cast<long>(quotient_hilbert(K, 0).total) == fact(K + 1));
    // Operator bidegree (a,b) pairs with polynomial bidegree (A-a, B-b) of the closure.
    for (int n = 1; n <= 4; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            const auto delta = build_delta(hook_partition(K, L));
            const auto q = quotient_hilbert(K, L);
            const auto cl = derivative_closure(delta);
            GradedTable mirrored;
            for (const auto& [bd, d] : cl.table) mirrored[{delta.bidegree.first - bd.first, delta.bidegree.second - bd.second}] = d;
            CHECK(q.table == mirrored);
            CHECK(static_cast<long>(q.total) == fact(n));
        }
}
