#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghmod/poly.hpp"

#include <map>
#include <random>

using namespace ghmod;

namespace {

// Reference polynomials: exponent vector (x_1, y_1, x_2, y_2, ...) -> coefficient.
using Ref = std::map<std::vector<int>, long>;

Ref to_ref(const Polynomial& p) {
    Ref r;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e;
        for (int i = 0; i < p.n(); ++i) {
            e.push_back(m.x(i));
            e.push_back(m.y(i));
        }
        r[e] = c.get_si();
    }
    return r;
}

Ref ref_mul(const Ref& a, const Ref& b) {
    Ref r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

// Differentiate one variable at a time.
Ref ref_diff(const std::vector<int>& op, const Ref& p) {
    Ref r;
    for (const auto& [e, c] : p) {
        long coef = c;
        std::vector<int> f = e;
        for (size_t v = 0; v < op.size(); ++v)
            for (int k = 0; k < op[v]; ++k) {
                coef *= f[v];
                if (f[v] > 0) --f[v];
            }
        if (coef) r[f] += coef;
    }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

Monomial random_monomial(std::mt19937& rng, int n, int maxe) {
    std::uniform_int_distribution<int> d(0, maxe);
    Monomial m(n);
    for (int i = 0; i < n; ++i) {
        m.set_x(i, d(rng));
        m.set_y(i, d(rng));
    }
    return m;
}

Polynomial random_poly(std::mt19937& rng, int n, int terms) {
    std::uniform_int_distribution<int> c(-5, 5);
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) p.add_term(random_monomial(rng, n, 2), c(rng));
    return p;
}

Monomial mono(const char* s, int n) {
    return parse_monomial(s, n);
}

}  // namespace

TEST_CASE("monomial order examples") {
    CHECK(mono_less(mono("y1", 3), mono("y3", 3)));
    CHECK_FALSE(mono_less(mono("y3", 3), mono("y1", 3)));
    CHECK_FALSE(mono_less(mono("x2*y1", 3), mono("x2*y1", 3)));
    // Place-major chain: y_1 precedes every later place.
    CHECK(mono_less(mono("y1", 3), mono("x3", 3)));
    CHECK(mono_less(mono("x1", 3), mono("y1", 3)));
    CHECK(mono_less(mono("y1", 3), mono("1", 3)));
}

TEST_CASE("monomial order is a total order compatible with multiplication") {
    std::mt19937 rng(7);
    for (int t = 0; t < 10000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        Monomial a = random_monomial(rng, n, 3), b = random_monomial(rng, n, 3), c = random_monomial(rng, n, 3);
        const bool ab = mono_less(a, b), ba = mono_less(b, a);
        CHECK_FALSE((ab && ba));
        CHECK((ab || ba || a == b));
        if (ab) CHECK(mono_less(a * c, b * c));
        if (mono_less(a, b) && mono_less(b, c)) CHECK(mono_less(a, c));
    }
}

TEST_CASE("arithmetic") {
    const int n = 1;
    auto P = [&](const char* s) { return parse_polynomial(s, n); };
    CHECK(add(P("x1"), P("-x1")).is_zero());
    CHECK(mul(P("x1 + y1"), P("x1 - y1")) == P("x1^2 - y1^2"));
    CHECK(scale(P("2*x1"), 3) == P("6*x1"));
    CHECK_THROWS_AS(add(parse_polynomial("x1", 1), parse_polynomial("x2", 2)), DimensionMismatch);

    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto a = random_poly(rng, 3, 5), b = random_poly(rng, 3, 5);
        CHECK(to_ref(mul(a, b)) == ref_mul(to_ref(a), to_ref(b)));
        CHECK(sub(add(a, b), b) == a);
    }
}

TEST_CASE("differential operators") {
    const auto d21 = parse_polynomial("y2*x3 - y3*x2 - y1*x3 + y3*x1 + y1*x2 - y2*x1", 3);
    CHECK(apply_diff(mono("y1", 3), d21) == parse_polynomial("x2 - x3", 3));
    const auto p = parse_polynomial("3*x1*y2^2 + x3", 3);
    CHECK(apply_diff(mono("1", 3), p) == p);
    CHECK(apply_diff(mono("x1^2", 1), parse_polynomial("x1", 1)).is_zero());
    CHECK(apply_diff(mono("x1^3", 1), parse_polynomial("x1^3", 1)) == Polynomial::constant(1, 6));

    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
        auto q = random_poly(rng, 3, 6);
        auto op = random_monomial(rng, 3, 2);
        std::vector<int> e;
        for (int i = 0; i < 3; ++i) {
            e.push_back(op.x(i));
            e.push_back(op.y(i));
        }
        CHECK(to_ref(apply_diff(op, q)) == ref_diff(e, to_ref(q)));
        // Operators commute with each other.
        auto op2 = random_monomial(rng, 3, 1);
        CHECK(apply_diff(op, apply_diff(op2, q)) == apply_diff(op2, apply_diff(op, q)));
        CHECK(apply_diff(op * op2, q) == apply_diff(op, apply_diff(op2, q)));
    }
    // P(d) for a polynomial operator is linear in P.
    auto P = parse_polynomial("x1 + 2*y2", 3);
    CHECK(apply_diff_poly(P, p) == add(apply_diff(mono("x1", 3), p), scale(apply_diff(mono("y2", 3), p), 2)));
}

TEST_CASE("extreme monomials") {
    CHECK(min_monomial(parse_polynomial("y1 - y3", 3)) == mono("y1", 3));
    CHECK(min_monomial(Polynomial::constant(3, 5)) == mono("1", 3));
    CHECK(min_monomial(parse_polynomial("y3 - y2", 3)) == mono("y2", 3));
    CHECK(max_monomial(parse_polynomial("y3 - y2", 3)) == mono("y3", 3));
    CHECK_THROWS(min_monomial(Polynomial(3)));
}

TEST_CASE("parsing") {
    const Monomial m = parse_monomial("x2*y2*x3^4");
    CHECK(m.a() == std::vector<int>{0, 1, 4});
    CHECK(m.b() == std::vector<int>{0, 1, 0});
    CHECK(parse_polynomial("0", 2).is_zero());
    CHECK(parse_polynomial("-3*x1 + 3*x1", 1).is_zero());
    CHECK(parse_monomial("x_2y_2x_3^4x_4^3x_6x_7^2x_8").to_compact() == "x_2y_2x_3^4x_4^3x_6x_7^2x_8");
    CHECK(parse_monomial("y_1^3y_2y_5^2y_6y_9").to_compact() == "y_1^3y_2y_5^2y_6y_9");
    CHECK(parse_monomial("y1^2*x2*x4*x5^2*y6").to_string() == "y1^2*x2*x4*x5^2*y6");
    CHECK(parse_polynomial("x2 - x1").n() == 2);
    CHECK_THROWS_AS(parse_polynomial("x1 +", 1), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z1", 1), ParseError);
    CHECK_THROWS(parse_polynomial("x3", 2));

    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        auto p = random_poly(rng, 4, 6);
        CHECK(parse_polynomial(format(p), 4) == p);
    }
}

TEST_CASE("complete homogeneous and bidegree enumeration") {
    CHECK(complete_homogeneous(3, 1, {0, 1, 2}, false) == parse_polynomial("x1 + x2 + x3", 3));
    CHECK(complete_homogeneous(3, 2, {0, 1}, true) == parse_polynomial("y1^2 + y1*y2 + y2^2", 3));
    CHECK(complete_homogeneous(3, 0, {}, true) == Polynomial::constant(3, 1));
    CHECK(complete_homogeneous(3, 2, {}, true).is_zero());
    // Count of monomials of bidegree (a,b) is C(n+a-1,a) C(n+b-1,b).
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                const auto ms = monomials_of_bidegree(n, a, b);
                CHECK(static_cast<long>(ms.size()) == binom(n + a - 1, a) * binom(n + b - 1, b));
                for (const auto& m : ms) CHECK((m.deg_x() == a && m.deg_y() == b));
            }
}
