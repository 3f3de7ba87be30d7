#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghmod/general.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace ghmod;

namespace {

using Key = std::vector<std::tuple<int, int, int>>;

Key key_of(const GeneralDrawing& d) {
    Key k;
    for (const auto& b : d.bars) k.emplace_back(b.nx, b.ny, b.crosses);
    return k;
}

// Every ordering of the bars and every cross vector, filtered by the three rules.
std::set<Key> brute_general(const Partition& mu) {
    std::vector<std::pair<int, int>> bars;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j)
            if (i || j) bars.push_back({i, j});
    std::sort(bars.begin(), bars.end());
    std::set<Key> out;
    do {
        const size_t m = bars.size();
        bool rule1 = true;
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                if (bars[a].first == bars[b].first && bars[a].second <= bars[b].second) rule1 = false;
        if (!rule1) continue;
        std::vector<int> c(m, 0);
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == m) {
                for (size_t a = 0; a < m; ++a)
                    for (size_t b = a + 1; b < m; ++b)
                        if (bars[b].first > bars[a].first && bars[a].second - c[a] < bars[b].second + 1) return;
                Key k;
                for (size_t a = 0; a < m; ++a) k.emplace_back(bars[a].first, bars[a].second, c[a]);
                out.insert(k);
                return;
            }
            for (int v = 0; v <= bars[i].second; ++v) {
                c[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    } while (std::next_permutation(bars.begin(), bars.end()));
    return out;
}

long fact(int n) {
    return n <= 1 ? 1 : n * fact(n - 1);
}

long expected_count(const Partition& mu) {
    long d = 1;
    for (int j = 0; j < mu[0]; ++j) {
        int col = 0;
        for (int p : mu.parts()) col += p > j;
        d *= fact(col);
    }
    return fact(mu.n()) / d;
}

// Rank over the rationals by plain Gaussian elimination on dense rows.
size_t dense_rank(const std::vector<Polynomial>& polys) {
    std::map<std::vector<std::uint8_t>, size_t> col;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) col.emplace(std::vector<std::uint8_t>(m.raw().begin(), m.raw().end()), 0);
    size_t idx = 0;
    for (auto& [k, v] : col) v = idx++;
    std::vector<std::vector<mpq_class>> a;
    for (const auto& p : polys) {
        std::vector<mpq_class> row(col.size(), 0);
        for (const auto& [m, c] : p.terms())
            row[col[std::vector<std::uint8_t>(m.raw().begin(), m.raw().end())]] = mpq_class(c);
        a.push_back(row);
    }
    size_t r = 0;
    for (size_t j = 0; j < col.size() && r < a.size(); ++j) {
        size_t piv = r;
        while (piv < a.size() && a[piv][j] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        for (size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][j] != 0) {
                const mpq_class f = a[i][j] / a[r][j];
                for (size_t k = j; k < col.size(); ++k) a[i][k] -= f * a[r][k];
            }
        ++r;
    }
    return r;
}

GeneralDrawing g21(std::vector<Bar> bars) {
    return GeneralDrawing{Partition({2, 1}), std::move(bars)};
}

}  // namespace

TEST_CASE("enumeration of (2,1)") {
    const auto ds = enumerate_general(Partition({2, 1}));
    CHECK(ds.size() == 3);
    std::set<std::string> ops;
    for (const auto& d : ds) ops.insert(split_general(d).first.to_string());
    CHECK(ops == std::set<std::string>{"x2", "x1", "x1*y2"});
}

TEST_CASE("small enumerations") {
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_general(Partition(std::vector<int>(static_cast<size_t>(n), 1))).size() == 1);
    CHECK(enumerate_general(Partition({2, 2})).size() == 6);
}

TEST_CASE("enumeration agrees with brute force") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            INFO(mu.to_string());
            const auto ds = enumerate_general(mu);
            std::set<Key> got;
            for (const auto& d : ds) {
                got.insert(key_of(d));
                CHECK(is_valid_general(d));
            }
            CHECK(got.size() == ds.size());
            CHECK(got == brute_general(mu));
        }
}

TEST_CASE("count n!/mu'!") {
    CHECK(count_check(Partition({2, 1})).count == 3);
    CHECK(count_check(Partition({2, 2})).expected == 6);
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            const auto c = count_check(mu);
            CHECK(c.expected == expected_count(mu));
            CHECK(c.pass);
        }
    CHECK_THROWS_AS(enumerate_general(Partition({5, 4})), SizeLimitError);
}

TEST_CASE("corner recursion") {
    const auto c = corner_recursion_check(Partition({2, 1}));
    CHECK(c.lhs == 3);
    CHECK(c.rhs == 3);
    CHECK(corner_recursion_check(Partition({1})).pass);
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(corner_recursion_check(mu).pass);
}

TEST_CASE("split") {
    const auto d = g21({{0, 1, 0}, {1, 0, 0}});
    CHECK(is_valid_general(d));
    auto [S, T] = split_general(d);
    CHECK(S == parse_monomial("x2", 3));
    CHECK(T == parse_monomial("y1", 3));
    auto [S2, T2] = split_general(g21({{1, 0, 0}, {0, 1, 1}}));
    CHECK(T2.is_one());
}

TEST_CASE("reconstruction") {
    CHECK(reconstruct_general(parse_monomial("x2", 3), Side::S, Partition({2, 1})) == g21({{0, 1, 0}, {1, 0, 0}}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& d : enumerate_general(mu)) {
                auto [S, T] = split_general(d);
                CHECK(reconstruct_general(S, Side::S, mu) == d);
                CHECK(reconstruct_general(T, Side::T, mu) == d);
            }
    CHECK_THROWS_AS(reconstruct_general(parse_monomial("y1^3", 3), Side::S, Partition({2, 1})), NoPreimage);
}

TEST_CASE("minimal monomials") {
    const auto delta = build_delta(Partition({2, 1}));
    const auto a = apply_diff(parse_monomial("x2", 3), delta.value);
    CHECK(a == parse_polynomial("y1 - y3", 3));
    CHECK(min_monomial(a) == parse_monomial("y1", 3));
    const auto b = apply_diff(parse_monomial("x1*y2", 3), delta.value);
    CHECK(b.size() == 1);
    CHECK(min_monomial(b).is_one());
    const auto c = apply_diff(parse_monomial("x1", 3), delta.value);
    CHECK(c == parse_polynomial("y3 - y2", 3));
    CHECK(min_monomial(c) == parse_monomial("y2", 3));
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            const auto dm = build_delta(mu);
            for (const auto& d : enumerate_general(mu)) {
                auto [S, T] = split_general(d);
                CHECK(lemma7_check(d, dm));
                CHECK(min_monomial(apply_diff(S, dm.value)) == T);
            }
        }
}

TEST_CASE("zero-x-degree bases") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            INFO(mu.to_string());
            const auto delta = build_delta(mu);
            const auto r = verify_theorem4(mu, delta);
            CHECK(r.pass);
            std::vector<Polynomial> s_imgs, t_imgs;
            for (const auto& d : enumerate_general(mu)) {
                auto [S, T] = split_general(d);
                s_imgs.push_back(apply_diff(S, delta.value));
                t_imgs.push_back(apply_diff(T, delta.value));
            }
            const auto want = static_cast<size_t>(expected_count(mu));
            CHECK(dense_rank(s_imgs) == want);
            CHECK(dense_rank(t_imgs) == want);
            CHECK(r.rank_s == want);
            CHECK(r.rank_t == want);
            CHECK(r.closure_x0 == want);
        }
    const auto r22 = verify_theorem4(Partition({2, 2}), build_delta(Partition({2, 2})));
    CHECK(r22.rank_s == 6);
}

TEST_CASE("worked zero-x strings share one drawing") {
    const Partition mu({4, 3, 1, 1, 1});
    const auto dS = reconstruct_general(parse_monomial("x_2y_2x_3^4x_4^3x_6x_7^2x_8", 10), Side::S, mu);
    const auto dT = reconstruct_general(parse_monomial("y_1^3y_2y_5^2y_6y_9", 10), Side::T, mu);
    CHECK(dS == dT);
    CHECK(is_valid_general(dS));
}
