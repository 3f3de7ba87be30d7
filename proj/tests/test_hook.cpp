#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghmod/hook.hpp"

#include <bit>
#include <functional>
#include <set>

using namespace ghmod;

namespace {

// Brute force over every shape and cross vector, filtered by the drawing rules.
std::set<HookDrawing> brute_drawings(int K, int L) {
    std::set<HookDrawing> out;
    const int m = K + L;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != K) continue;  // bit set = y-column
        HookDrawing d{K, L, {}};
        int y = K, x = L;
        for (int i = 0; i < m; ++i) {
            if (mask >> i & 1u)
                d.places.push_back({ColumnKind::Y, y--, 0});
            else
                d.places.push_back({ColumnKind::X, x--, 0});
        }
        std::function<void(int)> rec = [&](int i) {
            if (i == m) {
                bool ok = true;
                for (int j = 0; j < m && ok; ++j) {
                    const Place& p = d.places[static_cast<size_t>(j)];
                    if (p.kind != ColumnKind::Y) continue;
                    for (int k = j + 1; k < m; ++k) {
                        const Place& q = d.places[static_cast<size_t>(k)];
                        if (q.kind != ColumnKind::X) continue;
                        if (q.crosses == 0) {
                            ok = p.crosses >= 1;
                            break;
                        }
                        if (q.crosses == q.size) {
                            ok = p.crosses <= p.size - 1;
                            break;
                        }
                    }
                }
                if (ok) out.insert(d);
                return;
            }
            for (int c = 0; c <= d.places[static_cast<size_t>(i)].size; ++c) {
                d.places[static_cast<size_t>(i)].crosses = c;
                rec(i + 1);
            }
            d.places[static_cast<size_t>(i)].crosses = 0;
        };
        rec(0);
    }
    return out;
}

HookDrawing drawing(int K, int L, std::vector<Place> places) {
    return HookDrawing{K, L, std::move(places)};
}

constexpr auto X = ColumnKind::X;
constexpr auto Y = ColumnKind::Y;

long fact(int n) {
    return n <= 1 ? 1 : n * fact(n - 1);
}

}  // namespace

TEST_CASE("enumeration agrees with brute force and with n!") {
    CHECK(enumerate_drawings(1, 1).size() == 6);
    CHECK(enumerate_drawings(0, 0).size() == 1);
    CHECK(enumerate_drawings(2, 1).size() == 24);
    for (int n = 1; n <= 7; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            const auto ds = enumerate_drawings(K, L);
            const std::set<HookDrawing> got(ds.begin(), ds.end());
            CHECK(got.size() == ds.size());
            CHECK(got == brute_drawings(K, L));
            CHECK(static_cast<long>(ds.size()) == fact(n));
            for (const auto& d : ds) CHECK(is_valid_drawing(d));
        }
    // Shape (Y,X) allows exactly the cross vectors (1,0) and (0,1).
    std::set<std::pair<int, int>> yx;
    for (const auto& d : enumerate_drawings(1, 1))
        if (d.shape_word() == "YX") yx.insert({d.places[0].crosses, d.places[1].crosses});
    CHECK(yx == std::set<std::pair<int, int>>{{1, 0}, {0, 1}});
}

TEST_CASE("enumeration order is deterministic") {
    const auto a = enumerate_drawings(2, 2), b = enumerate_drawings(2, 2);
    CHECK(a == b);
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].shape_word() <= a[i].shape_word());
}

TEST_CASE("closed form") {
    CHECK(closed_form_summand(1, 0, 1) == 4);
    CHECK(closed_form_summand(0, 1, 1) == 2);
    CHECK(closed_form_count(1, 1) == 6);
    CHECK(closed_form_count(3, 2) == 720);
    for (int K = 0; K <= 8; ++K) CHECK(closed_form_count(K, 0) == fact(K + 1));
    for (int K = 0; K <= 6; ++K)
        for (int L = 0; L <= 6; ++L) CHECK(closed_form_count(K, L) == fact(K + L + 1));
}

TEST_CASE("flip") {
    const auto empty = drawing(1, 1, {{X, 1, 0}, {Y, 1, 0}});
    CHECK(flip(empty) == drawing(1, 1, {{X, 1, 1}, {Y, 1, 1}}));
    const auto d = drawing(1, 1, {{Y, 1, 1}, {X, 1, 0}});
    CHECK(flip(d) == drawing(1, 1, {{Y, 1, 0}, {X, 1, 1}}));
    for (int n = 1; n <= 6; ++n)
        for (int K = 0; K < n; ++K) {
            const auto ds = enumerate_drawings(K, n - 1 - K);
            const std::set<HookDrawing> all(ds.begin(), ds.end());
            for (const auto& e : ds) {
                CHECK(flip(flip(e)) == e);
                CHECK(all.count(flip(e)) == 1);
            }
        }
}

TEST_CASE("split") {
    const auto d = drawing(1, 1, {{Y, 1, 1}, {X, 1, 0}});
    auto [S, T] = split(d);
    CHECK(S.y_order == std::vector<int>{1, 0});
    CHECK(S.x_order == std::vector<int>{0, 0});
    CHECK(T.x_order == std::vector<int>{0, 1});
    CHECK(T.y_order == std::vector<int>{0, 0});
    auto [S2, T2] = split(drawing(1, 1, {{X, 1, 1}, {Y, 1, 1}}));
    CHECK(T2.x_order == std::vector<int>{0, 0});
    CHECK(T2.y_order == std::vector<int>{0, 0});
    for (const auto& e : enumerate_drawings(2, 3)) {
        auto [s, t] = split(e);
        for (size_t i = 0; i < e.places.size(); ++i) {
            CHECK(s.x_order[i] + s.y_order[i] + t.x_order[i] + t.y_order[i] == e.places[i].size);
            CHECK((s.x_order[i] == 0 || s.y_order[i] == 0));
        }
    }
}

TEST_CASE("reconstruction") {
    CrossDiagram S{{0, 0}, {1, 0}};
    CHECK(reconstruct(S, Side::S, 1, 1) == drawing(1, 1, {{Y, 1, 1}, {X, 1, 0}}));
    for (int n = 1; n <= 6; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            for (const auto& e : enumerate_drawings(K, L)) {
                auto [s, t] = split(e);
                CHECK(reconstruct(s, Side::S, K, L) == e);
                CHECK(reconstruct(t, Side::T, K, L) == e);
            }
        }
    // y_1^2 fits no (1,1) drawing.
    CHECK_THROWS_AS(reconstruct(CrossDiagram{{0, 0}, {2, 0}}, Side::S, 1, 1), NoPreimage);
}

TEST_CASE("operators of drawings") {
    // Worked drawing: crosses y1^2, x2, x4, x5^2, y6 over seven places.
    const auto d = reconstruct(diagram_of(parse_monomial("y1^2*x2*x4*x5^2*y6", 8)), Side::S, 2, 5);
    const Monomial op = diff_op(d);
    CHECK(op.a() == std::vector<int>{0, 1, 0, 1, 2, 0, 0, 0});
    CHECK(op.b() == std::vector<int>{2, 0, 0, 0, 0, 1, 0, 0});
    CHECK(diff_op_of(CrossDiagram{{0, 0}, {0, 0}}, 3).is_one());
    CHECK(diff_op(drawing(1, 1, {{Y, 1, 1}, {X, 1, 0}})) == parse_monomial("y1", 3));
}

TEST_CASE("full shape monomial lies in delta with unit coefficient") {
    for (int n = 1; n <= 6; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            const auto delta = build_delta(hook_partition(K, L));
            for (const auto& e : enumerate_drawings(K, L)) {
                const auto c = delta.value.coeff(diff_op(e, Side::S) * diff_op(e, Side::T));
                CHECK(abs(c) == 1);
            }
        }
}

TEST_CASE("son relation") {
    const auto delta = build_delta(hook_partition(1, 1));
    const auto parent = drawing(1, 1, {{Y, 1, 1}, {X, 1, 0}});
    CHECK(diff_op(parent, Side::T) == parse_monomial("x2", 3));
    // Candidate with S = y_2.
    const auto cand = drawing(1, 1, {{X, 1, 0}, {Y, 1, 1}});
    CHECK(diff_op(cand) == parse_monomial("y2", 3));
    CHECK_FALSE(is_son(parent, cand, delta));
    CHECK_THROWS(is_son(parent, parent, delta));

    const auto ds = enumerate_drawings(1, 1);
    size_t pairs = 0, edges = 0;
    for (const auto& a : ds)
        for (const auto& b : ds)
            if (!(a == b)) {
                ++pairs;
                edges += is_son(a, b, delta);
            }
    CHECK(pairs == 30);
    CHECK(edges == 0);
}

TEST_CASE("support test agrees with the literal son test") {
    for (int n = 1; n <= 5; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            const auto delta = build_delta(hook_partition(K, L));
            const auto ds = enumerate_drawings(K, L);
            for (const auto& a : ds)
                for (const auto& b : ds)
                    if (!(a == b)) CHECK(is_son(a, b, delta) == is_son_by_support(a, b, delta));
        }
}

TEST_CASE("flip-son duality") {
    for (int n = 1; n <= 4; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            const auto delta = build_delta(hook_partition(K, L));
            const auto ds = enumerate_drawings(K, L);
            for (const auto& a : ds)
                for (const auto& b : ds)
                    if (!(a == b)) CHECK(is_son(a, b, delta) == is_son(flip(b), flip(a), delta));
        }
}

TEST_CASE("descendant graph") {
    auto g11 = descendant_graph(1, 1, build_delta(hook_partition(1, 1)));
    CHECK(g11.edge_count == 0);
    CHECK(g11.acyclic);
    CHECK(descendant_graph(2, 0, build_delta(hook_partition(2, 0))).acyclic);
    // Independent cycle search by depth-first colouring.
    for (int n = 1; n <= 6; ++n)
        for (int K = 0; K < n; ++K) {
            const int L = n - 1 - K;
            auto g = descendant_graph(K, L, build_delta(hook_partition(K, L)));
            std::vector<int> colour(g.drawings.size(), 0);
            bool cycle = false;
            std::function<void(int)> dfs = [&](int v) {
                colour[static_cast<size_t>(v)] = 1;
                for (int w : g.sons[static_cast<size_t>(v)]) {
                    if (colour[static_cast<size_t>(w)] == 1) cycle = true;
                    if (colour[static_cast<size_t>(w)] == 0) dfs(w);
                }
                colour[static_cast<size_t>(v)] = 2;
            };
            for (size_t v = 0; v < g.drawings.size(); ++v)
                if (!colour[v]) dfs(static_cast<int>(v));
            CHECK(g.acyclic == !cycle);
            CHECK(g.acyclic);
        }
    CHECK_THROWS_AS(descendant_graph(4, 4, build_delta(hook_partition(4, 4))), SizeLimitError);
}

TEST_CASE("drawing json") {
    CHECK(drawing(1, 1, {{Y, 1, 1}, {X, 1, 0}}).to_json() ==
          "{\"places\":[{\"kind\":\"y\",\"size\":1,\"crosses\":1},{\"kind\":\"x\",\"size\":1,\"crosses\":0}]}");
}
