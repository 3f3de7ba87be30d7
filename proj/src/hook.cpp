#include "ghmod/hook.hpp"

#include <algorithm>
#include <sstream>

namespace ghmod {

namespace {

void check_kl(int K, int L) {
    if (K < 0 || L < 0) throw std::invalid_argument("K and L must be nonnegative");
    if (K + L + 1 > kMaxVars) throw SizeLimitError("hook too large for the monomial representation");
}

mpz_class binom(long a, long b) {
    if (b == 0) return 1;
    if (a < 0 || b < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

// Crosses allowed on the y-column at place i.
std::pair<int, int> y_cross_range(const HookDrawing& d, size_t i) {
    const int h = d.places[i].size;
    bool any_x = false;
    for (size_t j = i + 1; j < d.places.size(); ++j) {
        const Place& p = d.places[j];
        if (p.kind != ColumnKind::X) continue;
        any_x = true;
        if (p.crosses == 0) return {1, h};
        if (p.crosses == p.size) return {0, h - 1};
    }
    if (any_x) throw std::logic_error("x-columns to the right but none plain");
    return {0, h};
}

void build_shapes(int K, int L, std::string& cur, std::vector<std::string>& out) {
    if (K == 0 && L == 0) {
        out.push_back(cur);
        return;
    }
    if (L > 0) {
        cur.push_back('X');
        build_shapes(K, L - 1, cur, out);
        cur.pop_back();
    }
    if (K > 0) {
        cur.push_back('Y');
        build_shapes(K - 1, L, cur, out);
        cur.pop_back();
    }
}

HookDrawing shape_from_word(int K, int L, const std::string& w) {
    HookDrawing d{K, L, {}};
    int y = K, x = L;
    for (char c : w) {
        if (c == 'X')
            d.places.push_back({ColumnKind::X, x--, 0});
        else
            d.places.push_back({ColumnKind::Y, y--, 0});
    }
    return d;
}

}  // namespace

std::string HookDrawing::shape_word() const {
    std::string s;
    for (const auto& p : places) s.push_back(p.kind == ColumnKind::X ? 'X' : 'Y');
    return s;
}

std::string HookDrawing::to_json() const {
    std::ostringstream os;
    os << "{\"places\":[";
    for (size_t i = 0; i < places.size(); ++i) {
        const auto& p = places[i];
        os << (i ? "," : "") << "{\"kind\":\"" << (p.kind == ColumnKind::X ? 'x' : 'y') << "\",\"size\":" << p.size
           << ",\"crosses\":" << p.crosses << '}';
    }
    os << "]}";
    return os.str();
}

bool is_valid_drawing(const HookDrawing& d) {
    if (d.K < 0 || d.L < 0 || static_cast<int>(d.places.size()) != d.K + d.L) return false;
    int y = d.K, x = d.L;
    for (const auto& p : d.places) {
        int expect = p.kind == ColumnKind::X ? x-- : y--;
        if (expect < 1 || p.size != expect) return false;
        if (p.crosses < 0 || p.crosses > p.size) return false;
    }
    for (size_t i = 0; i < d.places.size(); ++i) {
        if (d.places[i].kind != ColumnKind::Y) continue;
        auto [lo, hi] = y_cross_range(d, i);
        if (d.places[i].crosses < lo || d.places[i].crosses > hi) return false;
    }
    return true;
}

std::vector<HookDrawing> enumerate_drawings(int K, int L) {
    check_kl(K, L);
    std::vector<std::string> shapes;
    std::string cur;
    build_shapes(K, L, cur, shapes);
    std::vector<HookDrawing> out;
    for (const auto& w : shapes) {
        HookDrawing d = shape_from_word(K, L, w);
        const size_t m = d.places.size();
        // Odometer over cross vectors, last place fastest.
        while (true) {
            if (is_valid_drawing(d)) out.push_back(d);
            size_t i = m;
            while (i > 0 && d.places[i - 1].crosses == d.places[i - 1].size) --i;
            if (i == 0) break;
            ++d.places[i - 1].crosses;
            for (size_t j = i; j < m; ++j) d.places[j].crosses = 0;
        }
    }
    return out;
}

mpz_class closed_form_summand(int k1, int k2, int L) {
    mpz_class a = 1;
    for (int t = 2; t <= k1 + 1; ++t) a *= t;
    mpz_class b = 1;
    for (int t = k1 + 1; t <= k1 + k2; ++t) b *= t;
    return a * b * factorial(L + 1) * binom(k2 + L - 1, k2);
}

mpz_class closed_form_count(int K, int L) {
    if (K < 0 || L < 0) throw std::invalid_argument("K and L must be nonnegative");
    mpz_class s = 0;
    for (int k1 = 0; k1 <= K; ++k1) s += closed_form_summand(k1, K - k1, L);
    return s;
}

HookDrawing flip(const HookDrawing& d) {
    HookDrawing f = d;
    for (auto& p : f.places) p.crosses = p.size - p.crosses;
    return f;
}

std::pair<CrossDiagram, CrossDiagram> split(const HookDrawing& d) {
    const size_t m = d.places.size();
    CrossDiagram S{std::vector<int>(m, 0), std::vector<int>(m, 0)};
    CrossDiagram T = S;
    for (size_t i = 0; i < m; ++i) {
        const auto& p = d.places[i];
        auto& s = p.kind == ColumnKind::X ? S.x_order : S.y_order;
        auto& t = p.kind == ColumnKind::X ? T.x_order : T.y_order;
        s[i] = p.crosses;
        t[i] = p.size - p.crosses;
    }
    return {S, T};
}

namespace {

HookDrawing reconstruct_from_crosses(const CrossDiagram& part, int K, int L) {
    const int m = K + L;
    if (part.y_order.size() != part.x_order.size()) throw NoPreimage("malformed diagram");
    for (int i = m; i < part.size(); ++i)
        if (part.x_order[static_cast<size_t>(i)] || part.y_order[static_cast<size_t>(i)])
            throw NoPreimage("orders beyond the last place");
    auto xo = [&](int i) { return i < part.size() ? part.x_order[static_cast<size_t>(i)] : 0; };
    auto yo = [&](int i) { return i < part.size() ? part.y_order[static_cast<size_t>(i)] : 0; };

    HookDrawing d{K, L, {}};
    int xc = L, yc = K;
    for (int i = 0; i < m; ++i) {
        const int a = xo(i), b = yo(i);
        if (a < 0 || b < 0 || (a && b)) throw NoPreimage("invalid orders at place " + std::to_string(i + 1));
        bool as_x;
        if (a) {
            as_x = true;
        } else if (b) {
            as_x = false;
        } else {
            // Empty place: an x-column if the crossed x-places to the right still fit
            // with one x-column missing.
            as_x = xc >= 1;
            if (as_x) {
                const int D = xc - 1;
                int j = 0;
                for (int t = i + 1; t < m && as_x; ++t) {
                    if (!xo(t)) continue;
                    if (j >= D || xo(t) > D - j) as_x = false;
                    ++j;
                }
            }
        }
        if (as_x) {
            if (xc == 0) throw NoPreimage("too many x-columns");
            d.places.push_back({ColumnKind::X, xc--, a});
        } else {
            if (yc == 0) throw NoPreimage("too many y-columns");
            d.places.push_back({ColumnKind::Y, yc--, b});
        }
    }
    if (!is_valid_drawing(d)) throw NoPreimage("diagram is not the crosses of a drawing");
    auto s = split(d).first;
    for (int i = 0; i < m; ++i)
        if (s.x_order[static_cast<size_t>(i)] != xo(i) || s.y_order[static_cast<size_t>(i)] != yo(i))
            throw NoPreimage("diagram is not the crosses of a drawing");
    return d;
}

}  // namespace

HookDrawing reconstruct(const CrossDiagram& part, Side side, int K, int L) {
    check_kl(K, L);
    if (side == Side::S) return reconstruct_from_crosses(part, K, L);
    // The whites of d are the crosses of flip(d).
    return flip(reconstruct_from_crosses(part, K, L));
}

Monomial diff_op_of(const CrossDiagram& s, int n) {
    if (s.size() > n) throw std::invalid_argument("diagram longer than the ambient size");
    Monomial m(n);
    for (int i = 0; i < s.size(); ++i) {
        m.set_x(i, s.x_order[static_cast<size_t>(i)]);
        m.set_y(i, s.y_order[static_cast<size_t>(i)]);
    }
    return m;
}

Monomial diff_op(const HookDrawing& d, Side side) {
    auto [S, T] = split(d);
    return diff_op_of(side == Side::S ? S : T, d.n());
}

CrossDiagram diagram_of(const Monomial& m) { return CrossDiagram{m.a(), m.b()}; }

bool is_son(const HookDrawing& parent, const HookDrawing& candidate, const DeltaPolynomial& delta) {
    if (parent == candidate) throw std::invalid_argument("a son must differ from its parent");
    if (parent.K != candidate.K || parent.L != candidate.L) throw std::invalid_argument("drawings of different hooks");
    Polynomial r = apply_diff(diff_op(parent, Side::T), apply_diff(diff_op(candidate, Side::S), delta.value));
    return r.size() == 1 && r.terms().begin()->first.is_one();
}

bool is_son_by_support(const HookDrawing& parent, const HookDrawing& candidate, const DeltaPolynomial& delta) {
    Monomial t = diff_op(parent, Side::T) * diff_op(candidate, Side::S);
    return delta.value.terms().count(t) > 0;
}

DescendantGraph descendant_graph(int K, int L, const DeltaPolynomial& delta, int limit) {
    if (K + L + 1 > limit) throw SizeLimitError("n exceeds the descendant-graph limit " + std::to_string(limit));
    if (delta.mu != hook_partition(K, L)) throw std::invalid_argument("delta does not belong to this hook");
    DescendantGraph g;
    g.drawings = enumerate_drawings(K, L);
    const size_t N = g.drawings.size();
    std::vector<Monomial> S(N), T(N);
    for (size_t i = 0; i < N; ++i) {
        S[i] = diff_op(g.drawings[i], Side::S);
        T[i] = diff_op(g.drawings[i], Side::T);
    }
    g.sons.assign(N, {});
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            if (delta.value.terms().count(T[i] * S[j])) {
                g.sons[i].push_back(static_cast<int>(j));
                ++g.edge_count;
            }
        }
    // Kahn's algorithm.
    std::vector<int> indeg(N, 0);
    for (const auto& s : g.sons)
        for (int j : s) ++indeg[static_cast<size_t>(j)];
    std::vector<int> stack;
    for (size_t i = 0; i < N; ++i)
        if (!indeg[i]) stack.push_back(static_cast<int>(i));
    size_t seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int j : g.sons[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(j)] == 0) stack.push_back(j);
    }
    g.acyclic = seen == N;
    return g;
}

}  // namespace ghmod
