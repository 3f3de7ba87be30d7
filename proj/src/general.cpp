#include "ghmod/general.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ghmod {

namespace {

// Remaining bars grouped by x-count, y-counts kept descending.
using Pool = std::map<int, std::vector<int>>;

Pool pool_of(const Partition& mu) {
    Pool pool;
    for (const auto& b : biexponents(mu))
        if (b.p || b.q) pool[b.p].push_back(b.q);
    for (auto& [p, qs] : pool) std::sort(qs.rbegin(), qs.rend());
    return pool;
}

// Whites a bar with x-count p needs when the pool holds the bars to its right.
int whites_needed(const Pool& right, int p) {
    int need = 0;
    for (auto it = right.upper_bound(p); it != right.end(); ++it)
        if (!it->second.empty()) need = std::max(need, it->second.front() + 1);
    return need;
}

void take(Pool& pool, int p) {
    auto& qs = pool[p];
    qs.erase(qs.begin());
    if (qs.empty()) pool.erase(p);
}

void give(Pool& pool, int p, int q) {
    auto& qs = pool[p];
    qs.insert(qs.begin(), q);
}

void gen(const Partition& mu, Pool& pool, std::vector<Bar>& cur, std::vector<GeneralDrawing>& out) {
    if (pool.empty()) {
        out.push_back({mu, cur});
        return;
    }
    std::vector<int> ps;
    for (const auto& [p, qs] : pool) ps.push_back(p);
    for (int p : ps) {
        const int q = pool[p].front();
        take(pool, p);
        const int need = whites_needed(pool, p);
        for (int c = 0; c + need <= q; ++c) {
            cur.push_back({p, q, c});
            gen(mu, pool, cur, out);
            cur.pop_back();
        }
        give(pool, p, q);
    }
}

}  // namespace

std::string GeneralDrawing::to_json() const {
    std::ostringstream os;
    os << "{\"partition\":" << mu.to_json() << ",\"bars\":[";
    for (size_t i = 0; i < bars.size(); ++i)
        os << (i ? "," : "") << "{\"nx\":" << bars[i].nx << ",\"ny\":" << bars[i].ny << ",\"crosses\":" << bars[i].crosses
           << '}';
    os << "]}";
    return os.str();
}

bool is_valid_general(const GeneralDrawing& d) {
    std::multiset<std::pair<int, int>> want, have;
    for (const auto& b : biexponents(d.mu))
        if (b.p || b.q) want.insert({b.p, b.q});
    for (const auto& b : d.bars) have.insert({b.nx, b.ny});
    if (want != have) return false;
    for (size_t i = 0; i < d.bars.size(); ++i) {
        const Bar& b = d.bars[i];
        if (b.crosses < 0 || b.crosses > b.ny) return false;
        for (size_t j = i + 1; j < d.bars.size(); ++j) {
            const Bar& r = d.bars[j];
            if (r.nx == b.nx && r.ny >= b.ny) return false;
            if (r.nx > b.nx && b.ny - b.crosses < r.ny + 1) return false;
        }
    }
    return true;
}

std::vector<GeneralDrawing> enumerate_general(const Partition& mu, int limit) {
    if (mu.n() > limit) throw SizeLimitError("n exceeds the drawing limit " + std::to_string(limit));
    Pool pool = pool_of(mu);
    std::vector<GeneralDrawing> out;
    std::vector<Bar> cur;
    gen(mu, pool, cur, out);
    return out;
}

CountCheck count_check(const Partition& mu, int limit) {
    CountCheck c;
    c.count = enumerate_general(mu, limit).size();
    c.expected = factorial(mu.n()) / conjugate_factorial(mu);
    c.pass = c.count == c.expected;
    return c;
}

CornerRecursion corner_recursion_check(const Partition& mu) {
    CornerRecursion r;
    r.lhs = factorial(mu.n()) / conjugate_factorial(mu);
    if (mu.n() == 1) {
        r.rhs = 1;
        r.pass = r.lhs == r.rhs;
        return r;
    }
    const auto conj = conjugate(mu).parts();
    r.rhs = 0;
    // Each run of equal column heights c (multiplicity alpha) ends in one corner, at row c.
    size_t j = 0;
    while (j < conj.size()) {
        size_t e = j;
        while (e + 1 < conj.size() && conj[e + 1] == conj[j]) ++e;
        const int c = conj[j];
        const int alpha = static_cast<int>(e - j + 1);
        std::vector<int> parts = mu.parts();
        --parts[static_cast<size_t>(c - 1)];
        if (parts.back() == 0) parts.pop_back();
        Partition smaller(parts);
        mpz_class term = alpha * (factorial(mu.n() - 1) / conjugate_factorial(smaller));
        r.terms.emplace_back(smaller, term);
        r.rhs += term;
        j = e + 1;
    }
    r.pass = r.lhs == r.rhs;
    return r;
}

std::pair<Monomial, Monomial> split_general(const GeneralDrawing& d) {
    const int n = d.mu.n();
    Monomial S(n), T(n);
    for (size_t i = 0; i < d.bars.size(); ++i) {
        const int v = static_cast<int>(i);
        S.set_x(v, d.bars[i].nx);
        S.set_y(v, d.bars[i].crosses);
        T.set_y(v, d.bars[i].ny - d.bars[i].crosses);
    }
    return {S, T};
}

namespace {

void rebuild_from_whites(const Monomial& part, size_t i, size_t m, Pool& pool, std::vector<Bar>& cur,
                         std::vector<std::vector<Bar>>& found) {
    if (found.size() > 1) return;
    if (i == m) {
        if (pool.empty()) found.push_back(cur);
        return;
    }
    const int w = part.y(static_cast<int>(i));
    std::vector<int> ps;
    for (const auto& [p, qs] : pool) ps.push_back(p);
    for (int p : ps) {
        const int q = pool[p].front();
        if (q < w) continue;
        take(pool, p);
        if (w >= whites_needed(pool, p)) {
            cur.push_back({p, q, q - w});
            rebuild_from_whites(part, i + 1, m, pool, cur, found);
            cur.pop_back();
        }
        give(pool, p, q);
    }
}

}  // namespace

GeneralDrawing reconstruct_general(const Monomial& part, Side side, const Partition& mu) {
    const int n = mu.n();
    if (part.n() != n) throw DimensionMismatch("operator and partition sizes differ");
    if (part.x(n - 1) || part.y(n - 1)) throw NoPreimage("orders at place n");
    const size_t m = static_cast<size_t>(n - 1);
    GeneralDrawing d{mu, {}};
    if (side == Side::S) {
        // The x-order names the bar: rule 1 forces the tallest remaining one.
        Pool pool = pool_of(mu);
        for (size_t i = 0; i < m; ++i) {
            const int p = part.x(static_cast<int>(i));
            auto it = pool.find(p);
            if (it == pool.end()) throw NoPreimage("no bar with " + std::to_string(p) + " x-cells left");
            const int q = it->second.front();
            take(pool, p);
            d.bars.push_back({p, q, part.y(static_cast<int>(i))});
        }
    } else {
        for (size_t i = 0; i < m; ++i)
            if (part.x(static_cast<int>(i))) throw NoPreimage("white diagram carries x-orders");
        Pool pool = pool_of(mu);
        std::vector<Bar> cur;
        std::vector<std::vector<Bar>> found;
        rebuild_from_whites(part, 0, m, pool, cur, found);
        if (found.empty()) throw NoPreimage("diagram is not the whites of a drawing");
        if (found.size() > 1) throw std::logic_error("white diagram with several preimages");
        d.bars = found.front();
    }
    if (!is_valid_general(d)) throw NoPreimage("diagram is not part of a drawing");
    auto [S, T] = split_general(d);
    if ((side == Side::S ? S : T) != part) throw NoPreimage("diagram is not part of a drawing");
    return d;
}

bool lemma7_check(const GeneralDrawing& d, const DeltaPolynomial& delta) {
    auto [S, T] = split_general(d);
    Polynomial fs = apply_diff(S, delta.value);
    Polynomial ft = apply_diff(T, delta.value);
    if (fs.is_zero() || ft.is_zero()) return false;
    return min_monomial(fs) == T && min_monomial(ft) == S;
}

ZeroXBasisReport verify_theorem4(const Partition& mu, const DeltaPolynomial& delta, const RankOptions& opts,
                               bool with_closure, int limit) {
    if (mu.n() > limit) throw SizeLimitError("n exceeds the limit " + std::to_string(limit));
    if (delta.mu != mu) throw std::invalid_argument("delta does not belong to this partition");
    ZeroXBasisReport r;
    const auto ds = enumerate_general(mu, limit);
    r.drawings = ds.size();
    r.expected = factorial(mu.n()) / conjugate_factorial(mu);
    const int nmu = n_stat(mu);
    std::vector<Polynomial> imgs_s, imgs_t;
    std::set<std::vector<std::uint8_t>> mts;
    r.degrees_ok = true;
    r.lemma7_ok = true;
    for (const auto& d : ds) {
        auto [S, T] = split_general(d);
        Polynomial fs = apply_diff(S, delta.value), ft = apply_diff(T, delta.value);
        for (const auto& [m, c] : fs.terms())
            if (m.deg_x() != 0) r.degrees_ok = false;
        for (const auto& [m, c] : ft.terms())
            if (m.deg_x() != nmu) r.degrees_ok = false;
        if (fs.is_zero() || ft.is_zero()) r.degrees_ok = false;
        if (!lemma7_check(d, delta)) r.lemma7_ok = false;
        mts.insert({T.raw().begin(), T.raw().end()});
        imgs_s.push_back(std::move(fs));
        imgs_t.push_back(std::move(ft));
    }
    r.distinct_mt = mts.size() == ds.size();
    r.rank_s = rank_of(imgs_s, opts).rank;
    r.rank_t = rank_of(imgs_t, opts).rank;
    if (with_closure) {
        auto cl = derivative_closure(delta, opts, limit);
        for (const auto& [bd, dim] : cl.table)
            if (bd.first == 0) r.closure_x0 += dim;
    }
    const bool counts = r.expected == r.drawings && r.expected == r.rank_s && r.expected == r.rank_t &&
                        (!with_closure || r.expected == r.closure_x0);
    r.pass = counts && r.degrees_ok && r.lemma7_ok && r.distinct_mt;
    return r;
}

}  // namespace ghmod
