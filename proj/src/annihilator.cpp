#include "ghmod/annihilator.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace ghmod {

namespace {

std::vector<int> bits(unsigned mask) {
    std::vector<int> v;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) v.push_back(i);
    return v;
}

std::string var_list(const std::vector<int>& vars, char alpha) {
    std::string s;
    for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + std::string(1, alpha) + std::to_string(vars[i] + 1);
    return s;
}

Polynomial bar_product(int n, const std::vector<int>& vars, bool y) {
    Monomial m(n);
    for (int v : vars) {
        if (y)
            m.set_y(v, 1);
        else
            m.set_x(v, 1);
    }
    return Polynomial(m);
}

bool killed(const Monomial& m) {
    for (int i = 0; i < m.n(); ++i)
        if (m.x(i) && m.y(i)) return true;
    return false;
}

void check_hook(int K, int L) {
    if (K < 0 || L < 0) throw std::invalid_argument("K and L must be nonnegative");
    if (K + L + 1 > kMaxVars) throw SizeLimitError("hook too large");
}

}  // namespace

// ---------------------------------------------------------------- generators

std::string Generator::label() const {
    switch (family) {
        case Family::HX: return "h_" + std::to_string(degree) + "(X_n)";
        case Family::HY: return "h_" + std::to_string(degree) + "(Y_n)";
        case Family::XY: return "x" + std::to_string(vars[0] + 1) + "*y" + std::to_string(vars[0] + 1);
        case Family::XBar: return "xbar(" + var_list(vars, 'x') + ")";
        case Family::YBar: return "ybar(" + var_list(vars, 'y') + ")";
    }
    return "?";
}

GeneratorSet generators(int K, int L) {
    check_hook(K, L);
    const int n = K + L + 1;
    GeneratorSet gs{K, L, {}};
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    for (int i = 1; i <= n; ++i) gs.generators.push_back({Family::HX, i, all, complete_homogeneous(n, i, all, false)});
    for (int i = 1; i <= n; ++i) gs.generators.push_back({Family::HY, i, all, complete_homogeneous(n, i, all, true)});
    for (int i = 0; i < n; ++i) {
        Monomial m(n);
        m.set_x(i, 1);
        m.set_y(i, 1);
        gs.generators.push_back({Family::XY, 2, {i}, Polynomial(m)});
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int c = std::popcount(mask);
        if (c == L + 1) gs.generators.push_back({Family::XBar, c, bits(mask), bar_product(n, bits(mask), false)});
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int c = std::popcount(mask);
        if (c == K + 1) gs.generators.push_back({Family::YBar, c, bits(mask), bar_product(n, bits(mask), true)});
    }
    return gs;
}

bool annihilates(const Polynomial& P, const DeltaPolynomial& delta) {
    return apply_diff_poly(P, delta.value).is_zero();
}

// ---------------------------------------------------------------- proposition instances

Polynomial PropositionInstance::product() const {
    Polynomial p = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) p = mul(p, factors[i]);
    return p;
}

bool annihilates(const PropositionInstance& inst, const DeltaPolynomial& delta) {
    Polynomial r = delta.value;
    for (auto it = inst.factors.rbegin(); it != inst.factors.rend(); ++it) {
        r = apply_diff_poly(*it, r);
        if (r.is_zero()) return true;
    }
    return r.is_zero();
}

std::vector<PropositionInstance> proposition_instances(int n, int K, int L, int which, int limit) {
    check_hook(K, L);
    if (n != K + L + 1) throw std::invalid_argument("n must equal K + L + 1");
    if (n > limit) throw SizeLimitError("n exceeds the instance limit " + std::to_string(limit));
    if (which < 1 || which > 4) throw std::invalid_argument("proposition index must be 1..4");
    const int dx = L * (L + 1) / 2, dy = K * (K + 1) / 2;
    const unsigned full = 1u << n;
    std::vector<PropositionInstance> out;
    auto h = [&](int k, unsigned mask, bool y) { return complete_homogeneous(n, k, bits(mask), y); };
    auto hname = [&](int k, unsigned mask, bool y) {
        return "h_" + std::to_string(k) + "(" + var_list(bits(mask), y ? 'y' : 'x') + ")";
    };

    if (which == 1) {
        for (int alpha = 0; alpha < 2; ++alpha) {
            const bool y = alpha == 0;
            const int top = y ? dy : dx;
            for (unsigned Y = 1; Y < full; ++Y)
                for (int k = 1; k <= top; ++k)
                    if (k + std::popcount(Y) > n) out.push_back({1, !y, hname(k, Y, y), {h(k, Y, y)}});
        }
    } else if (which == 2) {
        for (int alpha = 0; alpha < 2; ++alpha) {
            const bool y = alpha == 0;
            const int top = y ? dy : dx;
            const int cap = y ? K : L;
            for (unsigned Yp = 1; Yp < full; ++Yp) {
                for (unsigned Y = Yp;; Y = (Y - 1) & Yp) {
                    const int s = std::popcount(Y);
                    for (int k = 1; k <= top; ++k) {
                        if (k + s <= cap) continue;
                        std::string d = std::string(y ? "ybar(" : "xbar(") + var_list(bits(Y), y ? 'y' : 'x') + ")*" +
                                        hname(k, Yp, y);
                        out.push_back({2, !y, d, {bar_product(n, bits(Y), y), h(k, Yp, y)}});
                    }
                    if (Y == 0) break;
                }
            }
        }
    } else {
        for (unsigned Y = 1; Y < full; ++Y)
            for (unsigned X = 1; X < full; ++X) {
                const bool y_in_x = (Y & ~X) == 0, x_in_y = (X & ~Y) == 0;
                if (!y_in_x && !x_in_y) continue;
                const int sy = std::popcount(Y), sx = std::popcount(X);
                for (int k = 1; k <= dy; ++k)
                    for (int l = 1; l <= dx; ++l) {
                        bool ok;
                        if (which == 3)
                            ok = k + l + sy + sx >= 2 * n;
                        else
                            ok = (y_in_x && k + l + sy > n) || (x_in_y && k + l + sx > n);
                        if (ok) out.push_back({which, false, hname(k, Y, true) + "*" + hname(l, X, false), {h(k, Y, true), h(l, X, false)}});
                    }
            }
    }
    return out;
}

// ---------------------------------------------------------------- classification

std::string to_string(Anomaly a) {
    switch (a) {
        case Anomaly::ValidDrawing: return "ValidDrawing";
        case Anomaly::Case1a: return "Case1a";
        case Anomaly::Case1b: return "Case1b";
        case Anomaly::Case1c: return "Case1c";
        case Anomaly::Case1d: return "Case1d";
        case Anomaly::Case2a: return "Case2a";
        case Anomaly::Case2b: return "Case2b";
        case Anomaly::NullOperator: return "NullOperator";
    }
    return "?";
}

std::string to_string(Rule r) {
    switch (r) {
        case Rule::CaseProposition: return "case-proposition";
        case Rule::PropositionSearch: return "proposition-search";
        case Rule::DeltaOracle: return "delta-oracle";
    }
    return "?";
}

namespace {

int xo(const Monomial& m, int i) { return m.x(i); }
int yo(const Monomial& m, int i) { return m.y(i); }

// Case 1 at place j, for the alphabet whose order is nonzero there.
std::optional<Anomaly> case1_at(const Monomial& op, int j, int K, int L) {
    const int n = op.n();
    const bool y = yo(op, j) > 0;
    if (!y && !xo(op, j)) return std::nullopt;
    auto own = [&](int i) { return y ? yo(op, i) : xo(op, i); };
    auto other = [&](int i) { return y ? xo(op, i) : yo(op, i); };
    int h = 0;
    for (int i = 0; i <= j; ++i) h += own(i) > 0;
    if (own(j) - 1 + h > (y ? K : L)) return y ? Anomaly::Case1a : Anomaly::Case1c;
    int span = j + 1;
    for (int i = j + 1; i < n; ++i) span += other(i) > 0;
    if (j == n - 1 || own(j) + span > n) return y ? Anomaly::Case1b : Anomaly::Case1d;
    return std::nullopt;
}

// Shape for a diagram without case-1 anomalies; empty places follow the reconstruction rule.
std::vector<Place> shape_of(const Monomial& op, int K, int L) {
    const int m = K + L;
    int forced_x = 0, forced_y = 0;
    for (int i = 0; i < m; ++i) {
        forced_x += xo(op, i) > 0;
        forced_y += yo(op, i) > 0;
    }
    int xc = L, yc = K;
    int free_x = L - forced_x;
    int empties = m - forced_x - forced_y;
    std::vector<Place> out;
    for (int i = 0; i < m; ++i) {
        bool as_x;
        if (xo(op, i)) {
            as_x = true;
            --forced_x;
        } else if (yo(op, i)) {
            as_x = false;
            --forced_y;
        } else {
            if (free_x == 0) {
                as_x = false;
            } else if (free_x == empties) {
                as_x = true;
            } else {
                as_x = true;
                const int D = xc - 1;
                int j = 0;
                for (int t = i + 1; t < m && as_x; ++t) {
                    if (!xo(op, t)) continue;
                    if (j >= D || xo(op, t) > D - j) as_x = false;
                    ++j;
                }
            }
            --empties;
            if (as_x) --free_x;
        }
        if (as_x)
            out.push_back({ColumnKind::X, xc--, xo(op, i)});
        else
            out.push_back({ColumnKind::Y, yc--, yo(op, i)});
    }
    return out;
}

void resize(std::vector<Place>& shape, int K, int L) {
    int y = K, x = L;
    for (auto& p : shape) p.size = p.kind == ColumnKind::X ? x-- : y--;
}

struct Violation {
    Anomaly kind;
    int y_place;  // 0-based
    int x_place;  // first plain x-column on its right
};

std::optional<Violation> rightmost_violation(const std::vector<Place>& shape) {
    for (int i = static_cast<int>(shape.size()) - 1; i >= 0; --i) {
        const Place& p = shape[static_cast<size_t>(i)];
        if (p.kind != ColumnKind::Y) continue;
        for (size_t j = static_cast<size_t>(i) + 1; j < shape.size(); ++j) {
            const Place& q = shape[j];
            if (q.kind != ColumnKind::X) continue;
            if (q.crosses == 0) {
                if (p.crosses == 0) return Violation{Anomaly::Case2a, i, static_cast<int>(j)};
                break;
            }
            if (q.crosses == q.size) {
                if (p.crosses == p.size) return Violation{Anomaly::Case2b, i, static_cast<int>(j)};
                break;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

AnomalyClass classify_diagram(const Monomial& op, int K, int L) {
    check_hook(K, L);
    const int n = K + L + 1;
    if (op.n() != n) throw DimensionMismatch("operator size does not match the hook");
    for (int i = n - 1; i >= 0; --i)
        if (op.x(i) && op.y(i)) return {Anomaly::NullOperator, i + 1};
    try {
        reconstruct(diagram_of(op), Side::S, K, L);
        return {Anomaly::ValidDrawing, 0};
    } catch (const NoPreimage&) {
    }
    for (int j = n - 1; j >= 0; --j)
        if (auto a = case1_at(op, j, K, L)) return {*a, j + 1};
    auto shape = shape_of(op, K, L);
    for (int j = static_cast<int>(shape.size()) - 1; j >= 0; --j) {
        const Place& p = shape[static_cast<size_t>(j)];
        if (p.crosses <= p.size) continue;
        // Overflow: subcase a when every same-kind column on the left carries crosses.
        bool all_crossed = true;
        for (int i = 0; i < j; ++i)
            if (shape[static_cast<size_t>(i)].kind == p.kind && shape[static_cast<size_t>(i)].crosses == 0) all_crossed = false;
        if (p.kind == ColumnKind::Y) return {all_crossed ? Anomaly::Case1a : Anomaly::Case1b, j + 1};
        return {all_crossed ? Anomaly::Case1c : Anomaly::Case1d, j + 1};
    }
    auto v = rightmost_violation(shape);
    if (!v) throw std::logic_error("diagram " + op.to_string() + " escapes the anomaly classification");
    return {v->kind, v->y_place + 1};
}

// ---------------------------------------------------------------- rewriting

namespace {

struct Relation {
    std::string name;
    std::vector<std::pair<Monomial, mpz_class>> terms;  // descending
};

Relation make_relation(std::string name, const Polynomial& p) { return {std::move(name), p.sorted_terms()}; }

// op = t*·m; rewrite op by subtracting m·P/c(t*). Every surviving term must be smaller than op.
std::optional<std::vector<std::pair<mpq_class, Monomial>>> rewrite_with(const Monomial& op, const Relation& rel,
                                                                        size_t pivot) {
    const auto& [tstar, c] = rel.terms[pivot];
    const Monomial m = op / tstar;
    std::vector<std::pair<mpq_class, Monomial>> out;
    for (size_t i = 0; i < rel.terms.size(); ++i) {
        if (i == pivot) continue;
        Monomial u = rel.terms[i].first * m;
        if (killed(u)) continue;
        if (!mono_less(u, op)) return std::nullopt;
        out.emplace_back(mpq_class(-rel.terms[i].second, c), u);
    }
    for (auto& [q, mono] : out) q.canonicalize();
    return out;
}

std::optional<std::vector<std::pair<mpq_class, Monomial>>> rewrite_any_pivot(const Monomial& op, const Relation& rel,
                                                                             size_t max_tries = 4) {
    size_t tries = 0;
    for (size_t i = 0; i < rel.terms.size() && tries < max_tries; ++i) {
        if (!rel.terms[i].first.divides(op)) continue;
        ++tries;
        if (auto r = rewrite_with(op, rel, i)) return r;
    }
    return std::nullopt;
}

size_t pivot_of(const Relation& rel, const Monomial& t) {
    for (size_t i = 0; i < rel.terms.size(); ++i)
        if (rel.terms[i].first == t) return i;
    throw std::logic_error("pivot missing from relation");
}

}  // namespace

struct Rewriter::Impl {
    int K, L, n;
    const DeltaPolynomial* delta;
    std::vector<HookDrawing> drawings;
    std::vector<Monomial> ops;
    std::unordered_map<Monomial, size_t, MonomialHash> by_op;
    std::vector<Relation> search_space;
    bool search_ready = false;
    std::unordered_map<Monomial, ReductionStep, MonomialHash> steps;
    NormalFormStats stats;
    size_t budget = 0;

    Impl(int k, int l, const DeltaPolynomial* d) : K(k), L(l), n(k + l + 1), delta(d) {
        check_hook(K, L);
        if (delta && delta->mu != hook_partition(K, L)) throw std::invalid_argument("delta does not belong to this hook");
        drawings = enumerate_drawings(K, L);
        for (size_t i = 0; i < drawings.size(); ++i) {
            ops.push_back(diff_op(drawings[i], Side::S));
            by_op.emplace(ops.back(), i);
        }
        const int A = L * (L + 1) / 2, B = K * (K + 1) / 2;
        mpz_class cx, cy;
        mpz_bin_uiui(cx.get_mpz_t(), static_cast<unsigned long>(n + A), static_cast<unsigned long>(n));
        mpz_bin_uiui(cy.get_mpz_t(), static_cast<unsigned long>(n + B), static_cast<unsigned long>(n));
        mpz_class b = 10 * cx * cy;
        budget = b.fits_ulong_p() ? b.get_ui() : SIZE_MAX;
    }

    void build_search_space() {
        if (search_ready) return;
        search_ready = true;
        for (int which : {1, 2, 4, 3})
            for (const auto& inst : proposition_instances(n, K, L, which, kMaxVars))
                search_space.push_back(make_relation(inst.description, inst.product()));
    }

    std::optional<ReductionStep> by_case(const Monomial& op, const AnomalyClass& ac) {
        ReductionStep st;
        st.rule = Rule::CaseProposition;
        st.anomaly = ac;
        const int j = ac.place - 1;
        switch (ac.kind) {
            case Anomaly::Case1a:
            case Anomaly::Case1c: {
                const bool y = ac.kind == Anomaly::Case1a;
                std::vector<int> Y;
                for (int i = 0; i <= j; ++i)
                    if ((y ? op.y(i) : op.x(i)) > 0) Y.push_back(i);
                const int k = (y ? op.y(j) : op.x(j)) - 1;
                if (k + static_cast<int>(Y.size()) <= (y ? K : L)) return std::nullopt;
                Polynomial bar = bar_product(n, Y, y);
                const char a = y ? 'y' : 'x';
                if (k == 0) {
                    st.relation = std::string(1, a) + "bar(" + var_list(Y, a) + ")";
                    return st;
                }
                Relation rel = make_relation(std::string(1, a) + "bar(" + var_list(Y, a) + ")*h_" + std::to_string(k) +
                                                 "(" + var_list(Y, a) + ")",
                                             mul(bar, complete_homogeneous(n, k, Y, y)));
                Monomial t = bar.terms().begin()->first;
                if (y)
                    t.set_y(j, t.y(j) + k);
                else
                    t.set_x(j, t.x(j) + k);
                auto r = rewrite_with(op, rel, pivot_of(rel, t));
                if (!r) return std::nullopt;
                st.relation = rel.name;
                st.terms = std::move(*r);
                return st;
            }
            case Anomaly::Case1b:
            case Anomaly::Case1d: {
                const bool y = ac.kind == Anomaly::Case1b;
                std::vector<int> Y;
                for (int i = 0; i < n; ++i)
                    if (i <= j || (y ? op.x(i) : op.y(i)) > 0) Y.push_back(i);
                const int k = y ? op.y(j) : op.x(j);
                if (k + static_cast<int>(Y.size()) <= n) return std::nullopt;
                const char a = y ? 'y' : 'x';
                Relation rel = make_relation("h_" + std::to_string(k) + "(" + var_list(Y, a) + ")",
                                             complete_homogeneous(n, k, Y, y));
                Monomial t(n);
                if (y)
                    t.set_y(j, k);
                else
                    t.set_x(j, k);
                auto r = rewrite_with(op, rel, pivot_of(rel, t));
                if (!r) return std::nullopt;
                st.relation = rel.name;
                st.terms = std::move(*r);
                return st;
            }
            case Anomaly::Case2a:
            case Anomaly::Case2b: {
                // Swap empty columns away first, then treat the remaining crossed violation.
                auto shape = shape_of(op, K, L);
                std::optional<Violation> v;
                for (int guard = 0; guard < 4 * n * n; ++guard) {
                    v = rightmost_violation(shape);
                    if (!v || v->kind == Anomaly::Case2b) break;
                    std::swap(shape[static_cast<size_t>(v->y_place)].kind, shape[static_cast<size_t>(v->x_place)].kind);
                    resize(shape, K, L);
                }
                if (!v || v->kind != Anomaly::Case2b) return std::nullopt;
                const int p = v->y_place, q = v->x_place;
                const int k = op.y(p), l = op.x(q);
                std::vector<int> Y, X, Xp;
                for (int i = 0; i <= p; ++i) Y.push_back(i);
                for (int i = p + 1; i < q; ++i)
                    if (shape[static_cast<size_t>(i)].kind == ColumnKind::X) {
                        Y.push_back(i);
                        Xp.push_back(i);
                    }
                Y.push_back(q);
                for (int i = 0; i <= q; ++i) X.push_back(i);
                if (k < 1 || l < 1 || k + l + static_cast<int>(Y.size()) <= n) return std::nullopt;
                Polynomial P = mul(mul(bar_product(n, Xp, false), complete_homogeneous(n, k, Y, true)),
                                   complete_homogeneous(n, l, X, false));
                Relation rel = make_relation("xbar(" + var_list(Xp, 'x') + ")*h_" + std::to_string(k) + "(" +
                                                 var_list(Y, 'y') + ")*h_" + std::to_string(l) + "(" + var_list(X, 'x') + ")",
                                             P);
                auto r = rewrite_any_pivot(op, rel, rel.terms.size());
                if (!r) return std::nullopt;
                st.relation = rel.name;
                st.terms = std::move(*r);
                return st;
            }
            default: return std::nullopt;
        }
    }

    std::optional<ReductionStep> by_search(const Monomial& op, const AnomalyClass& ac) {
        build_search_space();
        for (const auto& rel : search_space) {
            if (auto r = rewrite_any_pivot(op, rel)) {
                ReductionStep st;
                st.rule = Rule::PropositionSearch;
                st.anomaly = ac;
                st.relation = rel.name;
                st.terms = std::move(*r);
                return st;
            }
        }
        return std::nullopt;
    }

    std::optional<ReductionStep> by_oracle(const Monomial& op, const AnomalyClass& ac) {
        if (!delta) return std::nullopt;
        std::vector<size_t> idx;
        std::vector<Polynomial> imgs;
        for (size_t i = 0; i < ops.size(); ++i) {
            if (ops[i].deg_x() != op.deg_x() || ops[i].deg_y() != op.deg_y() || !mono_less(ops[i], op)) continue;
            idx.push_back(i);
            imgs.push_back(apply_diff(ops[i], delta->value));
        }
        auto c = in_span(imgs, apply_diff(op, delta->value));
        if (!c) return std::nullopt;
        ReductionStep st;
        st.rule = Rule::DeltaOracle;
        st.anomaly = ac;
        st.relation = "span of smaller drawing images";
        for (size_t t = 0; t < idx.size(); ++t)
            if ((*c)[t] != 0) st.terms.emplace_back((*c)[t], ops[idx[t]]);
        return st;
    }

    const ReductionStep& step(const Monomial& op) {
        auto it = steps.find(op);
        if (it != steps.end()) return it->second;
        AnomalyClass ac = classify_diagram(op, K, L);
        if (ac.kind == Anomaly::ValidDrawing) throw NotAnAnomaly(op.to_string() + " is a drawing operator");
        ReductionStep st;
        if (ac.kind == Anomaly::NullOperator) {
            st.anomaly = ac;
            st.relation = "x" + std::to_string(ac.place) + "*y" + std::to_string(ac.place);
        } else if (auto a = by_case(op, ac)) {
            st = std::move(*a);
        } else if (auto b = by_search(op, ac)) {
            st = std::move(*b);
        } else if (auto c = by_oracle(op, ac)) {
            st = std::move(*c);
        } else {
            throw ReductionFailure("no relation reduces " + op.to_string());
        }
        ++stats.by_rule[st.rule];
        return steps.emplace(op, std::move(st)).first->second;
    }

    std::map<HookDrawing, mpq_class> normal_form(const Monomial& op) {
        if (op.n() != n) throw DimensionMismatch("operator size does not match the hook");
        std::map<Monomial, mpq_class, MonoLess> work;
        work[op] = 1;
        std::map<size_t, mpq_class> acc;
        size_t used = 0;
        while (!work.empty()) {
            auto it = std::prev(work.end());
            Monomial m = it->first;
            mpq_class c = it->second;
            work.erase(it);
            if (c == 0 || killed(m)) continue;
            if (auto d = by_op.find(m); d != by_op.end()) {
                acc[d->second] += c;
                continue;
            }
            if (++used > budget) throw ReductionFailure("normal form budget exceeded for " + op.to_string());
            ++stats.steps;
            const ReductionStep& st = step(m);
            for (const auto& [ci, mi] : st.terms) {
                mpq_class& slot = work[mi];
                slot += c * ci;
                if (slot == 0) work.erase(mi);
            }
        }
        std::map<HookDrawing, mpq_class> out;
        for (auto& [i, c] : acc)
            if (c != 0) out.emplace(drawings[i], c);
        return out;
    }
};

Rewriter::Rewriter(int K, int L, const DeltaPolynomial* delta) : impl_(std::make_unique<Impl>(K, L, delta)) {}
Rewriter::~Rewriter() = default;
int Rewriter::K() const { return impl_->K; }
int Rewriter::L() const { return impl_->L; }
const std::vector<HookDrawing>& Rewriter::drawings() const { return impl_->drawings; }
ReductionStep Rewriter::reduce_step(const Monomial& op) { return impl_->step(op); }
std::map<HookDrawing, mpq_class> Rewriter::normal_form(const Monomial& op) { return impl_->normal_form(op); }
const NormalFormStats& Rewriter::stats() const { return impl_->stats; }
size_t Rewriter::budget() const { return impl_->budget; }

ReductionStep reduce_step(const Monomial& op, int K, int L) {
    Rewriter rw(K, L);
    return rw.reduce_step(op);
}

std::map<HookDrawing, mpq_class> normal_form(const Monomial& op, int K, int L, const DeltaPolynomial& delta) {
    Rewriter rw(K, L, &delta);
    return rw.normal_form(op);
}

// ---------------------------------------------------------------- quotient

namespace {

bool standard(const Monomial& m, int K, int L) {
    int sx = 0, sy = 0;
    for (int i = 0; i < m.n(); ++i) {
        if (m.x(i) && m.y(i)) return false;
        sx += m.x(i) > 0;
        sy += m.y(i) > 0;
    }
    return sx <= L && sy <= K;
}

std::vector<Monomial> standard_of(int n, int a, int b, int K, int L) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_bidegree(n, a, b))
        if (standard(m, K, L)) out.push_back(m);
    return out;
}

size_t quotient_dim(int K, int L, int a, int b, const RankOptions& opts) {
    const int n = K + L + 1;
    auto cols = standard_of(n, a, b, K, L);
    if (cols.empty()) return 0;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    for (std::uint32_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
    SparseIntMatrix m;
    m.cols = cols.size();
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    for (int alpha = 0; alpha < 2; ++alpha) {
        const bool y = alpha == 1;
        const int top = y ? b : a;
        for (int i = 1; i <= std::min(top, n); ++i) {
            Polynomial h = complete_homogeneous(n, i, all, y);
            for (const auto& mono : standard_of(n, y ? a : a - i, y ? b - i : b, K, L)) {
                SparseIntMatrix::Row row;
                for (const auto& [t, c] : h.terms()) {
                    auto it = index.find(t * mono);
                    if (it != index.end()) row.emplace_back(it->second, c);
                }
                if (!row.empty()) m.add_row(std::move(row));
            }
        }
    }
    if (m.rows.empty()) return cols.size();
    return cols.size() - rank(m, opts).rank;
}

}  // namespace

QuotientTable quotient_hilbert(int K, int L, const RankOptions& opts, int limit) {
    check_hook(K, L);
    if (K + L + 1 > limit) throw SizeLimitError("n exceeds the quotient limit " + std::to_string(limit));
    const int A = L * (L + 1) / 2, B = K * (K + 1) / 2;
    QuotientTable q;
    for (int a = 0; a <= A; ++a)
        for (int b = 0; b <= B; ++b) {
            size_t d = quotient_dim(K, L, a, b, opts);
            if (d) q.table[{a, b}] = d;
            q.total += d;
        }
    for (int b = 0; b <= B; ++b)
        if (quotient_dim(K, L, A + 1, b, opts)) q.shell_zero = false;
    for (int a = 0; a <= A; ++a)
        if (quotient_dim(K, L, a, B + 1, opts)) q.shell_zero = false;
    return q;
}

}  // namespace ghmod
