#include "ghmod/linalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace ghmod {

// ---------------------------------------------------------------- matrix plumbing

void SparseIntMatrix::add_row(Row r) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row clean;
    for (auto& [c, v] : r) {
        if (c >= cols) throw std::out_of_range("column index out of range");
        if (!clean.empty() && clean.back().first == c)
            clean.back().second += v;
        else
            clean.emplace_back(c, std::move(v));
        if (clean.back().second == 0) clean.pop_back();
    }
    rows.push_back(std::move(clean));
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t;
    t.cols = rows.size();
    t.rows.assign(cols, {});
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i]) t.rows[c].emplace_back(static_cast<std::uint32_t>(i), v);
    return t;
}

SparseIntMatrix SparseIntMatrix::from_polynomials(const std::vector<Polynomial>& polys) {
    SparseIntMatrix m;
    std::vector<Monomial> support;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> seen;
    for (const auto& p : polys)
        for (const auto& [mono, c] : p.terms())
            if (seen.emplace(mono, 0).second) support.push_back(mono);
    std::sort(support.begin(), support.end(), [](const Monomial& a, const Monomial& b) { return mono_less(b, a); });
    for (std::uint32_t i = 0; i < support.size(); ++i) seen[support[i]] = i;
    m.cols = support.size();
    m.columns = std::move(support);
    for (const auto& p : polys) {
        Row r;
        r.reserve(p.size());
        for (const auto& [mono, c] : p.terms()) r.emplace_back(seen.at(mono), c);
        m.add_row(std::move(r));
    }
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& a) {
    SparseIntMatrix m;
    m.cols = a.empty() ? 0 : a[0].size();
    for (const auto& row : a) {
        if (row.size() != m.cols) throw std::invalid_argument("ragged dense matrix");
        Row r;
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j]) r.emplace_back(static_cast<std::uint32_t>(j), mpz_class(row[j]));
        m.add_row(std::move(r));
    }
    return m;
}

// ---------------------------------------------------------------- primes

namespace {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, b = a % m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint64_t> dist(1ULL << 30, (1ULL << 31) - 1);
    std::uint64_t c = dist(rng) | 1;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

// ---------------------------------------------------------------- modular echelon

namespace {

using u64 = std::uint64_t;

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 to_mod(const mpz_class& v, u64 p) { return mpz_fdiv_ui(v.get_mpz_t(), p); }

// Reduced row echelon form mod p, built one row at a time.
struct ModEchelon {
    u64 p;
    size_t cols;
    std::vector<std::vector<u64>> piv;
    std::vector<size_t> pcol;
    std::vector<size_t> src;

    ModEchelon(u64 prime, size_t c) : p(prime), cols(c) {}

    void insert(const SparseIntMatrix::Row& row, size_t index) {
        std::vector<u64> v(cols, 0);
        bool nonzero = false;
        for (const auto& [c, val] : row) {
            v[c] = to_mod(val, p);
            nonzero |= v[c] != 0;
        }
        if (!nonzero) return;
        for (size_t k = 0; k < piv.size(); ++k) {
            u64 c = v[pcol[k]];
            if (!c) continue;
            u64 f = p - c;
            const auto& pr = piv[k];
            for (size_t j = pcol[k]; j < cols; ++j)
                if (pr[j]) v[j] = (v[j] + f * pr[j]) % p;
        }
        size_t lead = 0;
        while (lead < cols && !v[lead]) ++lead;
        if (lead == cols) return;
        u64 inv = inv_mod(v[lead], p);
        for (size_t j = lead; j < cols; ++j)
            if (v[j]) v[j] = v[j] * inv % p;
        for (auto& pr : piv) {
            u64 c = pr[lead];
            if (!c) continue;
            u64 f = p - c;
            for (size_t j = lead; j < cols; ++j)
                if (v[j]) pr[j] = (pr[j] + f * v[j]) % p;
        }
        piv.push_back(std::move(v));
        pcol.push_back(lead);
        src.push_back(index);
    }
};

ModEchelon echelon_mod(const SparseIntMatrix& b, u64 p) {
    ModEchelon e(p, b.cols);
    for (size_t i = 0; i < b.rows.size(); ++i) {
        if (e.piv.size() == b.cols) break;
        e.insert(b.rows[i], i);
    }
    return e;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
    mpz_class bound = sqrt(m / 2);
    mpz_class r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpq_class out(r1, t1);
    out.canonicalize();
    return out;
}

// Kernel basis of b indexed by its free columns, verified b*v = 0 exactly.
bool certify_kernel(const SparseIntMatrix& b, const ModEchelon& first, const RankOptions& opts,
                    std::vector<u64>& primes_used) {
    const size_t r = first.piv.size();
    std::vector<char> is_piv(b.cols, 0);
    for (size_t c : first.pcol) is_piv[c] = 1;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < b.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    if (free_cols.empty()) return true;

    // Residues of the RREF entries at (pivot k, free column f), combined by CRT.
    std::vector<std::vector<mpz_class>> res(r, std::vector<mpz_class>(free_cols.size()));
    mpz_class modulus = 1;
    auto absorb = [&](const ModEchelon& e) {
        // Pivots are matched by column; rows of e may be in a different order.
        std::vector<size_t> where(b.cols, SIZE_MAX);
        for (size_t k = 0; k < e.pcol.size(); ++k) where[e.pcol[k]] = k;
        mpz_class pm(static_cast<unsigned long>(e.p));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pm.get_mpz_t());
        for (size_t k = 0; k < r; ++k) {
            const auto& prow = e.piv[where[first.pcol[k]]];
            for (size_t f = 0; f < free_cols.size(); ++f) {
                mpz_class a(static_cast<unsigned long>(prow[free_cols[f]]));
                mpz_class cur = res[k][f];
                mpz_class delta = (a - cur) * inv;
                mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), pm.get_mpz_t());
                res[k][f] = cur + modulus * delta;
            }
        }
        modulus *= pm;
    };
    absorb(first);

    int index = 1;
    while (true) {
        bool ok = true;
        for (size_t f = 0; f < free_cols.size() && ok; ++f) {
            std::vector<mpq_class> v(r);
            mpz_class den = 1;
            for (size_t k = 0; k < r && ok; ++k) {
                auto q = rational_reconstruct(res[k][f], modulus);
                if (!q) {
                    ok = false;
                    break;
                }
                v[k] = -*q;
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v[k].get_den_mpz_t());
            }
            if (!ok) break;
            std::vector<mpz_class> w(b.cols, 0);
            w[free_cols[f]] = den;
            for (size_t k = 0; k < r; ++k) {
                mpq_class s = v[k] * den;
                w[first.pcol[k]] = s.get_num();
            }
            for (const auto& row : b.rows) {
                mpz_class dot = 0;
                for (const auto& [c, val] : row)
                    if (w[c] != 0) dot += val * w[c];
                if (dot != 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return true;
        if (index >= opts.max_primes) return false;
        u64 p = random_prime(opts.seed, index++);
        if (std::find(primes_used.begin(), primes_used.end(), p) != primes_used.end()) continue;
        ModEchelon e = echelon_mod(b, p);
        std::vector<size_t> a = e.pcol, c0 = first.pcol;
        std::sort(a.begin(), a.end());
        std::sort(c0.begin(), c0.end());
        if (a != c0) continue;  // unlucky prime
        primes_used.push_back(p);
        absorb(e);
    }
}

}  // namespace

// ---------------------------------------------------------------- rank

RankCertificate rank_fraction_free(const SparseIntMatrix& m) {
    RankCertificate cert;
    cert.method = RankMethod::FractionFreeExact;
    cert.proof = "fraction-free";
    const size_t R = m.rows.size(), C = m.cols;
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C, 0));
    for (size_t i = 0; i < R; ++i)
        for (const auto& [c, v] : m.rows[i]) a[i][c] = v;
    std::vector<size_t> order(R);
    for (size_t i = 0; i < R; ++i) order[i] = i;
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
        size_t pr = r;
        while (pr < R && a[pr][c] == 0) ++pr;
        if (pr == R) continue;
        std::swap(a[pr], a[r]);
        std::swap(order[pr], order[r]);
        for (size_t i = r + 1; i < R; ++i) {
            for (size_t j = c + 1; j < C; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        cert.pivot_cols.push_back(c);
        ++r;
    }
    cert.rank = r;
    cert.pivot_rows.assign(order.begin(), order.begin() + static_cast<long>(r));
    std::sort(cert.pivot_rows.begin(), cert.pivot_rows.end());
    return cert;
}

RankCertificate rank(const SparseIntMatrix& m, const RankOptions& opts) {
    if (!opts.modular) return rank_fraction_free(m);
    const bool transpose = m.cols > m.rows.size();
    SparseIntMatrix tb;
    if (transpose) tb = m.transpose();
    const SparseIntMatrix& b = transpose ? tb : m;

    RankCertificate cert;
    cert.method = RankMethod::ModularPrescreenThenExact;
    cert.seed = opts.seed;
    u64 p = random_prime(opts.seed, 0);
    ModEchelon e = echelon_mod(b, p);
    cert.primes.push_back(p);
    // A nonzero minor mod p is a nonzero minor over Z: rank >= e.piv.size().
    bool certified = e.piv.size() == b.cols;
    if (certified) {
        cert.proof = "full-rank";
    } else if (certify_kernel(b, e, opts, cert.primes)) {
        certified = true;
        cert.proof = "kernel-verified";
    }
    if (!certified) {
        RankCertificate ff = rank_fraction_free(m);
        ff.primes = cert.primes;
        ff.seed = opts.seed;
        return ff;
    }
    cert.rank = e.piv.size();
    std::vector<size_t> srcs = e.src, cols = e.pcol;
    std::sort(srcs.begin(), srcs.end());
    std::sort(cols.begin(), cols.end());
    cert.pivot_rows = transpose ? cols : srcs;
    cert.pivot_cols = transpose ? srcs : cols;
    return cert;
}

RankCertificate rank_of(const std::vector<Polynomial>& polys, const RankOptions& opts) {
    return rank(SparseIntMatrix::from_polynomials(polys), opts);
}

// ---------------------------------------------------------------- span

std::optional<std::vector<mpq_class>> in_span(const std::vector<Polynomial>& vectors, const Polynomial& target) {
    const size_t k = vectors.size();
    for (const auto& v : vectors)
        if (v.n() != target.n()) throw DimensionMismatch("in_span: ambient sizes differ");
    std::vector<Polynomial> all = vectors;
    all.push_back(target);
    SparseIntMatrix m = SparseIntMatrix::from_polynomials(all);

    using QRow = std::map<std::uint32_t, mpq_class>;
    struct Pivot {
        std::uint32_t col;
        QRow row;
        std::vector<mpq_class> combo;
    };
    std::vector<Pivot> piv;
    auto reduce = [&](QRow& row, std::vector<mpq_class>& combo) {
        for (const auto& pv : piv) {
            auto it = row.find(pv.col);
            if (it == row.end()) continue;
            mpq_class f = it->second;
            for (const auto& [c, v] : pv.row) {
                mpq_class& x = row[c];
                x -= f * v;
                if (x == 0) row.erase(c);
            }
            for (size_t j = 0; j < k; ++j)
                if (pv.combo[j] != 0) combo[j] -= f * pv.combo[j];
        }
    };
    for (size_t i = 0; i < k; ++i) {
        QRow row;
        for (const auto& [c, v] : m.rows[i]) row[c] = mpq_class(v);
        std::vector<mpq_class> combo(k, 0);
        combo[i] = 1;
        reduce(row, combo);
        if (row.empty()) continue;
        std::uint32_t lead = row.begin()->first;
        mpq_class inv = 1 / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        for (auto& x : combo) x *= inv;
        for (auto& pv : piv) {
            auto it = pv.row.find(lead);
            if (it == pv.row.end()) continue;
            mpq_class f = it->second;
            for (const auto& [c, v] : row) {
                mpq_class& x = pv.row[c];
                x -= f * v;
                if (x == 0) pv.row.erase(c);
            }
            for (size_t j = 0; j < k; ++j)
                if (combo[j] != 0) pv.combo[j] -= f * combo[j];
        }
        piv.push_back({lead, std::move(row), std::move(combo)});
    }
    QRow row;
    for (const auto& [c, v] : m.rows[k]) row[c] = mpq_class(v);
    std::vector<mpq_class> combo(k, 0);
    reduce(row, combo);
    if (!row.empty()) return std::nullopt;
    // reduce() accumulated -coefficients.
    for (auto& c : combo) c = -c;

    // Exact confirmation.
    std::vector<mpq_class> acc(m.cols, 0);
    for (size_t i = 0; i < k; ++i) {
        if (combo[i] == 0) continue;
        for (const auto& [c, v] : m.rows[i]) acc[c] += combo[i] * v;
    }
    for (const auto& [c, v] : m.rows[k]) acc[c] -= v;
    for (const auto& x : acc)
        if (x != 0) throw std::logic_error("in_span: coefficients failed exact confirmation");
    return combo;
}

// ---------------------------------------------------------------- closure

ClosureResult derivative_closure(const DeltaPolynomial& delta, const RankOptions& opts, int limit) {
    const int n = delta.value.n();
    if (n > limit) throw SizeLimitError("n exceeds the closure limit " + std::to_string(limit));
    const auto [A, B] = delta.bidegree;
    ClosureResult out;
    out.basis[{A, B}] = {delta.value};
    out.table[{A, B}] = 1;
    out.dimension = 1;
    for (int d = 1; d <= A + B; ++d) {
        for (int a = A; a >= 0; --a) {
            const int b = B - (d - (A - a));
            if (b < 0 || b > B) continue;
            std::vector<Polynomial> cand;
            auto from = [&](int pa, int pb, bool y) {
                auto it = out.basis.find({pa, pb});
                if (it == out.basis.end()) return;
                for (int i = 0; i < n; ++i) {
                    Monomial op(n);
                    if (y)
                        op.set_y(i, 1);
                    else
                        op.set_x(i, 1);
                    for (const auto& f : it->second) {
                        Polynomial g = apply_diff(op, f);
                        if (!g.is_zero()) cand.push_back(std::move(g));
                    }
                }
            };
            from(a + 1, b, false);
            from(a, b + 1, true);
            if (cand.empty()) continue;
            RankCertificate cert = rank_of(cand, opts);
            if (cert.rank == 0) continue;
            std::vector<Polynomial> basis;
            for (size_t i : cert.pivot_rows) basis.push_back(cand[i]);
            out.table[{a, b}] = cert.rank;
            out.dimension += cert.rank;
            out.basis[{a, b}] = std::move(basis);
        }
    }
    return out;
}

}  // namespace ghmod
