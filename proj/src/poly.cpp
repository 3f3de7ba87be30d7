#include "ghmod/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

namespace ghmod {

namespace {

void check_n(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("ambient size out of range: " + std::to_string(n));
}

void check_same(int a, int b) {
    if (a != b) throw DimensionMismatch("ambient sizes differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::uint8_t narrow(int v) {
    if (v < 0 || v > 255) throw std::overflow_error("exponent out of range");
    return static_cast<std::uint8_t>(v);
}

}  // namespace

Monomial::Monomial(int n) : n_(n) { check_n(n); }

Monomial::Monomial(std::vector<int> a, std::vector<int> b) : n_(static_cast<int>(a.size())) {
    check_n(n_);
    if (b.size() != a.size()) throw DimensionMismatch("x and y exponent vectors differ in length");
    for (int i = 0; i < n_; ++i) {
        set_x(i, a[static_cast<size_t>(i)]);
        set_y(i, b[static_cast<size_t>(i)]);
    }
}

void Monomial::set_x(int i, int v) {
    if (i < 0 || i >= n_) throw std::out_of_range("variable index out of range");
    e_[static_cast<size_t>(2 * i)] = narrow(v);
}

void Monomial::set_y(int i, int v) {
    if (i < 0 || i >= n_) throw std::out_of_range("variable index out of range");
    e_[static_cast<size_t>(2 * i + 1)] = narrow(v);
}

int Monomial::deg_x() const {
    int d = 0;
    for (int i = 0; i < n_; ++i) d += x(i);
    return d;
}

int Monomial::deg_y() const {
    int d = 0;
    for (int i = 0; i < n_; ++i) d += y(i);
    return d;
}

bool Monomial::is_one() const {
    for (auto v : e_)
        if (v) return false;
    return true;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    check_same(n_, o.n_);
    Monomial r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = narrow(e_[i] + o.e_[i]);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    check_same(n_, o.n_);
    if (!o.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    Monomial r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
    return r;
}

std::vector<int> Monomial::a() const {
    std::vector<int> v(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) v[static_cast<size_t>(i)] = x(i);
    return v;
}

std::vector<int> Monomial::b() const {
    std::vector<int> v(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) v[static_cast<size_t>(i)] = y(i);
    return v;
}

std::string Monomial::to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        for (int alpha = 0; alpha < 2; ++alpha) {
            int e = alpha ? y(i) : x(i);
            if (!e) continue;
            if (!s.empty()) s += '*';
            s += alpha ? 'y' : 'x';
            s += std::to_string(i + 1);
            if (e > 1) s += '^' + std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

std::string Monomial::to_compact() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        for (int alpha = 0; alpha < 2; ++alpha) {
            int e = alpha ? y(i) : x(i);
            if (!e) continue;
            s += alpha ? "y_" : "x_";
            s += std::to_string(i + 1);
            if (e > 1) s += '^' + std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t w[3];
    std::memcpy(w, m.raw().data(), sizeof(w));
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(m.n());
    for (auto v : w) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<size_t>(h ^ (h >> 33));
}

static_assert(sizeof(std::uint64_t) * 3 == 2 * kMaxVars);

bool mono_less(const Monomial& m1, const Monomial& m2) {
    check_same(m1.n(), m2.n());
    const auto& a = m1.raw();
    const auto& b = m2.raw();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Monomial& m, const mpz_class& c) : n_(m.n()) {
    if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::constant(int n, const mpz_class& c) { return Polynomial(Monomial(n), c); }

mpz_class Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
    check_same(n_, m.n());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

std::vector<std::pair<Monomial, mpz_class>> Polynomial::sorted_terms() const {
    std::vector<std::pair<Monomial, mpz_class>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return mono_less(r.first, l.first); });
    return v;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.n_ != q.n_ || p.terms_.size() != q.terms_.size()) return false;
    for (const auto& [m, c] : p.terms_) {
        auto it = q.terms_.find(m);
        if (it == q.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::string Polynomial::to_string() const { return format(*this); }

Polynomial add(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    r += q;
    return r;
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    r -= q;
    return r;
}

Polynomial scale(const Polynomial& p, const mpz_class& c) {
    Polynomial r(p.n());
    if (c == 0) return r;
    for (const auto& [m, v] : p.terms()) r.add_term(m, v * c);
    return r;
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    check_same(p.n(), q.n());
    Polynomial r(p.n());
    for (const auto& [m1, c1] : p.terms())
        for (const auto& [m2, c2] : q.terms()) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial mul(const Polynomial& p, const Monomial& m) {
    check_same(p.n(), m.n());
    Polynomial r(p.n());
    for (const auto& [u, c] : p.terms()) r.add_term(u * m, c);
    return r;
}

Polynomial apply_diff(const Monomial& op, const Polynomial& p) {
    check_same(op.n(), p.n());
    Polynomial r(p.n());
    const auto& o = op.raw();
    for (const auto& [u, c] : p.terms()) {
        if (!op.divides(u)) continue;
        const auto& e = u.raw();
        unsigned long f = 1;
        mpz_class coef = c;
        for (size_t i = 0; i < o.size(); ++i) {
            for (int k = 0; k < o[i]; ++k) {
                f *= static_cast<unsigned long>(e[i] - k);
                if (f > (1UL << 40)) {
                    coef *= f;
                    f = 1;
                }
            }
        }
        coef *= f;
        r.add_term(u / op, coef);
    }
    return r;
}

Polynomial apply_diff_poly(const Polynomial& P, const Polynomial& p) {
    check_same(P.n(), p.n());
    Polynomial r(p.n());
    for (const auto& [op, c] : P.terms()) r += scale(apply_diff(op, p), c);
    return r;
}

Monomial min_monomial(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("min_monomial of the zero polynomial");
    auto it = p.terms().begin();
    Monomial best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (mono_less(it->first, best)) best = it->first;
    return best;
}

Monomial max_monomial(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("max_monomial of the zero polynomial");
    auto it = p.terms().begin();
    Monomial best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (mono_less(best, it->first)) best = it->first;
    return best;
}

std::string format(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms()) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << '*';
            os << m.to_string();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct RawFactor {
    bool y;
    int index;  // 1-based
    int exp;
};

struct RawTerm {
    mpz_class coef;
    std::vector<RawFactor> factors;
};

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    std::vector<RawTerm> terms() {
        std::vector<RawTerm> out;
        skip();
        if (pos_ == s_.size()) throw ParseError("empty input", pos_);
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            RawTerm t = term();
            t.coef *= sign;
            out.push_back(std::move(t));
        }
        return out;
    }

    RawTerm term() {
        RawTerm t{1, {}};
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coef = mpz_class(digits());
            any = true;
            skip();
            if (peek() == '*') {
                ++pos_;
                skip();
                t.factors.push_back(factor());
            } else {
                return t;
            }
        } else {
            t.factors.push_back(factor());
        }
        any = true;
        while (true) {
            skip();
            if (peek() == '*') {
                ++pos_;
                skip();
                t.factors.push_back(factor());
            } else if (peek() == 'x' || peek() == 'y') {
                t.factors.push_back(factor());
            } else {
                break;
            }
        }
        if (!any) throw ParseError("expected term", pos_);
        return t;
    }

    RawFactor factor() {
        char c = peek();
        if (c != 'x' && c != 'y') throw ParseError("expected variable", pos_);
        ++pos_;
        if (peek() == '_') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected variable index", pos_);
        size_t at = pos_;
        int idx = std::stoi(digits());
        if (idx < 1 || idx > kMaxVars) throw ParseError("variable index out of range", at);
        int e = 1;
        if (peek() == '^') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
            at = pos_;
            std::string d = digits();
            if (d.size() > 3) throw ParseError("exponent too large", at);
            e = std::stoi(d);
        }
        return {c == 'y', idx, e};
    }

    size_t pos() const { return pos_; }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string digits() {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(s_[pos_++]);
        return d;
    }

    std::string_view s_;
    size_t pos_ = 0;
};

int infer_n(const std::vector<RawTerm>& ts, int n) {
    int need = 0;
    for (const auto& t : ts)
        for (const auto& f : t.factors) need = std::max(need, f.index);
    if (n == 0) return std::max(need, 1);
    if (need > n) throw std::invalid_argument("variable index exceeds ambient size " + std::to_string(n));
    check_n(n);
    return n;
}

Monomial build(const RawTerm& t, int n) {
    Monomial m(n);
    for (const auto& f : t.factors) {
        int i = f.index - 1;
        if (f.y)
            m.set_y(i, m.y(i) + f.exp);
        else
            m.set_x(i, m.x(i) + f.exp);
    }
    return m;
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int n) { return parse_polynomial(text, n); }

Polynomial parse_polynomial(std::string_view text, int n) {
    Parser ps(text);
    auto ts = ps.terms();
    n = infer_n(ts, n);
    Polynomial p(n);
    for (const auto& t : ts) p.add_term(build(t, n), t.coef);
    return p;
}

Monomial parse_monomial(std::string_view text, int n) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s == "1") return Monomial(n == 0 ? 1 : n);
    Parser ps(s);
    RawTerm t = ps.term();
    if (ps.pos() != s.size()) throw ParseError("trailing input in monomial", ps.pos());
    if (t.coef != 1) throw ParseError("monomial must not carry a coefficient", 0);
    std::vector<RawTerm> one{t};
    n = infer_n(one, n);
    return build(t, n);
}

namespace {
void gen_h(int n, int k, const std::vector<int>& vars, size_t from, bool y, Monomial& cur, Polynomial& out) {
    if (k == 0) {
        out.add_term(cur, 1);
        return;
    }
    if (from >= vars.size()) return;
    int v = vars[from];
    for (int e = k; e >= 0; --e) {
        int old = y ? cur.y(v) : cur.x(v);
        if (y)
            cur.set_y(v, old + e);
        else
            cur.set_x(v, old + e);
        gen_h(n, k - e, vars, from + 1, y, cur, out);
        if (y)
            cur.set_y(v, old);
        else
            cur.set_x(v, old);
    }
}

void gen_deg(int n, int d, int from, bool y, Monomial& cur, std::vector<Monomial>& out,
             const std::function<void(Monomial&)>& next) {
    if (from == n - 1) {
        if (y)
            cur.set_y(from, d);
        else
            cur.set_x(from, d);
        next(cur);
        if (y)
            cur.set_y(from, 0);
        else
            cur.set_x(from, 0);
        return;
    }
    for (int e = d; e >= 0; --e) {
        if (y)
            cur.set_y(from, e);
        else
            cur.set_x(from, e);
        gen_deg(n, d - e, from + 1, y, cur, out, next);
    }
    if (y)
        cur.set_y(from, 0);
    else
        cur.set_x(from, 0);
}
}  // namespace

Polynomial complete_homogeneous(int n, int k, const std::vector<int>& vars, bool y_alphabet) {
    Polynomial out(n);
    if (k < 0) return out;
    Monomial cur(n);
    gen_h(n, k, vars, 0, y_alphabet, cur, out);
    return out;
}

std::vector<Monomial> monomials_of_bidegree(int n, int dx, int dy) {
    std::vector<Monomial> out;
    if (n == 0 || dx < 0 || dy < 0) return out;
    Monomial cur(n);
    std::function<void(Monomial&)> emit = [&](Monomial& m) { out.push_back(m); };
    std::function<void(Monomial&)> ystage = [&](Monomial& m) { gen_deg(n, dy, 0, true, m, out, emit); };
    gen_deg(n, dx, 0, false, cur, out, ystage);
    return out;
}

}  // namespace ghmod
