#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ghmod {

inline constexpr int kMaxVars = 12;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

// Exponents of x_1..x_n and y_1..y_n, stored place by place: x_1, y_1, x_2, y_2, ...
// Doubles as the differential operator with the same multi-orders.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n);
    Monomial(std::vector<int> a, std::vector<int> b);

    int n() const { return n_; }
    int x(int i) const { return e_[static_cast<size_t>(2 * i)]; }  // 0-based
    int y(int i) const { return e_[static_cast<size_t>(2 * i + 1)]; }
    void set_x(int i, int v);
    void set_y(int i, int v);

    int deg_x() const;
    int deg_y() const;
    int degree() const { return deg_x() + deg_y(); }
    bool is_one() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires divides

    std::vector<int> a() const;
    std::vector<int> b() const;

    // "x2*y2*x3^4"; "1" for the unit.
    std::string to_string() const;
    // "x_2y_2x_3^4"; "1" for the unit.
    std::string to_compact() const;

    const std::array<std::uint8_t, 2 * kMaxVars>& raw() const { return e_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::array<std::uint8_t, 2 * kMaxVars> e_{};
    int n_ = 0;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const noexcept;
};

// Place-major chain x_1, y_1, x_2, y_2, ...; at the first differing variable the
// monomial with the larger exponent is the smaller one. Compatible with multiplication.
bool mono_less(const Monomial& m1, const Monomial& m2);

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }
};

class Polynomial {
public:
    using Map = std::unordered_map<Monomial, mpz_class, MonomialHash>;

    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}
    Polynomial(const Monomial& m, const mpz_class& c = 1);

    static Polynomial constant(int n, const mpz_class& c);
    // Parses the module grammar; n = 0 infers the ambient size from the largest index.
    static Polynomial parse(std::string_view text, int n = 0);

    int n() const { return n_; }
    const Map& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const mpz_class& c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    // Terms in descending mono_less order.
    std::vector<std::pair<Monomial, mpz_class>> sorted_terms() const;
    std::string to_string() const;

    friend bool operator==(const Polynomial& p, const Polynomial& q);

private:
    int n_ = 0;
    Map terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const mpz_class& c);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Monomial& m);

// d_x^a d_y^b p with falling-factorial constants.
Polynomial apply_diff(const Monomial& op, const Polynomial& p);
// P(d) p.
Polynomial apply_diff_poly(const Polynomial& P, const Polynomial& p);

Monomial min_monomial(const Polynomial& p);  // throws on zero
Monomial max_monomial(const Polynomial& p);

std::string format(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text, int n = 0);
// Single monomial in either the explicit or the juxtaposed ("x_2y_2x_3^4") notation.
Monomial parse_monomial(std::string_view text, int n = 0);

// h_k over the listed variables (0-based indices into one alphabet).
Polynomial complete_homogeneous(int n, int k, const std::vector<int>& vars, bool y_alphabet);
// All monomials of exact bidegree (dx, dy) in n variables per alphabet.
std::vector<Monomial> monomials_of_bidegree(int n, int dx, int dy);

}  // namespace ghmod
