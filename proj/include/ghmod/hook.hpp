#pragma once

#include "ghmod/delta.hpp"
#include "ghmod/poly.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghmod {

enum class ColumnKind { X, Y };
enum class Side { S, T };

struct Place {
    ColumnKind kind = ColumnKind::X;
    int size = 0;
    int crosses = 0;
    friend bool operator==(const Place&, const Place&) = default;
    friend auto operator<=>(const Place&, const Place&) = default;
};

// K+L places; y heights K..1 and x depths L..1 from left to right.
struct HookDrawing {
    int K = 0;
    int L = 0;
    std::vector<Place> places;

    int n() const { return K + L + 1; }
    std::string shape_word() const;
    std::string to_json() const;
    friend bool operator==(const HookDrawing&, const HookDrawing&) = default;
    friend auto operator<=>(const HookDrawing&, const HookDrawing&) = default;
};

// Per-place orders over places 1..m.
struct CrossDiagram {
    std::vector<int> x_order;
    std::vector<int> y_order;
    int size() const { return static_cast<int>(x_order.size()); }
    friend bool operator==(const CrossDiagram&, const CrossDiagram&) = default;
};

class NoPreimage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_valid_drawing(const HookDrawing& d);
std::vector<HookDrawing> enumerate_drawings(int K, int L);
mpz_class closed_form_count(int K, int L);
// Summand of the closed form for a given split k1 + k2 = K.
mpz_class closed_form_summand(int k1, int k2, int L);

HookDrawing flip(const HookDrawing& d);
std::pair<CrossDiagram, CrossDiagram> split(const HookDrawing& d);
HookDrawing reconstruct(const CrossDiagram& part, Side side, int K, int L);

Monomial diff_op_of(const CrossDiagram& s, int n);
// Operator of the crosses (S) or of the white cells (T).
Monomial diff_op(const HookDrawing& d, Side side = Side::S);
// Diagram of a monomial over places 1..n.
CrossDiagram diagram_of(const Monomial& m);

bool is_son(const HookDrawing& parent, const HookDrawing& candidate, const DeltaPolynomial& delta);

struct DescendantGraph {
    std::vector<HookDrawing> drawings;
    std::vector<std::vector<int>> sons;  // sons[i] = indices of the sons of drawings[i]
    size_t edge_count = 0;
    bool acyclic = true;
};

// Son test through the support of delta: T(parent) * S(candidate) must be a monomial of delta.
bool is_son_by_support(const HookDrawing& parent, const HookDrawing& candidate, const DeltaPolynomial& delta);
DescendantGraph descendant_graph(int K, int L, const DeltaPolynomial& delta, int limit = 7);

}  // namespace ghmod
