#pragma once

#include "ghmod/delta.hpp"
#include "ghmod/hook.hpp"
#include "ghmod/linalg.hpp"
#include "ghmod/partition.hpp"
#include "ghmod/poly.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ghmod {

struct Bar {
    int nx = 0;
    int ny = 0;
    int crosses = 0;  // y-crosses; every x-cell is crossed
    friend bool operator==(const Bar&, const Bar&) = default;
    friend auto operator<=>(const Bar&, const Bar&) = default;
};

struct GeneralDrawing {
    Partition mu{std::vector<int>{1}};
    std::vector<Bar> bars;  // places 1..n-1
    std::string to_json() const;
    friend bool operator==(const GeneralDrawing&, const GeneralDrawing&) = default;
};

bool is_valid_general(const GeneralDrawing& d);
std::vector<GeneralDrawing> enumerate_general(const Partition& mu, int limit = 8);

struct CountCheck {
    mpz_class count;
    mpz_class expected;
    bool pass = false;
};
CountCheck count_check(const Partition& mu, int limit = 8);

struct CornerRecursion {
    mpz_class lhs;
    mpz_class rhs;
    std::vector<std::pair<Partition, mpz_class>> terms;  // (mu with a corner removed, alpha * (n-1)!/(mu^j)'!)
    bool pass = false;
};
CornerRecursion corner_recursion_check(const Partition& mu);

// (S, T) operators over the ambient n.
std::pair<Monomial, Monomial> split_general(const GeneralDrawing& d);
GeneralDrawing reconstruct_general(const Monomial& part, Side side, const Partition& mu);

bool lemma7_check(const GeneralDrawing& d, const DeltaPolynomial& delta);

struct ZeroXBasisReport {
    size_t drawings = 0;
    mpz_class expected;
    bool degrees_ok = false;
    bool lemma7_ok = false;
    bool distinct_mt = false;
    size_t rank_s = 0;
    size_t rank_t = 0;
    size_t closure_x0 = 0;
    bool pass = false;
};
ZeroXBasisReport verify_theorem4(const Partition& mu, const DeltaPolynomial& delta, const RankOptions& opts = {},
                               bool with_closure = true, int limit = 7);

}  // namespace ghmod
