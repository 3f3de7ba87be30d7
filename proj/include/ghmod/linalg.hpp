#pragma once

#include "ghmod/delta.hpp"
#include "ghmod/poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ghmod {

struct SparseIntMatrix {
    using Row = std::vector<std::pair<std::uint32_t, mpz_class>>;  // sorted by column, no zeros

    size_t cols = 0;
    std::vector<Row> rows;
    std::vector<Monomial> columns;  // column index -> monomial, when built from polynomials

    size_t row_count() const { return rows.size(); }
    void add_row(Row r);
    SparseIntMatrix transpose() const;

    // Columns are the union of supports, ordered by descending mono_less.
    static SparseIntMatrix from_polynomials(const std::vector<Polynomial>& polys);
    static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& a);
};

enum class RankMethod { FractionFreeExact, ModularPrescreenThenExact };

struct RankCertificate {
    size_t rank = 0;
    RankMethod method = RankMethod::FractionFreeExact;
    std::vector<size_t> pivot_rows;  // independent rows of the input
    std::vector<size_t> pivot_cols;
    // "full-rank", "kernel-verified" or "fraction-free".
    std::string proof;
    std::vector<std::uint64_t> primes;
    std::uint64_t seed = 0;
};

struct RankOptions {
    std::uint64_t seed = 1;
    bool modular = true;
    int max_primes = 12;
};

RankCertificate rank(const SparseIntMatrix& m, const RankOptions& opts = {});
RankCertificate rank_fraction_free(const SparseIntMatrix& m);
RankCertificate rank_of(const std::vector<Polynomial>& polys, const RankOptions& opts = {});

// Exact coefficients with sum c_i v_i = target, or nullopt.
std::optional<std::vector<mpq_class>> in_span(const std::vector<Polynomial>& vectors, const Polynomial& target);

using GradedTable = std::map<std::pair<int, int>, size_t>;

struct ClosureResult {
    size_t dimension = 0;
    GradedTable table;  // keyed by (x-degree, y-degree) of the polynomials
    std::map<std::pair<int, int>, std::vector<Polynomial>> basis;
};

ClosureResult derivative_closure(const DeltaPolynomial& delta, const RankOptions& opts = {}, int limit = 7);

// Random prime in [2^30, 2^31) drawn from the seed stream.
std::uint64_t random_prime(std::uint64_t seed, int index);
bool is_prime_u64(std::uint64_t n);

}  // namespace ghmod
