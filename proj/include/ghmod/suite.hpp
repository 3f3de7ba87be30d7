#pragma once

#include "ghmod/report.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ghmod {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int threads = 1;
};

// Runs fn(0..count-1) on up to `threads` workers; callers store results by index.
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn);

nlohmann::json to_json_number(const mpz_class& v);

// Each routine appends its checks to the report.
void check_drawing_counts(Report& r, int max_n, const SuiteOptions& o);
void check_basis_rank(Report& r, int min_n, int max_n, const SuiteOptions& o);
void check_closure_dim(Report& r, int max_n, const SuiteOptions& o);
void check_spanning(Report& r, int max_n, const SuiteOptions& o);
void check_generators(Report& r, int max_n, const SuiteOptions& o);
void check_propositions(Report& r, int max_n, const SuiteOptions& o);
void check_quotient(Report& r, int max_n, const SuiteOptions& o);
void check_reconstruction(Report& r, int max_n, const SuiteOptions& o);
void check_acyclic(Report& r, int max_n, const SuiteOptions& o);
void check_flip_son_duality(Report& r, int max_n, const SuiteOptions& o);
void check_flip_involution(Report& r, int max_n, const SuiteOptions& o);
void check_zerox_counts(Report& r, int max_n, const SuiteOptions& o);
void check_lemma7(Report& r, int max_n, const SuiteOptions& o);
void check_zerox_ranks(Report& r, int max_n, const SuiteOptions& o);
void check_corner_recursion(Report& r, int max_n, const SuiteOptions& o);
void check_fixtures(Report& r, const SuiteOptions& o);

struct Criterion {
    std::string name;
    std::function<void(Report&, const SuiteOptions&)> run;
};

std::vector<Criterion> acceptance_criteria();
std::vector<Criterion> smoke_criteria();

}  // namespace ghmod
