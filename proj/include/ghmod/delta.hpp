#pragma once

#include "ghmod/partition.hpp"
#include "ghmod/poly.hpp"

#include <stdexcept>
#include <utility>

namespace ghmod {

class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultDeltaLimit = 9;

struct DeltaPolynomial {
    Polynomial value;
    Partition mu;
    std::pair<int, int> bidegree;  // (n(mu), n(mu'))
};

// det(x_i^{p_j} y_i^{q_j}), columns in lexicographic biexponent order, identity sign +1.
DeltaPolynomial build_delta(const Partition& mu, int limit = kDefaultDeltaLimit);

}  // namespace ghmod
