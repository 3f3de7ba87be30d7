#include "ghmod/delta.hpp"

#include <algorithm>
#include <numeric>

namespace ghmod {

DeltaPolynomial build_delta(const Partition& mu, int limit) {
    const int n = mu.n();
    if (n > limit || n > kMaxVars)
        throw SizeLimitError("n = " + std::to_string(n) + " exceeds the size limit " + std::to_string(std::min(limit, kMaxVars)));
    const auto bi = biexponents(mu);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    Polynomial value(n);
    // Heap's algorithm flips the sign at every swap.
    std::vector<int> c(static_cast<size_t>(n), 0);
    int sign = 1;
    auto emit = [&] {
        Monomial m(n);
        for (int i = 0; i < n; ++i) {
            const auto& b = bi[static_cast<size_t>(perm[static_cast<size_t>(i)])];
            m.set_x(i, b.p);
            m.set_y(i, b.q);
        }
        value.add_term(m, sign);
    };
    emit();
    int i = 1;
    while (i < n) {
        auto ui = static_cast<size_t>(i);
        if (c[ui] < i) {
            if (i % 2 == 0)
                std::swap(perm[0], perm[ui]);
            else
                std::swap(perm[static_cast<size_t>(c[ui])], perm[ui]);
            sign = -sign;
            emit();
            ++c[ui];
            i = 1;
        } else {
            c[ui] = 0;
            ++i;
        }
    }
    return {std::move(value), mu, {n_stat(mu), n_stat(conjugate(mu))}};
}

}  // namespace ghmod
