#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghmod {

// Weakly decreasing positive parts, n >= 1.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    // "3,2,1"; whitespace ignored.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    std::string to_string() const;
    std::string to_json() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct Biexponent {
    int p = 0;  // row - 1, x-exponent
    int q = 0;  // column - 1, y-exponent
    friend bool operator==(const Biexponent&, const Biexponent&) = default;
    friend auto operator<=>(const Biexponent&, const Biexponent&) = default;
};

struct HookParams {
    int K = 0;  // arm
    int L = 0;  // leg
    friend bool operator==(const HookParams&, const HookParams&) = default;
};

class NotAHook : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Partition conjugate(const Partition& mu);
std::vector<Biexponent> biexponents(const Partition& mu);
int n_stat(const Partition& mu);
HookParams hook_params(const Partition& mu);  // throws NotAHook
std::optional<HookParams> try_hook_params(const Partition& mu);
Partition hook_partition(int K, int L);
mpz_class conjugate_factorial(const Partition& mu);
mpz_class factorial(int n);

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

}  // namespace ghmod
