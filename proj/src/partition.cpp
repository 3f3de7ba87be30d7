#include "ghmod/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ghmod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("empty partition");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        parts.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur.push_back(c);
            if (cur.size() > 6) throw std::invalid_argument("partition part too large");
        } else {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
    }
    flush();
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

std::string Partition::to_json() const { return "{\"parts\":[" + to_string() + "]}"; }

Partition conjugate(const Partition& mu) {
    std::vector<int> c(static_cast<size_t>(mu[0]), 0);
    for (int part : mu.parts())
        for (int j = 0; j < part; ++j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

std::vector<Biexponent> biexponents(const Partition& mu) {
    std::vector<Biexponent> out;
    out.reserve(static_cast<size_t>(mu.n()));
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j) out.push_back({i, j});
    return out;
}

int n_stat(const Partition& mu) {
    int s = 0;
    for (int i = 0; i < mu.length(); ++i) s += i * mu[i];
    return s;
}

std::optional<HookParams> try_hook_params(const Partition& mu) {
    if (mu.length() > 1 && mu[1] >= 2) return std::nullopt;
    return HookParams{mu[0] - 1, mu.length() - 1};
}

HookParams hook_params(const Partition& mu) {
    auto h = try_hook_params(mu);
    if (!h) throw NotAHook("partition " + mu.to_string() + " is not a hook");
    return *h;
}

Partition hook_partition(int K, int L) {
    if (K < 0 || L < 0) throw std::invalid_argument("hook parameters must be nonnegative");
    std::vector<int> parts{K + 1};
    parts.insert(parts.end(), static_cast<size_t>(L), 1);
    return Partition(std::move(parts));
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class conjugate_factorial(const Partition& mu) {
    mpz_class r = 1;
    const Partition conj = conjugate(mu);
    for (int c : conj.parts()) r *= factorial(c);
    return r;
}

namespace {
void gen_partitions(int rest, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (rest == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(rest - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

}  // namespace ghmod
