#include "feitlab/numth.hpp"

#include <algorithm>
#include <numeric>

#include "feitlab/errors.hpp"

namespace feitlab::numth {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int mult = 0;
            while (n % d == 0) { n /= d; ++mult; }
            out.emplace_back(d, mult);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    for (auto& [p, m] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out{1};
    for (auto& [p, mult] : factorize(n)) {
        std::size_t base = out.size();
        long long pk = 1;
        for (int k = 1; k <= mult; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long phi(long long n) {
    long long result = n;
    for (auto& [p, m] : factorize(n)) result = result / p * (p - 1);
    return result;
}

long long p_part(long long n, long long p) {
    long long part = 1;
    while (n % p == 0) { n /= p; part *= p; }
    return part;
}

bool is_power_of(long long n, long long p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t prime_m) {
    return mod_pow(a % prime_m, prime_m - 2, prime_m);
}

long long least_prime_1_mod(long long n, long long lower_bound) {
    long long l = 1 + n;
    while (l <= lower_bound || !is_prime(l)) l += n;
    return l;
}

std::uint64_t primitive_root(std::uint64_t l) {
    if (l == 2) return 1;
    auto factors = prime_divisors(static_cast<long long>(l - 1));
    for (std::uint64_t g = 2; g < l; ++g) {
        bool ok = true;
        for (long long q : factors) {
            if (mod_pow(g, (l - 1) / static_cast<std::uint64_t>(q), l) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error("primitive_root: no generator found (modulus not prime?)");
}

} // namespace feitlab::numth
