#ifndef FEITLAB_NUMTH_HPP
#define FEITLAB_NUMTH_HPP

#include <cstdint>
#include <vector>

namespace feitlab::numth {

bool is_prime(long long n);

// Prime factorization by trial division, pairs (p, multiplicity), p ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

// Distinct prime divisors, ascending.
std::vector<long long> prime_divisors(long long n);

// All positive divisors, ascending.
std::vector<long long> divisors(long long n);

// Euler totient.
long long phi(long long n);

// Largest power of p dividing n (the p-part). p_part(48, 2) == 16.
long long p_part(long long n, long long p);

bool is_power_of(long long n, long long p);

long long lcm_ll(long long a, long long b);

// Modular arithmetic on machine words; m must satisfy m*m < 2^63.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t prime_m);

// Least prime l with l ≡ 1 (mod n) and l > lower_bound.
long long least_prime_1_mod(long long n, long long lower_bound);

// Smallest primitive root modulo the prime l.
std::uint64_t primitive_root(std::uint64_t l);

} // namespace feitlab::numth

#endif
