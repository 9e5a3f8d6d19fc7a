#pragma once

#include <cstdint>
#include <vector>

namespace effchar {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
int p_valuation(std::uint64_t n, std::uint64_t p);
bool is_prime_power(std::uint64_t n, std::uint64_t p);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t mod);

// Smallest prime l with l ≡ 1 (mod m) and l > lower_bound.
std::uint64_t prime_one_mod(std::uint64_t m, std::uint64_t lower_bound);

// Smallest generator of the multiplicative group of F_l.
std::uint64_t primitive_root(std::uint64_t l);

} // namespace effchar
