#include "effchar/numtheory.hpp"

#include "effchar/errors.hpp"

namespace effchar {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

int p_valuation(std::uint64_t n, std::uint64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_prime_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t q : prime_divisors(n))
    result = result / q * (q - 1);
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d)
        large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it)
    small.push_back(*it);
  return small;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1)
      result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t mod) {
  // mod is prime in every use here
  return pow_mod(a % mod, mod - 2, mod);
}

std::uint64_t prime_one_mod(std::uint64_t m, std::uint64_t lower_bound) {
  std::uint64_t l = m + 1;
  while (l <= lower_bound)
    l += m;
  while (!is_prime(l))
    l += m;
  return l;
}

std::uint64_t primitive_root(std::uint64_t l) {
  if (l == 2)
    return 1;
  auto qs = prime_divisors(l - 1);
  for (std::uint64_t z = 2; z < l; ++z) {
    bool ok = true;
    for (std::uint64_t q : qs) {
      if (pow_mod(z, (l - 1) / q, l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      return z;
  }
  throw InternalError("no primitive root found, modulus not prime?");
}

} // namespace effchar
