#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace schalg {

// Arithmetic mod a 31-bit prime. Values live in [0, p); products fit in u64.
struct PrimeField {
  uint32_t p;

  explicit PrimeField(uint32_t prime) : p(prime) {}

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t neg(uint32_t a) const { return a ? p - a : 0; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((uint64_t)a * b % p);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint64_t r = 1, base = a;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<uint32_t>(r);
  }
  uint32_t inv(uint32_t a) const { return pow(a, p - 2); }
  // reduce a signed integer
  uint32_t from_int(int64_t v) const {
    int64_t r = v % (int64_t)p;
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
  }
};

bool is_prime_u32(uint32_t n);

// Deterministic stream of distinct 31-bit primes for a given seed.
std::vector<uint32_t> random_primes(uint64_t seed, int count,
                                    const std::vector<uint32_t>& exclude = {});

}  // namespace schalg
