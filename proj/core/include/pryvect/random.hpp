#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace pryvect {

// Seeded randomness stream. One stream per protocol session or key
// generation; a fixed seed replays the exact same draws, which the test
// suites rely on. The generator is GMP's default (Mersenne twister) and is
// not a CSPRNG; production deployments would seed sessions from the OS.
class RandomStream {
public:
  explicit RandomStream(uint64_t seed) : rng_(gmp_randinit_default) { rng_.seed(static_cast<unsigned long>(seed)); }

  // Non-deterministic stream seeded from the OS entropy source.
  static RandomStream from_entropy() {
    std::random_device rd;
    uint64_t seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    return RandomStream(seed);
  }

  // Uniform integer in [0, bound). bound must be positive.
  mpz_class below(const mpz_class& bound) { return rng_.get_z_range(bound); }

  // Uniform integer with exactly `bits` random bits (value < 2^bits).
  mpz_class bits(unsigned long n) { return rng_.get_z_bits(n); }

  uint64_t u64() {
    mpz_class v = rng_.get_z_bits(64);
    uint64_t out = 0;
    for (int limb = 0; limb < 2; ++limb) {
      mpz_class part = v >> (32 * limb);
      out |= static_cast<uint64_t>(mpz_get_ui(part.get_mpz_t()) & 0xffffffffUL) << (32 * limb);
    }
    return out;
  }

  // Uniform in [0, n) for small n.
  uint64_t below_u64(uint64_t n) {
    mpz_class v = below(mpz_class(static_cast<unsigned long>(n)));
    return mpz_get_ui(v.get_mpz_t());
  }

  void fill(uint8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<uint8_t>(below_u64(256));
  }

  // Derives an independent child seed; used to give each session its own stream.
  uint64_t fork_seed() { return splitmix(u64()); }

  static uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

private:
  gmp_randclass rng_;
};

}  // namespace pryvect
