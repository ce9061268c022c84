#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "pryvect/bytes.hpp"
#include "pryvect/random.hpp"

namespace pryvect::hcrypto {

using KeyTag = std::array<uint8_t, 8>;

// Paillier public key. Besides the modulus it carries a precomputed
// randomizer base h = r0^N mod N^2; fresh ciphertext randomness is h^x for
// a short random exponent x, evaluated with a fixed-base window table
// (shortened-exponent Paillier, Damgard-Jurik-Nielsen style).
class HePublicKey {
public:
  HePublicKey() = default;
  HePublicKey(mpz_class n, mpz_class h, uint32_t key_bits, uint32_t randomizer_bits);

  const mpz_class& n() const { return n_; }
  const mpz_class& n_squared() const { return n2_; }
  const mpz_class& randomizer_base() const { return h_; }
  uint32_t key_bits() const { return key_bits_; }
  uint32_t randomizer_bits() const { return randomizer_bits_; }
  const KeyTag& tag() const { return tag_; }
  // Fixed ciphertext wire width in bytes (values mod N^2).
  std::size_t ciphertext_width() const { return (2 * key_bits_ + 7) / 8; }

  // h^x mod N^2 via the window table.
  mpz_class randomizer_power(const mpz_class& x) const;

  Bytes encode() const;
  static HePublicKey decode(const Bytes& bytes);

  bool operator==(const HePublicKey& other) const { return n_ == other.n_ && h_ == other.h_; }

private:
  void build_table();

  mpz_class n_, n2_, h_;
  uint32_t key_bits_ = 0;
  uint32_t randomizer_bits_ = 0;
  KeyTag tag_{};
  // Window table shared by copies of the key; entries h^(d * 2^(w*j)).
  std::shared_ptr<const std::vector<mpz_class>> table_;
};

class HeSecretKey {
public:
  HeSecretKey() = default;
  HeSecretKey(const HePublicKey& pk, mpz_class p, mpz_class q);

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }

  // CRT decryption helpers (exponents p-1 and q-1).
  mpz_class decrypt_value(const mpz_class& ciphertext) const;

private:
  mpz_class p_, q_;
  mpz_class p2_, q2_;    // p^2, q^2
  mpz_class hp_, hq_;    // ((p-1)N)^-1 mod p, ((q-1)N)^-1 mod q
  mpz_class n_;
  mpz_class q_inv_p_;    // q^-1 mod p for CRT recombination
};

struct HeKeyPair {
  HePublicKey pub;
  HeSecretKey sec;
};

// Additively homomorphic ciphertext, tagged with the key it belongs to.
struct HeCiphertext {
  mpz_class value;  // element of Z_{N^2}
  KeyTag tag{};

  bool operator==(const HeCiphertext&) const = default;
};

// Supported sizes: 512 (tests only; too small to be secure), 1024, 2048.
HeKeyPair keygen(uint32_t bits, RandomStream& rng);

HeCiphertext enc(const HePublicKey& pk, const mpz_class& m, RandomStream& rng);
mpz_class dec(const HePublicKey& pk, const HeSecretKey& sk, const HeCiphertext& c);

HeCiphertext add(const HePublicKey& pk, const HeCiphertext& a, const HeCiphertext& b);
HeCiphertext scalar_mul(const HePublicKey& pk, const HeCiphertext& c, const mpz_class& k);
HeCiphertext rerandomize(const HePublicKey& pk, const HeCiphertext& c, RandomStream& rng);

// Elementwise encryption of a unit vector; the blinded-selection carrier.
struct SelectionVector {
  std::vector<HeCiphertext> entries;

  std::size_t size() const { return entries.size(); }
};

SelectionVector make_selector(const HePublicKey& pk, std::size_t n, std::size_t index, RandomStream& rng);

// Homomorphic dot product of the selector with a plaintext payload,
// rerandomized. With an honest unit selector e_j the result decrypts to
// payload[j]; the evaluator learns nothing about j.
HeCiphertext select(const HePublicKey& pk, const SelectionVector& selector,
                    const std::vector<mpz_class>& payload, RandomStream& rng);

// Fixed-width big-endian wire form (pk.ciphertext_width() bytes).
Bytes encode_ciphertext(const HePublicKey& pk, const HeCiphertext& c);
HeCiphertext decode_ciphertext(const HePublicKey& pk, const uint8_t* data, std::size_t n);

// Key files: magic, version, sizes, big-endian integers.
Bytes encode_keypair(const HeKeyPair& kp);
HeKeyPair decode_keypair(const Bytes& bytes);

mpz_class mpz_from_bytes(const uint8_t* data, std::size_t n);
Bytes mpz_to_bytes(const mpz_class& v, std::size_t width);

}  // namespace pryvect::hcrypto
