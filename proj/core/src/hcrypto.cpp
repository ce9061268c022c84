#include "pryvect/hcrypto.hpp"

#include "pryvect/digest.hpp"
#include "pryvect/errors.hpp"

namespace pryvect::hcrypto {

namespace {

constexpr char kKeyMagic[4] = {'P', 'Y', 'H', 'S'};
constexpr char kPubMagic[4] = {'P', 'Y', 'H', 'P'};
constexpr uint8_t kKeyVersion = 1;

// Window width for the fixed-base table; 2^6 entries per digit column.
constexpr uint32_t kWindowBits = 6;

uint32_t randomizer_bits_for(uint32_t key_bits) {
  // Shortened randomizer exponents; sized generously above the scheme's
  // nominal security level for each supported modulus.
  switch (key_bits) {
    case 512: return 256;
    case 1024: return 320;
    case 2048: return 400;
    default: return key_bits / 2;
  }
}

KeyTag tag_for(const mpz_class& n, const mpz_class& h) {
  Bytes material = mpz_to_bytes(n, (mpz_sizeinbase(n.get_mpz_t(), 2) + 7) / 8);
  Bytes hb = mpz_to_bytes(h, (mpz_sizeinbase(h.get_mpz_t(), 2) + 7) / 8);
  material.insert(material.end(), hb.begin(), hb.end());
  Digest32 d = sha256(material);
  KeyTag tag;
  std::copy_n(d.begin(), tag.size(), tag.begin());
  return tag;
}

void check_same_key(const HePublicKey& pk, const HeCiphertext& c, const char* op) {
  if (c.tag != pk.tag())
    throw CryptoError(CryptoError::Kind::KeyMismatch,
                      std::string(op) + ": ciphertext was produced under a different key");
}

mpz_class random_prime(uint32_t bits, RandomStream& rng) {
  // Top two bits set so the product of two such primes has full size.
  mpz_class p = rng.bits(bits);
  mpz_setbit(p.get_mpz_t(), bits - 1);
  mpz_setbit(p.get_mpz_t(), bits - 2);
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p;
}

}  // namespace

mpz_class mpz_from_bytes(const uint8_t* data, std::size_t n) {
  mpz_class v;
  mpz_import(v.get_mpz_t(), n, 1, 1, 1, 0, data);
  return v;
}

Bytes mpz_to_bytes(const mpz_class& v, std::size_t width) {
  Bytes out(width, 0);
  std::size_t count = 0;
  if (v != 0) {
    std::size_t need = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    if (need > width) throw Error("integer does not fit the fixed wire width");
    mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, v.get_mpz_t());
  }
  return out;
}

HePublicKey::HePublicKey(mpz_class n, mpz_class h, uint32_t key_bits, uint32_t randomizer_bits)
    : n_(std::move(n)), h_(std::move(h)), key_bits_(key_bits), randomizer_bits_(randomizer_bits) {
  n2_ = n_ * n_;
  tag_ = tag_for(n_, h_);
  build_table();
}

void HePublicKey::build_table() {
  uint32_t columns = (randomizer_bits_ + kWindowBits - 1) / kWindowBits;
  auto table = std::make_shared<std::vector<mpz_class>>();
  table->reserve(static_cast<std::size_t>(columns) << kWindowBits);
  mpz_class column_base = h_;
  for (uint32_t j = 0; j < columns; ++j) {
    mpz_class acc = 1;
    for (uint32_t d = 0; d < (1u << kWindowBits); ++d) {
      table->push_back(acc);
      acc = acc * column_base % n2_;
    }
    column_base = acc;  // h^(2^(w*(j+1)))
  }
  table_ = std::move(table);
}

mpz_class HePublicKey::randomizer_power(const mpz_class& x) const {
  mpz_class acc = 1;
  mpz_class rest = x;
  uint32_t columns = (randomizer_bits_ + kWindowBits - 1) / kWindowBits;
  const auto& table = *table_;
  for (uint32_t j = 0; j < columns && rest != 0; ++j) {
    unsigned long digit = mpz_get_ui(rest.get_mpz_t()) & ((1u << kWindowBits) - 1);
    if (digit) acc = acc * table[(static_cast<std::size_t>(j) << kWindowBits) + digit] % n2_;
    rest >>= kWindowBits;
  }
  return acc;
}

Bytes HePublicKey::encode() const {
  ByteWriter w;
  w.raw(reinterpret_cast<const uint8_t*>(kPubMagic), 4);
  w.u8(kKeyVersion);
  w.u32(key_bits_);
  w.u32(randomizer_bits_);
  w.bytes32(mpz_to_bytes(n_, (key_bits_ + 7) / 8));
  w.bytes32(mpz_to_bytes(h_, ciphertext_width()));
  return w.take();
}

HePublicKey HePublicKey::decode(const Bytes& bytes) {
  ByteReader r(bytes);
  Bytes magic = r.raw(4);
  if (!std::equal(magic.begin(), magic.end(), kPubMagic)) throw CodecError(0, "bad public key magic");
  if (r.u8() != kKeyVersion) throw CodecError(4, "unsupported public key version");
  uint32_t bits = r.u32();
  uint32_t rbits = r.u32();
  Bytes nb = r.bytes32();
  Bytes hb = r.bytes32();
  r.expect_done("public key");
  HePublicKey pk(mpz_from_bytes(nb.data(), nb.size()), mpz_from_bytes(hb.data(), hb.size()), bits, rbits);
  if (mpz_sizeinbase(pk.n().get_mpz_t(), 2) > bits) throw CodecError(9, "modulus larger than declared size");
  return pk;
}

HeSecretKey::HeSecretKey(const HePublicKey& pk, mpz_class p, mpz_class q)
    : p_(std::move(p)), q_(std::move(q)) {
  n_ = pk.n();
  if (p_ * q_ != n_) throw CryptoError(CryptoError::Kind::KeyMismatch, "secret factors do not match the modulus");
  p2_ = p_ * p_;
  q2_ = q_ * q_;
  mpz_class pm1 = p_ - 1, qm1 = q_ - 1;
  mpz_class t;
  // ((p-1) * N)^-1 mod p
  t = pm1 * n_ % p_;
  if (mpz_invert(hp_.get_mpz_t(), t.get_mpz_t(), p_.get_mpz_t()) == 0)
    throw CryptoError(CryptoError::Kind::KeyMismatch, "degenerate key: gcd((p-1)N, p) != 1");
  t = qm1 * n_ % q_;
  if (mpz_invert(hq_.get_mpz_t(), t.get_mpz_t(), q_.get_mpz_t()) == 0)
    throw CryptoError(CryptoError::Kind::KeyMismatch, "degenerate key: gcd((q-1)N, q) != 1");
  if (mpz_invert(q_inv_p_.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t()) == 0)
    throw CryptoError(CryptoError::Kind::KeyMismatch, "p and q are not coprime");
}

mpz_class HeSecretKey::decrypt_value(const mpz_class& c) const {
  // m mod p = L_p(c^(p-1) mod p^2) * ((p-1)N)^-1 mod p, same mod q; CRT.
  mpz_class cp, cq;
  mpz_class pm1 = p_ - 1, qm1 = q_ - 1;
  mpz_powm(cp.get_mpz_t(), c.get_mpz_t(), pm1.get_mpz_t(), p2_.get_mpz_t());
  mpz_powm(cq.get_mpz_t(), c.get_mpz_t(), qm1.get_mpz_t(), q2_.get_mpz_t());
  mpz_class lp = (cp - 1) / p_;
  mpz_class lq = (cq - 1) / q_;
  mpz_class mp = lp % p_ * hp_ % p_;
  mpz_class mq = lq % q_ * hq_ % q_;
  // CRT: m = mq + q * ((mp - mq) * q^-1 mod p)
  mpz_class diff = (mp - mq) % p_;
  if (diff < 0) diff += p_;
  mpz_class m = mq + q_ * (diff * q_inv_p_ % p_);
  return m % n_;
}

HeKeyPair keygen(uint32_t bits, RandomStream& rng) {
  if (bits != 512 && bits != 1024 && bits != 2048)
    throw CryptoError(CryptoError::Kind::BadKeySize, "supported key sizes: 512 (tests), 1024, 2048");
  mpz_class p = random_prime(bits / 2, rng);
  mpz_class q;
  do {
    q = random_prime(bits / 2, rng);
  } while (q == p);
  mpz_class n = p * q;
  mpz_class n2 = n * n;

  // Randomizer base h = r0^N mod N^2 for a uniform r0 in Z_N^*.
  mpz_class r0, g;
  do {
    r0 = rng.below(n);
    mpz_gcd(g.get_mpz_t(), r0.get_mpz_t(), n.get_mpz_t());
  } while (r0 == 0 || g != 1);
  mpz_class h;
  mpz_powm(h.get_mpz_t(), r0.get_mpz_t(), n.get_mpz_t(), n2.get_mpz_t());

  HePublicKey pk(n, h, bits, randomizer_bits_for(bits));
  HeSecretKey sk(pk, p, q);
  return {std::move(pk), std::move(sk)};
}

HeCiphertext enc(const HePublicKey& pk, const mpz_class& m, RandomStream& rng) {
  if (m < 0 || m >= pk.n()) throw Error("plaintext out of range");
  // (1 + mN) * h^x mod N^2
  mpz_class x = rng.bits(pk.randomizer_bits());
  mpz_class c = (1 + m * pk.n()) % pk.n_squared();
  c = c * pk.randomizer_power(x) % pk.n_squared();
  return {std::move(c), pk.tag()};
}

mpz_class dec(const HePublicKey& pk, const HeSecretKey& sk, const HeCiphertext& c) {
  check_same_key(pk, c, "dec");
  return sk.decrypt_value(c.value);
}

HeCiphertext add(const HePublicKey& pk, const HeCiphertext& a, const HeCiphertext& b) {
  check_same_key(pk, a, "add");
  check_same_key(pk, b, "add");
  return {a.value * b.value % pk.n_squared(), pk.tag()};
}

HeCiphertext scalar_mul(const HePublicKey& pk, const HeCiphertext& c, const mpz_class& k) {
  check_same_key(pk, c, "scalar_mul");
  if (k < 0 || k >= pk.n()) throw Error("scalar out of range");
  HeCiphertext out;
  mpz_powm(out.value.get_mpz_t(), c.value.get_mpz_t(), k.get_mpz_t(), pk.n_squared().get_mpz_t());
  out.tag = pk.tag();
  return out;
}

HeCiphertext rerandomize(const HePublicKey& pk, const HeCiphertext& c, RandomStream& rng) {
  check_same_key(pk, c, "rerandomize");
  mpz_class x = rng.bits(pk.randomizer_bits());
  return {c.value * pk.randomizer_power(x) % pk.n_squared(), pk.tag()};
}

SelectionVector make_selector(const HePublicKey& pk, std::size_t n, std::size_t index, RandomStream& rng) {
  if (index >= n) throw Error("selector index out of range");
  SelectionVector sel;
  sel.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) sel.entries.push_back(enc(pk, i == index ? 1 : 0, rng));
  return sel;
}

HeCiphertext select(const HePublicKey& pk, const SelectionVector& selector,
                    const std::vector<mpz_class>& payload, RandomStream& rng) {
  if (selector.size() != payload.size())
    throw CryptoError(CryptoError::Kind::LengthMismatch,
                      "select: selector has " + std::to_string(selector.size()) + " entries, payload " +
                          std::to_string(payload.size()));
  HeCiphertext acc{mpz_class(1), pk.tag()};
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (payload[i] == 0) continue;
    acc = add(pk, acc, scalar_mul(pk, selector.entries[i], payload[i]));
  }
  return rerandomize(pk, acc, rng);
}

Bytes encode_ciphertext(const HePublicKey& pk, const HeCiphertext& c) {
  return mpz_to_bytes(c.value, pk.ciphertext_width());
}

HeCiphertext decode_ciphertext(const HePublicKey& pk, const uint8_t* data, std::size_t n) {
  if (n != pk.ciphertext_width()) throw CodecError(0, "ciphertext has wrong width");
  mpz_class v = mpz_from_bytes(data, n);
  if (v >= pk.n_squared()) throw CodecError(0, "ciphertext out of range");
  return {std::move(v), pk.tag()};
}

Bytes encode_keypair(const HeKeyPair& kp) {
  ByteWriter w;
  w.raw(reinterpret_cast<const uint8_t*>(kKeyMagic), 4);
  w.u8(kKeyVersion);
  w.bytes32(kp.pub.encode());
  std::size_t half = (kp.pub.key_bits() / 2 + 7) / 8;
  w.bytes32(mpz_to_bytes(kp.sec.p(), half));
  w.bytes32(mpz_to_bytes(kp.sec.q(), half));
  return w.take();
}

HeKeyPair decode_keypair(const Bytes& bytes) {
  ByteReader r(bytes);
  Bytes magic = r.raw(4);
  if (!std::equal(magic.begin(), magic.end(), kKeyMagic)) throw CodecError(0, "bad key pair magic");
  if (r.u8() != kKeyVersion) throw CodecError(4, "unsupported key pair version");
  HePublicKey pk = HePublicKey::decode(r.bytes32());
  Bytes pb = r.bytes32();
  Bytes qb = r.bytes32();
  r.expect_done("key pair");
  HeSecretKey sk(pk, mpz_from_bytes(pb.data(), pb.size()), mpz_from_bytes(qb.data(), qb.size()));
  return {std::move(pk), std::move(sk)};
}

}  // namespace pryvect::hcrypto
