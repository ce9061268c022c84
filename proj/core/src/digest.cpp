#include "pryvect/digest.hpp"

#include <sodium.h>

namespace pryvect {

Digest32 sha256(const uint8_t* data, std::size_t n) {
  static_assert(crypto_hash_sha256_BYTES == 32);
  Digest32 out;
  crypto_hash_sha256(out.data(), data, n);
  return out;
}

Digest32 sha256(const Bytes& data) { return sha256(data.data(), data.size()); }

}  // namespace pryvect
