#pragma once

#include <array>

#include "pryvect/bytes.hpp"

namespace pryvect {

using Digest32 = std::array<uint8_t, 32>;

Digest32 sha256(const uint8_t* data, std::size_t n);
Digest32 sha256(const Bytes& data);

}  // namespace pryvect
