#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pryvect/errors.hpp"

namespace pryvect {

using Bytes = std::vector<uint8_t>;

// Big-endian append-only writer used by every canonical encoding.
class ByteWriter {
public:
  void u8(uint8_t v) { buf_.push_back(v); }
  void u16(uint16_t v);
  void u32(uint32_t v);
  void u64(uint64_t v);
  void raw(const uint8_t* data, std::size_t n) { buf_.insert(buf_.end(), data, data + n); }
  void raw(const Bytes& b) { raw(b.data(), b.size()); }
  void raw(std::string_view s) { raw(reinterpret_cast<const uint8_t*>(s.data()), s.size()); }

  // 1-byte length prefix; rejects strings longer than 255.
  void str8(std::string_view s);
  // 4-byte length prefix.
  void bytes32(const Bytes& b);

  const Bytes& data() const { return buf_; }
  Bytes take() { return std::move(buf_); }
  std::size_t size() const { return buf_.size(); }

private:
  Bytes buf_;
};

// Bounds-checked big-endian reader; throws CodecError with the byte offset.
class ByteReader {
public:
  explicit ByteReader(const Bytes& b) : data_(b.data()), size_(b.size()) {}
  ByteReader(const uint8_t* data, std::size_t size) : data_(data), size_(size) {}

  uint8_t u8();
  uint16_t u16();
  uint32_t u32();
  uint64_t u64();
  Bytes raw(std::size_t n);
  std::string str8();
  Bytes bytes32();

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return size_ - pos_; }
  bool done() const { return pos_ == size_; }
  // Call at the end of a decode to reject trailing garbage.
  void expect_done(const char* what) const;

private:
  void need(std::size_t n) const;
  const uint8_t* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

std::string to_hex(const uint8_t* data, std::size_t n);
std::string to_hex(const Bytes& b);

template <std::size_t N>
std::string to_hex(const std::array<uint8_t, N>& a) {
  return to_hex(a.data(), N);
}

}  // namespace pryvect
