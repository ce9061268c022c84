#include "pryvect/bytes.hpp"

namespace pryvect {

void ByteWriter::u16(uint16_t v) {
  buf_.push_back(static_cast<uint8_t>(v >> 8));
  buf_.push_back(static_cast<uint8_t>(v));
}

void ByteWriter::u32(uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<uint8_t>(v >> s));
}

void ByteWriter::u64(uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<uint8_t>(v >> s));
}

void ByteWriter::str8(std::string_view s) {
  if (s.size() > 255) throw Error("string too long for 1-byte length prefix: " + std::string(s.substr(0, 32)));
  u8(static_cast<uint8_t>(s.size()));
  raw(s);
}

void ByteWriter::bytes32(const Bytes& b) {
  u32(static_cast<uint32_t>(b.size()));
  raw(b);
}

void ByteReader::need(std::size_t n) const {
  if (size_ - pos_ < n) throw CodecError(pos_, "truncated input: need " + std::to_string(n) + " more bytes");
}

uint8_t ByteReader::u8() {
  need(1);
  return data_[pos_++];
}

uint16_t ByteReader::u16() {
  need(2);
  uint16_t v = (static_cast<uint16_t>(data_[pos_]) << 8) | data_[pos_ + 1];
  pos_ += 2;
  return v;
}

uint32_t ByteReader::u32() {
  need(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + i];
  pos_ += 4;
  return v;
}

uint64_t ByteReader::u64() {
  need(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_ + i];
  pos_ += 8;
  return v;
}

Bytes ByteReader::raw(std::size_t n) {
  need(n);
  Bytes out(data_ + pos_, data_ + pos_ + n);
  pos_ += n;
  return out;
}

std::string ByteReader::str8() {
  std::size_t n = u8();
  need(n);
  std::string out(reinterpret_cast<const char*>(data_ + pos_), n);
  pos_ += n;
  return out;
}

Bytes ByteReader::bytes32() {
  std::size_t n = u32();
  if (n > size_ - pos_) throw CodecError(pos_, "length prefix exceeds remaining input");
  return raw(n);
}

void ByteReader::expect_done(const char* what) const {
  if (!done()) throw CodecError(pos_, std::string("trailing bytes after ") + what);
}

std::string to_hex(const uint8_t* data, std::size_t n) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0xf]);
  }
  return out;
}

std::string to_hex(const Bytes& b) { return to_hex(b.data(), b.size()); }

}  // namespace pryvect
