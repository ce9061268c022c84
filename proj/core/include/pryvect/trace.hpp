#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pryvect/bytes.hpp"

namespace pryvect {

// One event symbol: a bare label ("day") or a label(value) pair ("v(+)").
struct Event {
  std::string label;
  std::optional<std::string> value;

  bool operator==(const Event&) const = default;
  std::string str() const { return value ? label + "(" + *value + ")" : label; }
};

struct EventHash {
  std::size_t operator()(const Event& e) const {
    std::hash<std::string> h;
    return h(e.label) * 1000003u ^ (e.value ? h(*e.value) + 1 : 0);
  }
};

// A user's private, finite event sequence.
struct Trace {
  std::vector<Event> events;

  bool operator==(const Trace&) const = default;
  std::size_t size() const { return events.size(); }
  bool empty() const { return events.empty(); }
  std::string str() const;
};

// Ordered symbol table; symbol indices are the protocol's common coordinates.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Event> symbols);

  const std::vector<Event>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  const Event& at(uint32_t idx) const { return symbols_.at(idx); }
  std::optional<uint32_t> index_of(const Event& e) const;
  bool contains(const Event& e) const { return index_of(e).has_value(); }
  // Whether any symbol uses this label (bare or with a value).
  bool has_label(const std::string& label) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
  std::vector<Event> symbols_;
  std::unordered_map<Event, uint32_t, EventHash> index_;
};

Trace concat(const Trace& left, const Trace& right);

// Keeps the suffix covering the most recent `keep_days` marker windows.
// With n marker events and keep_days <= n, drops everything up to and
// including the marker at ordinal n - keep_days (0-based); keep_days > n
// leaves the trace unchanged, and keep_days = 0 keeps nothing.
Trace truncate_after_last_marker(const Trace& trace, const std::string& marker_label, std::size_t keep_days);

// Canonical binary encoding: 4-byte big-endian event count, then per event
// a 1-byte label length, label bytes, 1-byte value length (0 = none), value
// bytes. Two equal traces always produce identical bytes.
Bytes encode(const Trace& trace);
Trace decode_trace(const Bytes& bytes);

void encode_event(ByteWriter& w, const Event& e);
Event decode_event(ByteReader& r);

// Textual trace literal, e.g. "v(+);s(-);a(-)". Whitespace-tolerant; the
// empty string is the empty trace.
Trace parse_trace_literal(const std::string& text);

// Alphabet declaration file: one line per label, either bare ("day") or
// "label: v1,v2,...". '#' starts a comment.
Alphabet parse_alphabet(const std::string& text);
Alphabet load_alphabet(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const Bytes& data);
Bytes read_file_bytes(const std::string& path);

}  // namespace pryvect
