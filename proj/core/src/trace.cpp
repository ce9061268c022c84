#include "pryvect/trace.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pryvect {

std::string Trace::str() const {
  std::string out;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (i) out += ";";
    out += events[i].str();
  }
  return out;
}

Alphabet::Alphabet(std::vector<Event> symbols) : symbols_(std::move(symbols)) {
  for (uint32_t i = 0; i < symbols_.size(); ++i) {
    auto [it, fresh] = index_.emplace(symbols_[i], i);
    if (!fresh) throw Error("duplicate alphabet symbol: " + symbols_[i].str());
  }
}

std::optional<uint32_t> Alphabet::index_of(const Event& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::has_label(const std::string& label) const {
  for (const auto& s : symbols_)
    if (s.label == label) return true;
  return false;
}

Trace concat(const Trace& left, const Trace& right) {
  Trace out = left;
  out.events.insert(out.events.end(), right.events.begin(), right.events.end());
  return out;
}

Trace truncate_after_last_marker(const Trace& trace, const std::string& marker_label, std::size_t keep_days) {
  std::vector<std::size_t> marker_pos;
  for (std::size_t i = 0; i < trace.events.size(); ++i)
    if (trace.events[i].label == marker_label && !trace.events[i].value) marker_pos.push_back(i);

  std::size_t n = marker_pos.size();
  if (keep_days > n) return trace;
  if (keep_days == 0) {
    // Zero windows kept: nothing survives, including the current partial day.
    return Trace{};
  }
  std::size_t cut_after = marker_pos[n - keep_days];
  Trace out;
  out.events.assign(trace.events.begin() + static_cast<std::ptrdiff_t>(cut_after) + 1, trace.events.end());
  return out;
}

void encode_event(ByteWriter& w, const Event& e) {
  w.str8(e.label);
  if (e.value)
    w.str8(*e.value);
  else
    w.u8(0);
}

Event decode_event(ByteReader& r) {
  Event e;
  e.label = r.str8();
  if (e.label.empty()) throw CodecError(r.offset(), "empty event label");
  std::string value = r.str8();
  if (!value.empty()) e.value = std::move(value);
  return e;
}

Bytes encode(const Trace& trace) {
  ByteWriter w;
  w.u32(static_cast<uint32_t>(trace.events.size()));
  for (const auto& e : trace.events) encode_event(w, e);
  return w.take();
}

Trace decode_trace(const Bytes& bytes) {
  ByteReader r(bytes);
  uint32_t count = r.u32();
  Trace t;
  t.events.reserve(count);
  for (uint32_t i = 0; i < count; ++i) t.events.push_back(decode_event(r));
  r.expect_done("trace");
  return t;
}

namespace {

bool is_value_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-' || c == '*'; }

Event parse_event_text(const std::string& item, const std::string& context) {
  auto open = item.find('(');
  if (open == std::string::npos) {
    for (char c : item)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw Error("bad event '" + item + "' in " + context);
    return Event{item, std::nullopt};
  }
  if (item.back() != ')') throw Error("bad event '" + item + "' in " + context);
  std::string label = item.substr(0, open);
  std::string value = item.substr(open + 1, item.size() - open - 2);
  if (label.empty() || value.empty()) throw Error("bad event '" + item + "' in " + context);
  for (char c : value)
    if (!is_value_char(c)) throw Error("bad event value '" + value + "' in " + context);
  return Event{label, value};
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Trace parse_trace_literal(const std::string& text) {
  Trace t;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ';')) {
    item = strip(item);
    if (item.empty()) continue;
    t.events.push_back(parse_event_text(item, "trace literal"));
  }
  return t;
}

Alphabet parse_alphabet(const std::string& text) {
  std::vector<Event> symbols;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    std::string context = "alphabet line " + std::to_string(lineno);
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      symbols.push_back(parse_event_text(line, context));
      continue;
    }
    std::string label = strip(line.substr(0, colon));
    if (label.empty()) throw Error("missing label in " + context);
    std::string values = line.substr(colon + 1);
    std::stringstream vs(values);
    std::string v;
    bool any = false;
    while (std::getline(vs, v, ',')) {
      v = strip(v);
      if (v.empty()) continue;
      for (char c : v)
        if (!is_value_char(c)) throw Error("bad value '" + v + "' in " + context);
      symbols.push_back(Event{label, v});
      any = true;
    }
    if (!any) throw Error("no values listed in " + context);
  }
  return Alphabet(std::move(symbols));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Bytes read_file_bytes(const std::string& path) {
  std::string s = read_file(path);
  return Bytes(s.begin(), s.end());
}

void write_file(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("write failed: " + path);
}

Alphabet load_alphabet(const std::string& path) { return parse_alphabet(read_file(path)); }

}  // namespace pryvect
