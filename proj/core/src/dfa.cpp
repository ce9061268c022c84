#include "pryvect/dfa.hpp"

namespace pryvect {

namespace {
constexpr char kMagic[4] = {'P', 'Y', 'V', 'D'};
constexpr uint8_t kVersion = 1;
}  // namespace

Verdict run(const Dfa& dfa, const Trace& trace) {
  return dfa.is_final(run_to_state(dfa, trace)) ? Verdict::Accept : Verdict::Reject;
}

uint32_t run_to_state(const Dfa& dfa, const Trace& trace) {
  uint32_t q = dfa.initial;
  for (const auto& event : trace.events) {
    auto sym = dfa.alphabet.index_of(event);
    if (!sym) throw AlphabetMismatch("event " + event.str() + " is not in the DFA alphabet");
    q = dfa.next(q, *sym);
  }
  return q;
}

Bytes serialize(const Dfa& dfa) {
  ByteWriter w;
  w.raw(reinterpret_cast<const uint8_t*>(kMagic), 4);
  w.u8(kVersion);
  w.u32(dfa.q_count());
  w.u32(static_cast<uint32_t>(dfa.alphabet.size()));
  for (const auto& sym : dfa.alphabet.symbols()) encode_event(w, sym);
  w.u32(dfa.initial);
  Bytes bitmap((dfa.q_count() + 7) / 8, 0);
  for (uint32_t q = 0; q < dfa.q_count(); ++q)
    if (dfa.finals[q]) bitmap[q >> 3] |= static_cast<uint8_t>(1u << (q & 7));
  w.raw(bitmap);
  for (uint32_t v : dfa.delta) w.u32(v);
  return w.take();
}

Dfa deserialize_dfa(const Bytes& bytes) {
  ByteReader r(bytes);
  Bytes magic = r.raw(4);
  if (!std::equal(magic.begin(), magic.end(), kMagic))
    throw CodecError(0, "bad DFA magic");
  uint8_t version = r.u8();
  if (version != kVersion) throw CodecError(4, "unsupported DFA version " + std::to_string(version));

  Dfa dfa;
  uint32_t q_count = r.u32();
  uint32_t sym_count = r.u32();
  if (q_count == 0) throw CodecError(5, "DFA must have at least one state");

  std::vector<Event> symbols;
  symbols.reserve(sym_count);
  for (uint32_t i = 0; i < sym_count; ++i) symbols.push_back(decode_event(r));
  dfa.alphabet = Alphabet(std::move(symbols));

  dfa.initial = r.u32();
  if (dfa.initial >= q_count) throw CodecError(r.offset(), "initial state out of range");

  std::size_t bitmap_off = r.offset();
  Bytes bitmap = r.raw((q_count + 7) / 8);
  dfa.finals.resize(q_count);
  for (uint32_t q = 0; q < q_count; ++q) dfa.finals[q] = (bitmap[q >> 3] >> (q & 7)) & 1;
  // Padding bits beyond |Q| must be zero; a set bit there means corruption.
  for (uint32_t b = q_count; b < 8 * bitmap.size(); ++b)
    if ((bitmap[b >> 3] >> (b & 7)) & 1) throw CodecError(bitmap_off + (b >> 3), "corrupt finals bitmap");

  dfa.delta.reserve(static_cast<std::size_t>(q_count) * sym_count);
  for (std::size_t i = 0; i < static_cast<std::size_t>(q_count) * sym_count; ++i) {
    uint32_t target = r.u32();
    if (target >= q_count) throw CodecError(r.offset() - 4, "transition target out of range");
    dfa.delta.push_back(target);
  }
  r.expect_done("DFA");
  return dfa;
}

Dfa load_dfa(const std::string& path) { return deserialize_dfa(read_file_bytes(path)); }

void save_dfa(const Dfa& dfa, const std::string& path) { write_file(path, serialize(dfa)); }

}  // namespace pryvect
