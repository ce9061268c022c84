#include "pryvect/minimize.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace pryvect {

namespace {

// Drops states unreachable from the initial one, keeping BFS order.
Dfa prune(const Dfa& dfa) {
  const std::size_t n_sym = dfa.alphabet.size();
  std::vector<uint32_t> remap(dfa.q_count(), UINT32_MAX);
  std::vector<uint32_t> order;
  std::deque<uint32_t> work{dfa.initial};
  remap[dfa.initial] = 0;
  order.push_back(dfa.initial);
  while (!work.empty()) {
    uint32_t q = work.front();
    work.pop_front();
    for (std::size_t s = 0; s < n_sym; ++s) {
      uint32_t t = dfa.next(q, static_cast<uint32_t>(s));
      if (remap[t] == UINT32_MAX) {
        remap[t] = static_cast<uint32_t>(order.size());
        order.push_back(t);
        work.push_back(t);
      }
    }
  }
  if (order.size() == dfa.q_count() && dfa.initial == 0) {
    bool identity = true;
    for (uint32_t q = 0; q < order.size(); ++q)
      if (order[q] != q) { identity = false; break; }
    if (identity) return dfa;
  }
  Dfa out;
  out.initial = 0;
  out.alphabet = dfa.alphabet;
  out.finals.resize(order.size());
  out.delta.reserve(order.size() * n_sym);
  bool has_meta = dfa.state_meta.size() == dfa.q_count();
  if (has_meta) out.state_meta.resize(order.size());
  for (uint32_t q = 0; q < order.size(); ++q) {
    uint32_t old = order[q];
    out.finals[q] = dfa.finals[old];
    if (has_meta) out.state_meta[q] = dfa.state_meta[old];
    for (std::size_t s = 0; s < n_sym; ++s) out.delta.push_back(remap[dfa.next(old, static_cast<uint32_t>(s))]);
  }
  return out;
}

}  // namespace

Dfa minimize(const Dfa& input) {
  Dfa dfa = prune(input);
  const uint32_t n = dfa.q_count();
  const std::size_t n_sym = dfa.alphabet.size();
  if (n <= 1) return dfa;

  // Inverse transition lists: preimage[s][q] = states mapping to q on s.
  std::vector<std::vector<std::vector<uint32_t>>> preimage(
      n_sym, std::vector<std::vector<uint32_t>>(n));
  for (uint32_t q = 0; q < n; ++q)
    for (std::size_t s = 0; s < n_sym; ++s) preimage[s][dfa.next(q, static_cast<uint32_t>(s))].push_back(q);

  std::vector<int> block_of(n, 0);
  std::vector<std::vector<uint32_t>> blocks(2);
  for (uint32_t q = 0; q < n; ++q) {
    int b = dfa.finals[q] ? 1 : 0;
    block_of[q] = b;
    blocks[b].push_back(q);
  }
  if (blocks[0].empty() || blocks[1].empty()) {
    blocks.resize(1);
    if (block_of[0] == 1)
      for (auto& b : block_of) b = 0;
  }

  // Worklist of (block, symbol) splitters.
  std::set<std::pair<int, std::size_t>> pending;
  int smaller = (blocks.size() == 2 && blocks[1].size() < blocks[0].size()) ? 1 : 0;
  for (std::size_t s = 0; s < n_sym; ++s) {
    pending.insert({smaller, s});
    if (blocks.size() == 2) pending.insert({1 - smaller, s});
  }

  std::vector<uint32_t> touched_count;  // per block, states hitting the splitter
  while (!pending.empty()) {
    auto [b, s] = *pending.begin();
    pending.erase(pending.begin());

    // X = states with delta(q, s) in block b.
    std::vector<uint32_t> hits;
    for (uint32_t target : blocks[b])
      for (uint32_t q : preimage[s][target]) hits.push_back(q);
    if (hits.empty()) continue;

    touched_count.assign(blocks.size(), 0);
    for (uint32_t q : hits) ++touched_count[block_of[q]];

    std::vector<int> to_split;
    for (uint32_t q : hits) {
      int blk = block_of[q];
      if (touched_count[blk] > 0 && touched_count[blk] < blocks[blk].size()) {
        if (std::find(to_split.begin(), to_split.end(), blk) == to_split.end()) to_split.push_back(blk);
      }
    }

    std::vector<bool> in_hits(n, false);
    for (uint32_t q : hits) in_hits[q] = true;

    for (int blk : to_split) {
      std::vector<uint32_t> inside, outside;
      for (uint32_t q : blocks[blk]) (in_hits[q] ? inside : outside).push_back(q);
      int new_blk = static_cast<int>(blocks.size());
      // Keep the larger part in place; queue the smaller.
      if (inside.size() <= outside.size()) {
        blocks[blk] = std::move(outside);
        blocks.push_back(std::move(inside));
      } else {
        blocks[blk] = std::move(inside);
        blocks.push_back(std::move(outside));
      }
      for (uint32_t q : blocks[new_blk]) block_of[q] = new_blk;
      for (std::size_t sym = 0; sym < n_sym; ++sym) {
        if (pending.count({blk, sym})) {
          pending.insert({new_blk, sym});
        } else {
          pending.insert({blocks[blk].size() <= blocks[new_blk].size() ? blk : new_blk, sym});
        }
      }
    }
  }

  // Rebuild on blocks, then renumber by BFS for a canonical result.
  Dfa out;
  out.alphabet = dfa.alphabet;
  uint32_t n_blocks = static_cast<uint32_t>(blocks.size());
  out.initial = static_cast<uint32_t>(block_of[dfa.initial]);
  out.finals.resize(n_blocks);
  out.delta.resize(static_cast<std::size_t>(n_blocks) * n_sym);
  bool has_meta = dfa.state_meta.size() == dfa.q_count();
  if (has_meta) out.state_meta.resize(n_blocks);
  for (uint32_t b = 0; b < n_blocks; ++b) {
    uint32_t repr = *std::min_element(blocks[b].begin(), blocks[b].end());
    out.finals[b] = dfa.finals[repr];
    if (has_meta) out.state_meta[b] = dfa.state_meta[repr];
    for (std::size_t s = 0; s < n_sym; ++s)
      out.delta[b * n_sym + s] = static_cast<uint32_t>(block_of[dfa.next(repr, static_cast<uint32_t>(s))]);
  }
  return prune(out);
}

}  // namespace pryvect
