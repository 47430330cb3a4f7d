#include "ychan/fdf_protocol.hpp"

#include <array>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ychan {

namespace {

void check_user(int u, const char* fn) {
  if (u < 1 || u > 3) {
    throw std::invalid_argument(std::string(fn) + ": user out of range");
  }
}

UserPair pair_of(const Message& m) {
  return m.source < m.dest ? UserPair{m.source, m.dest}
                           : UserPair{m.dest, m.source};
}

// Unbiased bounded draw from raw engine words (rejection sampling).
std::uint64_t draw_mod(std::mt19937_64& rng, std::uint64_t q) {
  const std::uint64_t bound = UINT64_MAX / q * q;
  for (;;) {
    std::uint64_t v = rng();
    if (v < bound) return v % q;
  }
}

}  // namespace

UserPair slot_pair(int slot) {
  switch (slot) {
    case 1: return {1, 2};
    case 2: return {2, 3};
    case 3: return {1, 3};
    default: throw std::invalid_argument("slot_pair: slot must be 1..3");
  }
}

RelayIndex relay_combine(const Message& a, const Message& b, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("relay_combine: q must be >= 2");
  check_user(a.source, "relay_combine");
  check_user(a.dest, "relay_combine");
  if (a.source == a.dest || b.source != a.dest || b.dest != a.source) {
    throw std::invalid_argument(
        "relay_combine: messages must be the two directions of one pair");
  }
  if (a.frame != b.frame) {
    throw std::invalid_argument("relay_combine: frame mismatch");
  }
  if (a.value >= q || b.value >= q) {
    throw std::invalid_argument("relay_combine: message value out of range");
  }
  return {(a.value + b.value) % q, pair_of(a), a.frame};
}

Message user_extract(const RelayIndex& index, const Message& own,
                     std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("user_extract: q must be >= 2");
  if (pair_of(own) != index.pair) {
    throw std::invalid_argument("user_extract: message not from this pair");
  }
  if (own.frame != index.frame) {
    throw std::invalid_argument("user_extract: frame mismatch");
  }
  if (own.value >= q || index.value >= q) {
    throw std::invalid_argument("user_extract: value out of range");
  }
  // own.source is the decoder; the remainder is the partner's message.
  std::uint64_t partner_value = (index.value + q - own.value) % q;
  return {partner_value, own.dest, own.source, index.frame};
}

ScheduleResult run_schedule(std::uint64_t frames, std::uint64_t q,
                            std::uint64_t seed) {
  if (frames < 1) throw std::invalid_argument("run_schedule: frames must be >= 1");
  if (q < 2) throw std::invalid_argument("run_schedule: q must be >= 2");

  std::mt19937_64 rng(seed);

  ScheduleResult res;
  res.frames = frames;
  res.q = q;
  res.seed = seed;
  res.delivered = 0;
  res.correct = true;
  res.blocks.reserve(3 * frames + 1);

  // Originals keyed by (frame, direction): [0]=lo->hi, [1]=hi->lo per slot.
  // The pipeline holds exactly one pending index (formed last block).
  std::vector<std::array<std::array<Message, 2>, 3>> sent(frames + 1);
  std::optional<RelayIndex> pending;

  auto deliver = [&](BlockRecord& rec, const RelayIndex& idx) {
    for (int dir = 0; dir < 2; ++dir) {
      int slot_of_pair = idx.pair == UserPair{1, 2}   ? 1
                         : idx.pair == UserPair{2, 3} ? 2
                                                      : 3;
      const Message& own =
          sent[idx.frame][static_cast<std::size_t>(slot_of_pair - 1)]
              [static_cast<std::size_t>(dir)];
      Message got = user_extract(idx, own, q);
      rec.decodes.push_back({own.source, got.source, got.value});
      const Message& original =
          sent[idx.frame][static_cast<std::size_t>(slot_of_pair - 1)]
              [static_cast<std::size_t>(1 - dir)];
      if (got.value != original.value) res.correct = false;
      ++res.delivered;
    }
  };

  std::uint64_t block = 0;
  for (std::uint64_t f = 1; f <= frames; ++f) {
    for (int slot = 1; slot <= 3; ++slot) {
      BlockRecord rec;
      rec.block = ++block;
      rec.slot = slot;

      UserPair pr = slot_pair(slot);
      Message fwd{draw_mod(rng, q), pr.lo, pr.hi, f};
      Message bwd{draw_mod(rng, q), pr.hi, pr.lo, f};
      sent[f][static_cast<std::size_t>(slot - 1)] = {fwd, bwd};
      rec.senders = {fwd, bwd};

      rec.forwarded = pending;
      if (pending) deliver(rec, *pending);
      pending = relay_combine(fwd, bwd, q);

      res.blocks.push_back(std::move(rec));
    }
  }

  // Relay-only drain block flushes the last combine.
  BlockRecord rec;
  rec.block = ++block;
  rec.slot = 0;
  rec.forwarded = pending;
  deliver(rec, *pending);
  res.blocks.push_back(std::move(rec));

  return res;
}

double throughput(const ScheduleResult& result, const PairRates& rates) {
  double bits = 0.0;
  for (const auto& blk : result.blocks) {
    for (const auto& d : blk.decodes) {
      UserPair pr = d.user < d.recovered_from
                        ? UserPair{d.user, d.recovered_from}
                        : UserPair{d.recovered_from, d.user};
      if (pr == UserPair{1, 2}) {
        bits += rates.r12;
      } else if (pr == UserPair{1, 3}) {
        bits += rates.r13;
      } else {
        bits += rates.r23;
      }
    }
  }
  return bits / static_cast<double>(result.blocks.size());
}

std::string transcript_to_jsonl(const ScheduleResult& result) {
  std::ostringstream out;
  for (const auto& blk : result.blocks) {
    nlohmann::ordered_json j;
    j["block"] = blk.block;
    j["slot"] = blk.slot;
    j["senders"] = nlohmann::ordered_json::array();
    for (const auto& m : blk.senders) {
      j["senders"].push_back(
          {{"user", m.source}, {"dest", m.dest}, {"value", m.value}});
    }
    if (blk.forwarded) {
      j["relay_forward"] = {
          {"pair", {blk.forwarded->pair.lo, blk.forwarded->pair.hi}},
          {"value", blk.forwarded->value}};
    } else {
      j["relay_forward"] = nullptr;
    }
    j["decodes"] = nlohmann::ordered_json::array();
    for (const auto& d : blk.decodes) {
      j["decodes"].push_back({{"user", d.user},
                              {"recovered_from", d.recovered_from},
                              {"value", d.value}});
    }
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace ychan
