#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Message-level functional decode-and-forward schedule. Three slots per
// frame, one user pair per slot; the relay stores the modular sum of each
// pair's messages and forwards it in the next block, so every forward is
// decoded by both pair members against their own message. Modular addition
// stands in for the lattice superposition; the channel is noiseless here.

namespace ychan {

struct Message {
  std::uint64_t value;  // in [0, q)
  int source;           // 1..3
  int dest;             // 1..3, != source
  std::uint64_t frame;  // 1-based
};

struct UserPair {
  int lo;
  int hi;  // lo < hi
  bool operator==(const UserPair&) const = default;
};

struct RelayIndex {
  std::uint64_t value;
  UserPair pair;
  std::uint64_t frame;
};

// Pair served in slot 1..3: {1,2}, {2,3}, {1,3}.
UserPair slot_pair(int slot);

// Modular sum of one pair's exchange. The two messages must be the
// complementary directions of one pair in one frame, with values below q.
RelayIndex relay_combine(const Message& a, const Message& b, std::uint64_t q);

// Removes the receiver's own message from a forwarded sum: the partner's
// message is (index - own) mod q. `own` must belong to the index's pair and
// frame.
Message user_extract(const RelayIndex& index, const Message& own,
                     std::uint64_t q);

struct BlockRecord {
  std::uint64_t block;  // 1-based
  int slot;             // 1..3; 0 for the trailing relay-only block
  std::vector<Message> senders;
  std::optional<RelayIndex> forwarded;
  struct Decode {
    int user;
    int recovered_from;
    std::uint64_t value;
  };
  std::vector<Decode> decodes;
};

struct ScheduleResult {
  std::uint64_t frames;
  std::uint64_t q;
  std::uint64_t seed;
  std::vector<BlockRecord> blocks;  // 3*frames + 1 records
  std::uint64_t delivered;          // decoded messages, 6*frames when correct
  bool correct;                     // every decode matched the original
};

// Runs `frames` full frames with uniform random messages plus one trailing
// relay-only block that drains the pipeline. Deterministic in (frames, q,
// seed).
ScheduleResult run_schedule(std::uint64_t frames, std::uint64_t q,
                            std::uint64_t seed);

// Bits per message for each pair; r_jk counts once per delivered message in
// either direction.
struct PairRates {
  double r12 = 0.0;
  double r13 = 0.0;
  double r23 = 0.0;
};

// Sum of delivered-message rates divided by the number of blocks.
double throughput(const ScheduleResult& result, const PairRates& rates);

// One JSON object per block:
// {"block","slot","senders":[{"user","dest","value"}...],
//  "relay_forward":{"pair":[lo,hi],"value"}|null,
//  "decodes":[{"user","recovered_from","value"}...]}
std::string transcript_to_jsonl(const ScheduleResult& result);

}  // namespace ychan
