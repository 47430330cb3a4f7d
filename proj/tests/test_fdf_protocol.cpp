#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "ychan/fdf_protocol.hpp"

using namespace ychan;

TEST_CASE("slot to pair mapping") {
  CHECK(slot_pair(1) == UserPair{1, 2});
  CHECK(slot_pair(2) == UserPair{2, 3});
  CHECK(slot_pair(3) == UserPair{1, 3});
  CHECK_THROWS_AS(slot_pair(0), std::invalid_argument);
  CHECK_THROWS_AS(slot_pair(4), std::invalid_argument);
}

TEST_CASE("combine and extract invert each other") {
  Message m12{5, 1, 2, 1};
  Message m21{9, 2, 1, 1};
  RelayIndex u = relay_combine(m12, m21, 16);
  CHECK(u.value == 14);
  CHECK(u.pair == UserPair{1, 2});
  CHECK(u.frame == 1);

  Message got1 = user_extract(u, m12, 16);  // user 1 removes its own message
  CHECK(got1.value == 9);
  CHECK(got1.source == 2);
  CHECK(got1.dest == 1);
  Message got2 = user_extract(u, m21, 16);
  CHECK(got2.value == 5);
  CHECK(got2.source == 1);

  // Wraparound.
  RelayIndex w = relay_combine(Message{7, 1, 2, 3}, Message{6, 2, 1, 3}, 8);
  CHECK(w.value == 5);
  CHECK(user_extract(w, Message{7, 1, 2, 3}, 8).value == 6);
}

TEST_CASE("combine and extract reject malformed inputs") {
  Message m12{1, 1, 2, 1};
  Message m21{2, 2, 1, 1};
  Message m23{3, 2, 3, 1};
  CHECK_THROWS_AS(relay_combine(m12, m23, 8), std::invalid_argument);
  CHECK_THROWS_AS(relay_combine(m12, m12, 8), std::invalid_argument);
  CHECK_THROWS_AS(relay_combine(m12, Message{2, 2, 1, 2}, 8),
                  std::invalid_argument);                       // frame skew
  CHECK_THROWS_AS(relay_combine(Message{9, 1, 2, 1}, m21, 8),
                  std::invalid_argument);                       // value >= q
  CHECK_THROWS_AS(relay_combine(m12, m21, 1), std::invalid_argument);
  CHECK_THROWS_AS(relay_combine(Message{0, 1, 1, 1}, m21, 8),
                  std::invalid_argument);

  RelayIndex u = relay_combine(m12, m21, 8);
  CHECK_THROWS_AS(user_extract(u, m23, 8), std::invalid_argument);
  CHECK_THROWS_AS(user_extract(u, Message{1, 1, 2, 2}, 8),
                  std::invalid_argument);
}

TEST_CASE("schedule follows the three-slot pattern with one-block delay") {
  ScheduleResult res = run_schedule(2, 8, 1);
  REQUIRE(res.blocks.size() == 7);
  CHECK(res.correct);
  CHECK(res.delivered == 12);

  // Slot cycle 1,2,3,1,2,3 then the relay-only drain.
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(res.blocks[i].slot == static_cast<int>(i % 3) + 1);
    CHECK(res.blocks[i].block == i + 1);
    REQUIRE(res.blocks[i].senders.size() == 2);
    UserPair pr = slot_pair(res.blocks[i].slot);
    CHECK(res.blocks[i].senders[0].source == pr.lo);
    CHECK(res.blocks[i].senders[0].dest == pr.hi);
    CHECK(res.blocks[i].senders[1].source == pr.hi);
    CHECK(res.blocks[i].senders[1].dest == pr.lo);
    CHECK(res.blocks[i].senders[0].frame == i / 3 + 1);
  }
  CHECK(res.blocks[6].slot == 0);
  CHECK(res.blocks[6].senders.empty());

  // The relay is silent in the very first block, then always one behind.
  CHECK_FALSE(res.blocks[0].forwarded.has_value());
  CHECK(res.blocks[0].decodes.empty());
  struct Expect {
    UserPair pair;
    std::uint64_t frame;
  };
  Expect expect[6] = {{{1, 2}, 1}, {{2, 3}, 1}, {{1, 3}, 1},
                      {{1, 2}, 2}, {{2, 3}, 2}, {{1, 3}, 2}};
  for (std::size_t i = 1; i < 7; ++i) {
    REQUIRE(res.blocks[i].forwarded.has_value());
    CHECK(res.blocks[i].forwarded->pair == expect[i - 1].pair);
    CHECK(res.blocks[i].forwarded->frame == expect[i - 1].frame);
    // Both pair members decode, each recovering the partner's message.
    REQUIRE(res.blocks[i].decodes.size() == 2);
    CHECK(res.blocks[i].decodes[0].user == expect[i - 1].pair.lo);
    CHECK(res.blocks[i].decodes[0].recovered_from == expect[i - 1].pair.hi);
    CHECK(res.blocks[i].decodes[1].user == expect[i - 1].pair.hi);
    CHECK(res.blocks[i].decodes[1].recovered_from == expect[i - 1].pair.lo);
  }

  // Decoded values equal what the partner actually sent two blocks ago.
  CHECK(res.blocks[1].decodes[0].value == res.blocks[0].senders[1].value);
  CHECK(res.blocks[1].decodes[1].value == res.blocks[0].senders[0].value);
  CHECK(res.blocks[6].decodes[0].value == res.blocks[5].senders[1].value);
}

TEST_CASE("schedule argument validation") {
  CHECK_THROWS_AS(run_schedule(0, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_schedule(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_schedule(1, 0, 1), std::invalid_argument);
}

TEST_CASE("schedule is deterministic and q=2 works") {
  ScheduleResult a = run_schedule(5, 2, 9);
  ScheduleResult b = run_schedule(5, 2, 9);
  CHECK(transcript_to_jsonl(a) == transcript_to_jsonl(b));
  CHECK(a.correct);
  CHECK(a.delivered == 30);

  ScheduleResult c = run_schedule(5, 2, 10);
  CHECK(c.correct);  // correctness is seed-independent
}

TEST_CASE("throughput weighs delivered messages by pair rate") {
  ScheduleResult res = run_schedule(1, 16, 4);
  REQUIRE(res.blocks.size() == 4);
  // Forwards: u12 (block 2), u23 (block 3), u13 (drain): 2 messages each.
  CHECK(throughput(res, {1.0, 2.0, 3.0}) == (2.0 + 6.0 + 4.0) / 4.0);
  CHECK(throughput(res, {0.0, 0.0, 0.0}) == 0.0);

  // Long run approaches 2 bits/block at unit rates: 6b/(3b+1).
  ScheduleResult lng = run_schedule(1000, 4, 4);
  double thr = throughput(lng, {1.0, 1.0, 1.0});
  CHECK(thr == doctest::Approx(6000.0 / 3001.0).epsilon(1e-12));
}

TEST_CASE("JSONL transcript has the documented shape") {
  ScheduleResult res = run_schedule(2, 8, 3);
  std::string text = transcript_to_jsonl(res);
  std::istringstream lines(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    nlohmann::json j = nlohmann::json::parse(line);
    std::set<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
    CHECK(keys == std::set<std::string>{"block", "slot", "senders",
                                        "relay_forward", "decodes"});
    CHECK(j["block"] == n + 1);
    if (n == 0) {
      CHECK(j["relay_forward"].is_null());
      CHECK(j["decodes"].empty());
      CHECK(j["senders"].size() == 2);
      CHECK(j["senders"][0]["user"] == 1);
      CHECK(j["senders"][0]["dest"] == 2);
      CHECK(j["senders"][0].contains("value"));
    } else {
      REQUIRE(j["relay_forward"].is_object());
      CHECK(j["relay_forward"]["pair"].is_array());
      CHECK(j["relay_forward"]["pair"].size() == 2);
      CHECK(j["relay_forward"].contains("value"));
      for (const auto& d : j["decodes"]) {
        CHECK(d.contains("user"));
        CHECK(d.contains("recovered_from"));
        CHECK(d.contains("value"));
      }
    }
    if (j["slot"] == 0) CHECK(j["senders"].empty());
    ++n;
  }
  CHECK(n == 7);
}
