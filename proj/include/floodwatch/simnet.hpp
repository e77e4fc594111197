/* Copyright 2026-present The Floodwatch Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FLOODWATCH_SIMNET_HPP_
#define FLOODWATCH_SIMNET_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "floodwatch/cps_profile.hpp"

namespace fw {

// splitmix64: tiny, splittable and trivially portable across languages with
// exact reproducibility, which is all the generator needs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1). Uses the top 53 bits so the result stays strictly
  // below 1 after rounding to double.
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

enum class NodeRole { Legit, Attacker, Basestation };

const char* node_role_name(NodeRole r);

struct NodeSpec {
  std::string id;
  std::uint64_t addr = 0;
  NodeRole role = NodeRole::Legit;
  double hello_rate_hz = 0.0;
};

enum class AttackMode { None, ReplyFlood, DirectFlood };

const char* attack_mode_name(AttackMode m);

struct AttackSpec {
  AttackMode mode = AttackMode::None;
  double flood_rate_hz = 0.0;
  double start_s = 0.0;
  std::optional<std::uint64_t> target;  // nullopt means ALL legit nodes
};

struct ScenarioConfig {
  double duration_s = 0.0;
  std::uint64_t seed = 0;
  std::vector<NodeSpec> nodes;
  AttackSpec attack;
  double reply_delay_s = 0.010;
  ProfileConfig profile;

  void validate() const;  // throws ScenarioInvalid
};

// One timestamped raw frame; records are sorted by timestamp with stable
// tie-break in generation order.
struct PacketRecord {
  double timestamp_s = 0.0;
  std::vector<std::uint8_t> raw_bytes;
  std::string src_node_id;
  std::string note;
};

// Builds one ZEP/802.15.4/6LoWPAN/UDP HELLO frame per the profile layouts.
std::vector<std::uint8_t> make_hello_frame(const ProfileConfig& config, std::uint64_t src_addr,
                                           std::uint64_t dst_addr, std::uint32_t seq);

// Deterministic traffic synthesis. Legit nodes beacon broadcast HELLOs at
// their rate with a random initial phase; a REPLY_FLOOD attacker advertises
// broadcast HELLOs and every legit node replies unicast after reply_delay_s;
// a DIRECT_FLOOD attacker sends unicast HELLOs straight at its target(s).
// Byte-identical output for a fixed scenario. Throws ScenarioInvalid.
std::vector<PacketRecord> generate(const ScenarioConfig& scenario);

}  // namespace fw

#endif  // FLOODWATCH_SIMNET_HPP_
