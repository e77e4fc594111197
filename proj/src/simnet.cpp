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

#include "floodwatch/simnet.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace fw {

const char* node_role_name(NodeRole r) {
  switch (r) {
    case NodeRole::Legit: return "LEGIT";
    case NodeRole::Attacker: return "ATTACKER";
    case NodeRole::Basestation: return "BASESTATION";
  }
  return "NodeRole";
}

const char* attack_mode_name(AttackMode m) {
  switch (m) {
    case AttackMode::None: return "NONE";
    case AttackMode::ReplyFlood: return "REPLY_FLOOD";
    case AttackMode::DirectFlood: return "DIRECT_FLOOD";
  }
  return "AttackMode";
}

void ScenarioConfig::validate() const {
  if (!(duration_s > 0.0))
    throw Error(Errc::ScenarioInvalid, "duration_s must be > 0");
  if (reply_delay_s < 0.0)
    throw Error(Errc::ScenarioInvalid, "reply_delay_s must be >= 0");
  std::set<std::uint64_t> addrs;
  std::set<std::string> ids;
  for (const NodeSpec& n : nodes) {
    if (n.id.empty())
      throw Error(Errc::ScenarioInvalid, "node with empty id");
    if (!ids.insert(n.id).second)
      throw Error(Errc::ScenarioInvalid, "duplicate node id '" + n.id + "'");
    if (n.addr == kBroadcastAddr)
      throw Error(Errc::ScenarioInvalid, "node '" + n.id + "' uses the broadcast address");
    if (!addrs.insert(n.addr).second)
      throw Error(Errc::ScenarioInvalid, "duplicate node address " + addr_hex(n.addr));
    if (n.hello_rate_hz < 0.0)
      throw Error(Errc::ScenarioInvalid, "node '" + n.id + "' has a negative rate");
  }
  if (attack.mode != AttackMode::None) {
    if (attack.flood_rate_hz < 0.0)
      throw Error(Errc::ScenarioInvalid, "flood_rate_hz must be >= 0");
    if (attack.start_s < 0.0 || attack.start_s > duration_s)
      throw Error(Errc::ScenarioInvalid, "attack start_s outside [0, duration_s]");
    bool has_attacker = std::any_of(nodes.begin(), nodes.end(), [](const NodeSpec& n) {
      return n.role == NodeRole::Attacker;
    });
    if (!has_attacker)
      throw Error(Errc::ScenarioInvalid, "attack configured but no ATTACKER node present");
    if (attack.target && *attack.target == kBroadcastAddr)
      throw Error(Errc::ScenarioInvalid, "attack target cannot be the broadcast address");
  }
  profile.validate();
}

std::vector<std::uint8_t> make_hello_frame(const ProfileConfig& config, std::uint64_t src_addr,
                                           std::uint64_t dst_addr, std::uint32_t seq) {
  static const SchemaSet schemas = build_schema_set();
  constexpr std::size_t kHelloPayloadBytes = 9;  // msgType(8) + nodeId(64)

  HeaderInstance zep = make_instance(schemas.find(kZepHeader));
  zep.set_field("protoIDstring", config.zep_proto_id);
  zep.set_field("version", 2);
  zep.set_field("type", 1);
  zep.set_field("channelId", 11);
  zep.set_field("deviceId", src_addr & 0xFFFF);
  zep.set_field("lqiMode", 0);
  zep.set_field("lqi", 0);
  zep.set_field("seq", seq);

  HeaderInstance mac = make_instance(schemas.find(kIeee802154Header));
  mac.set_field("framecontrol", 0x8841);
  mac.set_field("seqnumber", seq & 0xFF);
  mac.set_field("destPAN", 0xFACE);
  mac.set_field("destination", dst_addr & 0xFFFFFFFFFFFFull);
  mac.set_field("extendSrc", src_addr & 0xFFFFFFFFFFFFull);
  mac.set_field("fcs", 0);

  HeaderInstance sixlo = make_instance(schemas.find(kSixLowpanHeader));
  sixlo.set_field("dispatch", 0x41);
  sixlo.set_field("hopLimit", 64);
  sixlo.set_field("src", src_addr);
  sixlo.set_field("dst", dst_addr);

  HeaderInstance udp = make_instance(schemas.find(kUdpHeader));
  udp.set_field("srcPort", 0xF0B1);
  udp.set_field("dstPort", 0xF0B2);
  udp.set_field("length", 8 + kHelloPayloadBytes);
  udp.set_field("checksum", 0);

  std::vector<std::uint8_t> out;
  out.reserve(kMinFrameBytes + kHelloPayloadBytes);
  encode_header(zep, out);
  encode_header(mac, out);
  encode_header(sixlo, out);
  encode_header(udp, out);
  out.push_back(config.hello_msg_type);
  for (int i = 7; i >= 0; --i)
    out.push_back(static_cast<std::uint8_t>((src_addr >> (8 * i)) & 0xFF));
  return out;
}

namespace {

struct Emitter {
  const ScenarioConfig& sc;
  std::vector<PacketRecord> records;
  std::unordered_map<std::uint64_t, std::uint32_t> next_seq;

  void emit(double ts, std::uint64_t src_addr, std::uint64_t dst_addr,
            const std::string& src_id, std::string note) {
    ts = quantize_ts(ts);
    if (ts >= sc.duration_s) return;
    std::uint32_t seq = next_seq[src_addr]++;
    records.push_back(
        {ts, make_hello_frame(sc.profile, src_addr, dst_addr, seq), src_id, std::move(note)});
  }
};

}  // namespace

std::vector<PacketRecord> generate(const ScenarioConfig& scenario) {
  scenario.validate();

  SplitMix64 prng(scenario.seed);
  Emitter em{scenario, {}, {}};

  // Legit beacons: one phase draw per beaconing node, in declaration order,
  // so the random stream is a pure function of the node list and seed.
  for (const NodeSpec& node : scenario.nodes) {
    if (node.role != NodeRole::Legit || node.hello_rate_hz <= 0.0) continue;
    double period = 1.0 / node.hello_rate_hz;
    double phase = prng.u01() * period;
    for (std::uint64_t k = 0;; ++k) {
      double t = phase + static_cast<double>(k) * period;
      if (t >= scenario.duration_s) break;
      em.emit(t, node.addr, kBroadcastAddr, node.id, "beacon");
    }
  }

  if (scenario.attack.mode != AttackMode::None && scenario.attack.flood_rate_hz > 0.0) {
    const double period = 1.0 / scenario.attack.flood_rate_hz;
    for (const NodeSpec& attacker : scenario.nodes) {
      if (attacker.role != NodeRole::Attacker) continue;

      for (std::uint64_t k = 0;; ++k) {
        double t = scenario.attack.start_s + static_cast<double>(k) * period;
        if (t >= scenario.duration_s) break;

        if (scenario.attack.mode == AttackMode::ReplyFlood) {
          em.emit(t, attacker.addr, kBroadcastAddr, attacker.id, "advert");
          // Naive nodes reply to every advertisement.
          for (const NodeSpec& node : scenario.nodes) {
            if (node.role != NodeRole::Legit) continue;
            em.emit(t + scenario.reply_delay_s, node.addr, attacker.addr, node.id, "reply");
          }
        } else if (scenario.attack.target) {  // DirectFlood, single target
          em.emit(t, attacker.addr, *scenario.attack.target, attacker.id, "flood");
        } else {  // DirectFlood at every legit node
          for (const NodeSpec& node : scenario.nodes) {
            if (node.role != NodeRole::Legit) continue;
            em.emit(t, attacker.addr, node.addr, attacker.id, "flood");
          }
        }
      }
    }
  }

  std::stable_sort(em.records.begin(), em.records.end(),
                   [](const PacketRecord& a, const PacketRecord& b) {
                     return a.timestamp_s < b.timestamp_s;
                   });
  return em.records;
}

}  // namespace fw
