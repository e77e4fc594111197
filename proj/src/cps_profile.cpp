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

#include "floodwatch/cps_profile.hpp"

namespace fw {

void ProfileConfig::validate() const {
  if (theta < 1)
    throw Error(Errc::ConfigInvalid, "theta must be >= 1");
  if (!(window_s > 0.0))
    throw Error(Errc::ConfigInvalid, "window_s must be > 0");
  if (counter_capacity < 1)
    throw Error(Errc::ConfigInvalid, "counter_capacity must be >= 1");
}

SchemaSet build_schema_set() {
  SchemaSet schemas;
  schemas.add(define_header(std::string(kZepHeader),
                            {{"protoIDstring", 16},
                             {"version", 8},
                             {"type", 8},
                             {"channelId", 8},
                             {"deviceId", 16},
                             {"lqiMode", 8},
                             {"lqi", 8},
                             {"seq", 32}}));
  schemas.add(define_header(std::string(kIeee802154Header),
                            {{"framecontrol", 16},
                             {"seqnumber", 8},
                             {"destPAN", 16},
                             {"destination", 48},
                             {"extendSrc", 48},
                             {"fcs", 16}}));
  schemas.add(define_header(std::string(kSixLowpanHeader),
                            {{"dispatch", 8}, {"hopLimit", 8}, {"src", 64}, {"dst", 64}}));
  schemas.add(define_header(std::string(kUdpHeader),
                            {{"srcPort", 16}, {"dstPort", 16}, {"length", 16}, {"checksum", 16}}));
  return schemas;
}

ParseGraph build_parse_graph(const ProfileConfig& config) {
  std::vector<ParseState> states;

  ParseState start;
  start.name = "start";
  start.next = Transition::to("zigbee");
  states.push_back(std::move(start));

  ParseState zigbee;
  zigbee.name = "zigbee";
  zigbee.extracts = {std::string(kZepHeader)};
  SelectSpec sel;
  sel.header = std::string(kZepHeader);
  sel.field = "protoIDstring";
  sel.cases = {{u128{config.zep_proto_id}, Transition::to("ieee802154")}};
  sel.default_to = Transition::reject();
  zigbee.select = std::move(sel);
  states.push_back(std::move(zigbee));

  ParseState ieee;
  ieee.name = "ieee802154";
  ieee.extracts = {std::string(kIeee802154Header)};
  ieee.next = Transition::to("sixlowpan");
  states.push_back(std::move(ieee));

  ParseState sixlowpan;
  sixlowpan.name = "sixlowpan";
  sixlowpan.extracts = {std::string(kSixLowpanHeader)};
  sixlowpan.next = Transition::to("udp");
  states.push_back(std::move(sixlowpan));

  ParseState udp;
  udp.name = "udp";
  udp.extracts = {std::string(kUdpHeader)};
  udp.next = Transition::accept();
  states.push_back(std::move(udp));

  return ParseGraph("start", std::move(states));
}

Profile build_profile(const ProfileConfig& config) {
  config.validate();

  Profile p;
  p.config = config;
  p.schemas = build_schema_set();
  p.graph = build_parse_graph(config);

  TableKey dst_key{std::string(kSixLowpanHeader), "dst"};

  // Mitigation runs before counting so dropped attack traffic cannot keep
  // inflating counters and re-alerting.
  Table blocklist(std::string(kBlocklistTable), dst_key, 512, ActNop{});
  p.tables.push_back(std::move(blocklist));

  Table dst_counter(std::string(kDstCounterTable), dst_key, config.counter_capacity, ActNop{});
  dst_counter.set_auto_learn(ActCounterIncr{std::string(kDstCounter)});
  // A shared broadcast address would trivially self-flag; never count it.
  dst_counter.exclude_key(u128{kBroadcastAddr});
  p.tables.push_back(std::move(dst_counter));

  p.counters.emplace_back(std::string(kDstCounter), config.counter_capacity, config.window_s);
  return p;
}

SwitchState make_switch(std::string switch_id, const ProfileConfig& config) {
  Profile p = build_profile(config);

  SwitchState sw;
  sw.id = std::move(switch_id);
  sw.schemas = std::move(p.schemas);
  sw.graph = std::move(p.graph);
  for (Table& t : p.tables) {
    sw.ingress_tables.push_back(t.name());
    sw.tables.emplace(t.name(), std::move(t));
  }
  for (KeyedCounter& c : p.counters) sw.counters.emplace(c.name(), std::move(c));

  ProfileConfig cfg = config;
  sw.detector = [cfg](const ParsedPacket& pkt, u128 key, const CounterHit& hit,
                      double ts) -> std::optional<Alert> {
    if (key == u128{kBroadcastAddr}) return std::nullopt;
    if (!classify_hello(pkt, cfg)) return std::nullopt;
    return detect(static_cast<std::uint64_t>(key), hit.count, hit.window_index, ts, cfg);
  };
  return sw;
}

bool classify_hello(const ParsedPacket& pkt, const ProfileConfig& config) {
  if (pkt.headers.size() != 4) return false;
  for (const HeaderInstance& h : pkt.headers)
    if (!h.valid) return false;
  return !pkt.payload.empty() && pkt.payload[0] == config.hello_msg_type;
}

std::optional<Alert> detect(std::uint64_t dst, std::uint64_t post_increment_count,
                            std::int64_t window_index, double timestamp_s,
                            const ProfileConfig& config) {
  if (post_increment_count != config.theta) return std::nullopt;
  Alert alert;
  alert.dst_addr = dst;
  alert.count = post_increment_count;
  alert.window_index = window_index;
  alert.timestamp_s = timestamp_s;
  return alert;
}

}  // namespace fw
