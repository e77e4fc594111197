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

#ifndef FLOODWATCH_CPS_PROFILE_HPP_
#define FLOODWATCH_CPS_PROFILE_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "floodwatch/pipeline_engine.hpp"

namespace fw {

// The concrete sensor-network instantiation: ZEP-encapsulated IEEE 802.15.4
// frames carrying a simplified 6LoWPAN + UDP stack and a one-byte-typed HELLO
// payload. A per-destination counter table feeds threshold flood detection.

// Protocol-ID constants for the ZEP gate. The ASCII "EX" preamble is the
// default; the alternate constant is accepted equipment-side in some captures
// and stays selectable.
inline constexpr std::uint16_t kZepProtoIdEx = 0x4558;
inline constexpr std::uint16_t kZepProtoIdAlt = 0x4548;

struct ProfileConfig {
  std::uint16_t zep_proto_id = kZepProtoIdEx;
  std::uint8_t hello_msg_type = 0x01;
  std::uint64_t theta = 50;          // alerts fire when a window count reaches this
  double window_s = 1.0;
  std::size_t counter_capacity = 512;

  void validate() const;  // throws ConfigInvalid
};

// Header names registered by the profile.
inline constexpr std::string_view kZepHeader = "ZEP";
inline constexpr std::string_view kIeee802154Header = "IEEE802154";
inline constexpr std::string_view kSixLowpanHeader = "SixLoWPAN";
inline constexpr std::string_view kUdpHeader = "UDP";

inline constexpr std::string_view kBlocklistTable = "blocklist";
inline constexpr std::string_view kDstCounterTable = "dstnodecounter";
inline constexpr std::string_view kDstCounter = "dstnodecounter";

// ZEP(13) + IEEE802154(19) + SixLoWPAN(18) + UDP(8)
inline constexpr std::size_t kMinFrameBytes = 58;

// Everything the pipeline needs to run the workflow on one switch.
struct Profile {
  ProfileConfig config;
  SchemaSet schemas;
  ParseGraph graph;
  std::vector<Table> tables;          // blocklist first, then dstnodecounter
  std::vector<KeyedCounter> counters; // dstnodecounter
};

// Registers the four header layouts, the linear parse graph gated on
// ZEP.protoIDstring, the blocklist and destination-counter tables and the
// windowed counter. Throws ConfigInvalid.
Profile build_profile(const ProfileConfig& config);

SchemaSet build_schema_set();
ParseGraph build_parse_graph(const ProfileConfig& config);

// Assembles a ready switch from a profile, wiring the HELLO detector.
SwitchState make_switch(std::string switch_id, const ProfileConfig& config);

// True iff the packet carries the full four-header stack and its payload
// starts with the configured HELLO message type.
bool classify_hello(const ParsedPacket& pkt, const ProfileConfig& config);

// Threshold check on a post-increment count: an alert exactly when the count
// crosses theta, which yields one alert per (dst, window).
std::optional<Alert> detect(std::uint64_t dst, std::uint64_t post_increment_count,
                            std::int64_t window_index, double timestamp_s,
                            const ProfileConfig& config);

}  // namespace fw

#endif  // FLOODWATCH_CPS_PROFILE_HPP_
