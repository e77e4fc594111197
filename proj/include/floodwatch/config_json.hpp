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

#ifndef FLOODWATCH_CONFIG_JSON_HPP_
#define FLOODWATCH_CONFIG_JSON_HPP_

#include <string>
#include <vector>

#include "floodwatch/parser_engine.hpp"
#include "floodwatch/simnet.hpp"

namespace fw {

// JSON shapes:
//   header schema   {"name":"ZEP","fields":[{"name":"protoIDstring","bits":16}, ...]}
//                   or an array of such objects
//   parse graph     {"start":"start","states":{"zigbee":{"extract":["ZEP"],
//                     "select":{"on":"ZEP.protoIDstring","cases":{"0x4558":"ieee802154"},
//                     "default":"REJECT"}}, ...}}
//   profile         {"theta":50,"window_s":1.0,"zep_proto_id":"0x4558",
//                    "hello_msg_type":"0x01","counter_capacity":512}
//   scenario        ScenarioConfig field names, addresses as hex strings,
//                   attack target "ALL" or an address.
// All loaders throw BadConfigFile with a precise complaint.

std::vector<HeaderDefPtr> parse_schema_json(const std::string& text);
std::vector<HeaderDefPtr> load_schema_file(const std::string& path);

ParseGraph parse_graph_json(const std::string& text);
ParseGraph load_graph_file(const std::string& path);

// Applies the keys present in `text` on top of `base`.
ProfileConfig parse_profile_json(const std::string& text, ProfileConfig base = {});

ScenarioConfig parse_scenario_json(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);

std::string read_text_file(const std::string& path);  // throws IoFailure

}  // namespace fw

#endif  // FLOODWATCH_CONFIG_JSON_HPP_
