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

#include "floodwatch/config_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fw {

using nlohmann::json;

namespace {

json must_parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(Errc::BadConfigFile, "malformed JSON");
  return j;
}

// Numeric config values may arrive as JSON numbers or as hex strings.
std::uint64_t get_number(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0)
      throw Error(Errc::BadConfigFile, what + " must be non-negative");
    return static_cast<std::uint64_t>(v);
  }
  if (j.is_string()) return parse_u64(j.get<std::string>());
  throw Error(Errc::BadConfigFile, what + " must be a number or a hex string");
}

double get_real(const json& j, const std::string& what) {
  if (!j.is_number())
    throw Error(Errc::BadConfigFile, what + " must be a number");
  return j.get<double>();
}

HeaderDefPtr header_from_json(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("fields"))
    throw Error(Errc::BadConfigFile, "header schema needs 'name' and 'fields'");
  std::vector<FieldDef> fields;
  for (const json& f : j.at("fields")) {
    if (!f.contains("name") || !f.contains("bits"))
      throw Error(Errc::BadConfigFile, "schema field needs 'name' and 'bits'");
    fields.push_back({f.at("name").get<std::string>(),
                      static_cast<int>(get_number(f.at("bits"), "field bits"))});
  }
  try {
    return define_header(j.at("name").get<std::string>(), std::move(fields));
  } catch (const Error& e) {
    throw Error(Errc::BadConfigFile, e.what());
  }
}

Transition transition_from_string(const std::string& s) {
  if (s == "ACCEPT") return Transition::accept();
  if (s == "REJECT") return Transition::reject();
  return Transition::to(s);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw Error(Errc::IoFailure, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<HeaderDefPtr> parse_schema_json(const std::string& text) {
  json j = must_parse(text);
  std::vector<HeaderDefPtr> out;
  if (j.is_array())
    for (const json& h : j) out.push_back(header_from_json(h));
  else
    out.push_back(header_from_json(j));
  return out;
}

std::vector<HeaderDefPtr> load_schema_file(const std::string& path) {
  return parse_schema_json(read_text_file(path));
}

ParseGraph parse_graph_json(const std::string& text) {
  json j = must_parse(text);
  if (!j.is_object() || !j.contains("start") || !j.contains("states"))
    throw Error(Errc::BadConfigFile, "parse graph needs 'start' and 'states'");

  std::vector<ParseState> states;
  for (const auto& [name, body] : j.at("states").items()) {
    ParseState st;
    st.name = name;
    if (body.contains("extract"))
      for (const json& h : body.at("extract")) st.extracts.push_back(h.get<std::string>());

    if (body.contains("select")) {
      const json& s = body.at("select");
      if (!s.contains("on"))
        throw Error(Errc::BadConfigFile, "state '" + name + "': select needs 'on'");
      std::string on = s.at("on").get<std::string>();
      std::size_t dot = on.find('.');
      if (dot == std::string::npos)
        throw Error(Errc::BadConfigFile,
                    "state '" + name + "': select 'on' must be Header.field");
      SelectSpec sel;
      sel.header = on.substr(0, dot);
      sel.field = on.substr(dot + 1);
      if (s.contains("cases"))
        for (const auto& [value, target] : s.at("cases").items())
          sel.cases.emplace_back(parse_u128(value),
                                 transition_from_string(target.get<std::string>()));
      if (s.contains("default"))
        sel.default_to = transition_from_string(s.at("default").get<std::string>());
      st.select = std::move(sel);
    } else if (body.contains("next")) {
      st.next = transition_from_string(body.at("next").get<std::string>());
    }
    states.push_back(std::move(st));
  }
  return ParseGraph(j.at("start").get<std::string>(), std::move(states));
}

ParseGraph load_graph_file(const std::string& path) {
  return parse_graph_json(read_text_file(path));
}

ProfileConfig parse_profile_json(const std::string& text, ProfileConfig base) {
  json j = must_parse(text);
  if (!j.is_object())
    throw Error(Errc::BadConfigFile, "profile must be a JSON object");
  if (j.contains("zep_proto_id"))
    base.zep_proto_id = static_cast<std::uint16_t>(get_number(j.at("zep_proto_id"), "zep_proto_id"));
  if (j.contains("hello_msg_type"))
    base.hello_msg_type =
        static_cast<std::uint8_t>(get_number(j.at("hello_msg_type"), "hello_msg_type"));
  if (j.contains("theta")) base.theta = get_number(j.at("theta"), "theta");
  if (j.contains("window_s")) base.window_s = get_real(j.at("window_s"), "window_s");
  if (j.contains("counter_capacity"))
    base.counter_capacity =
        static_cast<std::size_t>(get_number(j.at("counter_capacity"), "counter_capacity"));
  return base;
}

ScenarioConfig parse_scenario_json(const std::string& text) {
  json j = must_parse(text);
  if (!j.is_object())
    throw Error(Errc::BadConfigFile, "scenario must be a JSON object");

  ScenarioConfig sc;
  if (!j.contains("duration_s") || !j.contains("nodes"))
    throw Error(Errc::BadConfigFile, "scenario needs 'duration_s' and 'nodes'");
  sc.duration_s = get_real(j.at("duration_s"), "duration_s");
  if (j.contains("seed")) sc.seed = get_number(j.at("seed"), "seed");
  if (j.contains("reply_delay_s"))
    sc.reply_delay_s = get_real(j.at("reply_delay_s"), "reply_delay_s");

  for (const json& n : j.at("nodes")) {
    NodeSpec node;
    if (!n.contains("id") || !n.contains("addr") || !n.contains("role"))
      throw Error(Errc::BadConfigFile, "node needs 'id', 'addr' and 'role'");
    node.id = n.at("id").get<std::string>();
    node.addr = get_number(n.at("addr"), "node addr");
    std::string role = n.at("role").get<std::string>();
    if (role == "LEGIT")
      node.role = NodeRole::Legit;
    else if (role == "ATTACKER")
      node.role = NodeRole::Attacker;
    else if (role == "BASESTATION")
      node.role = NodeRole::Basestation;
    else
      throw Error(Errc::BadConfigFile, "unknown node role '" + role + "'");
    if (n.contains("hello_rate_hz"))
      node.hello_rate_hz = get_real(n.at("hello_rate_hz"), "hello_rate_hz");
    sc.nodes.push_back(std::move(node));
  }

  if (j.contains("attack") && !j.at("attack").is_null()) {
    const json& a = j.at("attack");
    std::string mode = a.value("mode", "NONE");
    if (mode == "NONE")
      sc.attack.mode = AttackMode::None;
    else if (mode == "REPLY_FLOOD")
      sc.attack.mode = AttackMode::ReplyFlood;
    else if (mode == "DIRECT_FLOOD")
      sc.attack.mode = AttackMode::DirectFlood;
    else
      throw Error(Errc::BadConfigFile, "unknown attack mode '" + mode + "'");
    if (a.contains("flood_rate_hz"))
      sc.attack.flood_rate_hz = get_real(a.at("flood_rate_hz"), "flood_rate_hz");
    if (a.contains("start_s")) sc.attack.start_s = get_real(a.at("start_s"), "start_s");
    if (a.contains("target") && !a.at("target").is_null()) {
      if (a.at("target").is_string() && a.at("target").get<std::string>() == "ALL")
        sc.attack.target = std::nullopt;
      else
        sc.attack.target = get_number(a.at("target"), "attack target");
    }
  }

  if (j.contains("profile") && !j.at("profile").is_null())
    sc.profile = parse_profile_json(j.at("profile").dump(), sc.profile);
  return sc;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  return parse_scenario_json(read_text_file(path));
}

}  // namespace fw
