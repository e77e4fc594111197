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

#ifndef FLOODWATCH_PARSER_ENGINE_HPP_
#define FLOODWATCH_PARSER_ENGINE_HPP_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "floodwatch/header_schema.hpp"

namespace fw {

// Where a parse state hands off to next.
struct Transition {
  enum class Kind { State, Accept, Reject };
  Kind kind = Kind::Accept;
  std::string state;  // set when kind == State

  static Transition to(std::string name) { return {Kind::State, std::move(name)}; }
  static Transition accept() { return {Kind::Accept, {}}; }
  static Transition reject() { return {Kind::Reject, {}}; }
};

// Exact-value branch on one extracted field. A value with no matching case
// follows default_to, which is REJECT unless configured otherwise.
struct SelectSpec {
  std::string header;
  std::string field;
  std::vector<std::pair<u128, Transition>> cases;
  Transition default_to = Transition::reject();
};

// One parse state: extract zero or more headers, then either branch on a
// field value or take the unconditional transition. A state with no extracts
// is a pure dispatch state.
struct ParseState {
  std::string name;
  std::vector<std::string> extracts;
  std::optional<SelectSpec> select;
  Transition next = Transition::accept();  // used when select is absent
};

class ParseGraph {
 public:
  ParseGraph() = default;
  ParseGraph(std::string start, std::vector<ParseState> states);

  const std::string& start() const { return start_; }
  const ParseState* state(const std::string& name) const;
  const std::map<std::string, ParseState>& states() const { return states_; }
  std::size_t state_count() const { return states_.size(); }

 private:
  std::string start_;
  std::map<std::string, ParseState> states_;
};

struct ParseError {
  enum class Kind { Underflow, Rejected, RevisitedState };
  Kind kind = Kind::Rejected;
  std::string at_state;
  std::size_t offset_bytes = 0;
};

const char* parse_error_name(ParseError::Kind k);

using ParseResult = std::variant<ParsedPacket, ParseError>;

// Runs the graph over raw bytes. Headers come out in extraction order, the
// unconsumed tail becomes the payload, and meta is carried through with
// raw_len set to the input size. Each state runs at most once per packet, so
// the walk terminates on every input.
ParseResult parse(const ParseGraph& graph, const SchemaSet& schemas,
                  std::span<const std::uint8_t> raw, const PacketMeta& meta);

// Inverse of parse: header encodings in order, then the payload.
// Throws InvalidHeader.
std::vector<std::uint8_t> deparse(const ParsedPacket& pkt);

struct GraphViolation {
  std::string kind;    // DanglingState | UnknownHeader | UnknownField | CaseOverflow | BadStart
  std::string detail;
};

// Static checks; violations are data, not errors.
std::vector<GraphViolation> validate_graph(const ParseGraph& graph, const SchemaSet& schemas);

}  // namespace fw

#endif  // FLOODWATCH_PARSER_ENGINE_HPP_
