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

#include "floodwatch/parser_engine.hpp"

#include <algorithm>

namespace fw {

ParseGraph::ParseGraph(std::string start, std::vector<ParseState> states)
    : start_(std::move(start)) {
  for (ParseState& s : states) {
    std::string name = s.name;
    states_.emplace(std::move(name), std::move(s));
  }
}

const ParseState* ParseGraph::state(const std::string& name) const {
  auto it = states_.find(name);
  return it == states_.end() ? nullptr : &it->second;
}

const char* parse_error_name(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::Underflow: return "Underflow";
    case ParseError::Kind::Rejected: return "Rejected";
    case ParseError::Kind::RevisitedState: return "RevisitedState";
  }
  return "ParseError";
}

namespace {

const Transition* pick_transition(const ParseState& st, const ParsedPacket& pkt,
                                  bool* missing_field) {
  if (!st.select) return &st.next;
  *missing_field = false;
  const SelectSpec& sel = *st.select;
  const HeaderInstance* h = pkt.find_header(sel.header);
  if (h == nullptr) {
    *missing_field = true;
    return nullptr;
  }
  int idx = h->def->field_index(sel.field);
  if (idx < 0) {
    *missing_field = true;
    return nullptr;
  }
  u128 v = h->values[static_cast<std::size_t>(idx)];
  for (const auto& [case_value, tr] : sel.cases)
    if (case_value == v) return &tr;
  return &sel.default_to;
}

}  // namespace

ParseResult parse(const ParseGraph& graph, const SchemaSet& schemas,
                  std::span<const std::uint8_t> raw, const PacketMeta& meta) {
  ParsedPacket pkt;
  pkt.meta = meta;
  pkt.meta.raw_len = raw.size();

  std::size_t offset = 0;
  std::vector<const ParseState*> visited;
  visited.reserve(graph.state_count());

  const ParseState* st = graph.state(graph.start());
  if (st == nullptr)
    return ParseError{ParseError::Kind::Rejected, graph.start(), 0};

  while (true) {
    if (std::find(visited.begin(), visited.end(), st) != visited.end())
      return ParseError{ParseError::Kind::RevisitedState, st->name, offset};
    visited.push_back(st);

    for (const std::string& header_name : st->extracts) {
      HeaderDefPtr def = schemas.find(header_name);
      if (!def)
        return ParseError{ParseError::Kind::Rejected, st->name, offset};
      std::size_t need = def->byte_width();
      if (raw.size() - offset < need)
        return ParseError{ParseError::Kind::Underflow, st->name, offset};
      pkt.headers.push_back(decode_header(std::move(def), raw.subspan(offset, need)));
      offset += need;
    }

    bool missing_field = false;
    const Transition* tr = pick_transition(*st, pkt, &missing_field);
    if (missing_field)
      return ParseError{ParseError::Kind::Rejected, st->name, offset};

    switch (tr->kind) {
      case Transition::Kind::Accept:
        pkt.payload.assign(raw.begin() + static_cast<std::ptrdiff_t>(offset), raw.end());
        return pkt;
      case Transition::Kind::Reject:
        return ParseError{ParseError::Kind::Rejected, st->name, offset};
      case Transition::Kind::State: {
        const ParseState* next = graph.state(tr->state);
        if (next == nullptr)
          return ParseError{ParseError::Kind::Rejected, st->name, offset};
        st = next;
        break;
      }
    }
  }
}

std::vector<std::uint8_t> deparse(const ParsedPacket& pkt) {
  std::vector<std::uint8_t> out;
  out.reserve(pkt.meta.raw_len);
  for (const HeaderInstance& h : pkt.headers) encode_header(h, out);
  out.insert(out.end(), pkt.payload.begin(), pkt.payload.end());
  return out;
}

std::vector<GraphViolation> validate_graph(const ParseGraph& graph, const SchemaSet& schemas) {
  std::vector<GraphViolation> out;
  auto check_target = [&](const Transition& tr, const std::string& from) {
    if (tr.kind == Transition::Kind::State && graph.state(tr.state) == nullptr)
      out.push_back({"DanglingState", tr.state + " (from state '" + from + "')"});
  };

  if (graph.state(graph.start()) == nullptr)
    out.push_back({"BadStart", "start state '" + graph.start() + "' is not defined"});

  for (const auto& [name, st] : graph.states()) {
    for (const std::string& h : st.extracts)
      if (!schemas.find(h))
        out.push_back({"UnknownHeader", h + " (extracted in state '" + name + "')"});

    if (st.select) {
      const SelectSpec& sel = *st.select;
      int width = -1;
      HeaderDefPtr def = schemas.find(sel.header);
      if (!def) {
        out.push_back({"UnknownHeader", sel.header + " (selected on in state '" + name + "')"});
      } else {
        int idx = def->field_index(sel.field);
        if (idx < 0)
          out.push_back({"UnknownField", sel.header + "." + sel.field +
                                             " (selected on in state '" + name + "')"});
        else
          width = def->fields()[static_cast<std::size_t>(idx)].width_bits;
      }
      for (const auto& [case_value, tr] : sel.cases) {
        if (width > 0 && width < 128 && case_value > width_mask(width))
          out.push_back({"CaseOverflow",
                         to_hex(case_value) + " exceeds " + std::to_string(width) +
                             "-bit field " + sel.header + "." + sel.field});
        check_target(tr, name);
      }
      check_target(sel.default_to, name);
    } else {
      check_target(st.next, name);
    }
  }
  return out;
}

}  // namespace fw
