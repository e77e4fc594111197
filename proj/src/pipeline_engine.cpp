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

#include "floodwatch/pipeline_engine.hpp"

#include <algorithm>

namespace fw {

std::string action_name(const ActionSpec& a) {
  struct Visitor {
    std::string operator()(const ActNop&) const { return "nop"; }
    std::string operator()(const ActCounterIncr& v) const { return "counter_incr(" + v.counter + ")"; }
    std::string operator()(const ActSetField& v) const {
      return "set_field(" + v.header + "." + v.field + ")";
    }
    std::string operator()(const ActDrop&) const { return "drop"; }
    std::string operator()(const ActForward& v) const {
      return "forward(" + std::to_string(v.port) + ")";
    }
    std::string operator()(const ActToController& v) const {
      return "to_controller(" + v.reason + ")";
    }
  };
  return std::visit(Visitor{}, a);
}

const char* verdict_name(PacketVerdict::Kind k) {
  switch (k) {
    case PacketVerdict::Kind::Forward: return "forward";
    case PacketVerdict::Kind::Drop: return "drop";
    case PacketVerdict::Kind::ForwardWithCopy: return "forward_with_copy";
  }
  return "verdict";
}

// ----- KeyedCounter ---------------------------------------------------------

KeyedCounter::KeyedCounter(std::string name, std::size_t capacity, double window_s)
    : name_(std::move(name)), capacity_(capacity), window_s_(window_s) {
  if (capacity_ < 1 || !(window_s_ > 0.0))
    throw Error(Errc::ConfigInvalid, "counter '" + name_ + "' needs capacity >= 1 and window > 0");
}

std::optional<CounterHit> KeyedCounter::increment(u128 key, double timestamp_s) {
  std::int64_t w = window_index_of(timestamp_s, window_s_);
  auto it = cells_.find(key);
  if (it == cells_.end()) {
    if (cells_.size() >= capacity_) {
      ++capacity_skips_;
      return std::nullopt;
    }
    it = cells_.emplace(key, Cell{0, w}).first;
  }
  Cell& cell = it->second;
  if (cell.window_index != w) {
    cell.count = 0;
    cell.window_index = w;
  }
  ++cell.count;
  return CounterHit{cell.count, cell.window_index};
}

std::vector<CounterSnapshotEntry> KeyedCounter::snapshot() const {
  std::vector<CounterSnapshotEntry> out;
  out.reserve(cells_.size());
  for (const auto& [key, cell] : cells_)
    out.push_back({key, cell.count, cell.window_index});
  std::sort(out.begin(), out.end(),
            [](const CounterSnapshotEntry& a, const CounterSnapshotEntry& b) {
              return a.key < b.key;
            });
  return out;
}

// ----- Table ------------------------------------------------------------------

Table::Table(std::string name, TableKey key, std::size_t max_size, ActionSpec default_action)
    : name_(std::move(name)),
      key_(std::move(key)),
      max_size_(max_size),
      default_action_(std::move(default_action)) {
  if (max_size_ < 1)
    throw Error(Errc::ConfigInvalid, "table '" + name_ + "' needs max_size >= 1");
}

void Table::set_auto_learn(ActionSpec learn_action) {
  auto_learn_ = true;
  learn_action_ = std::move(learn_action);
}

void Table::exclude_key(u128 key) { excluded_keys_.push_back(key); }

bool Table::is_excluded(u128 key) const {
  return std::find(excluded_keys_.begin(), excluded_keys_.end(), key) != excluded_keys_.end();
}

void Table::install(u128 key, ActionSpec action) {
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    it->second = std::move(action);  // overwrite keeps the size bound intact
    return;
  }
  if (entries_.size() >= max_size_)
    throw Error(Errc::TableFull,
                "table '" + name_ + "' holds " + std::to_string(max_size_) + " entries");
  entries_.emplace(key, std::move(action));
}

const ActionSpec* Table::lookup(u128 key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const ActionSpec& Table::apply(u128 key) {
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    ++stats_.hits;
    return it->second;
  }
  ++stats_.misses;
  if (auto_learn_) {
    if (entries_.size() < max_size_)
      return entries_.emplace(key, learn_action_).first->second;
    ++stats_.full_drops;
  }
  return default_action_;
}

// ----- packet processing ------------------------------------------------------

namespace {

struct IngressContext {
  SwitchState& sw;
  ParsedPacket& pkt;
  PacketVerdict& verdict;
  bool dropped = false;
};

void note(PacketVerdict& verdict, const SwitchState& sw, double ts, std::string reason) {
  verdict.events.push_back(Diagnostic{sw.id, ts, std::move(reason)});
}

void run_action(IngressContext& ctx, const ActionSpec& action, u128 key) {
  SwitchState& sw = ctx.sw;
  double ts = ctx.pkt.meta.timestamp_s;

  if (std::holds_alternative<ActNop>(action)) return;

  if (const auto* incr = std::get_if<ActCounterIncr>(&action)) {
    auto cit = sw.counters.find(incr->counter);
    if (cit == sw.counters.end()) {
      note(ctx.verdict, sw, ts, "unknown counter '" + incr->counter + "'");
      return;
    }
    std::optional<CounterHit> hit = cit->second.increment(key, ts);
    if (hit && sw.detector) {
      if (std::optional<Alert> alert = sw.detector(ctx.pkt, key, *hit, ts)) {
        alert->switch_id = sw.id;
        ctx.verdict.events.push_back(std::move(*alert));
      }
    }
    return;
  }

  if (const auto* setf = std::get_if<ActSetField>(&action)) {
    HeaderInstance* h = ctx.pkt.find_header(setf->header);
    if (h == nullptr) {
      note(ctx.verdict, sw, ts, "set_field target header '" + setf->header + "' absent");
      return;
    }
    h->set_field(setf->field, setf->value);
    return;
  }

  if (std::holds_alternative<ActDrop>(action)) {
    ctx.dropped = true;
    return;
  }

  if (const auto* fwd = std::get_if<ActForward>(&action)) {
    ctx.verdict.egress_port = fwd->port;
    return;
  }

  if (const auto* toc = std::get_if<ActToController>(&action)) {
    ctx.verdict.kind = PacketVerdict::Kind::ForwardWithCopy;
    note(ctx.verdict, sw, ts, "to_controller: " + toc->reason);
    return;
  }
}

// Resolves the table key against the extracted headers, then applies the
// table. A missing key header is a miss with the default action plus a
// diagnostic.
void apply_table_in_pipeline(IngressContext& ctx, Table& table) {
  const TableKey& keyref = table.key();
  const HeaderInstance* h = ctx.pkt.find_header(keyref.header);
  int field_idx = h ? h->def->field_index(keyref.field) : -1;
  if (field_idx < 0) {
    note(ctx.verdict, ctx.sw, ctx.pkt.meta.timestamp_s,
         "table '" + table.name() + "': key field " + keyref.header + "." + keyref.field +
             " absent");
    ActionSpec def = table.default_action();
    run_action(ctx, def, 0);
    return;
  }
  u128 key = h->values[static_cast<std::size_t>(field_idx)];
  if (table.is_excluded(key)) return;
  // The returned reference can be invalidated by rehash if an action mutated
  // the same table, so take a copy before running it.
  ActionSpec action = table.apply(key);
  run_action(ctx, action, key);
}

}  // namespace

ProcessResult process_packet(SwitchState& sw, std::span<const std::uint8_t> raw,
                             const PacketMeta& meta) {
  auto trace = [&](std::string_view stage) {
    if (sw.stage_trace) sw.stage_trace->emplace_back(stage);
  };

  ProcessResult result;
  PacketVerdict& verdict = result.verdict;

  trace(kPipelineStages[0]);  // Parser
  ParseResult parsed = parse(sw.graph, sw.schemas, raw, meta);
  if (const ParseError* err = std::get_if<ParseError>(&parsed)) {
    verdict.kind = PacketVerdict::Kind::Drop;
    verdict.events.push_back(ParseFailed{
        sw.id, meta.timestamp_s,
        std::string(parse_error_name(err->kind)) + " at state '" + err->at_state +
            "' offset " + std::to_string(err->offset_bytes)});
    return result;
  }
  ParsedPacket& pkt = std::get<ParsedPacket>(parsed);
  verdict.egress_port = sw.default_port;

  trace(kPipelineStages[1]);  // VerifyChecksum
  if (sw.verify_checksum_hook) sw.verify_checksum_hook(pkt);

  trace(kPipelineStages[2]);  // Ingress
  IngressContext ctx{sw, pkt, verdict};
  for (const std::string& table_name : sw.ingress_tables) {
    auto it = sw.tables.find(table_name);
    if (it == sw.tables.end()) {
      note(verdict, sw, meta.timestamp_s, "ingress references unknown table '" + table_name + "'");
      continue;
    }
    apply_table_in_pipeline(ctx, it->second);
    if (ctx.dropped) break;
  }

  if (ctx.dropped) {
    verdict.kind = PacketVerdict::Kind::Drop;
    result.parsed = std::move(pkt);
    return result;
  }

  trace(kPipelineStages[3]);  // Egress
  if (sw.egress_hook) sw.egress_hook(pkt);

  trace(kPipelineStages[4]);  // ComputeChecksum
  if (sw.compute_checksum_hook) sw.compute_checksum_hook(pkt);

  trace(kPipelineStages[5]);  // Deparser
  result.output = deparse(pkt);
  result.parsed = std::move(pkt);
  return result;
}

namespace {

void validate_action(const SwitchState& sw, const ActionSpec& action) {
  if (const auto* incr = std::get_if<ActCounterIncr>(&action)) {
    if (sw.counters.find(incr->counter) == sw.counters.end())
      throw Error(Errc::ActionInvalid, "counter '" + incr->counter + "' does not exist");
    return;
  }
  if (const auto* setf = std::get_if<ActSetField>(&action)) {
    HeaderDefPtr def = sw.schemas.find(setf->header);
    if (!def)
      throw Error(Errc::ActionInvalid, "set_field header '" + setf->header + "' unknown");
    int idx = def->field_index(setf->field);
    if (idx < 0)
      throw Error(Errc::ActionInvalid,
                  "set_field field '" + setf->header + "." + setf->field + "' unknown");
    int width = def->fields()[static_cast<std::size_t>(idx)].width_bits;
    if (width < 128 && setf->value > width_mask(width))
      throw Error(Errc::ActionInvalid, "set_field value overflows " + std::to_string(width) +
                                           "-bit field '" + setf->field + "'");
    return;
  }
  if (const auto* fwd = std::get_if<ActForward>(&action)) {
    if (fwd->port < 0)
      throw Error(Errc::ActionInvalid, "negative forward port");
    return;
  }
}

}  // namespace

void install_entry(SwitchState& sw, const std::string& table_name, u128 key,
                   ActionSpec action) {
  auto it = sw.tables.find(table_name);
  if (it == sw.tables.end())
    throw Error(Errc::NoSuchTable, "'" + table_name + "'");
  validate_action(sw, action);
  it->second.install(key, std::move(action));
}

std::vector<CounterSnapshotEntry> read_counters(const SwitchState& sw,
                                                const std::string& counter_name) {
  auto it = sw.counters.find(counter_name);
  if (it == sw.counters.end())
    throw Error(Errc::NoSuchCounter, "'" + counter_name + "'");
  return it->second.snapshot();
}

}  // namespace fw
