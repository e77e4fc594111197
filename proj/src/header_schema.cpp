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

#include "floodwatch/header_schema.hpp"

#include "floodwatch/bitcodec.hpp"

namespace fw {

HeaderDef::HeaderDef(std::string name, std::vector<FieldDef> fields)
    : name_(std::move(name)), fields_(std::move(fields)) {
  if (fields_.empty())
    throw Error(Errc::NotByteAligned, "header '" + name_ + "' has no fields");
  int off = 0;
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    const FieldDef& f = fields_[i];
    if (f.width_bits < 1 || f.width_bits > 128)
      throw Error(Errc::WidthOutOfRange,
                  "field '" + f.name + "' width " + std::to_string(f.width_bits));
    if (!index_.emplace(f.name, static_cast<int>(i)).second)
      throw Error(Errc::DuplicateField, "field '" + f.name + "' in header '" + name_ + "'");
    bit_offsets_.push_back(off);
    off += f.width_bits;
  }
  if (off % 8 != 0)
    throw Error(Errc::NotByteAligned,
                "header '" + name_ + "' is " + std::to_string(off) + " bits");
  total_bits_ = off;
}

int HeaderDef::field_index(std::string_view field) const {
  auto it = index_.find(std::string(field));
  return it == index_.end() ? -1 : it->second;
}

u128 HeaderInstance::get_field(std::string_view field) const {
  if (!valid)
    throw Error(Errc::InvalidHeader, "read from invalid header '" + def->name() + "'");
  int idx = def->field_index(field);
  if (idx < 0)
    throw Error(Errc::NoSuchField, std::string(field) + " in header '" + def->name() + "'");
  return values[static_cast<std::size_t>(idx)];
}

void HeaderInstance::set_field(std::string_view field, u128 value) {
  int idx = def->field_index(field);
  if (idx < 0)
    throw Error(Errc::NoSuchField, std::string(field) + " in header '" + def->name() + "'");
  const FieldDef& f = def->fields()[static_cast<std::size_t>(idx)];
  if (f.width_bits < 128 && value > width_mask(f.width_bits))
    throw Error(Errc::ValueOverflow,
                "value does not fit " + std::to_string(f.width_bits) + " bits of '" +
                    f.name + "'");
  values[static_cast<std::size_t>(idx)] = value;
}

HeaderInstance make_instance(HeaderDefPtr def) {
  HeaderInstance inst;
  inst.values.assign(def->fields().size(), 0);
  inst.def = std::move(def);
  return inst;
}

HeaderInstance decode_header(HeaderDefPtr def, std::span<const std::uint8_t> bytes) {
  HeaderInstance inst;
  inst.values.reserve(def->fields().size());
  for (std::size_t i = 0; i < def->fields().size(); ++i) {
    inst.values.push_back(read_bits(bytes, def->bit_offset(static_cast<int>(i)),
                                    def->fields()[i].width_bits));
  }
  inst.def = std::move(def);
  return inst;
}

void encode_header(const HeaderInstance& inst, std::vector<std::uint8_t>& out) {
  if (!inst.valid)
    throw Error(Errc::InvalidHeader, "deparse of invalid header '" + inst.def->name() + "'");
  std::size_t start = out.size();
  out.resize(start + inst.def->byte_width(), 0);
  std::span<std::uint8_t> region{out.data() + start, inst.def->byte_width()};
  for (std::size_t i = 0; i < inst.def->fields().size(); ++i) {
    write_bits(region, inst.def->bit_offset(static_cast<int>(i)),
               inst.def->fields()[i].width_bits, inst.values[i]);
  }
}

const HeaderInstance* ParsedPacket::find_header(std::string_view name) const {
  for (const HeaderInstance& h : headers)
    if (h.valid && h.def->name() == name) return &h;
  return nullptr;
}

HeaderInstance* ParsedPacket::find_header(std::string_view name) {
  for (HeaderInstance& h : headers)
    if (h.valid && h.def->name() == name) return &h;
  return nullptr;
}

void SchemaSet::add(HeaderDefPtr def) {
  defs_[def->name()] = std::move(def);
}

HeaderDefPtr SchemaSet::find(std::string_view name) const {
  auto it = defs_.find(std::string(name));
  return it == defs_.end() ? nullptr : it->second;
}

}  // namespace fw
