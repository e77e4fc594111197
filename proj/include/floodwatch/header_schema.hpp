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

#ifndef FLOODWATCH_HEADER_SCHEMA_HPP_
#define FLOODWATCH_HEADER_SCHEMA_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "floodwatch/common.hpp"

namespace fw {

// One named bit-field of a header layout. Widths run 1..128 bits.
struct FieldDef {
  std::string name;
  int width_bits = 0;
};

// A declarative header layout: an ordered sequence of bit-fields whose total
// width is a whole number of bytes. Field order is significant; two layouts
// with the same fields in a different order serialize differently.
// Immutable once constructed and freely shareable across threads.
class HeaderDef {
 public:
  // Throws DuplicateField / WidthOutOfRange / NotByteAligned.
  HeaderDef(std::string name, std::vector<FieldDef> fields);

  const std::string& name() const { return name_; }
  const std::vector<FieldDef>& fields() const { return fields_; }
  int total_width_bits() const { return total_bits_; }
  std::size_t byte_width() const { return static_cast<std::size_t>(total_bits_) / 8; }

  // -1 when the field does not exist.
  int field_index(std::string_view field) const;
  int bit_offset(int field_idx) const { return bit_offsets_[static_cast<std::size_t>(field_idx)]; }

 private:
  std::string name_;
  std::vector<FieldDef> fields_;
  std::vector<int> bit_offsets_;
  std::unordered_map<std::string, int> index_;
  int total_bits_ = 0;
};

using HeaderDefPtr = std::shared_ptr<const HeaderDef>;

inline HeaderDefPtr define_header(std::string name, std::vector<FieldDef> fields) {
  return std::make_shared<const HeaderDef>(std::move(name), std::move(fields));
}

// A parsed (or constructed) instance of a header: one value per field.
struct HeaderInstance {
  HeaderDefPtr def;
  std::vector<u128> values;  // indexed like def->fields()
  bool valid = true;

  // Throws NoSuchField / InvalidHeader.
  u128 get_field(std::string_view field) const;
  // Throws NoSuchField / ValueOverflow.
  void set_field(std::string_view field, u128 value);
};

// Builds a zeroed instance of a layout.
HeaderInstance make_instance(HeaderDefPtr def);

// Decodes one header instance from the first def->byte_width() bytes.
HeaderInstance decode_header(HeaderDefPtr def, std::span<const std::uint8_t> bytes);

// Appends the wire encoding of an instance to out. Throws InvalidHeader.
void encode_header(const HeaderInstance& inst, std::vector<std::uint8_t>& out);

struct PacketMeta {
  int ingress_port = 0;
  double timestamp_s = 0.0;
  std::size_t raw_len = 0;  // filled by the parser
};

// The result of a parse: extracted headers in extraction order, the remaining
// bytes as payload, and pass-through metadata.
struct ParsedPacket {
  std::vector<HeaderInstance> headers;
  std::vector<std::uint8_t> payload;
  PacketMeta meta;

  // First valid instance of the named header; nullptr when absent.
  const HeaderInstance* find_header(std::string_view name) const;
  HeaderInstance* find_header(std::string_view name);
};

// Registry of header layouts available to a parse graph.
class SchemaSet {
 public:
  void add(HeaderDefPtr def);
  HeaderDefPtr find(std::string_view name) const;  // nullptr if absent
  std::size_t size() const { return defs_.size(); }

 private:
  std::unordered_map<std::string, HeaderDefPtr> defs_;
};

}  // namespace fw

#endif  // FLOODWATCH_HEADER_SCHEMA_HPP_
