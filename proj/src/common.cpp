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

#include "floodwatch/common.hpp"

#include <cmath>

namespace fw {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateField: return "DuplicateField";
    case Errc::WidthOutOfRange: return "WidthOutOfRange";
    case Errc::NotByteAligned: return "NotByteAligned";
    case Errc::NoSuchField: return "NoSuchField";
    case Errc::InvalidHeader: return "InvalidHeader";
    case Errc::ValueOverflow: return "ValueOverflow";
    case Errc::NoSuchTable: return "NoSuchTable";
    case Errc::TableFull: return "TableFull";
    case Errc::ActionInvalid: return "ActionInvalid";
    case Errc::NoSuchCounter: return "NoSuchCounter";
    case Errc::UnknownSwitch: return "UnknownSwitch";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::ScenarioInvalid: return "ScenarioInvalid";
    case Errc::BadMagic: return "BadMagic";
    case Errc::Truncated: return "Truncated";
    case Errc::IoFailure: return "IoFailure";
    case Errc::BadConfigFile: return "BadConfigFile";
  }
  return "Error";
}

std::string to_hex(u128 v, int hex_digits) {
  static const char* digits = "0123456789ABCDEF";
  std::string out;
  do {
    out.push_back(digits[static_cast<unsigned>(v & 0xF)]);
    v >>= 4;
  } while (v != 0);
  while (static_cast<int>(out.size()) < hex_digits) out.push_back('0');
  out.append("x0");
  for (std::size_t i = 0, j = out.size() - 1; i < j; ++i, --j)
    std::swap(out[i], out[j]);
  return out;
}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

u128 parse_u128(std::string_view text) {
  if (text.empty())
    throw Error(Errc::BadConfigFile, "empty numeric literal");
  bool hex = text.size() > 2 && text[0] == '0' &&
             (text[1] == 'x' || text[1] == 'X');
  u128 v = 0;
  if (hex) {
    std::string_view body = text.substr(2);
    if (body.empty() || body.size() > 32)
      throw Error(Errc::BadConfigFile, "bad hex literal '" + std::string(text) + "'");
    for (char c : body) {
      int d = hex_digit(c);
      if (d < 0)
        throw Error(Errc::BadConfigFile, "bad hex literal '" + std::string(text) + "'");
      v = (v << 4) | static_cast<unsigned>(d);
    }
    return v;
  }
  for (char c : text) {
    if (c < '0' || c > '9')
      throw Error(Errc::BadConfigFile, "bad numeric literal '" + std::string(text) + "'");
    u128 next = v * 10 + static_cast<unsigned>(c - '0');
    if (next < v)
      throw Error(Errc::BadConfigFile, "numeric literal overflows 128 bits");
    v = next;
  }
  return v;
}

std::uint64_t parse_u64(std::string_view text) {
  u128 v = parse_u128(text);
  if (v > ~std::uint64_t{0})
    throw Error(Errc::BadConfigFile, "literal exceeds 64 bits: " + std::string(text));
  return static_cast<std::uint64_t>(v);
}

std::int64_t ts_to_micros(double ts) {
  return std::llround(ts * 1e6);
}

}  // namespace fw
