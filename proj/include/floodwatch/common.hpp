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

#ifndef FLOODWATCH_COMMON_HPP_
#define FLOODWATCH_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fw {

// Field values are unsigned big-endian integers up to 128 bits wide, which
// covers IPv6-scale addresses without arbitrary-precision arithmetic.
using u128 = unsigned __int128;

constexpr u128 width_mask(int width_bits) {
  return width_bits >= 128 ? ~u128{0} : ((u128{1} << width_bits) - 1);
}

// 64-bit all-ones is the reserved broadcast address of the simulated network.
inline constexpr std::uint64_t kBroadcastAddr = 0xFFFFFFFFFFFFFFFFull;

enum class Errc {
  // header_schema
  DuplicateField,
  WidthOutOfRange,
  NotByteAligned,
  NoSuchField,
  InvalidHeader,
  ValueOverflow,
  // pipeline
  NoSuchTable,
  TableFull,
  ActionInvalid,
  NoSuchCounter,
  // controller
  UnknownSwitch,
  // profile / scenario
  ConfigInvalid,
  ScenarioInvalid,
  // io
  BadMagic,
  Truncated,
  IoFailure,
  BadConfigFile,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// "0x"-prefixed uppercase hex, zero-padded to hex_digits when given.
std::string to_hex(u128 v, int hex_digits = 0);

// Southbound wire form of a node address: 0x + 16 uppercase hex digits.
inline std::string addr_hex(std::uint64_t addr) { return to_hex(addr, 16); }

// Accepts "0x.."/"0X.." hex or plain decimal. Throws BadConfigFile.
u128 parse_u128(std::string_view text);
std::uint64_t parse_u64(std::string_view text);

// Timestamps carry microsecond resolution end to end so that a pcap
// write/read cycle reproduces them bit for bit. ts_from_micros is the one
// canonical integer-to-double conversion; quantize_ts snaps an arbitrary
// double onto that grid.
inline double ts_from_micros(std::int64_t us) {
  return static_cast<double>(us / 1000000) +
         static_cast<double>(us % 1000000) / 1e6;
}

std::int64_t ts_to_micros(double ts);

inline double quantize_ts(double ts) { return ts_from_micros(ts_to_micros(ts)); }

}  // namespace fw

#endif  // FLOODWATCH_COMMON_HPP_
