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

#include "floodwatch/bitcodec.hpp"

namespace fw {

u128 read_bits(std::span<const std::uint8_t> bytes, int bit_offset, int width_bits) {
  // Byte-aligned fast path; every field of the shipped profile takes it.
  if ((bit_offset & 7) == 0 && (width_bits & 7) == 0) {
    int start = bit_offset >> 3;
    int n = width_bits >> 3;
    u128 v = 0;
    for (int i = 0; i < n; ++i) v = (v << 8) | bytes[start + i];
    return v;
  }
  u128 v = 0;
  for (int i = 0; i < width_bits; ++i) {
    int bit = bit_offset + i;
    unsigned b = (bytes[bit >> 3] >> (7 - (bit & 7))) & 1u;
    v = (v << 1) | b;
  }
  return v;
}

void write_bits(std::span<std::uint8_t> bytes, int bit_offset, int width_bits, u128 value) {
  if ((bit_offset & 7) == 0 && (width_bits & 7) == 0) {
    int start = bit_offset >> 3;
    int n = width_bits >> 3;
    for (int i = n - 1; i >= 0; --i) {
      bytes[start + i] = static_cast<std::uint8_t>(value & 0xFF);
      value >>= 8;
    }
    return;
  }
  for (int i = width_bits - 1; i >= 0; --i) {
    int bit = bit_offset + i;
    std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - (bit & 7)));
    if (value & 1)
      bytes[bit >> 3] |= mask;
    else
      bytes[bit >> 3] &= static_cast<std::uint8_t>(~mask);
    value >>= 1;
  }
}

}  // namespace fw
