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

#ifndef FLOODWATCH_BITCODEC_HPP_
#define FLOODWATCH_BITCODEC_HPP_

#include <cstdint>
#include <span>

#include "floodwatch/common.hpp"

namespace fw {

// Big-endian bit-field codec: bit 0 is the MSB of byte 0, exactly the order
// fields appear on the wire. Width is 1..128; the caller guarantees the span
// covers [bit_offset, bit_offset + width).

u128 read_bits(std::span<const std::uint8_t> bytes, int bit_offset, int width_bits);

void write_bits(std::span<std::uint8_t> bytes, int bit_offset, int width_bits, u128 value);

}  // namespace fw

#endif  // FLOODWATCH_BITCODEC_HPP_
