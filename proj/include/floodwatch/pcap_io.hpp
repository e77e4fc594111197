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

#ifndef FLOODWATCH_PCAP_IO_HPP_
#define FLOODWATCH_PCAP_IO_HPP_

#include <string>
#include <vector>

#include "floodwatch/simnet.hpp"

namespace fw {

// Classic pcap, little-endian, magic 0xA1B2C3D4, version 2.4, snaplen 65535.
// Frames start at the ZEP header with no UDP/IP encapsulation, so the
// linktype is DLT_USER0 (147); configure external dissectors accordingly.
inline constexpr std::uint32_t kPcapMagic = 0xA1B2C3D4;
inline constexpr std::uint32_t kPcapSnaplen = 65535;
inline constexpr std::uint32_t kPcapLinktype = 147;
inline constexpr std::size_t kPcapGlobalHeaderBytes = 24;
inline constexpr std::size_t kPcapRecordHeaderBytes = 16;

// Writes records (time-ordered) with incl_len == orig_len, timestamps split
// into whole seconds + microseconds. Throws IoFailure.
void write_pcap(const std::string& path, const std::vector<PacketRecord>& records);

// Reads a classic pcap in either byte order. src_node_id/note are not part
// of the format and come back empty. Throws BadMagic, Truncated (the
// exception carries how many complete records were recovered) and IoFailure.
std::vector<PacketRecord> read_pcap(const std::string& path);

class TruncatedPcap : public Error {
 public:
  TruncatedPcap(std::size_t complete_records, std::vector<PacketRecord> recovered)
      : Error(Errc::Truncated,
              "file ends mid-record after " + std::to_string(complete_records) +
                  " complete record(s)"),
        complete_records_(complete_records),
        recovered_(std::move(recovered)) {}

  std::size_t complete_records() const { return complete_records_; }
  const std::vector<PacketRecord>& recovered() const { return recovered_; }

 private:
  std::size_t complete_records_;
  std::vector<PacketRecord> recovered_;
};

}  // namespace fw

#endif  // FLOODWATCH_PCAP_IO_HPP_
