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

#include "floodwatch/pcap_io.hpp"

#include <cstdio>
#include <fstream>

namespace fw {

namespace {

void put_u16le(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

std::uint32_t get_u32(const std::uint8_t* p, bool swapped) {
  std::uint32_t v = static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
                    (static_cast<std::uint32_t>(p[2]) << 16) |
                    (static_cast<std::uint32_t>(p[3]) << 24);
  if (swapped)
    v = ((v & 0x000000FFu) << 24) | ((v & 0x0000FF00u) << 8) | ((v & 0x00FF0000u) >> 8) |
        ((v & 0xFF000000u) >> 24);
  return v;
}

}  // namespace

void write_pcap(const std::string& path, const std::vector<PacketRecord>& records) {
  std::vector<std::uint8_t> out;
  std::size_t total = kPcapGlobalHeaderBytes;
  for (const PacketRecord& r : records) total += kPcapRecordHeaderBytes + r.raw_bytes.size();
  out.reserve(total);

  put_u32le(out, kPcapMagic);
  put_u16le(out, 2);  // version_major
  put_u16le(out, 4);  // version_minor
  put_u32le(out, 0);  // thiszone
  put_u32le(out, 0);  // sigfigs
  put_u32le(out, kPcapSnaplen);
  put_u32le(out, kPcapLinktype);

  for (const PacketRecord& r : records) {
    std::int64_t us = ts_to_micros(r.timestamp_s);
    put_u32le(out, static_cast<std::uint32_t>(us / 1000000));
    put_u32le(out, static_cast<std::uint32_t>(us % 1000000));
    put_u32le(out, static_cast<std::uint32_t>(r.raw_bytes.size()));  // incl_len
    put_u32le(out, static_cast<std::uint32_t>(r.raw_bytes.size()));  // orig_len
    out.insert(out.end(), r.raw_bytes.begin(), r.raw_bytes.end());
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw Error(Errc::IoFailure, "cannot open '" + path + "' for writing");
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f)
    throw Error(Errc::IoFailure, "short write to '" + path + "'");
}

std::vector<PacketRecord> read_pcap(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw Error(Errc::IoFailure, "cannot open '" + path + "'");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(f)),
                                 std::istreambuf_iterator<char>());

  if (data.size() < 4)
    throw Error(Errc::BadMagic, "'" + path + "' is too short to carry a pcap magic");
  std::uint32_t magic = get_u32(data.data(), false);
  bool swapped = false;
  if (magic == 0xD4C3B2A1u)
    swapped = true;
  else if (magic != kPcapMagic)
    throw Error(Errc::BadMagic, "unrecognized magic " + to_hex(magic, 8));
  if (data.size() < kPcapGlobalHeaderBytes)
    throw TruncatedPcap(0, {});

  std::vector<PacketRecord> records;
  auto truncated = [&records]() -> TruncatedPcap {
    std::size_t complete = records.size();
    return TruncatedPcap(complete, std::move(records));
  };

  std::size_t off = kPcapGlobalHeaderBytes;
  while (off < data.size()) {
    if (data.size() - off < kPcapRecordHeaderBytes) throw truncated();
    std::uint32_t ts_sec = get_u32(data.data() + off, swapped);
    std::uint32_t ts_usec = get_u32(data.data() + off + 4, swapped);
    std::uint32_t incl_len = get_u32(data.data() + off + 8, swapped);
    off += kPcapRecordHeaderBytes;
    if (data.size() - off < incl_len) throw truncated();

    PacketRecord r;
    r.timestamp_s = ts_from_micros(static_cast<std::int64_t>(ts_sec) * 1000000 +
                                   static_cast<std::int64_t>(ts_usec));
    r.raw_bytes.assign(data.begin() + static_cast<std::ptrdiff_t>(off),
                       data.begin() + static_cast<std::ptrdiff_t>(off + incl_len));
    records.push_back(std::move(r));
    off += incl_len;
  }
  return records;
}

}  // namespace fw
