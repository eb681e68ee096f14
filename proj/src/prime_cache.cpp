// Copyright 2026 The twinsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "twinsieve/primes.hpp"

namespace twinsieve {

namespace {

constexpr std::array<char, 8> kMagic = {'T', 'W', 'S', 'P', 'R', 'I', 'M', 'E'};
constexpr std::uint32_t kVersion = 1;

std::uint64_t fnv1a(std::span<const std::uint64_t> words) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : words) {
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xFFU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

void put_le(std::ostream& out, std::uint64_t v, int bytes) {
  for (int b = 0; b < bytes; ++b) out.put(static_cast<char>((v >> (8 * b)) & 0xFFU));
}

std::uint64_t get_le(std::istream& in, int bytes) {
  std::uint64_t v = 0;
  for (int b = 0; b < bytes; ++b) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw std::runtime_error("prime cache truncated");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * b);
  }
  return v;
}

}  // namespace

void save_prime_table(const PrimeTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const auto words = table.odd_bitmap();
  out.write(kMagic.data(), kMagic.size());
  put_le(out, kVersion, 4);
  put_le(out, table.limit(), 8);
  put_le(out, words.size(), 8);
  put_le(out, fnv1a(words), 8);
  for (std::uint64_t w : words) put_le(out, w, 8);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

PrimeTable load_prime_table(const std::filesystem::path& path, std::optional<std::uint64_t> expected_limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("not a prime table cache: " + path.string());
  if (get_le(in, 4) != kVersion) throw std::runtime_error("unsupported prime cache version");
  const std::uint64_t limit = get_le(in, 8);
  if (limit < 3 || limit > kMaxTableLimit) throw std::runtime_error("prime cache limit out of range");
  if (expected_limit && *expected_limit != limit) {
    throw std::runtime_error("prime cache limit " + std::to_string(limit) + " != expected " +
                             std::to_string(*expected_limit));
  }
  const std::uint64_t count = get_le(in, 8);
  const std::uint64_t odds = (limit - 1) / 2;
  if (count != (odds + 63) / 64) throw std::runtime_error("prime cache bitmap size does not match limit");
  const std::uint64_t checksum = get_le(in, 8);
  std::vector<std::uint64_t> words(count);
  for (auto& w : words) w = get_le(in, 8);
  if (in.peek() != std::char_traits<char>::eof()) throw std::runtime_error("trailing bytes in prime cache");
  if (fnv1a(words) != checksum) throw std::runtime_error("prime cache checksum mismatch");
  if (odds % 64 != 0 && (words.back() >> (odds % 64)) != 0) {
    throw std::runtime_error("prime cache has bits beyond its limit");
  }
  return prime_table_from_bitmap(limit, std::move(words));
}

}  // namespace twinsieve
