// Copyright 2026 The zecap Authors
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


#include "zec/design_cache.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace zec {

namespace {

constexpr std::array<char, 8> kMagic = {'Z', 'E', 'C', 'D', 'S', 'G', 'N', '\0'};
constexpr std::uint64_t kMaxMembers = 1u << 20;

template <typename T>
void put_le(std::vector<unsigned char>& buf, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf.push_back(static_cast<unsigned char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff));
  }
}

template <typename T>
T get_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return static_cast<T>(v);
}

std::uint64_t fnv1a(const unsigned char* p, std::size_t n) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

void read_exact(std::istream& in, unsigned char* dst, std::size_t n) {
  in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) throw CacheError("design cache: truncated file");
}

}  // namespace

void write_design_cache(const UnitaryFamily& f, std::ostream& out) {
  std::vector<unsigned char> records;
  const std::size_t side = f.d;
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    put_le<std::uint32_t>(records, static_cast<std::uint32_t>(f.d));
    put_le<std::uint64_t>(records, idx);
    const auto& m = f.members[idx].data();
    for (std::size_t r = 0; r < side; ++r) {
      for (std::size_t c = 0; c < side; ++c) {
        put_le<std::uint64_t>(records, std::bit_cast<std::uint64_t>(m(r, c).real()));
        put_le<std::uint64_t>(records, std::bit_cast<std::uint64_t>(m(r, c).imag()));
      }
    }
  }
  std::vector<unsigned char> header(kMagic.begin(), kMagic.end());
  put_le<std::uint32_t>(header, kDesignCacheVersion);
  put_le<std::uint32_t>(header, static_cast<std::uint32_t>(f.d));
  put_le<std::uint64_t>(header, f.size());
  put_le<std::uint64_t>(header, fnv1a(records.data(), records.size()));
  out.write(reinterpret_cast<const char*>(header.data()), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(records.data()),
            static_cast<std::streamsize>(records.size()));
  if (!out) throw Error("design cache: write failed");
}

UnitaryFamily read_design_cache(std::istream& in) {
  std::array<unsigned char, 32> header{};
  read_exact(in, header.data(), header.size());
  if (std::memcmp(header.data(), kMagic.data(), kMagic.size()) != 0) {
    throw CacheError("design cache: bad magic");
  }
  auto version = get_le<std::uint32_t>(header.data() + 8);
  auto d = get_le<std::uint32_t>(header.data() + 12);
  auto count = get_le<std::uint64_t>(header.data() + 16);
  auto checksum = get_le<std::uint64_t>(header.data() + 24);
  if (version != kDesignCacheVersion) {
    throw CacheError("design cache: unsupported version " + std::to_string(version));
  }
  if (d < 2 || d > 16 || count == 0 || count > kMaxMembers) {
    throw CacheError("design cache: implausible header");
  }
  const std::size_t record_size = 4 + 8 + 16 * std::size_t{d} * d;
  std::vector<unsigned char> records(record_size * count);
  read_exact(in, records.data(), records.size());
  if (in.peek() != std::char_traits<char>::eof()) throw CacheError("design cache: trailing bytes");
  if (fnv1a(records.data(), records.size()) != checksum) {
    throw CacheError("design cache: checksum mismatch");
  }

  UnitaryFamily f;
  f.d = d;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const unsigned char* p = records.data() + idx * record_size;
    if (get_le<std::uint32_t>(p) != d || get_le<std::uint64_t>(p + 4) != idx) {
      throw CacheError("design cache: record header mismatch at index " + std::to_string(idx));
    }
    p += 12;
    Eigen::MatrixXcd m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        double re = std::bit_cast<double>(get_le<std::uint64_t>(p));
        double im = std::bit_cast<double>(get_le<std::uint64_t>(p + 8));
        m(r, c) = cplx(re, im);
        p += 16;
      }
    }
    f.members.emplace_back(std::move(m), Dims{d});
  }
  f.weights.assign(f.size(), 1.0 / static_cast<double>(f.size()));
  if (!verify_two_design(f).passed) throw CacheError("design cache: family is not an exact 2-design");
  return f;
}

std::filesystem::path design_cache_path(const std::filesystem::path& dir, std::size_t d) {
  return dir / ("clifford_d" + std::to_string(d) + ".zdc");
}

UnitaryFamily load_or_enumerate_clifford(std::size_t d,
                                         const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return enumerate_clifford(d);
  auto path = design_cache_path(*cache_dir, d);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("design cache: cannot open " + path.string());
    auto f = read_design_cache(in);
    if (f.d != d) throw CacheError("design cache: dimension mismatch in " + path.string());
    return f;
  }
  auto f = enumerate_clifford(d);
  std::filesystem::create_directories(*cache_dir);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("design cache: cannot write " + tmp.string());
    write_design_cache(f, out);
  }
  std::filesystem::rename(tmp, path);
  return f;
}

}  // namespace zec
