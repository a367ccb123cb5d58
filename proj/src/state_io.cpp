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


#include "zec/state_io.hpp"

#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace zec {

namespace {
constexpr const char* kStateMagic = "zec-block-state";
constexpr int kStateVersion = 1;
}  // namespace

void write_block_state(const BlockStateVector& psi, std::ostream& out) {
  out << kStateMagic << ' ' << kStateVersion << ' ' << psi.d() << ' ' << psi.n() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t b = 0; b < psi.num_blocks(); ++b) {
    auto t = unflatten_tuple(b, psi.d(), psi.n());
    for (std::size_t k = 0; k < t.size(); ++k) out << (k ? " " : "") << t[k];
    for (const auto& a : psi.block(b)) out << ' ' << a.real() << ' ' << a.imag();
    out << '\n';
  }
  if (!out) throw Error("write_block_state: write failed");
}

BlockStateVector read_block_state(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("read_block_state: empty input");
  std::istringstream head(line);
  std::string magic;
  int version = 0;
  std::size_t d = 0, n = 0;
  if (!(head >> magic >> version >> d >> n) || magic != kStateMagic) {
    throw Error("read_block_state: bad header");
  }
  if (version != kStateVersion) throw Error("read_block_state: unsupported version");
  if (d < 2 || d > 16 || n < 1 || n > 4) throw Error("read_block_state: unsupported d or n");
  BlockStateVector psi(d, n);
  std::vector<bool> seen(psi.num_blocks(), false);
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream rec(line);
    Tuple t(n);
    for (auto& v : t) {
      if (!(rec >> v) || v >= d) throw Error("read_block_state: bad tuple");
    }
    auto flat = flatten_tuple(t, d);
    if (seen[flat]) throw Error("read_block_state: duplicate tuple");
    seen[flat] = true;
    auto& blk = psi.block(flat);
    for (Eigen::Index a = 0; a < blk.size(); ++a) {
      double re = 0, im = 0;
      if (!(rec >> re >> im)) throw Error("read_block_state: short record");
      blk(a) = cplx(re, im);
    }
    std::string extra;
    if (rec >> extra) throw Error("read_block_state: trailing data in record");
  }
  return psi;
}

}  // namespace zec
