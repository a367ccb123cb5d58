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


#include "zec/privacy.hpp"

#include <algorithm>
#include <vector>

namespace zec {

double transpose_trick_check(const ComplexMatrix& v) {
  if (!v.is_square() || v.rows() != v.cols() || v.num_factors() != 1) {
    throw Error("transpose_trick_check: expected a square single-factor matrix");
  }
  const auto d = static_cast<std::size_t>(v.rows());
  const Eigen::VectorXcd phi = max_entangled_state(d).amplitudes();
  ComplexMatrix id = ComplexMatrix::identity(Dims{d});
  Eigen::VectorXcd lhs = tensor_product(id, v).data() * phi;
  Eigen::VectorXcd rhs = tensor_product(v.transpose(), id).data() * phi;
  return (lhs - rhs).norm();
}

ProtocolTranscript run_protocol(const NdChannel& c, std::size_t message) {
  return run_protocol(c, message, max_entangled_state(c.d));
}

ProtocolTranscript run_protocol(const NdChannel& c, std::size_t message,
                                const PureState& a2a3_input) {
  const std::size_t d = c.d;
  if (message >= d) throw Error("run_protocol: message out of range");
  if (a2a3_input.amplitudes().size() != static_cast<Eigen::Index>(d * d)) {
    throw Error("run_protocol: A2 A3 input must have dimension d^2");
  }
  const Dims abr{d, d, d};  // A1 (-> B), A2 (-> E), A3
  PureState input = tensor_product(PureState::basis(Dims{d}, message),
                                   PureState(a2a3_input.amplitudes(), Dims{d, d}));
  const ComplexMatrix id = ComplexMatrix::identity(Dims{d});
  const std::size_t not_bob[] = {1, 2};
  const std::size_t not_eve[] = {0, 2};

  ProtocolTranscript t;
  t.d = d;
  t.message = message;
  t.bob_output = ComplexMatrix::zero(Dims{d});
  t.eve_branches.n = 1;
  for (std::size_t j = 0; j < c.design.size(); ++j) {
    ComplexMatrix iso = tensor_product(c.phase_gate * tensor_product(id, c.design.members[j]), id);
    PureState out(iso.data() * input.amplitudes(), abr);
    ComplexMatrix rho = out.projector();
    t.bob_output += c.design.weights[j] * partial_trace(rho, not_bob);
    t.eve_branches.branches.push_back({Tuple{j}, c.design.weights[j], partial_trace(rho, not_eve)});
  }
  t.bob_error = trace_distance(t.bob_output, PureState::basis(Dims{d}, message).projector());
  std::size_t best = 0;
  for (std::size_t k = 1; k < d; ++k) {
    if (t.bob_output(k, k).real() > t.bob_output(best, best).real()) best = k;
  }
  t.decoded = best;
  return t;
}

double verify_secrecy(std::span<const ProtocolTranscript> transcripts) {
  if (transcripts.empty()) throw Error("verify_secrecy: no transcripts");
  const std::size_t d = transcripts.front().d;
  std::vector<const ProtocolTranscript*> by_message(d, nullptr);
  for (const auto& t : transcripts) {
    if (t.d != d || t.message >= d) throw Error("verify_secrecy: inconsistent transcripts");
    if (by_message[t.message]) throw Error("verify_secrecy: duplicate message");
    by_message[t.message] = &t;
  }
  if (std::any_of(by_message.begin(), by_message.end(), [](auto* p) { return p == nullptr; })) {
    throw Error("verify_secrecy: transcripts do not cover every message");
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      const auto& ea = by_message[a]->eve_branches.branches;
      const auto& eb = by_message[b]->eve_branches.branches;
      if (ea.size() != eb.size()) throw Error("verify_secrecy: label sets differ");
      for (std::size_t j = 0; j < ea.size(); ++j) {
        worst = std::max(worst, trace_distance(ea[j].matrix, eb[j].matrix));
      }
    }
  }
  return worst;
}

}  // namespace zec
