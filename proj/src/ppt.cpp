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


#include "zec/ppt.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "zec/random.hpp"

namespace zec {

namespace {

Dims pair_dims(std::size_t d, std::size_t n) { return Dims(2 * n, d); }

ComplexMatrix as_pairs(const ComplexMatrix& m, std::size_t d, std::size_t n, const char* what) {
  auto side = static_cast<Eigen::Index>(dims_product(pair_dims(d, n)));
  if (!m.is_square() || m.rows() != side) {
    throw Error(std::string(what) + ": matrix must act on n pairs of d-dimensional factors");
  }
  if (m.dims() == pair_dims(d, n)) return m;
  return {m.data(), pair_dims(d, n)};
}

double scale_of(const ComplexMatrix& m) { return std::max(1.0, m.frobenius_norm()); }

ComplexMatrix clip_negative(const ComplexMatrix& m) {
  Eigen::MatrixXcd h = 0.5 * (m.data() + m.data().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXcd out = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  return {std::move(out), m.dims()};
}

void normalize_trace(ComplexMatrix& m) {
  double tr = m.trace().real();
  if (tr > 0) m *= 1.0 / tr;
}

}  // namespace

ComplexMatrix pair_partial_transpose(const ComplexMatrix& m, std::size_t n) {
  std::vector<std::size_t> factors;
  for (std::size_t t = 0; t < n; ++t) factors.push_back(2 * t);
  return partial_transpose(m, factors);
}

bool label_has_rest(std::uint32_t label, std::size_t n, std::size_t pair) {
  return (label >> (n - 1 - pair)) & 1u;
}

std::uint32_t all_rest_label(std::size_t n) { return (1u << n) - 1u; }

ComplexMatrix label_operator(std::uint32_t label, std::size_t d, std::size_t n) {
  ComplexMatrix phi = max_entangled_projector(d);
  ComplexMatrix rest = ComplexMatrix::identity(Dims{d, d}) - phi;
  ComplexMatrix out;
  for (std::size_t t = 0; t < n; ++t) {
    const ComplexMatrix& f = label_has_rest(label, n, t) ? rest : phi;
    out = t == 0 ? f : tensor_product(out, f);
  }
  return out;
}

ComplexMatrix IsotropicDecomposition::reconstruct() const {
  ComplexMatrix out = ComplexMatrix::zero(pair_dims(d, n));
  for (std::uint32_t s = 0; s < coefficients.size(); ++s) {
    if (coefficients[s] != 0.0) out += coefficients[s] * label_operator(s, d, n);
  }
  return out;
}

IsotropicDecomposition isotropic_twirl_n(const ComplexMatrix& m, std::size_t d, std::size_t n,
                                         double tol) {
  if (d < 2 || n < 1 || n > 8) throw Error("isotropic_twirl_n: unsupported d or n");
  ComplexMatrix mm = as_pairs(m, d, n, "isotropic_twirl_n");
  if (!mm.is_hermitian(tol * scale_of(mm)) || min_eigenvalue(mm) < -tol * scale_of(mm)) {
    throw Error("isotropic_twirl_n: input is not positive semidefinite");
  }
  IsotropicDecomposition dec;
  dec.d = d;
  dec.n = n;
  const double rest_rank = static_cast<double>(d * d - 1);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    double rank = std::pow(rest_rank, std::popcount(s));
    dec.coefficients.push_back(trace_inner(label_operator(s, d, n), mm).real() / rank);
  }
  return dec;
}

WitnessQ build_witness_q(std::size_t d) {
  if (d < 2) throw Error("build_witness_q: d must be at least 2");
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j) q(i * d + j, i * d + j) = 1.0;
    }
  }
  WitnessQ w{d, ComplexMatrix(std::move(q), Dims{d, d}), 0.0};
  w.r = w.q.trace().real();
  ComplexMatrix phi_g = partial_transpose(max_entangled_projector(d), 0);
  if (std::abs(trace_inner(w.q, phi_g)) > 1e-12 || min_eigenvalue(w.q) < 0 || w.r <= 0) {
    throw Error("build_witness_q: witness invariants violated");
  }
  return w;
}

RecursionCertificate recursion_certificate(const IsotropicDecomposition& dec, const WitnessQ& q,
                                           double tol) {
  const std::size_t d = dec.d, n = dec.n;
  if (q.d != d) throw Error("recursion_certificate: witness dimension mismatch");
  if (dec.coefficients.size() != (std::size_t{1} << n)) {
    throw Error("recursion_certificate: malformed decomposition");
  }
  if (std::abs(dec.coefficient(all_rest_label(n))) > tol) {
    throw Error("recursion_certificate: constraint tr(M (I - Phi)^n) = 0 is not met");
  }
  const ComplexMatrix big = dec.reconstruct();
  const ComplexMatrix big_g = pair_partial_transpose(big, n);
  const double scale = scale_of(big);
  const Dims dims = pair_dims(d, n);
  const ComplexMatrix phi = max_entangled_projector(d);
  const ComplexMatrix phi_g = partial_transpose(phi, 0);
  const ComplexMatrix rest_g = partial_transpose(ComplexMatrix::identity(Dims{d, d}) - phi, 0);

  RecursionCertificate cert;
  cert.certified = true;
  cert.consistent = true;
  bool violated_so_far = false;
  for (std::size_t c = n; c-- > 0;) {
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) != c) continue;
      std::vector<std::size_t> factors, kept_pairs;
      for (std::size_t t = 0; t < n; ++t) {
        if (label_has_rest(s, n, t)) {
          factors.push_back(2 * t);
          factors.push_back(2 * t + 1);
        } else {
          kept_pairs.push_back(t);
        }
      }
      ComplexMatrix contracted =
          c == 0 ? big_g
                 : partial_trace(embed_operator(tensor_power(q.q, c), factors, dims) * big_g,
                                 factors);

      // r^c sum over labels that carry I - Phi on every contracted pair.
      ComplexMatrix predicted = ComplexMatrix::zero(pair_dims(d, kept_pairs.size()));
      for (std::uint32_t s2 = 0; s2 < (1u << n); ++s2) {
        if ((s2 & s) != s || dec.coefficient(s2) == 0.0) continue;
        ComplexMatrix term;
        for (std::size_t k = 0; k < kept_pairs.size(); ++k) {
          const ComplexMatrix& f = label_has_rest(s2, n, kept_pairs[k]) ? rest_g : phi_g;
          term = k == 0 ? f : tensor_product(term, f);
        }
        predicted += dec.coefficient(s2) * std::pow(q.r, static_cast<double>(c)) * term;
      }

      RecursionStep step;
      step.label = s;
      step.rest_count = c;
      step.coefficient = dec.coefficient(s);
      step.contraction_min_eigenvalue = min_eigenvalue(contracted);
      step.algebra_residual = contracted.max_abs_diff(predicted);
      step.forced_zero = step.coefficient <= tol;
      step.violation = step.contraction_min_eigenvalue < -tol * scale;
      violated_so_far = violated_so_far || step.violation;
      cert.certified = cert.certified && step.forced_zero;
      cert.contradiction = cert.contradiction || step.violation;
      cert.consistent = cert.consistent && (step.forced_zero || violated_so_far);
      cert.steps.push_back(step);
    }
  }
  return cert;
}

std::optional<double> score_candidate(const ComplexMatrix& m, std::size_t d, std::size_t n,
                                      double tol) {
  ComplexMatrix mm = as_pairs(m, d, n, "score_candidate");
  const double scale = scale_of(mm);
  if (!mm.is_hermitian(tol * scale)) return std::nullopt;
  if (min_eigenvalue(mm) < -tol * scale) return std::nullopt;
  if (min_eigenvalue(pair_partial_transpose(mm, n)) < -tol * scale) return std::nullopt;
  double tr = mm.trace().real();
  if (tr <= 0) return std::nullopt;
  return trace_inner(label_operator(all_rest_label(n), d, n), mm).real() / tr;
}

std::optional<ComplexMatrix> project_to_ppt(const ComplexMatrix& m, std::size_t n,
                                            std::size_t max_iterations) {
  constexpr double kAccept = 1e-9;
  const double side = static_cast<double>(m.rows());
  ComplexMatrix cur = m;
  normalize_trace(cur);
  for (std::size_t it = 0; it <= max_iterations; ++it) {
    double lam = min_eigenvalue(cur);
    double lam_g = min_eigenvalue(pair_partial_transpose(cur, n));
    double worst = std::min(lam, lam_g);
    if (worst >= -kAccept) {
      if (worst < 0) {
        // Mix in a little of I / side so both spectra become nonnegative.
        double eps = 2.0 * (-worst) / (1.0 / side - worst);
        cur = (1.0 - eps) * cur + (eps / side) * ComplexMatrix::identity(cur.dims());
      }
      return cur;
    }
    if (it == max_iterations) break;
    cur = clip_negative(cur);
    cur = pair_partial_transpose(clip_negative(pair_partial_transpose(cur, n)), n);
    normalize_trace(cur);
  }
  return std::nullopt;
}

SearchResult counterexample_search(std::size_t d, std::size_t n, std::size_t trials,
                                   std::uint64_t seed) {
  if (trials < 1) throw Error("counterexample_search: trials must be at least 1");
  SearchResult res;
  res.d = d;
  res.n = n;
  res.seed = seed;
  res.trials = trials;
  res.min_value = std::numeric_limits<double>::infinity();
  const Dims dims = pair_dims(d, n);
  const auto side = static_cast<Eigen::Index>(dims_product(dims));
  const ComplexMatrix complement =
      ComplexMatrix::identity(dims) - label_operator(all_rest_label(n), d, n);

  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = CounterRng::for_case(seed, "ppt-search", t);
    auto rank = static_cast<Eigen::Index>(1 + rng.below(static_cast<std::uint64_t>(side)));
    Eigen::MatrixXcd g(side, rank);
    for (Eigen::Index col = 0; col < rank; ++col) g.col(col) = random_gaussian_vector(rng, side);
    if (t % 2 == 1) {
      double noise = 0.2 * rng.uniform();
      Eigen::MatrixXcd h(side, rank);
      for (Eigen::Index col = 0; col < rank; ++col) h.col(col) = random_gaussian_vector(rng, side);
      g = complement.data() * g + noise * h;
    }
    ComplexMatrix cand(g * g.adjoint(), dims);
    auto projected = project_to_ppt(cand, n);
    if (!projected) {
      ++res.skipped;
      continue;
    }
    auto score = score_candidate(*projected, d, n);
    if (!score) {
      ++res.skipped;
      continue;
    }
    ++res.accepted;
    res.min_value = std::min(res.min_value, *score);
  }
  return res;
}

}  // namespace zec
