// Copyright 2026 The duclab Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "duclab/closure.hpp"
#include "duclab/engine.hpp"
#include "duclab/pauli.hpp"
#include "duclab/schedule.hpp"
#include "duclab/statevector.hpp"
#include "duclab/symplectic.hpp"

namespace duclab {

// Dense-simulation guards; DUCLAB_MEM_GUARD_MB overrides the memory bound.
inline constexpr std::size_t kMaxPhysicalQubits = 22;
inline constexpr std::size_t kMaxVirtualQubits = 10;

inline std::size_t memory_guard_bytes_from_env() {
  if (const char* v = std::getenv("DUCLAB_MEM_GUARD_MB")) {
    const long mb = std::atol(v);
    if (mb > 0) return static_cast<std::size_t>(mb) << 20;
  }
  return kDefaultMemoryGuardBytes;
}

inline void check_dense_guards(std::size_t n_physical, std::size_t k) {
  if (n_physical > kMaxPhysicalQubits) {
    throw std::invalid_argument("dense simulation capped at N <= 22 physical qubits");
  }
  if (k > kMaxVirtualQubits) {
    throw std::invalid_argument("dense simulation capped at k <= 10 virtual qubits");
  }
  const std::size_t bytes = (std::size_t(1) << n_physical) * sizeof(cx) * 2;
  if (bytes > memory_guard_bytes_from_env()) {
    throw std::invalid_argument("dense simulation exceeds the memory guard");
  }
}

// lambda value at physical (site, layer): the sideways-frame schedule stores
// virtual qubit a <-> circuit layer k+1-a, step phase <-> site class.
inline bool lambda_physical(const LambdaSchedule& schedule, std::size_t k, std::size_t site,
                            std::size_t layer) {
  return schedule.s_on(/*qubit=*/k + 1 - layer, /*layer=*/site);
}

// One layer of T_{N,t}(lambda) applied to a physical state: the CZ chain,
// then S^{lambda} and H per site, with S = diag(1, -i) as in the symplectic
// layer maps.
inline void apply_physical_layer(StateVector& state, std::size_t k,
                                 const LambdaSchedule& schedule, std::size_t layer,
                                 Boundary boundary) {
  const std::size_t n = state.n_qubits();
  for (std::size_t i = 1; i + 1 <= n; ++i) state.apply_cz(i, i + 1);
  if (boundary == Boundary::periodic) {
    if (n < 3) throw std::invalid_argument("periodic boundary needs N >= 3");
    state.apply_cz(n, 1);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (lambda_physical(schedule, k, i, layer)) state.apply_sdg(i);
    state.apply_h(i);
  }
}

// |psi_k> = T_N^k |+...+>; k = 0 returns the product state.
inline StateVector prepare_resource(std::size_t n_physical, std::size_t k,
                                    const LambdaSchedule& schedule,
                                    Boundary boundary = Boundary::open) {
  check_dense_guards(n_physical, k == 0 ? 1 : k);
  StateVector state = StateVector::plus_state(n_physical);
  for (std::size_t t = 1; t <= k; ++t) {
    apply_physical_layer(state, k, schedule, t, boundary);
  }
  return state;
}

// The virtual gate of one sideways step: T_k with S on the qubits the
// schedule selects for this step.
inline void apply_virtual_gate(StateVector& state, const LambdaSchedule& schedule,
                               std::size_t step) {
  const std::size_t k = state.n_qubits();
  for (std::size_t a = 1; a + 1 <= k; ++a) state.apply_cz(a, a + 1);
  for (std::size_t a = 1; a <= k; ++a) {
    if (schedule.s_on(a, step)) state.apply_sdg(a);
    state.apply_h(a);
  }
}

// <s_1^{t1},...,s_N^{tN} | psi> evaluated on the physical register.
inline cx physical_overlap(const StateVector& psi, const std::vector<double>& angles,
                           const std::vector<std::uint8_t>& outcomes) {
  const std::size_t n = psi.n_qubits();
  if (angles.size() != n || outcomes.size() != n) {
    throw std::invalid_argument("physical_overlap: angle/outcome length mismatch");
  }
  StateVector work = psi;
  std::size_t index = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    work.apply_exp_x(i, angles[i - 1]);  // <s^theta| = <s| e^{i theta X}
    if (outcomes[i - 1]) index |= std::size_t(1) << (i - 1);
  }
  return work.amplitude(index);
}

// Forward conjugation map of one physical layer of T_{N,t}; composing these
// in time order yields S^(k)_i = T^k X_i T^{k dagger} with exact signs.
inline SymplecticMap physical_layer_map(std::size_t n_physical, std::size_t k,
                                        const LambdaSchedule& schedule, std::size_t layer,
                                        Boundary boundary) {
  std::vector<std::uint8_t> flags(n_physical, 0);
  for (std::size_t i = 1; i <= n_physical; ++i) {
    flags[i - 1] = lambda_physical(schedule, k, i, layer) ? 1 : 0;
  }
  return layer_map(n_physical, flags, Direction::forward, boundary);
}

// Every stabilizer S^(k)_i must fix the resource state with eigenvalue +1.
inline bool stabilizer_check(const StateVector& state, std::size_t k,
                             const LambdaSchedule& schedule, Boundary boundary = Boundary::open,
                             double tolerance = 1e-10) {
  const std::size_t n = state.n_qubits();
  SymplecticMap total = SymplecticMap::identity_map(n);
  for (std::size_t t = 1; t <= k; ++t) {
    total = compose(physical_layer_map(n, k, schedule, t, boundary), total);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    StateVector moved = state;
    moved.apply_pauli(total.apply(PauliWord::single(n, i, 'X')));
    if (std::abs(inner(state, moved) - cx(1, 0)) > tolerance) return false;
  }
  return true;
}

// <R| U(theta_N,s_N) ... U(theta_1,s_1) |L> with U(theta,s) = T e^{i theta
// Z_1} Z_1^s, |L> = |+>^k, |R> = |0>^k, scaled by 2^{(k-N)/2} so the value
// equals the physical overlap for every rectangle, not just N = k.
inline cx sideways_amplitude(std::size_t n_physical, std::size_t k,
                             const LambdaSchedule& schedule, const std::vector<double>& angles,
                             const std::vector<std::uint8_t>& outcomes) {
  if (schedule.k != k) throw std::invalid_argument("sideways_amplitude: schedule size");
  if (angles.size() != n_physical || outcomes.size() != n_physical) {
    throw std::invalid_argument("sideways_amplitude: angle/outcome length mismatch");
  }
  check_dense_guards(n_physical, k);
  StateVector v = StateVector::plus_state(k);
  for (std::size_t j = 1; j <= n_physical; ++j) {
    if (outcomes[j - 1]) v.apply_z(1);
    v.apply_exp_z(1, angles[j - 1]);
    apply_virtual_gate(v, schedule, j);
  }
  const double scale =
      std::pow(2.0, 0.5 * (static_cast<double>(k) - static_cast<double>(n_physical)));
  return scale * v.amplitude(0);
}

// Per-site log of one adaptive run plus the accumulated byproduct.
struct MeasurementRecord {
  std::uint64_t seed = 0;
  std::vector<std::uint8_t> outcomes;
  std::vector<double> raw_angles;
  std::vector<double> corrected_angles;
  PauliWord boundary_word{1};
  double trajectory_probability = 1.0;
};

struct AdaptiveRun {
  MeasurementRecord record;
  StateVector virtual_state{1};      // prod_j U(theta'_j, s_j) |L>
  StateVector ideal_state{1};        // prod_j U(theta_j) |L>
  std::vector<double> logical_distribution;  // |<b|ideal>|^2 over b in {0,1}^k
};

// Sequential adaptive protocol: Born-rule sampling per site, feed-forward
// sign flips from the byproduct word, and the boundary word pushed to the
// end. Fixing forced_outcomes replays a chosen trajectory; a forced branch
// of vanishing probability signals a degenerate measurement.
inline AdaptiveRun adaptive_run(std::size_t n_physical, std::size_t k,
                                const LambdaSchedule& schedule, const std::vector<double>& angles,
                                std::uint64_t seed,
                                const std::vector<std::uint8_t>* forced_outcomes = nullptr) {
  if (angles.size() != n_physical) throw std::invalid_argument("adaptive_run: angle count");
  if (schedule.k != k) throw std::invalid_argument("adaptive_run: schedule size");
  if (forced_outcomes && forced_outcomes->size() != n_physical) {
    throw std::invalid_argument("adaptive_run: forced outcome count");
  }
  check_dense_guards(n_physical, k);

  AdaptiveRun run;
  run.record.seed = seed;
  run.record.raw_angles = angles;
  run.record.boundary_word = PauliWord::identity(k);

  StateVector state = prepare_resource(n_physical, k, schedule, Boundary::open);
  std::vector<SymplecticMap> forward_layers;
  for (std::size_t t = 1; t <= schedule.period_t; ++t) {
    forward_layers.push_back(build_map(k, schedule, t, Direction::forward));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  PauliWord byproduct = PauliWord::identity(k);
  const PauliWord z1 = PauliWord::single(k, 1, 'Z');

  run.virtual_state = StateVector::plus_state(k);
  run.ideal_state = StateVector::plus_state(k);

  for (std::size_t j = 1; j <= n_physical; ++j) {
    const double sign = byproduct.x_bit(1) ? -1.0 : 1.0;  // anticommutes with Z_1
    const double theta = sign * angles[j - 1];
    run.record.corrected_angles.push_back(theta);

    // measure site j in the rotated basis |s^theta> = e^{-i theta X}|s>
    state.apply_exp_x(j, theta);
    double p1 = 0.0;
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
      if (idx & (std::size_t(1) << (j - 1))) p1 += std::norm(state.amplitude(idx));
    }
    const double p0 = 1.0 - p1;
    std::uint8_t outcome;
    if (forced_outcomes) {
      outcome = (*forced_outcomes)[j - 1];
      const double pb = outcome ? p1 : p0;
      if (pb < 1e-12) throw std::runtime_error("adaptive_run: zero-probability branch forced");
    } else {
      outcome = coin(rng) < p1 ? 1 : 0;
    }
    run.record.outcomes.push_back(outcome);
    run.record.trajectory_probability *= outcome ? p1 : p0;

    // collapse qubit j (the site is never touched again)
    state.project(j, outcome);
    state.renormalize();

    // virtual trajectory with the sampled outcome and applied angle
    if (outcome) run.virtual_state.apply_z(1);
    run.virtual_state.apply_exp_z(1, theta);
    apply_virtual_gate(run.virtual_state, schedule, j);
    run.ideal_state.apply_exp_z(1, angles[j - 1]);
    apply_virtual_gate(run.ideal_state, schedule, j);

    // push the byproduct one layer: w -> V (Z^s w) V^dag
    if (outcome) byproduct = mul(z1, byproduct).phaseless();
    byproduct =
        forward_layers[(j - 1) % schedule.period_t].apply(byproduct).phaseless();
  }
  run.record.boundary_word = byproduct;

  run.logical_distribution.resize(std::size_t(1) << k);
  for (std::size_t b = 0; b < run.logical_distribution.size(); ++b) {
    run.logical_distribution[b] = std::norm(run.ideal_state.amplitude(b));
  }
  return run;
}

// Z-string pattern of the symmetry u(xi): c_i = 1 when the i-fold pushed
// vector acts as X or Y on the first virtual qubit.
inline std::vector<std::uint8_t> symmetry_pattern(std::size_t n_sites, std::size_t k,
                                                  const LambdaSchedule& schedule,
                                                  const PauliWord& xi) {
  if (xi.n_qubits() != k) throw std::invalid_argument("symmetry_pattern: vector size");
  std::vector<SymplecticMap> forward_layers;
  for (std::size_t t = 1; t <= schedule.period_t; ++t) {
    forward_layers.push_back(build_map(k, schedule, t, Direction::forward));
  }
  std::vector<std::uint8_t> c(n_sites, 0);
  PauliWord v = xi.phaseless();
  for (std::size_t i = 1; i <= n_sites; ++i) {
    v = forward_layers[(i - 1) % schedule.period_t].apply(v).phaseless();
    c[i - 1] = v.x_bit(1) ? 1 : 0;
  }
  return c;
}

// Fixedness of the periodic resource state under u(xi) for a spanning set of
// xi, plus faithfulness of the representation (GF(2) rank 2k of the
// patterns).
inline bool symmetry_check(std::size_t n_physical, std::size_t k, const LambdaSchedule& schedule,
                           double tolerance = 1e-10) {
  const auto p = schedule_period(k, schedule);
  if (!p || n_physical % *p != 0) {
    throw std::invalid_argument("symmetry_check: N must be a multiple of the period");
  }
  const StateVector state = prepare_resource(n_physical, k, schedule, Boundary::periodic);

  std::vector<std::vector<std::uint8_t>> patterns;
  for (std::size_t q = 1; q <= k; ++q) {
    for (char letter : {'X', 'Z'}) {
      patterns.push_back(symmetry_pattern(n_physical, k, schedule,
                                          PauliWord::single(k, q, letter)));
    }
  }
  for (const auto& pattern : patterns) {
    StateVector moved = state;
    for (std::size_t i = 1; i <= n_physical; ++i) {
      if (pattern[i - 1]) moved.apply_z(i);
    }
    if (std::abs(inner(state, moved) - cx(1, 0)) > tolerance) return false;
  }
  // faithfulness: only xi = 0 maps to the trivial string
  std::vector<std::uint64_t> rows;
  for (const auto& pattern : patterns) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < pattern.size() && i < 64; ++i) {
      if (pattern[i]) v |= std::uint64_t(1) << i;
    }
    rows.push_back(v);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 64 && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !((rows[piv] >> col) & 1u)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank == 2 * k;
}

// Edge-representation word V(xi) = Z^{xi_Z} X^{xi_X} per qubit, i.e. the
// canonical X-left word with the reordering phase baked in.
inline PauliWord edge_rep_word(std::size_t k, std::uint64_t xi_x, std::uint64_t xi_z) {
  PauliWord w(k);
  int cross = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    const bool x = (xi_x >> (i - 1)) & 1u;
    const bool z = (xi_z >> (i - 1)) & 1u;
    w.set_x(i, x);
    w.set_z(i, z);
    cross += x && z;
  }
  w.set_phase_exponent(2 * cross);
  return w;
}

// Projective multiplication law V(xi)V(zeta) = (-1)^{xi^X . zeta^Z}
// V(xi + zeta), anticommutation controlled by the symplectic form, and
// maximal non-commutativity (only xi = 0 is central), exhaustively for
// k <= 3 and on random pairs above that.
inline bool projective_rep_check(std::size_t k, std::size_t random_pairs = 500,
                                 std::uint64_t seed = 12021) {
  if (k > 31) throw std::invalid_argument("projective_rep_check: k too large");
  std::mt19937_64 rng(seed);
  const std::uint64_t space = std::uint64_t(1) << k;
  auto law_holds = [&](std::uint64_t ax, std::uint64_t az, std::uint64_t bx,
                       std::uint64_t bz) -> bool {
    const PauliWord va = edge_rep_word(k, ax, az);
    const PauliWord vb = edge_rep_word(k, bx, bz);
    const PauliWord prod = mul(va, vb);
    PauliWord expect = edge_rep_word(k, ax ^ bx, az ^ bz);
    const int sign = std::popcount(ax & bz) & 1;
    if (sign) expect.set_phase_exponent(expect.phase_exponent() + 2);
    if (!(prod == expect)) return false;
    // cocycle antisymmetrization = the symplectic form
    const int form = (std::popcount(ax & bz) ^ std::popcount(az & bx)) & 1;
    return commutes(va, vb) == (form == 0);
  };

  if (k <= 3) {
    for (std::uint64_t ax = 0; ax < space; ++ax)
      for (std::uint64_t az = 0; az < space; ++az)
        for (std::uint64_t bx = 0; bx < space; ++bx)
          for (std::uint64_t bz = 0; bz < space; ++bz)
            if (!law_holds(ax, az, bx, bz)) return false;
    // center is trivial
    for (std::uint64_t ax = 0; ax < space; ++ax) {
      for (std::uint64_t az = 0; az < space; ++az) {
        if (!ax && !az) continue;
        bool central = true;
        const PauliWord va = edge_rep_word(k, ax, az);
        for (std::size_t q = 1; q <= k && central; ++q) {
          central &= commutes(va, PauliWord::single(k, q, 'X'));
          central &= commutes(va, PauliWord::single(k, q, 'Z'));
        }
        if (central) return false;
      }
    }
    return true;
  }
  for (std::size_t t = 0; t < random_pairs; ++t) {
    const std::uint64_t mask = space - 1;
    if (!law_holds(rng() & mask, rng() & mask, rng() & mask, rng() & mask)) return false;
  }
  return true;
}

namespace detail {

// Rank of the complex span of a list of dense matrices, by Gram-Schmidt with
// complex coefficients on the vectorized entries.
inline std::size_t matrix_span_rank(const std::vector<std::vector<cx>>& mats) {
  std::vector<std::vector<cx>> basis;
  for (auto v : mats) {
    for (const auto& b : basis) {
      cx ip(0, 0);
      for (std::size_t i = 0; i < v.size(); ++i) ip += std::conj(b[i]) * v[i];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= ip * b[i];
    }
    double norm = 0;
    for (const cx& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm > 1e-8) {
      for (cx& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
  }
  return basis.size();
}

}  // namespace detail

// Complex span of {A(s_L)...A(s_1)} at L = p_k, where A_j(s) = V_j Z_1^s is
// the per-step sideways tensor. Injectivity = the span is the full matrix
// space of dimension 4^k.
inline bool injectivity_check(std::size_t k, const LambdaSchedule& schedule,
                              std::size_t period_cap = kDefaultPeriodCap) {
  if (k > 4) throw std::invalid_argument("injectivity_check: dense check capped at k <= 4");
  const auto p = schedule_period(k, schedule, period_cap);
  if (!p) return false;
  const std::size_t dim = std::size_t(1) << k;

  // dense unitary of one virtual gate, column by column
  auto gate_matrix = [&](std::size_t step) {
    std::vector<cx> m(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
      StateVector s(k);  // |0...0>
      for (std::size_t q = 1; q <= k; ++q) {
        if ((col >> (q - 1)) & 1u) s.apply_x(q);
      }
      apply_virtual_gate(s, schedule, step);
      for (std::size_t row = 0; row < dim; ++row) m[row * dim + col] = s.amplitude(row);
    }
    return m;
  };

  auto matmul = [&](const std::vector<cx>& a, const std::vector<cx>& b) {
    std::vector<cx> r(dim * dim, cx(0, 0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t l = 0; l < dim; ++l) {
        const cx ail = a[i * dim + l];
        if (ail == cx(0, 0)) continue;
        for (std::size_t j = 0; j < dim; ++j) r[i * dim + j] += ail * b[l * dim + j];
      }
    return r;
  };

  // products over all outcome strings, built per step
  std::vector<std::vector<cx>> products;
  {
    std::vector<cx> eye(dim * dim, cx(0, 0));
    for (std::size_t i = 0; i < dim; ++i) eye[i * dim + i] = 1;
    products.push_back(eye);
  }
  for (std::size_t step = 1; step <= *p; ++step) {
    const std::vector<cx> gate = gate_matrix(step);
    std::vector<cx> gate_z = gate;  // V Z_1: flip the sign of odd columns
    for (std::size_t col = 0; col < dim; ++col) {
      if (col & 1u) {
        for (std::size_t row = 0; row < dim; ++row) gate_z[row * dim + col] = -gate_z[row * dim + col];
      }
    }
    std::vector<std::vector<cx>> next;
    next.reserve(products.size() * 2);
    for (const auto& m : products) {
      next.push_back(matmul(gate, m));
      next.push_back(matmul(gate_z, m));
    }
    products = std::move(next);
  }
  return detail::matrix_span_rank(products) == dim * dim;
}

// Multiplicative counterpart: the O_k(l) words generate the full Pauli group
// iff their symplectic vectors span rank 2k.
inline bool injectivity_rank_check(std::size_t k, const LambdaSchedule& schedule,
                                   std::size_t period_cap = kDefaultPeriodCap) {
  const auto diagram = spacetime(k, schedule, period_cap);
  if (!diagram) return false;
  std::vector<std::uint64_t> rows;
  for (std::size_t l = 0; l < diagram->period(); ++l) {
    const PauliWord& c = diagram->column(static_cast<long long>(l));
    std::uint64_t v = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (c.x_bit(i)) v |= std::uint64_t(1) << (i - 1);
      if (c.z_bit(i)) v |= std::uint64_t(1) << (k + i - 1);
    }
    rows.push_back(v);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * k && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !((rows[piv] >> col) & 1u)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank == 2 * k;
}

namespace detail {

// Eigenvalues of a Hermitian matrix via the real symmetric embedding
// [[A, -B], [B, A]] and cyclic Jacobi; each eigenvalue arrives twice.
inline std::vector<double> hermitian_eigenvalues(std::size_t dim, const std::vector<cx>& h) {
  const std::size_t n = 2 * dim;
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = h[i * dim + j].real(), im = h[i * dim + j].imag();
      m[i * n + j] = re;
      m[(i + dim) * n + (j + dim)] = re;
      m[i * n + (j + dim)] = -im;
      m[(i + dim) * n + j] = im;
    }
  }
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += m[i * n + j] * m[i * n + j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m[p * n + q];
        if (std::abs(apq) < 1e-18) continue;
        const double app = m[p * n + p], aqq = m[q * n + q];
        const double phi = 0.5 * std::atan2(2 * apq, aqq - app);
        const double c = std::cos(phi), s = std::sin(phi);
        for (std::size_t i = 0; i < n; ++i) {
          const double mip = m[i * n + p], miq = m[i * n + q];
          m[i * n + p] = c * mip - s * miq;
          m[i * n + q] = s * mip + c * miq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double mpi = m[p * n + i], mqi = m[q * n + i];
          m[p * n + i] = c * mpi - s * mqi;
          m[q * n + i] = s * mpi + c * mqi;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = m[i * n + i];
  return eig;
}

}  // namespace detail

// Von Neumann entropy (natural log) of the left block, sites 1..cut.
inline double half_chain_entropy(const StateVector& state, std::size_t cut) {
  const std::size_t n = state.n_qubits();
  if (cut == 0 || cut >= n) throw std::invalid_argument("half_chain_entropy: bad cut");
  if (cut > 13) throw std::invalid_argument("half_chain_entropy: left block capped at 13 qubits");
  const std::size_t dl = std::size_t(1) << cut;
  const std::size_t dr = std::size_t(1) << (n - cut);
  std::vector<cx> rho(dl * dl, cx(0, 0));
  for (std::size_t r = 0; r < dr; ++r) {
    for (std::size_t a = 0; a < dl; ++a) {
      const cx va = state.amplitude(a | (r << cut));
      if (va == cx(0, 0)) continue;
      for (std::size_t b = 0; b < dl; ++b) {
        rho[a * dl + b] += va * std::conj(state.amplitude(b | (r << cut)));
      }
    }
  }
  const auto eig = detail::hermitian_eigenvalues(dl, rho);
  double s = 0;
  for (double lambda : eig) {
    if (lambda > 1e-13) s -= lambda * std::log(lambda);
  }
  return 0.5 * s;  // the embedding doubles every eigenvalue
}

// Glider syntax of the free-fermion family: a contiguous block, interior all
// Y, endpoint letters X or Z unless the block touches a chain end there.
inline bool matches_glider_class(const PauliWord& w) {
  const std::size_t k = w.n_qubits();
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    if (w.letter(i) != 'I') {
      if (!lo) lo = i;
      hi = i;
    }
  }
  if (lo == 0) return false;  // identity is not a class member
  for (std::size_t i = lo; i <= hi; ++i) {
    if (w.letter(i) == 'I') return false;  // support must be an interval
  }
  if (lo == hi) return true;  // single letter, the degenerate i = j case
  for (std::size_t i = lo + 1; i < hi; ++i) {
    if (w.letter(i) != 'Y') return false;
  }
  const char left = w.letter(lo), right = w.letter(hi);
  const bool left_ok = left == 'X' || left == 'Z' || (lo == 1 && left == 'Y');
  const bool right_ok = right == 'X' || right == 'Z' || (hi == k && right == 'Y');
  return left_ok && right_ok;
}

// The all-zeros schedule generates the quadratic family: every closure
// element is a glider word and the dimension is (k+1)(2k+1).
inline bool matchgate_class_check(std::size_t k, std::size_t period_cap = kDefaultPeriodCap,
                                  std::size_t member_cap = 0) {
  const PowerRow row = closure_dim(k, LambdaSchedule::all_zeros(k), period_cap, member_cap);
  if (!row.complete()) return false;
  if (row.dimension != (k + 1) * (2 * k + 1)) return false;
  const auto diagram = spacetime(k, LambdaSchedule::all_zeros(k), period_cap);
  PauliSet gens(k);
  for (std::size_t l = 0; l < diagram->period(); ++l) {
    gens.insert(diagram->column(static_cast<long long>(l)));
  }
  const auto closed = close(gens, member_cap == 0 ? default_member_cap(k) : member_cap);
  if (!closed.closed()) return false;
  for (const auto& key : closed.set.members()) {
    if (!matches_glider_class(word_of(k, key))) return false;
  }
  return true;
}

}  // namespace duclab
