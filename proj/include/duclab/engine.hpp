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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "duclab/pauli.hpp"
#include "duclab/schedule.hpp"
#include "duclab/symplectic.hpp"

namespace duclab {

inline constexpr std::size_t kDefaultPeriodCap = 1000000;

// Conjugation direction for one circuit layer U = (prod_i H_i S_i^s)(prod CZ).
// backward maps P -> U^dag P U (the direction generating O_k(l)), forward
// maps P -> U P U^dag.
enum class Direction { backward, forward };

enum class Boundary { open, periodic };

// P -> (prod CZ) P (prod CZ); self-inverse, so direction-free.
inline SymplecticMap cz_layer_map(std::size_t n, Boundary boundary) {
  if (boundary == Boundary::periodic && n < 3) {
    throw std::invalid_argument("cz_layer_map: periodic chain needs n >= 3");
  }
  SymplecticMap m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    PauliWord w = PauliWord::single(n, i, 'X');
    const bool wrap = boundary == Boundary::periodic;
    if (i > 1) {
      w.set_z(i - 1, true);
    } else if (wrap) {
      w.set_z(n, true);
    }
    if (i < n) {
      w.set_z(i + 1, true);
    } else if (wrap) {
      w.set_z(1, true);
    }
    m.set_image_x(i, std::move(w));
  }
  return m;
}

// Single-qubit layer prod_i H_i S_i^{s_i}; s_flags bit i-1 selects HS on site
// i, otherwise plain H. The circuit's S gate is the root of Z with
// S = diag(1, -i), which makes every conjugation image carry sign +1 (the
// other root flips the stabilizers to -1).
inline SymplecticMap single_qubit_layer_map(std::size_t n, const std::vector<std::uint8_t>& s_flags,
                                            Direction dir) {
  if (s_flags.size() != n) throw std::invalid_argument("single_qubit_layer_map: flag size");
  SymplecticMap m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    PauliWord plus_y(n);  // +Y_i = i X_i Z_i
    plus_y.set_x(i, true);
    plus_y.set_z(i, true);
    plus_y.set_phase_exponent(1);
    if (s_flags[i - 1]) {
      if (dir == Direction::backward) {
        // (HS)^dag X HS = Z, (HS)^dag Z HS = Y
        m.set_image_x(i, PauliWord::single(n, i, 'Z'));
        m.set_image_z(i, plus_y);
      } else {
        // HS X (HS)^dag = Y, HS Z (HS)^dag = X
        m.set_image_x(i, plus_y);
        m.set_image_z(i, PauliWord::single(n, i, 'X'));
      }
    } else {
      m.set_image_x(i, PauliWord::single(n, i, 'Z'));
      m.set_image_z(i, PauliWord::single(n, i, 'X'));
    }
  }
  return m;
}

// Full layer map for U = (prod_i H_i S_i^{s_i})(prod CZ_{i,i+1}).
inline SymplecticMap layer_map(std::size_t n, const std::vector<std::uint8_t>& s_flags,
                               Direction dir, Boundary boundary = Boundary::open) {
  const SymplecticMap cz = cz_layer_map(n, boundary);
  const SymplecticMap sq = single_qubit_layer_map(n, s_flags, dir);
  // backward: conjugate by the single-qubit layer first, then by CZ
  return dir == Direction::backward ? compose(cz, sq) : compose(sq, cz);
}

inline std::vector<std::uint8_t> schedule_row(const LambdaSchedule& schedule, std::size_t layer) {
  std::vector<std::uint8_t> f(schedule.k, 0);
  for (std::size_t i = 1; i <= schedule.k; ++i) f[i - 1] = schedule.s_on(i, layer) ? 1 : 0;
  return f;
}

// The map of one virtual evolution step: build_map(k, schedule, layer) is
// conjugation by T_{k,layer} in the backward (O_k-generating) direction.
inline SymplecticMap build_map(std::size_t k, const LambdaSchedule& schedule, std::size_t layer,
                               Direction dir = Direction::backward) {
  if (k == 0) throw std::invalid_argument("build_map: k must be positive");
  if (schedule.k != k) throw std::invalid_argument("build_map: schedule size mismatch");
  if (layer == 0) throw std::invalid_argument("build_map: layer is 1-based");
  return layer_map(k, schedule_row(schedule, layer), dir, Boundary::open);
}

namespace detail {

// Packed phaseless symplectic matrix for n <= 32 qubits: column j holds the
// image bits of generator j (X_1..X_n then Z_1..Z_n) over the 2n rows.
struct PackedMap {
  std::size_t n = 0;
  std::vector<std::uint64_t> col;

  static PackedMap identity(std::size_t n) {
    PackedMap m;
    m.n = n;
    m.col.assign(2 * n, 0);
    for (std::size_t j = 0; j < 2 * n; ++j) m.col[j] = std::uint64_t(1) << j;
    return m;
  }

  static PackedMap from(const SymplecticMap& s) {
    const std::size_t n = s.n_qubits();
    if (2 * n > 64) throw std::invalid_argument("PackedMap: needs n <= 32");
    PackedMap m;
    m.n = n;
    m.col.assign(2 * n, 0);
    auto pack = [&](const PauliWord& w) {
      std::uint64_t v = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        if (w.x_bit(i)) v |= std::uint64_t(1) << (i - 1);
        if (w.z_bit(i)) v |= std::uint64_t(1) << (n + i - 1);
      }
      return v;
    };
    for (std::size_t i = 1; i <= n; ++i) {
      m.col[i - 1] = pack(s.image_x(i));
      m.col[n + i - 1] = pack(s.image_z(i));
    }
    return m;
  }

  std::uint64_t apply(std::uint64_t v) const {
    std::uint64_t out = 0;
    while (v) {
      const int j = std::countr_zero(v);
      out ^= col[j];
      v &= v - 1;
    }
    return out;
  }

  bool is_identity() const {
    for (std::size_t j = 0; j < col.size(); ++j) {
      if (col[j] != std::uint64_t(1) << j) return false;
    }
    return true;
  }
};

// this * rhs as matrices: apply rhs first.
inline PackedMap packed_mul(const PackedMap& lhs, const PackedMap& rhs) {
  PackedMap r;
  r.n = lhs.n;
  r.col.resize(lhs.col.size());
  for (std::size_t j = 0; j < rhs.col.size(); ++j) r.col[j] = lhs.apply(rhs.col[j]);
  return r;
}

inline PauliWord unpack_word(std::size_t n, std::uint64_t v) {
  PauliWord w(n);
  for (std::size_t i = 1; i <= n; ++i) {
    w.set_x(i, (v >> (i - 1)) & 1u);
    w.set_z(i, (v >> (n + i - 1)) & 1u);
  }
  return w.phaseless();
}

}  // namespace detail

// Least p with T_{layer p} ... T_{layer 1} proportional to the identity, i.e.
// the prefix conjugation map returning to the identity on the GF(2) level.
inline std::optional<std::size_t> schedule_period(std::size_t k, const LambdaSchedule& schedule,
                                                  std::size_t cap = kDefaultPeriodCap) {
  if (2 * k <= 64) {
    std::vector<detail::PackedMap> layers;
    for (std::size_t t = 1; t <= schedule.period_t; ++t) {
      layers.push_back(detail::PackedMap::from(build_map(k, schedule, t)));
    }
    detail::PackedMap acc = detail::PackedMap::identity(k);
    for (std::size_t step = 1; step <= cap; ++step) {
      acc = detail::packed_mul(acc, layers[(step - 1) % schedule.period_t]);
      if (acc.is_identity()) return step;
    }
    return std::nullopt;
  }
  std::vector<SymplecticMap> layers;
  for (std::size_t t = 1; t <= schedule.period_t; ++t) layers.push_back(build_map(k, schedule, t));
  SymplecticMap acc = SymplecticMap::identity_map(k);
  for (std::size_t step = 1; step <= cap; ++step) {
    acc = compose(acc, layers[(step - 1) % schedule.period_t]);
    if (acc.is_identity_bits()) return step;
  }
  return std::nullopt;
}

// Spacetime evolution of Z_1: column l holds the phaseless word
// O_k(l) = prefix_l(Z_1), with column 0 = Z_1 and period many columns.
class SpacetimeDiagram {
 public:
  SpacetimeDiagram(std::size_t k, std::vector<PauliWord> cols) : k_(k), cols_(std::move(cols)) {
    if (cols_.empty()) throw std::invalid_argument("SpacetimeDiagram: no columns");
    PauliWord z1 = PauliWord::single(k, 1, 'Z');
    if (!cols_[0].same_bits(z1)) {
      throw std::invalid_argument("SpacetimeDiagram: column 0 must be Z_1");
    }
    for (const auto& c : cols_) {
      if (c.n_qubits() != k_) throw std::invalid_argument("SpacetimeDiagram: column size");
    }
  }

  std::size_t k() const { return k_; }
  std::size_t period() const { return cols_.size(); }

  // negative or out-of-range l is reduced mod the period: O(-l) = O(p-l)
  const PauliWord& column(long long l) const {
    const long long p = static_cast<long long>(cols_.size());
    return cols_[static_cast<std::size_t>(((l % p) + p) % p)];
  }

  char letter(long long l, std::size_t row) const { return column(l).letter(row); }

  std::string render() const {
    std::string out;
    for (std::size_t row = 1; row <= k_; ++row) {
      for (std::size_t l = 0; l < cols_.size(); ++l) out.push_back(cols_[l].letter(row));
      out.push_back('\n');
    }
    return out;
  }

 private:
  std::size_t k_;
  std::vector<PauliWord> cols_;
};

inline std::optional<SpacetimeDiagram> spacetime(std::size_t k, const LambdaSchedule& schedule,
                                                 std::size_t cap = kDefaultPeriodCap) {
  if (k == 0) throw std::invalid_argument("spacetime: k must be positive");
  if (schedule.k != k) throw std::invalid_argument("spacetime: schedule size mismatch");
  std::vector<PauliWord> cols;
  cols.push_back(PauliWord::single(k, 1, 'Z'));
  if (2 * k <= 64) {
    std::vector<detail::PackedMap> layers;
    for (std::size_t t = 1; t <= schedule.period_t; ++t) {
      layers.push_back(detail::PackedMap::from(build_map(k, schedule, t)));
    }
    detail::PackedMap acc = detail::PackedMap::identity(k);
    const std::uint64_t z1 = std::uint64_t(1) << k;  // generator Z_1
    for (std::size_t step = 1; step <= cap; ++step) {
      acc = detail::packed_mul(acc, layers[(step - 1) % schedule.period_t]);
      if (acc.is_identity()) {
        return SpacetimeDiagram(k, std::move(cols));
      }
      cols.push_back(detail::unpack_word(k, acc.apply(z1)));
    }
    return std::nullopt;
  }
  std::vector<SymplecticMap> layers;
  for (std::size_t t = 1; t <= schedule.period_t; ++t) layers.push_back(build_map(k, schedule, t));
  SymplecticMap acc = SymplecticMap::identity_map(k);
  const PauliWord z1 = PauliWord::single(k, 1, 'Z');
  for (std::size_t step = 1; step <= cap; ++step) {
    acc = compose(acc, layers[(step - 1) % schedule.period_t]);
    if (acc.is_identity_bits()) {
      return SpacetimeDiagram(k, std::move(cols));
    }
    cols.push_back(acc.apply(z1).phaseless());
  }
  return std::nullopt;
}

}  // namespace duclab
