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
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "duclab/pauli.hpp"

namespace duclab {

using cx = std::complex<double>;

// Dense amplitude vector over n qubits; site 1 is the least significant bit
// of the amplitude index.
class StateVector {
 public:
  static constexpr std::size_t kAbsoluteQubitCap = 26;

  explicit StateVector(std::size_t n) : n_(n) {
    if (n == 0 || n > kAbsoluteQubitCap) {
      throw std::invalid_argument("StateVector: unsupported qubit count");
    }
    amps_.assign(std::size_t(1) << n, cx(0, 0));
    amps_[0] = 1.0;
  }

  static StateVector plus_state(std::size_t n) {
    StateVector s(n);
    const double a = std::pow(2.0, -0.5 * static_cast<double>(n));
    std::fill(s.amps_.begin(), s.amps_.end(), cx(a, 0));
    return s;
  }

  std::size_t n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cx>& amps() const { return amps_; }
  cx amplitude(std::size_t index) const { return amps_.at(index); }

  double norm() const {
    double s = 0;
    for (const cx& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  void renormalize() {
    const double n = norm();
    if (n < 1e-300) throw std::runtime_error("StateVector: vanishing norm");
    for (cx& a : amps_) a /= n;
  }

  void apply_h(std::size_t site) {
    const std::size_t bit = mask(site);
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (i & bit) continue;
      const cx a0 = amps_[i], a1 = amps_[i | bit];
      amps_[i] = s * (a0 + a1);
      amps_[i | bit] = s * (a0 - a1);
    }
  }

  void apply_s(std::size_t site) {
    const std::size_t bit = mask(site);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (i & bit) amps_[i] *= cx(0, 1);
    }
  }

  void apply_sdg(std::size_t site) {
    const std::size_t bit = mask(site);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (i & bit) amps_[i] *= cx(0, -1);
    }
  }

  void apply_cz(std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("apply_cz: need two distinct sites");
    const std::size_t ma = mask(a), mb = mask(b);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if ((i & ma) && (i & mb)) amps_[i] = -amps_[i];
    }
  }

  void apply_x(std::size_t site) {
    const std::size_t bit = mask(site);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
    }
  }

  void apply_z(std::size_t site) {
    const std::size_t bit = mask(site);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (i & bit) amps_[i] = -amps_[i];
    }
  }

  // e^{i theta Z_site} = diag(e^{i theta}, e^{-i theta})
  void apply_exp_z(std::size_t site, double theta) {
    const std::size_t bit = mask(site);
    const cx up = std::polar(1.0, theta), down = std::polar(1.0, -theta);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      amps_[i] *= (i & bit) ? down : up;
    }
  }

  // e^{i theta X_site}
  void apply_exp_x(std::size_t site, double theta) {
    const std::size_t bit = mask(site);
    const cx c = std::cos(theta), is = cx(0, std::sin(theta));
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (i & bit) continue;
      const cx a0 = amps_[i], a1 = amps_[i | bit];
      amps_[i] = c * a0 + is * a1;
      amps_[i | bit] = is * a0 + c * a1;
    }
  }

  // Zeroes the branch where the qubit disagrees with the outcome.
  void project(std::size_t site, std::uint8_t outcome) {
    const std::size_t bit = mask(site);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (static_cast<bool>(i & bit) != static_cast<bool>(outcome)) amps_[i] = cx(0, 0);
    }
  }

  // Applies i^phase X^x Z^z with the word's exact phase.
  void apply_pauli(const PauliWord& w) {
    if (w.n_qubits() != n_) throw std::invalid_argument("apply_pauli: size mismatch");
    static const cx tok[4] = {cx(1, 0), cx(0, 1), cx(-1, 0), cx(0, -1)};
    const cx global = tok[w.phase_exponent() % 4];
    std::size_t xm = 0, zm = 0;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (w.x_bit(i)) xm |= mask(i);
      if (w.z_bit(i)) zm |= mask(i);
    }
    std::vector<cx> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      // Z^z acts first on |i>, then X^x flips bits.
      const int zpar = std::popcount(i & zm) & 1;
      out[i ^ xm] = global * (zpar ? -amps_[i] : amps_[i]);
    }
    amps_ = std::move(out);
  }

  friend cx inner(const StateVector& a, const StateVector& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("inner: size mismatch");
    cx s(0, 0);
    for (std::size_t i = 0; i < a.amps_.size(); ++i) s += std::conj(a.amps_[i]) * b.amps_[i];
    return s;
  }

 private:
  std::size_t mask(std::size_t site) const {
    if (site == 0 || site > n_) throw std::out_of_range("StateVector: site out of range");
    return std::size_t(1) << (site - 1);
  }

  std::size_t n_;
  std::vector<cx> amps_;
};

// Fidelity-style overlap magnitude |<a|b>| for up-to-phase comparisons.
inline double overlap_magnitude(const StateVector& a, const StateVector& b) {
  return std::abs(inner(a, b));
}

}  // namespace duclab
