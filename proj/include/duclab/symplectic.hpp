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
#include <stdexcept>
#include <vector>

#include "duclab/pauli.hpp"

namespace duclab {

// Clifford conjugation represented by the images of the generators X_i, Z_i.
// The images carry exact i-exponents, so applying the map to a word
// reproduces conjugation signs; equality tests and period searches work on
// the phaseless GF(2) level.
class SymplecticMap {
 public:
  explicit SymplecticMap(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("SymplecticMap: qubit count must be positive");
    img_x_.reserve(n);
    img_z_.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
      img_x_.push_back(PauliWord::single(n, i, 'X'));
      img_z_.push_back(PauliWord::single(n, i, 'Z'));
    }
  }

  static SymplecticMap identity_map(std::size_t n) { return SymplecticMap(n); }

  std::size_t n_qubits() const { return n_; }

  const PauliWord& image_x(std::size_t site) const { return img_x_.at(site - 1); }
  const PauliWord& image_z(std::size_t site) const { return img_z_.at(site - 1); }
  void set_image_x(std::size_t site, PauliWord w) { check(w); img_x_.at(site - 1) = std::move(w); }
  void set_image_z(std::size_t site, PauliWord w) { check(w); img_z_.at(site - 1) = std::move(w); }

  // Conjugates a word through the map, multiplying generator images in the
  // canonical order X_1^{x_1} Z_1^{z_1} X_2^{x_2} ... so phases compose
  // exactly.
  PauliWord apply(const PauliWord& p) const {
    if (p.n_qubits() != n_) throw std::invalid_argument("SymplecticMap::apply size mismatch");
    PauliWord r = PauliWord::identity(n_);
    r.set_phase_exponent(p.phase_exponent());
    for (std::size_t i = 1; i <= n_; ++i) {
      if (p.x_bit(i)) r = mul(r, img_x_[i - 1]);
      if (p.z_bit(i)) r = mul(r, img_z_[i - 1]);
    }
    return r;
  }

  bool is_identity_bits() const {
    for (std::size_t i = 1; i <= n_; ++i) {
      if (!img_x_[i - 1].same_bits(PauliWord::single(n_, i, 'X'))) return false;
      if (!img_z_[i - 1].same_bits(PauliWord::single(n_, i, 'Z'))) return false;
    }
    return true;
  }

  bool same_bits(const SymplecticMap& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!img_x_[i].same_bits(o.img_x_[i]) || !img_z_[i].same_bits(o.img_z_[i])) return false;
    }
    return true;
  }

  // Symplectic-form preservation over every generator pair.
  bool preserves_symplectic_form() const {
    std::vector<const PauliWord*> gen, img;
    std::vector<PauliWord> orig;
    for (std::size_t i = 1; i <= n_; ++i) {
      orig.push_back(PauliWord::single(n_, i, 'X'));
      orig.push_back(PauliWord::single(n_, i, 'Z'));
    }
    for (std::size_t i = 0; i < n_; ++i) {
      img.push_back(&img_x_[i]);
      img.push_back(&img_z_[i]);
    }
    for (std::size_t a = 0; a < orig.size(); ++a) {
      for (std::size_t b = a + 1; b < orig.size(); ++b) {
        if (symplectic_product(orig[a], orig[b]) != symplectic_product(*img[a], *img[b])) {
          return false;
        }
      }
    }
    return true;
  }

  SymplecticMap inverse() const;

 private:
  void check(const PauliWord& w) const {
    if (w.n_qubits() != n_) throw std::invalid_argument("SymplecticMap: image size mismatch");
  }

  std::size_t n_;
  std::vector<PauliWord> img_x_, img_z_;
};

// compose(A, B).apply(P) == A.apply(B.apply(P))
inline SymplecticMap compose(const SymplecticMap& a, const SymplecticMap& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("compose: size mismatch");
  }
  SymplecticMap r(a.n_qubits());
  for (std::size_t i = 1; i <= a.n_qubits(); ++i) {
    r.set_image_x(i, a.apply(b.image_x(i)));
    r.set_image_z(i, a.apply(b.image_z(i)));
  }
  return r;
}

inline SymplecticMap SymplecticMap::inverse() const {
  // Invert the 2n x 2n GF(2) matrix whose columns are the generator images,
  // then recover per-generator phases by one forward application.
  const std::size_t m = 2 * n_;
  if (m > 64) throw std::invalid_argument("SymplecticMap::inverse: supports up to 32 qubits");
  auto col_bits = [&](const PauliWord& w) {
    std::uint64_t v = 0;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (w.x_bit(i)) v |= std::uint64_t(1) << (i - 1);
      if (w.z_bit(i)) v |= std::uint64_t(1) << (n_ + i - 1);
    }
    return v;
  };
  std::vector<std::uint64_t> a(m);    // columns of M, packed over row index
  std::vector<std::uint64_t> sol(m);  // running product of column operations
  for (std::size_t j = 0; j < n_; ++j) {
    a[j] = col_bits(img_x_[j]);
    a[n_ + j] = col_bits(img_z_[j]);
  }
  for (std::size_t j = 0; j < m; ++j) sol[j] = std::uint64_t(1) << j;
  // Column elimination: reduce a to the identity; the same operations applied
  // to sol leave sol = M^{-1}.
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t piv = r;
    while (piv < m && !((a[piv] >> r) & 1u)) ++piv;
    if (piv == m) throw std::runtime_error("SymplecticMap::inverse: singular matrix");
    std::swap(a[r], a[piv]);
    std::swap(sol[r], sol[piv]);
    for (std::size_t j = 0; j < m; ++j) {
      if (j != r && ((a[j] >> r) & 1u)) {
        a[j] ^= a[r];
        sol[j] ^= sol[r];
      }
    }
  }
  SymplecticMap r(n_);
  auto build = [&](std::uint64_t coeffs, const PauliWord& target) {
    PauliWord w(n_);
    for (std::size_t i = 1; i <= n_; ++i) {
      w.set_x(i, (coeffs >> (i - 1)) & 1u);
      w.set_z(i, (coeffs >> (n_ + i - 1)) & 1u);
    }
    const PauliWord probe = apply(w);
    if (!probe.same_bits(target)) throw std::runtime_error("SymplecticMap::inverse: bad preimage");
    w.set_phase_exponent(-probe.phase_exponent());
    return w;
  };
  for (std::size_t j = 0; j < n_; ++j) {
    r.set_image_x(j + 1, build(sol[j], PauliWord::single(n_, j + 1, 'X')));
    r.set_image_z(j + 1, build(sol[n_ + j], PauliWord::single(n_, j + 1, 'Z')));
  }
  return r;
}

// Least p <= cap with map^p == identity on the phaseless level.
inline std::optional<std::size_t> period(const SymplecticMap& map, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("period: cap must be positive");
  SymplecticMap acc = map;
  for (std::size_t p = 1; p <= cap; ++p) {
    if (acc.is_identity_bits()) return p;
    acc = compose(acc, map);
  }
  return std::nullopt;
}

}  // namespace duclab
