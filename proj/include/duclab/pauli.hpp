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

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace duclab {

// A Pauli word on n qubits in the binary symplectic representation.
//
// The word is stored as i^phase * X^x * Z^z, where x and z are bit-vectors
// packed LSB-first into 64-bit words (qubit 1 maps to bit 0) and phase is an
// exponent of i, tracked exactly mod 4. The phaseless projection (x, z) is
// the canonical key for set membership; two words differing only in phase
// compare equal under same_bits().
//
// Letter reading per qubit: (x,z) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y with
// Y = i*X*Z, so the rendered phase token is i^(phase + 3*#Y).
class PauliWord {
 public:
  explicit PauliWord(std::size_t n_qubits)
      : n_(n_qubits), phase_(0), x_(word_count(n_qubits), 0), z_(word_count(n_qubits), 0) {
    if (n_qubits == 0) {
      throw std::invalid_argument("PauliWord: qubit count must be positive");
    }
  }

  static PauliWord identity(std::size_t n_qubits) { return PauliWord(n_qubits); }

  // Single-letter word, site is 1-based.
  static PauliWord single(std::size_t n_qubits, std::size_t site, char letter) {
    PauliWord p(n_qubits);
    p.set_letter(site, letter);
    p.phase_ = static_cast<std::uint8_t>(p.y_count() & 3);  // render as +1 * letter
    return p;
  }

  // Parses "[token]LETTERS" with token in {+1,+i,-1,-i} and letters over IXYZ.
  static PauliWord parse(const std::string& text) {
    std::size_t pos = 0;
    int token = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      const bool minus = text[pos] == '-';
      ++pos;
      if (pos >= text.size()) throw std::invalid_argument("PauliWord::parse: dangling sign");
      if (text[pos] == '1') {
        token = minus ? 2 : 0;
        ++pos;
      } else if (text[pos] == 'i') {
        token = minus ? 3 : 1;
        ++pos;
      } else {
        throw std::invalid_argument("PauliWord::parse: bad phase token");
      }
    }
    const std::size_t n = text.size() - pos;
    if (n == 0) throw std::invalid_argument("PauliWord::parse: no letters");
    PauliWord p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.set_letter(i + 1, text[pos + i]);
    }
    // display exponent = phase + 3*#Y  =>  phase = token + #Y (mod 4)
    p.phase_ = static_cast<std::uint8_t>((token + p.y_count()) & 3);
    return p;
  }

  std::size_t n_qubits() const { return n_; }
  int phase_exponent() const { return phase_; }
  void set_phase_exponent(int p) { phase_ = static_cast<std::uint8_t>(((p % 4) + 4) & 3); }

  bool x_bit(std::size_t site) const { return get(x_, site); }
  bool z_bit(std::size_t site) const { return get(z_, site); }
  void set_x(std::size_t site, bool v) { put(x_, site, v); }
  void set_z(std::size_t site, bool v) { put(z_, site, v); }

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

  char letter(std::size_t site) const {
    const bool x = x_bit(site), z = z_bit(site);
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }

  void set_letter(std::size_t site, char letter) {
    switch (letter) {
      case 'I': put(x_, site, false); put(z_, site, false); break;
      case 'X': put(x_, site, true);  put(z_, site, false); break;
      case 'Y': put(x_, site, true);  put(z_, site, true);  break;
      case 'Z': put(x_, site, false); put(z_, site, true);  break;
      default: throw std::invalid_argument("PauliWord: letter must be one of IXYZ");
    }
  }

  bool is_identity_bits() const {
    for (std::size_t w = 0; w < x_.size(); ++w) {
      if (x_[w] | z_[w]) return false;
    }
    return true;
  }

  std::size_t weight() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) c += std::popcount(x_[w] | z_[w]);
    return c;
  }

  std::size_t y_count() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) c += std::popcount(x_[w] & z_[w]);
    return c;
  }

  // Exponent of i in front of the rendered IXYZ string.
  int display_phase() const { return static_cast<int>((phase_ + 3 * y_count()) & 3); }

  bool same_bits(const PauliWord& o) const { return n_ == o.n_ && x_ == o.x_ && z_ == o.z_; }
  bool operator==(const PauliWord& o) const { return same_bits(o) && phase_ == o.phase_; }

  // Normalizes the phase so the rendered token is +1.
  PauliWord phaseless() const {
    PauliWord p = *this;
    p.phase_ = static_cast<std::uint8_t>(p.y_count() & 3);
    return p;
  }

  std::string str() const {
    static const char* tokens[4] = {"", "+i", "-1", "-i"};
    std::string s = tokens[display_phase()];
    for (std::size_t i = 1; i <= n_; ++i) s.push_back(letter(i));
    return s;
  }

  // Word restricted to the given 1-based sites, in the order listed.
  PauliWord restrict_to(const std::vector<std::size_t>& sites) const {
    if (sites.empty()) throw std::invalid_argument("restrict_to: empty site list");
    PauliWord p(sites.size());
    for (std::size_t j = 0; j < sites.size(); ++j) {
      p.set_x(j + 1, x_bit(sites[j]));
      p.set_z(j + 1, z_bit(sites[j]));
    }
    p.phase_ = static_cast<std::uint8_t>(p.y_count() & 3);
    return p;
  }

  friend PauliWord mul(const PauliWord& a, const PauliWord& b);
  friend int symplectic_product(const PauliWord& a, const PauliWord& b);

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

  static bool get(const std::vector<std::uint64_t>& v, std::size_t site) {
    const std::size_t i = site - 1;
    return (v[i >> 6] >> (i & 63)) & 1u;
  }
  void put(std::vector<std::uint64_t>& v, std::size_t site, bool b) {
    if (site == 0 || site > n_) throw std::out_of_range("PauliWord: site out of range");
    const std::size_t i = site - 1;
    if (b) {
      v[i >> 6] |= std::uint64_t(1) << (i & 63);
    } else {
      v[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
  }

  std::size_t n_;
  std::uint8_t phase_;
  std::vector<std::uint64_t> x_, z_;
};

inline void require_same_size(const PauliWord& a, const PauliWord& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli operands act on different qubit counts");
  }
}

// xi_a^T Lambda xi_b in {0,1}; 0 iff the words commute.
inline int symplectic_product(const PauliWord& a, const PauliWord& b) {
  require_same_size(a, b);
  int acc = 0;
  for (std::size_t w = 0; w < a.x_.size(); ++w) {
    acc ^= std::popcount(a.x_[w] & b.z_[w]) & 1;
    acc ^= std::popcount(a.z_[w] & b.x_[w]) & 1;
  }
  return acc;
}

inline bool commutes(const PauliWord& a, const PauliWord& b) {
  return symplectic_product(a, b) == 0;
}

// Exact product: (i^p X^x Z^z)(i^q X^x' Z^z') = i^(p+q+2*|z&x'|) X^(x^x') Z^(z^z').
inline PauliWord mul(const PauliWord& a, const PauliWord& b) {
  require_same_size(a, b);
  PauliWord r(a.n_qubits());
  int cross = 0;
  for (std::size_t w = 0; w < a.x_.size(); ++w) {
    r.x_[w] = a.x_[w] ^ b.x_[w];
    r.z_[w] = a.z_[w] ^ b.z_[w];
    cross ^= std::popcount(a.z_[w] & b.x_[w]) & 1;
  }
  r.phase_ = static_cast<std::uint8_t>((a.phase_ + b.phase_ + 2 * cross) & 3);
  return r;
}

// Lie commutator on the phaseless level: absent when [a,b] = 0, otherwise the
// product word normalized to a +1 token.
inline std::optional<PauliWord> commutator(const PauliWord& a, const PauliWord& b) {
  if (commutes(a, b)) return std::nullopt;
  return mul(a, b).phaseless();
}

// Phaseless key for hashed sets; restricted to words that fit one machine word.
struct PauliKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  bool operator==(const PauliKey&) const = default;
  bool operator<(const PauliKey& o) const { return x != o.x ? x < o.x : z < o.z; }
};

inline PauliKey key_of(const PauliWord& p) {
  if (p.n_qubits() > 64) throw std::invalid_argument("PauliKey: word exceeds 64 qubits");
  return PauliKey{p.x_words()[0], p.z_words()[0]};
}

inline PauliWord word_of(std::size_t n_qubits, PauliKey k) {
  PauliWord p(n_qubits);
  for (std::size_t i = 1; i <= n_qubits; ++i) {
    p.set_x(i, (k.x >> (i - 1)) & 1u);
    p.set_z(i, (k.z >> (i - 1)) & 1u);
  }
  return p.phaseless();
}

inline std::uint64_t hash_key(PauliKey k) {
  // splitmix64-style mixing of both halves
  std::uint64_t h = k.x * 0x9e3779b97f4a7c15ull ^ (k.z + 0xbf58476d1ce4e5b9ull);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

}  // namespace duclab
