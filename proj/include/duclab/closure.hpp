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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "duclab/engine.hpp"
#include "duclab/pauli.hpp"
#include "duclab/schedule.hpp"

namespace duclab {

namespace detail {

// Open-addressing set of phaseless Pauli keys; the closure inner loop is a
// hash probe per anticommuting pair, so this stays allocation-free.
class KeySet {
 public:
  explicit KeySet(std::size_t expected = 64) {
    std::size_t cap = 64;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, PauliKey{});
    used_.assign(cap, 0);
    mask_ = cap - 1;
  }

  bool contains(PauliKey k) const {
    std::size_t idx = hash_key(k) & mask_;
    while (used_[idx]) {
      if (slots_[idx] == k) return true;
      idx = (idx + 1) & mask_;
    }
    return false;
  }

  // true when the key was new
  bool insert(PauliKey k) {
    if ((size_ + 1) * 2 > slots_.size()) grow();
    std::size_t idx = hash_key(k) & mask_;
    while (used_[idx]) {
      if (slots_[idx] == k) return false;
      idx = (idx + 1) & mask_;
    }
    slots_[idx] = k;
    used_[idx] = 1;
    ++size_;
    return true;
  }

  std::size_t size() const { return size_; }
  std::size_t capacity_bytes() const { return slots_.size() * (sizeof(PauliKey) + 1); }

 private:
  void grow() {
    std::vector<PauliKey> old_slots = std::move(slots_);
    std::vector<std::uint8_t> old_used = std::move(used_);
    slots_.assign(old_slots.size() * 2, PauliKey{});
    used_.assign(old_slots.size() * 2, 0);
    mask_ = slots_.size() - 1;
    size_ = 0;
    for (std::size_t i = 0; i < old_slots.size(); ++i) {
      if (old_used[i]) insert(old_slots[i]);
    }
  }

  std::vector<PauliKey> slots_;
  std::vector<std::uint8_t> used_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace detail

// Deduplicated set of phaseless Pauli keys; the identity is never a member.
class PauliSet {
 public:
  explicit PauliSet(std::size_t n_qubits) : n_(n_qubits) {
    if (n_qubits == 0 || n_qubits > 64) {
      throw std::invalid_argument("PauliSet: supports 1..64 qubits");
    }
  }

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return members_.size(); }

  bool insert(const PauliWord& w) {
    if (w.n_qubits() != n_) throw std::invalid_argument("PauliSet: size mismatch");
    return insert_key(key_of(w));
  }

  bool insert_key(PauliKey k) {
    if (k.x == 0 && k.z == 0) return false;  // identity excluded
    if (!set_.insert(k)) return false;
    members_.push_back(k);
    return true;
  }

  bool contains(const PauliWord& w) const { return contains_key(key_of(w)); }
  bool contains_key(PauliKey k) const { return set_.contains(k); }

  // insertion order
  const std::vector<PauliKey>& members() const { return members_; }

  std::vector<PauliKey> sorted_members() const {
    std::vector<PauliKey> m = members_;
    std::sort(m.begin(), m.end());
    return m;
  }

  std::vector<PauliWord> words() const {
    std::vector<PauliWord> w;
    w.reserve(members_.size());
    for (auto k : members_) w.push_back(word_of(n_, k));
    return w;
  }

 private:
  std::size_t n_;
  std::vector<PauliKey> members_;
  detail::KeySet set_;
};

enum class CloseStatus { closed, member_cap_exceeded, memory_guard_exceeded };

struct CloseResult {
  CloseStatus status = CloseStatus::closed;
  PauliSet set;

  bool closed() const { return status == CloseStatus::closed; }
  std::size_t dimension() const { return set.size(); }
};

inline constexpr std::size_t kDefaultMemoryGuardBytes = std::size_t(2) << 30;

inline std::size_t default_member_cap(std::size_t n_qubits) {
  if (2 * n_qubits >= 63) return std::size_t(1) << 62;
  return std::size_t(1) << (2 * n_qubits);
}

// Worklist commutator closure over phaseless keys. For Pauli generators the
// real Lie algebra is spanned by i*(members), so closure is a set question.
// The result set is the unique commutator closure, independent of processing
// order; saturation at all 4^n - 1 nonidentity words short-circuits.
//
// A randomized warm-up (fixed seed, so runs stay deterministic) feeds the
// set with products of random member pairs first: saturating closures hit
// the 4^n - 1 bound long before the exact quadratic sweep would, and the
// sweep that follows guarantees closedness for everything else.
inline CloseResult close(const PauliSet& generators, std::size_t member_cap,
                         std::size_t memory_guard_bytes = kDefaultMemoryGuardBytes,
                         bool randomized_warmup = true) {
  if (generators.size() == 0) throw std::invalid_argument("close: empty generator set");
  const std::size_t n = generators.n_qubits();
  CloseResult result{CloseStatus::closed, PauliSet(n)};
  PauliSet& out = result.set;
  std::vector<std::uint64_t> xs, zs;  // mirrors of the member keys
  auto push = [&](PauliKey k) -> bool {
    if (!out.insert_key(k)) return false;
    xs.push_back(k.x);
    zs.push_back(k.z);
    return true;
  };
  for (auto k : generators.members()) push(k);

  const bool has_full_bound = 2 * n < 63;
  const std::size_t full = has_full_bound ? (std::size_t(1) << (2 * n)) - 1 : 0;
  const std::size_t member_bytes = sizeof(PauliKey) * 4 + 2;

  // 0 = keep going, 1 = saturated or capped
  auto combine = [&](std::size_t i, std::size_t j) -> int {
    const int anti = (std::popcount(xs[i] & zs[j]) ^ std::popcount(zs[i] & xs[j])) & 1;
    if (!anti) return 0;
    if (!push(PauliKey{xs[i] ^ xs[j], zs[i] ^ zs[j]})) return 0;
    if (out.size() > member_cap) {
      result.status = CloseStatus::member_cap_exceeded;
      return 1;
    }
    if (out.size() * member_bytes > memory_guard_bytes) {
      result.status = CloseStatus::memory_guard_exceeded;
      return 1;
    }
    if (has_full_bound && out.size() == full) return 1;
    return 0;
  };

  // warm-up: random pairs until progress stalls
  if (randomized_warmup && out.size() >= 2) {
    std::uint64_t state = 0x243f6a8885a308d3ull;
    auto rnd = [&]() {
      state += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      return z ^ (z >> 31);
    };
    std::size_t stall = 0;
    while (stall < 32 * out.size() + 4096) {
      const std::size_t i = rnd() % out.size();
      const std::size_t j = rnd() % out.size();
      if (i == j) continue;
      const std::size_t before = out.size();
      if (combine(i, j)) return result;
      stall = out.size() == before ? stall + 1 : 0;
    }
  }

  // exact sweep: every unordered pair once
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (combine(i, j)) return result;
    }
  }
  return result;
}

// Lie-algebra families whose dimensions the closure sizes are matched
// against.
enum class AlgebraFamily { su_exp, sp_exp, so_exp, sp_linear, so_shifted };

inline std::uint64_t family_dimension(AlgebraFamily f, std::size_t k) {
  const std::uint64_t two_k = k < 63 ? (std::uint64_t(1) << k) : 0;
  switch (f) {
    case AlgebraFamily::su_exp: return two_k ? two_k * two_k - 1 : 0;                 // su(2^k)
    case AlgebraFamily::so_exp: return two_k ? two_k / 2 * (two_k - 1) : 0;           // so(2^k)
    case AlgebraFamily::sp_exp: return two_k ? two_k / 2 * (two_k + 1) : 0;           // sp(2^k)
    case AlgebraFamily::so_shifted: return std::uint64_t(k + 1) * (2 * k + 1);        // so(2(k+1))
    case AlgebraFamily::sp_linear: return std::uint64_t(k) * (2 * k + 1);             // sp(2k)
  }
  return 0;
}

inline std::string family_name(AlgebraFamily f, std::size_t k) {
  switch (f) {
    case AlgebraFamily::su_exp: return "su(" + std::to_string(std::uint64_t(1) << k) + ")";
    case AlgebraFamily::so_exp: return "so(" + std::to_string(std::uint64_t(1) << k) + ")";
    case AlgebraFamily::sp_exp: return "sp(" + std::to_string(std::uint64_t(1) << k) + ")";
    case AlgebraFamily::so_shifted: return "so(" + std::to_string(2 * (k + 1)) + ")";
    case AlgebraFamily::sp_linear: return "sp(" + std::to_string(2 * k) + ")";
  }
  return "?";
}

struct AlgebraLabel {
  std::uint64_t dimension = 0;
  std::vector<AlgebraFamily> families;  // all families whose formula matches
  std::vector<std::string> names;       // deduplicated concrete names

  bool known() const { return !names.empty(); }
  std::string display() const {
    if (names.empty()) return "unknown";
    std::string s = names[0];
    for (std::size_t i = 1; i < names.size(); ++i) s += "," + names[i];
    return s;
  }
};

// Dimension-based identification; reports every family whose formula matches
// (formulas collide for small k), in the order su, sp, so.
inline AlgebraLabel classify(std::uint64_t dimension, std::size_t k) {
  AlgebraLabel label;
  label.dimension = dimension;
  if (dimension == 0 || k == 0) return label;
  const AlgebraFamily order[] = {AlgebraFamily::su_exp, AlgebraFamily::sp_exp,
                                 AlgebraFamily::sp_linear, AlgebraFamily::so_exp,
                                 AlgebraFamily::so_shifted};
  for (AlgebraFamily f : order) {
    const bool exp_family = f == AlgebraFamily::su_exp || f == AlgebraFamily::sp_exp ||
                            f == AlgebraFamily::so_exp;
    if (exp_family && k > 31) continue;
    if (family_dimension(f, k) != dimension) continue;
    label.families.push_back(f);
    const std::string name = family_name(f, k);
    if (std::find(label.names.begin(), label.names.end(), name) == label.names.end()) {
      label.names.push_back(name);
    }
  }
  return label;
}

// One row of the computational-power tables: period, closure dimension and
// the dimension-consistent algebra labels for the schedule's O_k(l) set.
struct PowerRow {
  std::size_t k = 0;
  bool period_exhausted = false;
  bool closure_exhausted = false;
  std::size_t period = 0;
  std::size_t dimension = 0;
  AlgebraLabel label;

  bool complete() const { return !period_exhausted && !closure_exhausted; }
};

inline PowerRow closure_dim(std::size_t k, const LambdaSchedule& schedule,
                            std::size_t period_cap = kDefaultPeriodCap,
                            std::size_t member_cap = 0,
                            std::size_t memory_guard_bytes = kDefaultMemoryGuardBytes) {
  PowerRow row;
  row.k = k;
  const auto diagram = spacetime(k, schedule, period_cap);
  if (!diagram) {
    row.period_exhausted = true;
    return row;
  }
  row.period = diagram->period();
  PauliSet gens(k);
  for (std::size_t l = 0; l < diagram->period(); ++l) {
    gens.insert(diagram->column(static_cast<long long>(l)));
  }
  if (member_cap == 0) member_cap = default_member_cap(k);
  const CloseResult closed = close(gens, member_cap, memory_guard_bytes);
  if (!closed.closed()) {
    row.closure_exhausted = true;
    return row;
  }
  row.dimension = closed.dimension();
  row.label = classify(row.dimension, k);
  return row;
}

}  // namespace duclab
