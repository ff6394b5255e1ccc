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
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace duclab {

// Binary selection matrix lambda_{i,t} choosing HS (1) or H (0) per virtual
// qubit i and circuit layer t; layers repeat cyclically with unit cell
// period_t. Rows are stored in the sideways (virtual) frame: i indexes the
// k-qubit virtual chain, t the virtual time step.
struct LambdaSchedule {
  std::size_t k = 0;
  std::size_t period_t = 1;
  std::vector<std::vector<std::uint8_t>> rows;  // rows[t-1][i-1]

  LambdaSchedule() = default;
  LambdaSchedule(std::size_t k_, std::size_t period, std::vector<std::vector<std::uint8_t>> r)
      : k(k_), period_t(period), rows(std::move(r)) {
    validate();
  }

  void validate() const {
    if (k == 0) throw std::invalid_argument("LambdaSchedule: k must be positive");
    if (period_t == 0 || rows.size() != period_t) {
      throw std::invalid_argument("LambdaSchedule: bad temporal unit cell");
    }
    for (const auto& row : rows) {
      if (row.size() != k) throw std::invalid_argument("LambdaSchedule: row length != k");
      for (auto v : row) {
        if (v > 1) throw std::invalid_argument("LambdaSchedule: entries must be 0/1");
      }
    }
  }

  // layer is 1-based and applied cyclically
  bool s_on(std::size_t qubit, std::size_t layer) const {
    return rows[(layer - 1) % period_t][qubit - 1] != 0;
  }

  std::uint64_t s_flags(std::size_t layer) const {
    std::uint64_t f = 0;
    const auto& row = rows[(layer - 1) % period_t];
    for (std::size_t i = 0; i < k; ++i) {
      if (row[i]) f |= std::uint64_t(1) << i;
    }
    return f;
  }

  bool uniform() const { return period_t == 1; }

  static LambdaSchedule all_ones(std::size_t k) {
    return LambdaSchedule(k, 1, {std::vector<std::uint8_t>(k, 1)});
  }
  static LambdaSchedule all_zeros(std::size_t k) {
    return LambdaSchedule(k, 1, {std::vector<std::uint8_t>(k, 0)});
  }

  // First line "k period_t", then period_t lines of k characters over {0,1};
  // line t gives lambda_{.,t}.
  static LambdaSchedule parse(const std::string& text) {
    std::istringstream in(text);
    std::size_t k = 0, period = 0;
    if (!(in >> k >> period)) throw std::invalid_argument("schedule: missing header");
    std::vector<std::vector<std::uint8_t>> rows;
    std::string line;
    while (rows.size() < period && (in >> line)) {
      if (line.size() != k) throw std::invalid_argument("schedule: row length != k");
      std::vector<std::uint8_t> row(k);
      for (std::size_t i = 0; i < k; ++i) {
        if (line[i] != '0' && line[i] != '1') {
          throw std::invalid_argument("schedule: entries must be 0/1");
        }
        row[i] = line[i] == '1';
      }
      rows.push_back(std::move(row));
    }
    if (rows.size() != period) throw std::invalid_argument("schedule: missing rows");
    return LambdaSchedule(k, period, std::move(rows));
  }

  std::string serialize() const {
    std::ostringstream out;
    out << k << ' ' << period_t << '\n';
    for (const auto& row : rows) {
      for (auto v : row) out << (v ? '1' : '0');
      out << '\n';
    }
    return out.str();
  }
};

// Built-in schedule presets a..j mirroring the lambda families of the ten
// reference tables. Definitions below are written in the physical frame
// lambda(site, time) and transposed into the sideways frame: virtual qubit a
// corresponds to circuit layer t = k+1-a (the measured end of the circuit is
// virtual qubit 1), virtual step phase b to site congruence class b.
// delta(expr) = 1 when expr holds.
inline const char* preset_formula(char name) {
  switch (name) {
    case 'a': return "lambda(i,t) = 1";
    case 'b': return "lambda(i,t) = 0";
    case 'c': return "lambda(i,t) = delta(k - t == 1 mod 2)";
    case 'd': return "lambda(i,t) = delta(k - t == 1 mod 4)";
    case 'e': return "lambda(i,t) = delta(i == 1 mod 2)";
    case 'f': return "lambda(i,t) = delta(i == 1 mod 4)";
    case 'g': return "lambda(i,t) = delta(i == 1 mod 16)";
    case 'h': return "lambda(i,t) = delta(i == 1 mod 2 and k - t == 0 mod 2)";
    case 'i': return "lambda(i,t) = delta(t == 2)";
    case 'j': return "lambda(i,t) = delta(t == 1)";
    default: throw std::invalid_argument("unknown schedule preset");
  }
}

inline LambdaSchedule preset_schedule(char name, std::size_t k) {
  if (k == 0) throw std::invalid_argument("preset_schedule: k must be positive");
  // physical-frame lambda(site, time) for this preset
  auto lam = [&](std::size_t site, std::size_t time) -> bool {
    switch (name) {
      case 'a': return true;
      case 'b': return false;
      case 'c': return (k - time) % 2 == 1;
      case 'd': return (k - time) % 4 == 1;
      case 'e': return site % 2 == 1;
      case 'f': return site % 4 == 1;
      case 'g': return site % 16 == 1;
      case 'h': return site % 2 == 1 && (k - time) % 2 == 0;
      case 'i': return time == 2;
      case 'j': return time == 1;
      default: throw std::invalid_argument("unknown schedule preset");
    }
  };
  std::size_t cell = 1;
  switch (name) {
    case 'e': case 'h': cell = 2; break;
    case 'f': cell = 4; break;
    case 'g': cell = 16; break;
    default: break;
  }
  std::vector<std::vector<std::uint8_t>> rows(cell, std::vector<std::uint8_t>(k, 0));
  for (std::size_t b = 1; b <= cell; ++b) {
    for (std::size_t a = 1; a <= k; ++a) {
      rows[b - 1][a - 1] = lam(/*site=*/b, /*time=*/k + 1 - a) ? 1 : 0;
    }
  }
  return LambdaSchedule(k, cell, std::move(rows));
}

}  // namespace duclab
