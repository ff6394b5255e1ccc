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

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "duclab/mbqc.hpp"
#include "duclab/polyqca.hpp"
#include "duclab/universality.hpp"

namespace duclab {

struct RunCaps {
  std::size_t period_cap = kDefaultPeriodCap;
  std::size_t closure_cap = 0;  // 0 = 4^k default
  std::size_t memory_guard_bytes = kDefaultMemoryGuardBytes;
};

// One table row "k <tab> p <tab> dim <tab> label"; cap exhaustion is
// reported in place of the missing numbers.
inline std::string table_row_text(const PowerRow& row) {
  std::ostringstream out;
  out << row.k << '\t';
  if (row.period_exhausted) {
    out << "period>cap\t-\t-";
    return out.str();
  }
  out << row.period << '\t';
  if (row.closure_exhausted) {
    out << "closure>cap\t-";
    return out.str();
  }
  out << row.dimension << '\t' << row.label.display();
  return out.str();
}

struct TableResult {
  std::vector<PowerRow> rows;
  std::string text;
  bool exhausted = false;
};

inline TableResult power_table(std::size_t k_lo, std::size_t k_hi,
                               const std::function<LambdaSchedule(std::size_t)>& schedule_for,
                               const RunCaps& caps = {}, bool pretty = false) {
  TableResult result;
  std::ostringstream out;
  if (pretty) out << "k\tp_k\tdim\tlabel\n";
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    const PowerRow row = closure_dim(k, schedule_for(k), caps.period_cap, caps.closure_cap,
                                     caps.memory_guard_bytes);
    result.exhausted |= !row.complete();
    out << table_row_text(row) << '\n';
    result.rows.push_back(row);
  }
  result.text = out.str();
  return result;
}

inline std::string spacetime_text(std::size_t k, const LambdaSchedule& schedule,
                                  const RunCaps& caps = {}, bool pretty = false) {
  const auto diagram = spacetime(k, schedule, caps.period_cap);
  if (!diagram) return std::string();
  std::ostringstream out;
  if (pretty) {
    out << "k=" << k << " p=" << diagram->period() << '\n';
    const auto pattern =
        symmetry_pattern(diagram->period(), k, schedule, PauliWord::single(k, 1, 'Z'));
    // the I/Z string of u(Z_1), one slot per column read backwards in time
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      out << (pattern[diagram->period() - 1 - i] ? 'Z' : 'I');
    }
    out << '\n';
  }
  out << diagram->render();
  return out.str();
}

// Machine-parsable verification lines: "CHECK <name> <params> PASS|FAIL".
struct VerifyReport {
  bool pass = true;
  std::string text;

  void check(const std::string& name, const std::string& params, bool ok) {
    text += "CHECK " + name + (params.empty() ? "" : " " + params) + (ok ? " PASS" : " FAIL") + "\n";
    pass &= ok;
  }
};

struct VerifyParams {
  std::size_t k_lo = 0, k_hi = 0;  // 0,0 = suite default
  unsigned r_lo = 2, r_hi = 5;
  std::size_t n_physical = 0;      // 0 = suite default
  std::size_t k_single = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 20240901;
  RunCaps caps;
};

inline VerifyReport verify_lemma1_suite(const VerifyParams& p) {
  VerifyReport rep;
  const std::size_t lo = p.k_lo ? p.k_lo : 7, hi = p.k_hi ? p.k_hi : 15;
  for (std::size_t k = lo; k <= hi; ++k) {
    if (k % 4 != 3) continue;
    const auto inst = lemma2_instance(k, p.caps.period_cap);
    rep.check("lemma1", "k=" + std::to_string(k),
              inst.has_value() && check_lemma1(*inst, p.caps.memory_guard_bytes));
  }
  return rep;
}

inline VerifyReport verify_lemma2_suite(const VerifyParams& p) {
  VerifyReport rep;
  const std::size_t lo = p.k_lo ? p.k_lo : 7, hi = p.k_hi ? p.k_hi : 15;
  for (std::size_t k = lo; k <= hi; ++k) {
    if (k % 4 != 3) continue;
    rep.check("frozen-pattern", "k=" + std::to_string(k),
              frozen_pattern_check(k, p.caps.period_cap));
    const auto gens = tilde_generators(k, LambdaSchedule::all_ones(k), p.caps.period_cap);
    bool markers_ok = gens.has_value();
    if (markers_ok) {
      const long long period = static_cast<long long>(gens->size());
      for (long long l : lemma2_index_set(k)) {
        markers_ok &= !(*gens)[static_cast<std::size_t>(((l % period) + period) % period)].is_zero();
      }
    }
    rep.check("index-set-nonzero", "k=" + std::to_string(k), markers_ok);
    const auto inst = lemma2_instance(k, p.caps.period_cap);
    rep.check("instance", "k=" + std::to_string(k),
              inst.has_value() && check_lemma1(*inst, p.caps.memory_guard_bytes));
  }
  return rep;
}

inline VerifyReport verify_lemma3_suite(const VerifyParams& p) {
  VerifyReport rep;
  for (unsigned r = p.r_lo; r <= p.r_hi; ++r) {
    const auto l3 = verify_lemma3(r, p.caps.period_cap);
    std::ostringstream params;
    params << "r=" << r << " k=" << l3.k << " p=" << l3.measured_period;
    rep.check("lemma3", params.str(), l3.ok());
  }
  return rep;
}

inline VerifyReport verify_theorem1_suite(const VerifyParams& p) {
  VerifyReport rep;
  std::vector<std::size_t> ks;
  if (p.k_lo) {
    for (std::size_t k = p.k_lo; k <= (p.k_hi ? p.k_hi : p.k_lo); ++k) ks.push_back(k);
  } else {
    ks = {3, 7, 11, 15};
  }
  for (std::size_t k : ks) {
    const auto r = verify_theorem1(k, p.caps.period_cap, p.caps.memory_guard_bytes);
    std::ostringstream params;
    params << "k=" << k << " m=" << r.m;
    rep.check("theorem1", params.str(), r.verified && !r.exhausted);
  }
  return rep;
}

inline VerifyReport verify_recurrence_suite(const VerifyParams& p) {
  VerifyReport rep;
  const std::size_t lo = p.k_lo ? p.k_lo : 2, hi = p.k_hi ? p.k_hi : 31;
  for (std::size_t k = lo; k <= hi; ++k) {
    bool ok = true;
    unsigned max_r = 0;
    for (unsigned r = 0; (std::size_t(1) << r) < k; ++r) {
      ok &= check_recurrence(k, r, p.caps.period_cap);
      max_r = r;
    }
    rep.check("recurrence", "k=" + std::to_string(k) + " r<=" + std::to_string(max_r), ok);
    if (k >= 7 && k % 4 == 3) {
      rep.check("block-repetition", "k=" + std::to_string(k),
                block_repetition_check(k, p.caps.period_cap));
    }
  }
  return rep;
}

inline VerifyReport verify_dual_unitarity_suite(const VerifyParams& p,
                                                const LambdaSchedule& schedule) {
  VerifyReport rep;
  const std::size_t n = p.n_physical ? p.n_physical : 4;
  const std::size_t k = p.k_single ? p.k_single : 4;
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
  const StateVector psi = prepare_resource(n, k, schedule, Boundary::open);
  double worst = 0;
  for (std::size_t t = 0; t < p.trials; ++t) {
    std::vector<double> th(n);
    std::vector<std::uint8_t> s(n);
    for (auto& x : th) x = ang(rng);
    for (auto& b : s) b = rng() & 1;
    const cx lhs = physical_overlap(psi, th, s);
    const cx rhs = sideways_amplitude(n, k, schedule, th, s);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  std::ostringstream params;
  params << "N=" << n << " k=" << k << " trials=" << p.trials;
  rep.check("dual-unitarity", params.str(), worst < 1e-10);
  return rep;
}

inline VerifyReport verify_byproduct_suite(const VerifyParams& p, const LambdaSchedule& schedule) {
  VerifyReport rep;
  const std::size_t n = p.n_physical ? p.n_physical : 9;
  const std::size_t k = p.k_single ? p.k_single : 3;
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
  bool all = true;
  for (std::size_t t = 0; t < p.trials; ++t) {
    std::vector<double> th(n);
    for (auto& x : th) x = ang(rng);
    const auto run = adaptive_run(n, k, schedule, th, p.seed + 1000 + t);
    StateVector fixed = run.ideal_state;
    fixed.apply_pauli(run.record.boundary_word);
    all &= overlap_magnitude(fixed, run.virtual_state) >= 1.0 - 1e-8;
  }
  std::ostringstream params;
  params << "N=" << n << " k=" << k << " trajectories=" << p.trials;
  rep.check("byproduct", params.str(), all);
  return rep;
}

inline VerifyReport verify_symmetry_suite(const VerifyParams& p) {
  VerifyReport rep;
  struct Case {
    std::size_t n, k;
  };
  std::vector<Case> cases;
  if (p.k_single && p.n_physical) {
    cases.push_back({p.n_physical, p.k_single});
  } else {
    cases = {{6, 1}, {8, 2}};
  }
  for (const auto& c : cases) {
    rep.check("symmetry", "N=" + std::to_string(c.n) + " k=" + std::to_string(c.k),
              symmetry_check(c.n, c.k, LambdaSchedule::all_ones(c.k)));
  }
  rep.check("projective-rep", "k=2 exhaustive", projective_rep_check(2));
  return rep;
}

inline VerifyReport verify_injectivity_suite(const VerifyParams& p) {
  VerifyReport rep;
  const std::size_t lo = p.k_lo ? p.k_lo : 1, hi = p.k_hi ? p.k_hi : 4;
  for (std::size_t k = lo; k <= hi && k <= 4; ++k) {
    const auto sched = LambdaSchedule::all_ones(k);
    rep.check("injectivity-span", "k=" + std::to_string(k),
              injectivity_check(k, sched, p.caps.period_cap));
    rep.check("injectivity-rank", "k=" + std::to_string(k),
              injectivity_rank_check(k, sched, p.caps.period_cap));
  }
  return rep;
}

inline VerifyReport verify_entropy_suite(const VerifyParams& p) {
  VerifyReport rep;
  struct Case {
    std::size_t n, k;
  };
  std::vector<Case> cases;
  if (p.k_single && p.n_physical) {
    cases.push_back({p.n_physical, p.k_single});
  } else {
    cases = {{8, 1}, {10, 2}, {12, 3}};
  }
  for (const auto& c : cases) {
    const auto psi = prepare_resource(c.n, c.k, LambdaSchedule::all_ones(c.k));
    const double s = half_chain_entropy(psi, c.n / 2);
    const bool ok = std::abs(s - static_cast<double>(c.k) * std::log(2.0)) < 1e-8;
    rep.check("entropy", "N=" + std::to_string(c.n) + " k=" + std::to_string(c.k), ok);
  }
  return rep;
}

inline VerifyReport verify_matchgate_suite(const VerifyParams& p) {
  VerifyReport rep;
  const std::size_t lo = p.k_lo ? p.k_lo : 2, hi = p.k_hi ? p.k_hi : 7;
  for (std::size_t k = lo; k <= hi; ++k) {
    rep.check("matchgate", "k=" + std::to_string(k),
              matchgate_class_check(k, p.caps.period_cap, p.caps.closure_cap));
  }
  return rep;
}

inline VerifyReport run_verify_suite(const std::string& name, const VerifyParams& p,
                                     const LambdaSchedule* schedule = nullptr) {
  auto sched_or = [&](std::size_t k) {
    return schedule ? *schedule : LambdaSchedule::all_ones(k);
  };
  if (name == "lemma1") return verify_lemma1_suite(p);
  if (name == "lemma2") return verify_lemma2_suite(p);
  if (name == "lemma3") return verify_lemma3_suite(p);
  if (name == "theorem1") return verify_theorem1_suite(p);
  if (name == "recurrence") return verify_recurrence_suite(p);
  if (name == "dual-unitarity") {
    return verify_dual_unitarity_suite(p, sched_or(p.k_single ? p.k_single : 4));
  }
  if (name == "byproduct") return verify_byproduct_suite(p, sched_or(p.k_single ? p.k_single : 3));
  if (name == "symmetry") return verify_symmetry_suite(p);
  if (name == "injectivity") return verify_injectivity_suite(p);
  if (name == "entropy") return verify_entropy_suite(p);
  if (name == "matchgate") return verify_matchgate_suite(p);
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace duclab
