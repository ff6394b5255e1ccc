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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "duclab/duclab.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

struct CommonOpts {
  std::string preset;
  std::string schedule_file;
  std::size_t k = 0;
  std::string k_range;
  std::string boundary = "open";
  std::size_t period_cap = duclab::kDefaultPeriodCap;
  std::size_t closure_cap = 0;
  std::uint64_t seed = 20240901;
  std::string out_path;
  bool pretty = false;
  bool explain = false;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t k = std::stoull(text);
    return {k, k};
  }
  return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
}

// exactly one schedule source; presets are materialized per k
duclab::LambdaSchedule schedule_for(const CommonOpts& opts, std::size_t k) {
  if (!opts.preset.empty() && !opts.schedule_file.empty()) {
    throw CLI::ValidationError("give either --preset or --schedule-file, not both");
  }
  if (!opts.schedule_file.empty()) {
    std::ifstream in(opts.schedule_file);
    if (!in) throw CLI::ValidationError("cannot open schedule file " + opts.schedule_file);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto sched = duclab::LambdaSchedule::parse(buf.str());
    if (sched.k != k) {
      throw CLI::ValidationError("schedule file is for k=" + std::to_string(sched.k));
    }
    return sched;
  }
  const char name = opts.preset.empty() ? 'a' : opts.preset[0];
  if (opts.preset.size() > 1 || name < 'a' || name > 'j') {
    throw CLI::ValidationError("preset must be a single letter a..j");
  }
  return duclab::preset_schedule(name, k);
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  out << text;
}

std::string explain_line(const CommonOpts& opts) {
  if (!opts.explain || opts.preset.empty()) return std::string();
  return std::string("# preset ") + opts.preset + ": " + duclab::preset_formula(opts.preset[0]) +
         "\n";
}

duclab::RunCaps caps_of(const CommonOpts& opts) {
  duclab::RunCaps caps;
  caps.period_cap = opts.period_cap;
  caps.closure_cap = opts.closure_cap;
  caps.memory_guard_bytes = duclab::memory_guard_bytes_from_env();
  return caps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual-unitary Clifford circuit toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::size_t n_physical = 0;
  std::size_t trials = 100;
  std::string r_range = "2..5";
  std::string suite;
  std::string angle_list;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--preset", opts.preset, "built-in schedule preset a..j");
    cmd->add_option("--schedule-file", opts.schedule_file, "schedule file path");
    cmd->add_option("--period-cap", opts.period_cap, "period search cap");
    cmd->add_option("--closure-cap", opts.closure_cap, "closure member cap (0 = 4^k)");
    cmd->add_option("--seed", opts.seed, "PRNG seed");
    cmd->add_option("--out", opts.out_path, "write output to this file");
    cmd->add_flag("--pretty", opts.pretty, "human-oriented formatting");
    cmd->add_flag("--explain", opts.explain, "print the preset definition");
  };

  CLI::App* table = app.add_subcommand("table", "computational-power table: k, p_k, dim, label");
  add_common(table);
  table->add_option("--k", opts.k, "single k");
  table->add_option("--k-range", opts.k_range, "k range a..b");

  CLI::App* st = app.add_subcommand("spacetime", "operator spacetime diagram of Z_1");
  add_common(st);
  st->add_option("--k", opts.k, "chain length")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("suite", suite,
                     "one of lemma1 lemma2 lemma3 theorem1 recurrence dual-unitarity "
                     "byproduct symmetry injectivity entropy matchgate")
      ->required();
  verify->add_option("--k", opts.k, "single k");
  verify->add_option("--k-range", opts.k_range, "k range a..b");
  verify->add_option("--r-range", r_range, "r range a..b (lemma3)");
  verify->add_option("--N", n_physical, "physical chain length");
  verify->add_option("--trials", trials, "random trials / trajectories");

  CLI::App* mbqc = app.add_subcommand("mbqc-run", "one adaptive measurement trajectory");
  add_common(mbqc);
  mbqc->add_option("--k", opts.k, "virtual register size")->required();
  mbqc->add_option("--N", n_physical, "physical chain length")->required();
  mbqc->add_option("--angles", angle_list, "comma-separated measurement angles");
  std::string boundary = "open";
  mbqc->add_option("--boundary", boundary, "open|periodic (the protocol runs open)")
      ->check(CLI::IsMember({"open", "periodic"}));

  CLI::App* sc = app.add_subcommand("schedule-check", "validate and normalize a schedule");
  add_common(sc);
  sc->add_option("--k", opts.k, "k for preset materialization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) {
      std::size_t lo = opts.k ? opts.k : 1, hi = opts.k ? opts.k : 7;
      if (!opts.k_range.empty()) std::tie(lo, hi) = parse_range(opts.k_range);
      const auto result = duclab::power_table(
          lo, hi, [&](std::size_t k) { return schedule_for(opts, k); }, caps_of(opts),
          opts.pretty);
      emit(opts, explain_line(opts) + result.text);
      return result.exhausted ? kExitExhausted : kExitOk;
    }

    if (st->parsed()) {
      const auto text = duclab::spacetime_text(opts.k, schedule_for(opts, opts.k), caps_of(opts),
                                               opts.pretty);
      if (text.empty()) {
        std::fprintf(stderr, "period cap exhausted\n");
        return kExitExhausted;
      }
      emit(opts, explain_line(opts) + text);
      return kExitOk;
    }

    if (verify->parsed()) {
      duclab::VerifyParams params;
      params.caps = caps_of(opts);
      params.seed = opts.seed;
      params.trials = trials;
      params.n_physical = n_physical;
      params.k_single = opts.k;
      if (!opts.k_range.empty()) std::tie(params.k_lo, params.k_hi) = parse_range(opts.k_range);
      const auto rr = parse_range(r_range);
      params.r_lo = static_cast<unsigned>(rr.first);
      params.r_hi = static_cast<unsigned>(rr.second);
      std::optional<duclab::LambdaSchedule> sched;
      if (!opts.preset.empty() || !opts.schedule_file.empty()) {
        const std::size_t k = opts.k ? opts.k : (params.k_lo ? params.k_lo : 4);
        sched = schedule_for(opts, k);
      }
      const auto rep = duclab::run_verify_suite(suite, params, sched ? &*sched : nullptr);
      emit(opts, rep.text);
      return rep.pass ? kExitOk : kExitVerifyFail;
    }

    if (mbqc->parsed()) {
      if (boundary != "open") {
        std::fprintf(stderr, "the adaptive protocol measures the open chain\n");
        return kExitUsage;
      }
      const auto sched = schedule_for(opts, opts.k);
      std::vector<double> angles;
      if (!angle_list.empty()) {
        std::stringstream ss(angle_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) angles.push_back(std::stod(tok));
        if (angles.size() != n_physical) {
          throw CLI::ValidationError("need exactly N angles");
        }
      } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
        angles.resize(n_physical);
        for (auto& x : angles) x = ang(rng);
      }
      const auto run = duclab::adaptive_run(n_physical, opts.k, sched, angles, opts.seed);
      std::ostringstream out;
      char line[128];
      for (std::size_t i = 1; i <= n_physical; ++i) {
        std::snprintf(line, sizeof line, "%zu %d %.12g %.12g\n", i,
                      static_cast<int>(run.record.outcomes[i - 1]),
                      run.record.raw_angles[i - 1], run.record.corrected_angles[i - 1]);
        out << line;
      }
      out << "boundary " << run.record.boundary_word.str() << '\n';
      for (std::size_t b = 0; b < run.logical_distribution.size(); ++b) {
        std::string bits;
        for (std::size_t q = 0; q < opts.k; ++q) bits.push_back((b >> q) & 1 ? '1' : '0');
        std::snprintf(line, sizeof line, "%s %.12g\n", bits.c_str(),
                      run.logical_distribution[b]);
        out << line;
      }
      emit(opts, out.str());
      return kExitOk;
    }

    if (sc->parsed()) {
      if (!opts.schedule_file.empty()) {
        std::ifstream in(opts.schedule_file);
        if (!in) {
          std::fprintf(stderr, "cannot open %s\n", opts.schedule_file.c_str());
          return kExitUsage;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        const auto sched = duclab::LambdaSchedule::parse(buf.str());
        emit(opts, sched.serialize() + "OK\n");
        return kExitOk;
      }
      if (opts.preset.empty() || opts.k == 0) {
        std::fprintf(stderr, "schedule-check needs --schedule-file, or --preset with --k\n");
        return kExitUsage;
      }
      const auto sched = schedule_for(opts, opts.k);
      emit(opts, explain_line(opts) + sched.serialize() + "OK\n");
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitVerifyFail;
  }
  return kExitUsage;
}
