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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "duclab/universality.hpp"

using namespace duclab;

TEST_CASE("tilde restriction: Z3 X4 Z5 reduces to Z3 Z5") {
  const auto g = tilde_from_column(PauliWord::parse("IIZXZ"), 0);
  REQUIRE(!g.is_zero());
  CHECK(g.word->str() == "IIZZ");  // unfrozen register 1,2,3,5
}

TEST_CASE("tilde marker: Y or Z on a frozen position zeroes the column") {
  CHECK(tilde_from_column(PauliWord::parse("IIIZI"), 0).is_zero());
  CHECK(tilde_from_column(PauliWord::parse("IIIYI"), 0).is_zero());
  CHECK(!tilde_from_column(PauliWord::parse("IIIXI"), 0).is_zero());
}

TEST_CASE("k=3 has no frozen positions, so tilde is the identity map") {
  const auto gens = tilde_generators(3, LambdaSchedule::all_ones(3));
  REQUIRE(gens.has_value());
  const auto diagram = spacetime(3, LambdaSchedule::all_ones(3));
  for (std::size_t l = 0; l < gens->size(); ++l) {
    REQUIRE(!(*gens)[l].is_zero());
    CHECK((*gens)[l].word->same_bits(diagram->column(static_cast<long long>(l))));
  }
}

TEST_CASE("no index-set column of k=7 is a zero marker") {
  const auto gens = tilde_generators(7, LambdaSchedule::all_ones(7));
  REQUIRE(gens.has_value());
  for (long long l : lemma2_index_set(7)) {
    const long long p = 24;
    CHECK(!(*gens)[static_cast<std::size_t>(((l % p) + p) % p)].is_zero());
  }
  // column 3 is a marker (Z at the frozen position 4), so the index set must
  // skip it
  CHECK((*gens)[3].is_zero());
  const auto idx = lemma2_index_set(7);
  CHECK(std::find(idx.begin(), idx.end(), 3) == idx.end());
}

TEST_CASE("tilde words reinsert into the original columns") {
  const auto diagram = spacetime(7, LambdaSchedule::all_ones(7));
  const auto gens = tilde_generators(7, LambdaSchedule::all_ones(7));
  const auto unfrozen = unfrozen_positions(7);
  for (std::size_t l = 0; l < gens->size(); ++l) {
    if ((*gens)[l].is_zero()) continue;
    const PauliWord& col = diagram->column(static_cast<long long>(l));
    for (std::size_t j = 0; j < unfrozen.size(); ++j) {
      CHECK((*gens)[l].word->letter(j + 1) == col.letter(unfrozen[j]));
    }
    for (std::size_t f : frozen_positions(7)) {
      const char letter = col.letter(f);
      CHECK((letter == 'I' || letter == 'X'));
    }
  }
}

TEST_CASE("frozen pattern holds at k = 3, 7, 11, 15") {
  CHECK(frozen_pattern_check(3));
  CHECK(frozen_pattern_check(7));
  CHECK(frozen_pattern_check(11));
  CHECK(frozen_pattern_check(15));
}

TEST_CASE("lemma2 index set: explicit values and counts") {
  const auto i3 = lemma2_index_set(3);
  CHECK(i3 == std::vector<long long>{-1, 0, 1, 2, -2, -3, -4});
  const auto i7 = lemma2_index_set(7);
  for (long long l : {4ll, 5ll, 6ll, -6ll, -7ll, -8ll}) {
    CHECK(std::find(i7.begin(), i7.end(), l) != i7.end());
  }
  for (std::size_t m = 1; m <= 8; ++m) {
    CHECK(lemma2_index_set(4 * m - 1).size() == 6 * m + 1);
  }
  CHECK_THROWS_AS(lemma2_index_set(5), std::invalid_argument);
}

TEST_CASE("check_lemma1 accepts the canonical instances") {
  for (std::size_t k : {7, 11}) {
    const auto inst = lemma2_instance(k);
    REQUIRE(inst.has_value());
    CHECK(check_lemma1(*inst));
  }
}

TEST_CASE("the k=15 instance passes with the saturating closure on 9 qubits") {
  const auto inst = lemma2_instance(15);
  REQUIRE(inst.has_value());
  CHECK(inst->k1 == 9);
  CHECK(check_lemma1(*inst));
}

TEST_CASE("the six B parts of the k=7 instance span rank 6") {
  const auto inst = lemma2_instance(7);
  REQUIRE(inst.has_value());
  CHECK(inst->s2.size() == 6);
  std::vector<PauliWord> b_parts;
  for (const auto& w : inst->s2) b_parts.push_back(w.restrict_to({4, 5, 6}));
  CHECK(detail::symplectic_rank(b_parts) == 6);
}

TEST_CASE("mutated instances fail") {
  const auto inst = lemma2_instance(7);
  REQUIRE(inst.has_value());
  SUBCASE("dropping an S1 element breaks condition (i)") {
    LemmaOneInstance broken = *inst;
    broken.s1.erase(broken.s1.begin());
    CHECK(!check_lemma1(broken));
  }
  SUBCASE("dropping an S2 element breaks the multiplicative rank") {
    LemmaOneInstance broken = *inst;
    broken.s2.pop_back();
    CHECK(!check_lemma1(broken));
  }
  SUBCASE("small blocks are rejected") {
    LemmaOneInstance tiny;
    tiny.k1 = 2;
    tiny.k2 = 3;
    CHECK(!check_lemma1(tiny));
  }
}

TEST_CASE("recurrence relations hold for k=7 at every admissible scale") {
  CHECK(check_recurrence(7, 0));
  CHECK(check_recurrence(7, 1));
  CHECK(check_recurrence(7, 2));
  CHECK_THROWS_AS(check_recurrence(7, 3), std::invalid_argument);  // 2^3 >= 7
}

TEST_CASE("recurrence relations hold up to k=31") {
  for (std::size_t k = 2; k <= 31; ++k) {
    for (unsigned r = 0; (std::size_t(1) << r) < k; ++r) {
      CHECK_MESSAGE(check_recurrence(k, r), "k=", k, " r=", r);
    }
  }
}

TEST_CASE("diagram bit planes satisfy b(l, i) == a(l+1, i)") {
  for (std::size_t k : {2, 5, 7}) {
    const auto d = spacetime(k, LambdaSchedule::all_ones(k));
    REQUIRE(d.has_value());
    for (long long l = 0; l < static_cast<long long>(d->period()); ++l) {
      for (std::size_t i = 1; i <= k; ++i) {
        // a = X components, b = Z components of the Heisenberg-direction columns
        CHECK(d->column(l).z_bit(i) == d->column(l + 1).x_bit(i));
      }
    }
  }
}

TEST_CASE("block repetition holds for k = 7, 11, 15, 19, 31") {
  for (std::size_t k : {7, 11, 15, 19, 31}) {
    CHECK(block_repetition_check(k));
  }
  CHECK_THROWS_AS(block_repetition_check(6), std::invalid_argument);
}

TEST_CASE("theorem 1: small k verified directly") {
  const auto r3 = verify_theorem1(3);
  CHECK(r3.m == 1);
  CHECK(r3.verified);
  const auto r4 = verify_theorem1(4);  // pads down to q = 3
  CHECK(r4.m == 1);
  CHECK(r4.q == 3);
  CHECK(r4.verified);
  const auto r7 = verify_theorem1(7);
  CHECK(r7.m == 2);
  CHECK(r7.verified);
  CHECK_THROWS_AS(verify_theorem1(2), std::invalid_argument);
}

TEST_CASE("theorem 1: induction ladder through the configured bound") {
  for (std::size_t k : {11, 15, 19, 31}) {
    const auto rep = verify_theorem1(k);
    CHECK(rep.verified);
    CHECK(!rep.exhausted);
    CHECK(rep.m == (k + 1) / 4);
  }
}
