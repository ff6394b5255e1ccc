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

#include <random>

#include "dense_oracle.hpp"
#include "duclab/pauli.hpp"

using duclab::PauliWord;

namespace {

PauliWord random_word(std::size_t n, std::mt19937_64& rng, bool allow_identity = true) {
  std::uniform_int_distribution<int> letter(0, 3);
  static const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (;;) {
    PauliWord p(n);
    for (std::size_t i = 1; i <= n; ++i) p.set_letter(i, letters[letter(rng)]);
    p.set_phase_exponent(static_cast<int>(p.y_count() + letter(rng)));
    if (allow_identity || !p.is_identity_bits()) return p;
  }
}

}  // namespace

TEST_CASE("single qubit products track the i-exponent exactly") {
  const PauliWord x = PauliWord::parse("X");
  const PauliWord z = PauliWord::parse("Z");
  const PauliWord xz = mul(x, z);
  CHECK(xz.x_bit(1));
  CHECK(xz.z_bit(1));
  CHECK(xz.display_phase() == 3);  // X*Z = -iY
  CHECK(xz.str() == "-iY");
  CHECK(mul(z, x).str() == "+iY");
}

TEST_CASE("identity is a two-sided unit") {
  std::mt19937_64 rng(7);
  const PauliWord id = PauliWord::identity(5);
  for (int t = 0; t < 20; ++t) {
    const PauliWord p = random_word(5, rng);
    CHECK(mul(id, p) == p);
    CHECK(mul(p, id) == p);
  }
}

TEST_CASE("two-qubit product matches the dense 4x4 oracle including phase") {
  const PauliWord a = PauliWord::parse("XZ");
  const PauliWord b = PauliWord::parse("ZZ");
  const PauliWord r = mul(a, b);
  CHECK(r.letter(1) == 'Y');
  CHECK(r.letter(2) == 'I');
  CHECK(oracle::approx_eq(oracle::word_mat(r),
                          oracle::mul(oracle::word_mat(a), oracle::word_mat(b))));
}

TEST_CASE("products agree with dense matrices for random words") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 40; ++t) {
      const PauliWord a = random_word(n, rng);
      const PauliWord b = random_word(n, rng);
      CHECK(oracle::approx_eq(oracle::word_mat(mul(a, b)),
                              oracle::mul(oracle::word_mat(a), oracle::word_mat(b))));
    }
  }
}

TEST_CASE("mul is associative and phase-exact on word triples") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const PauliWord a = random_word(4, rng);
    const PauliWord b = random_word(4, rng);
    const PauliWord c = random_word(4, rng);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(oracle::approx_eq(
        oracle::word_mat(mul(mul(a, b), c)),
        oracle::mul(oracle::word_mat(a), oracle::mul(oracle::word_mat(b), oracle::word_mat(c)))));
  }
}

TEST_CASE("commutes: disjoint support and anticommuting singles") {
  CHECK(commutes(PauliWord::parse("XI"), PauliWord::parse("IZ")));
  CHECK(!commutes(PauliWord::parse("X"), PauliWord::parse("Z")));
}

TEST_CASE("commutes matches dense matrices") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 50; ++t) {
      const PauliWord a = random_word(n, rng);
      const PauliWord b = random_word(n, rng);
      CHECK(commutes(a, b) == oracle::dense_commutes(a, b));
    }
  }
}

TEST_CASE("symplectic product is a bicharacter: parity additivity on 1000 triples") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 1000; ++t) {
    const PauliWord a = random_word(6, rng);
    const PauliWord b = random_word(6, rng);
    const PauliWord c = random_word(6, rng);
    const int lhs = duclab::symplectic_product(mul(a, b), c);
    const int rhs = duclab::symplectic_product(a, c) ^ duclab::symplectic_product(b, c);
    CHECK(lhs == rhs);
  }
  // spot-check the additivity against dense matrices at a size where the
  // matrices stay cheap
  for (int t = 0; t < 60; ++t) {
    const PauliWord a = random_word(3, rng);
    const PauliWord b = random_word(3, rng);
    const PauliWord c = random_word(3, rng);
    const bool ab_c = oracle::dense_commutes(mul(a, b), c);
    const bool a_c = oracle::dense_commutes(a, c);
    const bool b_c = oracle::dense_commutes(b, c);
    CHECK(ab_c == (a_c == b_c));
  }
}

TEST_CASE("commutator basics") {
  const auto y = commutator(PauliWord::parse("X"), PauliWord::parse("Z"));
  REQUIRE(y.has_value());
  CHECK(y->str() == "Y");
  CHECK(!commutator(PauliWord::parse("XX"), PauliWord::parse("XX")).has_value());
}

TEST_CASE("commutator absent exactly when words commute, matches dense support") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 0; t < 170; ++t) {
      const PauliWord a = random_word(n, rng);
      const PauliWord b = random_word(n, rng);
      const auto c = commutator(a, b);
      CHECK(c.has_value() == !commutes(a, b));
      // dense (PQ - QP)/2 is proportional to the product word when nonzero
      const oracle::Mat ma = oracle::word_mat(a), mb = oracle::word_mat(b);
      const oracle::Mat lie =
          oracle::scale(oracle::add(oracle::mul(ma, mb), oracle::mul(mb, ma), {-1, 0}), {0.5, 0});
      double norm = 0;
      for (const auto& v : lie.a) norm += std::norm(v);
      if (c.has_value()) {
        CHECK(norm > 0.5);
        CHECK(oracle::proportional(lie, oracle::word_mat(*c)));
      } else {
        CHECK(norm < 1e-20);
      }
    }
  }
}

TEST_CASE("canonical key ignores phase") {
  PauliWord a = PauliWord::parse("XYZ");
  PauliWord b = a;
  b.set_phase_exponent(a.phase_exponent() + 2);
  CHECK(a != b);
  CHECK(a.same_bits(b));
  CHECK(duclab::key_of(a) == duclab::key_of(b));
}

TEST_CASE("render and parse round-trip") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const PauliWord p = random_word(7, rng);
    const PauliWord q = PauliWord::parse(p.str());
    CHECK(p.same_bits(q));
    CHECK(p.display_phase() == q.display_phase());
  }
  CHECK(PauliWord::parse("-iY").str() == "-iY");
  CHECK(PauliWord::parse("IXYZ").str() == "IXYZ");
}

TEST_CASE("size mismatch raises") {
  CHECK_THROWS_AS(mul(PauliWord::parse("X"), PauliWord::parse("XX")), std::invalid_argument);
  CHECK_THROWS_AS(commutes(PauliWord::parse("X"), PauliWord::parse("XX")), std::invalid_argument);
}

TEST_CASE("parse rejects malformed strings") {
  CHECK_THROWS_AS(PauliWord::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliWord::parse("-"), std::invalid_argument);
  CHECK_THROWS_AS(PauliWord::parse("+2XZ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliWord::parse("XQZ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliWord::parse("-i"), std::invalid_argument);
}

TEST_CASE("key round trip and restriction") {
  const PauliWord p = PauliWord::parse("XIYZ");
  CHECK(duclab::word_of(4, duclab::key_of(p)).same_bits(p));
  const PauliWord r = p.restrict_to({1, 3});
  CHECK(r.str() == "XY");
}
