/*  Copyright 2026 The relcat authors.

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License. */

#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "relcat/kan.hpp"
#include "relcat/relation.hpp"
#include "relcat/rng.hpp"

using relcat::ElementSet;
using relcat::FinObject;
using relcat::Relation;
using relcat::SplitMix64;
using relcat::kan::is_sound_extension;
using relcat::kan::right_kan_bruteforce;
using relcat::kan::right_kan_pointwise;

namespace {

const FinObject H("H", {"h1", "h2", "h3"});
const FinObject Cp("Cp", {"t1", "t2"});
const FinObject Pred("Pred", {"p1", "p2", "p3"});

struct Instance {
  Relation p;
  Relation f;
};

Instance random_instance(SplitMix64& rng) {
  return {testutil::random_relation(rng, H, Cp, 0.5),
          testutil::random_relation(rng, H, Pred, 0.5)};
}

}  // namespace

TEST_CASE("pointwise value is the intersection over the fibre") {
  Relation p = Relation::from_pairs(H, Cp, {{"h1", "t1"}, {"h2", "t1"}});
  Relation f = Relation::from_pairs(
      H, Pred, {{"h1", "p1"}, {"h1", "p2"}, {"h2", "p2"}, {"h2", "p3"}});
  auto result = right_kan_pointwise(p, f);
  CHECK(result.per_point[0] == ElementSet::of(Pred, {"p2"}));
  CHECK(image_of(result.extension, "t1") == ElementSet::of(Pred, {"p2"}));
}

TEST_CASE("singleton fibres reproduce f exactly") {
  // p injective function: fibre of p(h) is {h}, so the value at p(h) is f(h)
  FinObject prompts("Cp", {"t1", "t2", "t3"});
  Relation p = Relation::from_pairs(
      H, prompts, {{"h1", "t2"}, {"h2", "t3"}, {"h3", "t1"}});
  SplitMix64 rng(101);
  for (int i = 0; i < 50; ++i) {
    Relation f = testutil::random_relation(rng, H, Pred, 0.5);
    auto result = right_kan_pointwise(p, f);
    for (const auto& h : H.elements()) {
      std::size_t c = p.pairs()[H.index_of(h)].second;
      CHECK(result.per_point[c] == image_of(f, h));
    }
  }
}

TEST_CASE("empty fibres receive the full universe") {
  Relation p = Relation::from_pairs(H, Cp, {{"h1", "t1"}});
  Relation f = Relation::from_pairs(H, Pred, {{"h1", "p1"}});
  auto result = right_kan_pointwise(p, f);
  CHECK(result.per_point[1] == ElementSet::full(Pred));
  CHECK(result.empty_fibre_points == std::vector<std::string>{"t2"});
}

TEST_CASE("pointwise and brute-force definitions coincide") {
  SplitMix64 rng(202);
  for (int i = 0; i < 100; ++i) {
    auto [p, f] = random_instance(rng);
    CHECK(right_kan_pointwise(p, f).extension == right_kan_bruteforce(p, f));
  }
}

TEST_CASE("full f makes every relation sound") {
  Relation p = Relation::from_pairs(H, Cp, {{"h1", "t1"}, {"h2", "t2"}});
  Relation f = Relation::full(H, Pred);
  CHECK(right_kan_bruteforce(p, f) == Relation::full(Cp, Pred));
  CHECK(right_kan_pointwise(p, f).extension == Relation::full(Cp, Pred));
}

TEST_CASE("empty p makes every relation sound") {
  Relation p(H, Cp);
  Relation f = Relation::from_pairs(H, Pred, {{"h1", "p1"}});
  CHECK(right_kan_bruteforce(p, f) == Relation::full(Cp, Pred));
}

TEST_CASE("brute force refuses oversized instances") {
  FinObject big("Cp", {"t1", "t2", "t3", "t4", "t5", "t6"});
  Relation p(H, big);
  Relation f(H, Pred);
  CHECK_THROWS_AS(right_kan_bruteforce(p, f), relcat::BoundError);
  CHECK_THROWS_WITH(right_kan_bruteforce(p, f),
                    Catch::Matchers::ContainsSubstring("bound of 16"));
  CHECK_THROWS_AS(right_kan_bruteforce(p, f, 4), relcat::BoundError);
}

TEST_CASE("soundness of candidate extensions") {
  Relation p = Relation::from_pairs(H, Cp, {{"h1", "t1"}, {"h2", "t1"}});
  Relation f = Relation::from_pairs(H, Pred, {{"h1", "p1"}, {"h2", "p1"}, {"h2", "p2"}});

  CHECK(is_sound_extension(Relation(Cp, Pred), p, f));

  auto result = right_kan_pointwise(p, f);
  CHECK(is_sound_extension(result.extension, p, f));

  // one extra pair that breaks a nonempty fibre makes it unsound
  Relation::Builder b(Cp, Pred);
  for (const auto& [a, c] : result.extension.pairs()) b.add(a, c);
  b.add(Cp.index_of("t1"), Pred.index_of("p2"));  // h1 lacks p2
  Relation mutated = std::move(b).build();
  CHECK_FALSE(is_sound_extension(mutated, p, f));
}

TEST_CASE("extension is sound and maximal on random instances") {
  SplitMix64 rng(303);
  for (int i = 0; i < 100; ++i) {
    auto [p, f] = random_instance(rng);
    auto result = right_kan_pointwise(p, f);
    CHECK(is_sound_extension(result.extension, p, f));

    // maximality: every sound relation is included in the extension
    for (int j = 0; j < 10; ++j) {
      Relation candidate = testutil::random_relation(rng, Cp, Pred, 0.4);
      if (is_sound_extension(candidate, p, f)) {
        CHECK(includes(candidate, result.extension).holds);
      }
    }
  }
}

TEST_CASE("extension grows monotonically with f") {
  SplitMix64 rng(404);
  for (int i = 0; i < 100; ++i) {
    auto [p, f] = random_instance(rng);
    Relation f_bigger = f | testutil::random_relation(rng, H, Pred, 0.3);
    Relation small = right_kan_pointwise(p, f).extension;
    Relation large = right_kan_pointwise(p, f_bigger).extension;
    CHECK(includes(small, large).holds);
  }
}

TEST_CASE("kan requires a shared domain") {
  Relation p(Cp, H);
  Relation f(H, Pred);
  CHECK_THROWS_AS(right_kan_pointwise(p, f), relcat::TypeError);
  CHECK_THROWS_AS(right_kan_bruteforce(p, f), relcat::TypeError);
}
