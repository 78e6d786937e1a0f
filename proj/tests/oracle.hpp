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

// Independent oracle for the relation algebra: plain std::set pair
// arithmetic, no bitsets, no sharing with the library implementation.
// Tests compute expected values here and compare against the library.

#ifndef RELCAT_TESTS_ORACLE_HPP_
#define RELCAT_TESTS_ORACLE_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relcat/fin_object.hpp"
#include "relcat/relation.hpp"
#include "relcat/rng.hpp"

namespace testutil {

using IndexPair = std::pair<std::size_t, std::size_t>;
using PairSet = std::set<IndexPair>;

inline PairSet pairs_of(const relcat::Relation& r) {
  PairSet out;
  for (const auto& [a, b] : r.pairs()) out.insert({a, b});
  return out;
}

inline PairSet naive_compose(const PairSet& r, const PairSet& s) {
  PairSet out;
  for (const auto& [a, b] : r) {
    for (const auto& [b2, c] : s) {
      if (b == b2) out.insert({a, c});
    }
  }
  return out;
}

inline PairSet naive_union(const PairSet& r, const PairSet& s) {
  PairSet out = r;
  out.insert(s.begin(), s.end());
  return out;
}

inline PairSet naive_intersect(const PairSet& r, const PairSet& s) {
  PairSet out;
  for (const auto& p : r) {
    if (s.count(p)) out.insert(p);
  }
  return out;
}

inline PairSet naive_converse(const PairSet& r) {
  PairSet out;
  for (const auto& [a, b] : r) out.insert({b, a});
  return out;
}

inline bool naive_includes(const PairSet& sub, const PairSet& super) {
  for (const auto& p : sub) {
    if (!super.count(p)) return false;
  }
  return true;
}

inline relcat::Relation to_relation(const relcat::FinObject& dom,
                                    const relcat::FinObject& cod,
                                    const PairSet& pairs) {
  relcat::Relation::Builder b(dom, cod);
  for (const auto& [x, y] : pairs) b.add(x, y);
  return std::move(b).build();
}

inline relcat::FinObject random_object(relcat::SplitMix64& rng, std::string name,
                                       std::size_t max_size) {
  std::size_t n = rng.below(max_size + 1);
  std::vector<std::string> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(name + std::to_string(i + 1));
  }
  return relcat::FinObject(std::move(name), std::move(elements));
}

inline relcat::Relation random_relation(relcat::SplitMix64& rng,
                                        const relcat::FinObject& dom,
                                        const relcat::FinObject& cod,
                                        double density = 0.4) {
  relcat::Relation::Builder b(dom, cod);
  for (std::size_t a = 0; a < dom.size(); ++a) {
    for (std::size_t c = 0; c < cod.size(); ++c) {
      if (rng.chance(density)) b.add(a, c);
    }
  }
  return std::move(b).build();
}

}  // namespace testutil

#endif  // RELCAT_TESTS_ORACLE_HPP_
