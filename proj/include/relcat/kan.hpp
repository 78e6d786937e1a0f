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

#ifndef RELCAT_KAN_HPP_
#define RELCAT_KAN_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "relcat/error.hpp"
#include "relcat/fin_object.hpp"
#include "relcat/relation.hpp"

namespace relcat::kan {

/// Right Kan extension of f along p, with its pointwise values.
///
/// The extension is the largest relation R : C' -> Pred whose
/// precomposition with p stays inside f; its value at a point c' is the
/// intersection of f over the fibre of c'. Points with an empty fibre
/// receive the full codomain universe (the nullary intersection), which
/// keeps the pointwise reading extensionally equal to the global
/// union-of-sound-relations definition.
struct KanResult {
  Relation extension;                /// C' -> Pred
  std::vector<ElementSet> per_point; /// indexed by C' canonical order
  std::vector<std::string> empty_fibre_points;
};

/// Pointwise formula: per_point[c'] = ⋂ { f(h) | h in fibre of c' under p }.
/// p and f must share their domain.
inline KanResult right_kan_pointwise(const Relation& p, const Relation& f) {
  if (p.dom() != f.dom()) {
    throw TypeError("right kan extension: '" + p.dom().name() + "' and '" +
                    f.dom().name() + "' are different domains");
  }
  const FinObject& points = p.cod();
  const FinObject& universe = f.cod();
  const Relation fibres = converse(p);  // C' -> H

  KanResult out{Relation(points, universe), {}, {}};
  out.per_point.reserve(points.size());
  Relation::Builder ext(points, universe);
  for (std::size_t c = 0; c < points.size(); ++c) {
    ElementSet fibre = image_of(fibres, c);
    ElementSet value = ElementSet::full(universe);
    if (fibre.empty()) {
      out.empty_fibre_points.push_back(points.element(c));
    } else {
      for (std::size_t h : fibre.indices()) value = value & image_of(f, h);
    }
    for (std::size_t b : value.indices()) ext.add(c, b);
    out.per_point.push_back(std::move(value));
  }
  out.extension = std::move(ext).build();
  return out;
}

/// Soundness constraint of the global definition: R is sound when
/// following p and then R never leaves f.
inline bool is_sound_extension(const Relation& r, const Relation& p,
                               const Relation& f) {
  return includes(compose(p, r), f).holds;
}

/// Default enumeration bound, in bits of candidate-relation index
/// (16 bits = 65536 candidate relations, well under a second).
inline constexpr int kDefaultBruteForceBound = 16;

/// Global formula by brute force: the union of every relation
/// R ⊆ C' x Pred with R sound over p and f, enumerated exhaustively.
/// Requires |C'| * |Pred| <= max_bits.
inline Relation right_kan_bruteforce(const Relation& p, const Relation& f,
                                     int max_bits = kDefaultBruteForceBound) {
  if (p.dom() != f.dom()) {
    throw TypeError("right kan extension: '" + p.dom().name() + "' and '" +
                    f.dom().name() + "' are different domains");
  }
  const FinObject& points = p.cod();
  const FinObject& universe = f.cod();
  const std::size_t cells = points.size() * universe.size();
  const std::size_t bound = max_bits < 0 ? 0 : std::min<std::size_t>(max_bits, 63);
  if (cells > bound) {
    throw BoundError("brute-force enumeration needs " + std::to_string(cells) +
                     " bits, above the configured bound of " +
                     std::to_string(max_bits));
  }

  Relation acc(points, universe);
  const std::uint64_t candidates = std::uint64_t{1} << cells;
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    Relation::Builder b(points, universe);
    for (std::size_t bit = 0; bit < cells; ++bit) {
      if ((mask >> bit) & 1u) b.add(bit / universe.size(), bit % universe.size());
    }
    Relation candidate = std::move(b).build();
    if (is_sound_extension(candidate, p, f)) acc = acc | candidate;
  }
  return acc;
}

}  // namespace relcat::kan

#endif  // RELCAT_KAN_HPP_
