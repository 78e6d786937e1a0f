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

#ifndef RELCAT_RELATION_HPP_
#define RELCAT_RELATION_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relcat/bits.hpp"
#include "relcat/error.hpp"
#include "relcat/fin_object.hpp"

namespace relcat {

/// A binary relation between two finite objects: semantically a subset of
/// dom x cod, stored as one bit-row per dom element over cod elements.
/// Composition is boolean row-OR accumulation; inclusion is word-wise
/// subset testing. Relations are immutable values; every operation
/// returns a fresh value.
class Relation {
 public:
  /// Accumulates pairs, then freezes them into a Relation.
  class Builder {
   public:
    Builder(FinObject dom, FinObject cod)
        : dom_(std::move(dom)),
          cod_(std::move(cod)),
          words_per_row_(detail::word_count(cod_.size())),
          bits_(dom_.size() * words_per_row_, 0) {}

    Builder& add(std::size_t a, std::size_t b) {
      if (a >= dom_.size() || b >= cod_.size()) {
        throw LookupError("pair index out of range for " + dom_.name() + " -> " +
                          cod_.name());
      }
      detail::set_bit(row(a), b);
      return *this;
    }

    Builder& add(const std::string& a, const std::string& b) {
      return add(dom_.index_of(a), cod_.index_of(b));
    }

    Builder& remove(std::size_t a, std::size_t b) {
      detail::clear_bit(row(a), b);
      return *this;
    }

    /// OR a foreign bit-row into row `a`. `src` must have this builder's
    /// cod width.
    Builder& or_into_row(std::size_t a, std::span<const std::uint64_t> src) {
      detail::or_assign(row(a), src);
      return *this;
    }

    Relation build() && {
      Relation r;
      r.dom_ = std::move(dom_);
      r.cod_ = std::move(cod_);
      r.words_per_row_ = words_per_row_;
      r.bits_ = std::move(bits_);
      return r;
    }

   private:
    std::span<std::uint64_t> row(std::size_t a) {
      return {bits_.data() + a * words_per_row_, words_per_row_};
    }

    FinObject dom_, cod_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
  };

  /// The empty relation dom -> cod.
  Relation(FinObject dom, FinObject cod)
      : dom_(std::move(dom)),
        cod_(std::move(cod)),
        words_per_row_(detail::word_count(cod_.size())),
        bits_(dom_.size() * words_per_row_, 0) {}

  static Relation from_pairs(FinObject dom, FinObject cod,
                             std::span<const std::pair<std::string, std::string>> pairs) {
    Builder b(std::move(dom), std::move(cod));
    for (const auto& [x, y] : pairs) b.add(x, y);
    return std::move(b).build();
  }

  static Relation from_pairs(
      FinObject dom, FinObject cod,
      std::initializer_list<std::pair<std::string, std::string>> pairs) {
    return from_pairs(std::move(dom), std::move(cod),
                      std::span<const std::pair<std::string, std::string>>(
                          pairs.begin(), pairs.size()));
  }

  /// The full relation dom x cod.
  static Relation full(FinObject dom, FinObject cod) {
    const std::size_t na = dom.size();
    const std::size_t nb = cod.size();
    Builder b(std::move(dom), std::move(cod));
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t c = 0; c < nb; ++c) b.add(a, c);
    }
    return std::move(b).build();
  }

  const FinObject& dom() const { return dom_; }
  const FinObject& cod() const { return cod_; }

  bool contains(std::size_t a, std::size_t b) const {
    return a < dom_.size() && b < cod_.size() && detail::get_bit(row(a), b);
  }
  bool contains(const std::string& a, const std::string& b) const {
    return contains(dom_.index_of(a), cod_.index_of(b));
  }

  bool empty() const {
    for (std::uint64_t w : bits_) {
      if (w != 0) return false;
    }
    return true;
  }

  std::size_t pair_count() const { return detail::popcount(bits_); }

  /// All pairs as (dom index, cod index), in canonical order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(pair_count());
    for (std::size_t a = 0; a < dom_.size(); ++a) {
      for (std::size_t b = 0; b < cod_.size(); ++b) {
        if (detail::get_bit(row(a), b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /// All pairs by element name, in canonical order.
  std::vector<std::pair<std::string, std::string>> named_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(pair_count());
    for (const auto& [a, b] : pairs()) {
      out.emplace_back(dom_.element(a), cod_.element(b));
    }
    return out;
  }

  std::span<const std::uint64_t> row(std::size_t a) const {
    return {bits_.data() + a * words_per_row_, words_per_row_};
  }

  bool parallel_to(const Relation& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.parallel_to(b) && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

 private:
  Relation() : words_per_row_(0) {}

  FinObject dom_, cod_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

/// Outcome of an inclusion test, carrying the canonically first
/// counterexample pair when the inclusion fails.
struct InclusionCheck {
  bool holds = false;
  std::optional<std::pair<std::string, std::string>> counterexample;
  explicit operator bool() const { return holds; }
};

/// The diagonal relation on A.
inline Relation identity(const FinObject& a) {
  Relation::Builder b(a, a);
  for (std::size_t i = 0; i < a.size(); ++i) b.add(i, i);
  return std::move(b).build();
}

namespace detail {
inline void require_composable(const Relation& r, const Relation& s) {
  if (r.cod() != s.dom()) {
    throw TypeError("cannot compose: cod '" + r.cod().name() + "' != dom '" +
                    s.dom().name() + "'");
  }
}
inline void require_parallel(const Relation& r, const Relation& s) {
  if (!r.parallel_to(s)) {
    throw TypeError("relations not parallel: " + r.dom().name() + " -> " +
                    r.cod().name() + " vs " + s.dom().name() + " -> " +
                    s.cod().name());
  }
}
}  // namespace detail

/// Relational composite in diagrammatic order: apply `r`, then `s`.
/// {(a,c) | exists b: (a,b) in r and (b,c) in s}.
inline Relation compose(const Relation& r, const Relation& s) {
  detail::require_composable(r, s);
  Relation::Builder out(r.dom(), s.cod());
  for (std::size_t a = 0; a < r.dom().size(); ++a) {
    for (std::size_t b = 0; b < r.cod().size(); ++b) {
      if (r.contains(a, b)) out.or_into_row(a, s.row(b));
    }
  }
  return std::move(out).build();
}

/// Composite of a nonempty path in diagrammatic order.
inline Relation compose_path(std::span<const Relation> path) {
  if (path.empty()) throw TypeError("cannot compose an empty path");
  Relation acc = path[0];
  for (std::size_t i = 1; i < path.size(); ++i) acc = compose(acc, path[i]);
  return acc;
}

/// Tests pairs(sub) ⊆ pairs(super) for parallel relations. On failure the
/// counterexample is the first pair of sub \ super in canonical order.
inline InclusionCheck includes(const Relation& sub, const Relation& super) {
  detail::require_parallel(sub, super);
  for (std::size_t a = 0; a < sub.dom().size(); ++a) {
    auto rs = sub.row(a);
    auto rt = super.row(a);
    for (std::size_t w = 0; w < rs.size(); ++w) {
      std::uint64_t diff = rs[w] & ~rt[w];
      if (diff != 0) {
        std::size_t b = w * detail::kWordBits +
                        static_cast<std::size_t>(std::countr_zero(diff));
        return {false, std::make_pair(sub.dom().element(a), sub.cod().element(b))};
      }
    }
  }
  return {true, std::nullopt};
}

/// Supremum of two parallel relations (pairwise union).
inline Relation operator|(const Relation& r, const Relation& s) {
  detail::require_parallel(r, s);
  Relation::Builder out(r.dom(), r.cod());
  for (std::size_t a = 0; a < r.dom().size(); ++a) {
    out.or_into_row(a, r.row(a));
    out.or_into_row(a, s.row(a));
  }
  return std::move(out).build();
}

/// Infimum of two parallel relations (pairwise intersection).
inline Relation operator&(const Relation& r, const Relation& s) {
  detail::require_parallel(r, s);
  Relation::Builder out(r.dom(), r.cod());
  for (std::size_t a = 0; a < r.dom().size(); ++a) {
    for (std::size_t b = 0; b < r.cod().size(); ++b) {
      if (r.contains(a, b) && s.contains(a, b)) out.add(a, b);
    }
  }
  return std::move(out).build();
}

/// {(b,a) | (a,b) in r}. Realizes fibre computation via image_of.
inline Relation converse(const Relation& r) {
  Relation::Builder out(r.cod(), r.dom());
  for (const auto& [a, b] : r.pairs()) out.add(b, a);
  return std::move(out).build();
}

/// Pointwise application r(a): the image of a single dom element.
inline ElementSet image_of(const Relation& r, const std::string& a) {
  std::size_t i = r.dom().index_of(a);
  auto row = r.row(i);
  return make_element_set(r.cod(), std::vector<std::uint64_t>(row.begin(), row.end()));
}

inline ElementSet image_of(const Relation& r, std::size_t a) {
  return image_of(r, r.dom().element(a));
}

/// Structural flags of a relation. The four flags are independent:
///   total       every dom element has at least one image
///   functional  every dom element has at most one image
///   injective   distinct dom elements have disjoint images
///   surjective  every cod element has at least one preimage
struct RelationKind {
  bool total = false;
  bool functional = false;
  bool injective = false;
  bool surjective = false;

  bool injective_function() const { return total && functional && injective; }
};

inline RelationKind relation_kind(const Relation& r) {
  RelationKind k{true, true, true, true};
  std::vector<std::size_t> preimages(r.cod().size(), 0);
  for (std::size_t a = 0; a < r.dom().size(); ++a) {
    std::size_t images = 0;
    for (std::size_t b = 0; b < r.cod().size(); ++b) {
      if (r.contains(a, b)) {
        ++images;
        ++preimages[b];
      }
    }
    if (images == 0) k.total = false;
    if (images > 1) k.functional = false;
  }
  for (std::size_t b = 0; b < r.cod().size(); ++b) {
    if (preimages[b] == 0) k.surjective = false;
    if (preimages[b] > 1) k.injective = false;
  }
  return k;
}

/// A ⊔ B together with its two injections. In Rel the disjoint union is
/// simultaneously product and coproduct; the projections are the
/// converses of the injections. Elements are tagged "l."/"r." so the
/// summands stay distinct even when A and B share element names.
struct DisjointUnion {
  FinObject object;
  Relation left_injection;   // A -> A ⊔ B
  Relation right_injection;  // B -> A ⊔ B
};

inline DisjointUnion disjoint_union(const FinObject& a, const FinObject& b) {
  std::vector<std::string> elements;
  elements.reserve(a.size() + b.size());
  for (const auto& e : a.elements()) elements.push_back("l." + e);
  for (const auto& e : b.elements()) elements.push_back("r." + e);
  FinObject sum(a.name() + "+" + b.name(), std::move(elements));

  Relation::Builder left(a, sum);
  for (std::size_t i = 0; i < a.size(); ++i) left.add(i, i);
  Relation::Builder right(b, sum);
  for (std::size_t i = 0; i < b.size(); ++i) right.add(i, a.size() + i);
  return {sum, std::move(left).build(), std::move(right).build()};
}

/// Entailment-commutativity: the composite of path1 is included in the
/// composite of path2. Both paths must be composable and the composites
/// parallel. A counterexample pair is reported on failure.
inline InclusionCheck lax_commutes(std::span<const Relation> path1,
                                   std::span<const Relation> path2) {
  Relation lhs = compose_path(path1);
  Relation rhs = compose_path(path2);
  return includes(lhs, rhs);
}

/// Debug rendering: `name : Dom -> Cod { a -> b; a -> c }` in canonical order.
inline std::string to_string(const Relation& r, std::string_view name) {
  std::string out(name);
  out += " : " + r.dom().name() + " -> " + r.cod().name() + " {";
  bool first = true;
  for (const auto& [a, b] : r.named_pairs()) {
    out += first ? " " : "; ";
    out += a + " -> " + b;
    first = false;
  }
  out += " }";
  return out;
}

}  // namespace relcat

#endif  // RELCAT_RELATION_HPP_
