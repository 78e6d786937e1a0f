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

#ifndef RELCAT_FIN_OBJECT_HPP_
#define RELCAT_FIN_OBJECT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relcat/bits.hpp"
#include "relcat/error.hpp"

namespace relcat {

/// A named finite set with ordered, named elements.
///
/// Element order is declaration order and is canonical everywhere: set
/// rendering, counterexample selection, and serialization all follow it.
/// FinObject is an immutable value; copies share storage.
class FinObject {
 public:
  FinObject() : data_(empty_data()) {}

  FinObject(std::string name, std::vector<std::string> elements) {
    auto data = std::make_shared<Data>();
    data->name = std::move(name);
    data->elements = std::move(elements);
    data->index.reserve(data->elements.size());
    for (std::size_t i = 0; i < data->elements.size(); ++i) {
      auto [it, fresh] = data->index.emplace(data->elements[i], i);
      (void)it;
      if (!fresh) {
        throw Error("duplicate element '" + data->elements[i] + "' in object '" +
                    data->name + "'");
      }
    }
    data_ = std::move(data);
  }

  const std::string& name() const { return data_->name; }
  std::size_t size() const { return data_->elements.size(); }
  bool empty() const { return data_->elements.empty(); }
  const std::vector<std::string>& elements() const { return data_->elements; }

  const std::string& element(std::size_t i) const {
    if (i >= size()) {
      throw LookupError("element index out of range in object '" + name() + "'");
    }
    return data_->elements[i];
  }

  std::optional<std::size_t> find(const std::string& element) const {
    auto it = data_->index.find(element);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const std::string& element) const {
    if (auto i = find(element)) return *i;
    throw LookupError("no element '" + element + "' in object '" + name() + "'");
  }

  bool contains(const std::string& element) const { return find(element).has_value(); }

  /// Structural equality: same name and same element list in the same order.
  friend bool operator==(const FinObject& a, const FinObject& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->name == b.data_->name && a.data_->elements == b.data_->elements;
  }
  friend bool operator!=(const FinObject& a, const FinObject& b) { return !(a == b); }

 private:
  struct Data {
    std::string name;
    std::vector<std::string> elements;
    std::unordered_map<std::string, std::size_t> index;
  };

  static std::shared_ptr<const Data> empty_data() {
    static const auto shared = std::make_shared<Data>();
    return shared;
  }

  std::shared_ptr<const Data> data_;
};

/// A subset of a FinObject's elements, stored as a bitset over the
/// carrier's canonical order. Immutable value.
class ElementSet {
 public:
  explicit ElementSet(FinObject carrier)
      : carrier_(std::move(carrier)),
        words_(detail::word_count(carrier_.size()), 0) {}

  static ElementSet of(FinObject carrier, std::span<const std::string> members) {
    ElementSet s(std::move(carrier));
    for (const auto& m : members) {
      detail::set_bit(s.words_, s.carrier_.index_of(m));
    }
    return s;
  }

  static ElementSet of(FinObject carrier, std::initializer_list<std::string> members) {
    return of(std::move(carrier), std::span<const std::string>(members.begin(), members.size()));
  }

  static ElementSet full(FinObject carrier) {
    ElementSet s(std::move(carrier));
    for (std::size_t i = 0; i < s.carrier_.size(); ++i) detail::set_bit(s.words_, i);
    return s;
  }

  const FinObject& carrier() const { return carrier_; }
  std::size_t count() const { return detail::popcount(words_); }
  bool empty() const { return count() == 0; }

  bool contains(std::size_t i) const {
    return i < carrier_.size() && detail::get_bit(words_, i);
  }
  bool contains(const std::string& element) const {
    auto i = carrier_.find(element);
    return i && detail::get_bit(words_, *i);
  }

  /// Member indices in canonical (declaration) order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < carrier_.size(); ++i) {
      if (detail::get_bit(words_, i)) out.push_back(i);
    }
    return out;
  }

  /// Member names in canonical (declaration) order.
  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(count());
    for (std::size_t i : indices()) out.push_back(carrier_.element(i));
    return out;
  }

  bool subset_of(const ElementSet& other) const {
    require_same_carrier(other);
    return detail::subset_of(words_, other.words_);
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.carrier_ == b.carrier_ && detail::equal(a.words_, b.words_);
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    a.require_same_carrier(b);
    ElementSet out = a;
    detail::or_assign(out.words_, b.words_);
    return out;
  }

  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    a.require_same_carrier(b);
    ElementSet out = a;
    detail::and_assign(out.words_, b.words_);
    return out;
  }

  /// Set difference a \ b.
  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    a.require_same_carrier(b);
    ElementSet out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= ~b.words_[i];
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  void require_same_carrier(const ElementSet& other) const {
    if (carrier_ != other.carrier_) {
      throw TypeError("element sets over different carriers: '" + carrier_.name() +
                      "' vs '" + other.carrier_.name() + "'");
    }
  }

  friend ElementSet make_element_set(FinObject, std::vector<std::uint64_t>);

  FinObject carrier_;
  std::vector<std::uint64_t> words_;
};

/// Wraps raw bit words as an ElementSet. For use by relation/kan internals.
inline ElementSet make_element_set(FinObject carrier, std::vector<std::uint64_t> words) {
  ElementSet s(std::move(carrier));
  s.words_ = std::move(words);
  s.words_.resize(detail::word_count(s.carrier_.size()), 0);
  return s;
}

/// Renders `{ a b c }` in canonical order; `{ }` when empty.
inline std::string to_string(const ElementSet& s) {
  std::string out = "{";
  for (const auto& n : s.names()) {
    out += ' ';
    out += n;
  }
  out += " }";
  return out;
}

}  // namespace relcat

#endif  // RELCAT_FIN_OBJECT_HPP_
