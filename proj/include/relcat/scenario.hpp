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

#ifndef RELCAT_SCENARIO_HPP_
#define RELCAT_SCENARIO_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "relcat/error.hpp"

namespace relcat::io {

// Declaration-level scenario document. Everything is plain names; the
// typed diagram is built from it separately. Declaration order is kept
// because it is canonical for serialization.

struct WorldDecl {
  std::string name;  // always "W"
  std::vector<std::string> elements;
};

struct ActualDecl {
  std::string world;
};

struct PropDecl {
  std::string name;
  std::vector<std::string> worlds;
};

struct ObjectDecl {
  std::string name;  // one of H, C, Cp, O, G, DS
  std::vector<std::string> elements;
};

struct ModelDecl {
  std::string model;
};

struct RelDecl {
  std::string name;  // one of x, c, g, p, s, D, t, e, r
  std::string dom;
  std::string cod;
  // Pairs by element name. For `e` the dom element is the synthesized
  // product name "(model, prompt)".
  std::vector<std::pair<std::string, std::string>> pairs;
};

using Decl = std::variant<WorldDecl, ActualDecl, PropDecl, ObjectDecl, ModelDecl, RelDecl>;

/// Fixed morphism signatures of the epistemic diagram.
struct RelSignature {
  std::string_view name;
  std::string_view dom;
  std::string_view cod;
};

inline constexpr std::array<RelSignature, 9> kRelSignatures{{
    {"x", "H", "W"},
    {"c", "H", "C"},
    {"g", "C", "Pred"},
    {"p", "H", "Cp"},
    {"s", "C", "Cp"},
    {"D", "Cp", "DS"},
    {"t", "DS", "G"},
    {"e", "GxCp", "O"},
    {"r", "O", "Pred"},
}};

inline const RelSignature* find_signature(std::string_view name) {
  for (const auto& sig : kRelSignatures) {
    if (sig.name == name) return &sig;
  }
  return nullptr;
}

inline constexpr std::array<std::string_view, 6> kObjectNames{"H", "C", "Cp",
                                                              "O", "G", "DS"};

inline bool is_object_name(std::string_view name) {
  return std::find(kObjectNames.begin(), kObjectNames.end(), name) !=
         kObjectNames.end();
}

/// Canonical name of a model/prompt product element.
inline std::string product_element_name(const std::string& model,
                                        const std::string& prompt) {
  return "(" + model + ", " + prompt + ")";
}

struct ScenarioDoc {
  std::vector<Decl> decls;

  const WorldDecl* world() const { return first_of<WorldDecl>(); }
  const ActualDecl* actual() const { return first_of<ActualDecl>(); }
  const ModelDecl* model() const { return first_of<ModelDecl>(); }

  const ObjectDecl* object(std::string_view name) const {
    for (const auto& d : decls) {
      if (const auto* o = std::get_if<ObjectDecl>(&d); o && o->name == name) return o;
    }
    return nullptr;
  }

  const RelDecl* rel(std::string_view name) const {
    for (const auto& d : decls) {
      if (const auto* r = std::get_if<RelDecl>(&d); r && r->name == name) return r;
    }
    return nullptr;
  }

  std::vector<const PropDecl*> props() const {
    std::vector<const PropDecl*> out;
    for (const auto& d : decls) {
      if (const auto* p = std::get_if<PropDecl>(&d)) out.push_back(p);
    }
    return out;
  }

 private:
  template <class T>
  const T* first_of() const {
    for (const auto& d : decls) {
      if (const auto* v = std::get_if<T>(&d)) return v;
    }
    return nullptr;
  }
};

namespace detail {

/// Element-index lookup across every space a relation can mention,
/// including the derived Pred and GxCp spaces.
class SpaceIndex {
 public:
  explicit SpaceIndex(const ScenarioDoc& doc) {
    if (const auto* w = doc.world()) insert(w->name, w->elements);
    for (const auto& name : kObjectNames) {
      if (const auto* o = doc.object(name)) insert(o->name, o->elements);
    }
    std::vector<std::string> prop_names;
    for (const auto* p : doc.props()) prop_names.push_back(p->name);
    insert("Pred", prop_names);

    const auto* g = doc.object("G");
    const auto* cp = doc.object("Cp");
    if (g && cp) {
      std::vector<std::string> product;
      product.reserve(g->elements.size() * cp->elements.size());
      for (const auto& gi : g->elements) {
        for (const auto& cj : cp->elements) {
          product.push_back(product_element_name(gi, cj));
        }
      }
      insert("GxCp", product);
    }
  }

  bool has_space(const std::string& space) const { return spaces_.count(space) != 0; }

  std::optional<std::size_t> find(const std::string& space,
                                  const std::string& element) const {
    auto it = spaces_.find(space);
    if (it == spaces_.end()) return std::nullopt;
    auto jt = it->second.find(element);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
  }

  std::size_t index_of(const std::string& space, const std::string& element) const {
    if (auto i = find(space, element)) return *i;
    throw LookupError("no element '" + element + "' in '" + space + "'");
  }

 private:
  void insert(const std::string& space, const std::vector<std::string>& elements) {
    auto& m = spaces_[space];
    for (std::size_t i = 0; i < elements.size(); ++i) m.emplace(elements[i], i);
  }

  std::map<std::string, std::map<std::string, std::size_t>> spaces_;
};

inline std::string braced_list(const std::vector<std::string>& items) {
  std::string out = "{";
  for (const auto& it : items) {
    out += ' ';
    out += it;
  }
  out += " }";
  return out;
}

}  // namespace detail

/// Canonical serialization: declaration order for blocks, pairs and
/// proposition members sorted by canonical element index, single spaces,
/// LF line endings. Structurally equal documents serialize to identical
/// bytes. Requires a document whose references resolve.
inline std::string serialize_scenario(const ScenarioDoc& doc) {
  detail::SpaceIndex index(doc);
  std::string out;

  for (const auto& d : doc.decls) {
    if (const auto* w = std::get_if<WorldDecl>(&d)) {
      out += "world " + w->name + " " + detail::braced_list(w->elements) + "\n";
    } else if (const auto* a = std::get_if<ActualDecl>(&d)) {
      out += "actual " + a->world + "\n";
    } else if (const auto* p = std::get_if<PropDecl>(&d)) {
      std::vector<std::string> worlds = p->worlds;
      std::sort(worlds.begin(), worlds.end(),
                [&](const std::string& l, const std::string& r) {
                  return index.index_of("W", l) < index.index_of("W", r);
                });
      worlds.erase(std::unique(worlds.begin(), worlds.end()), worlds.end());
      out += "prop " + p->name + " = " + detail::braced_list(worlds) + "\n";
    } else if (const auto* o = std::get_if<ObjectDecl>(&d)) {
      out += "object " + o->name + " " + detail::braced_list(o->elements) + "\n";
    } else if (const auto* m = std::get_if<ModelDecl>(&d)) {
      out += "model " + m->model + "\n";
    } else if (const auto* r = std::get_if<RelDecl>(&d)) {
      auto pairs = r->pairs;
      auto key = [&](const std::pair<std::string, std::string>& pr) {
        return std::make_pair(index.index_of(r->dom, pr.first),
                              index.index_of(r->cod, pr.second));
      };
      std::sort(pairs.begin(), pairs.end(),
                [&](const auto& l, const auto& rgt) { return key(l) < key(rgt); });
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

      out += "rel " + r->name + " : " + r->dom + " -> " + r->cod + " {";
      bool first = true;
      for (const auto& [from, to] : pairs) {
        out += first ? " " : " ; ";
        out += from + " -> " + to;
        first = false;
      }
      out += " }\n";
    }
  }
  return out;
}

}  // namespace relcat::io

#endif  // RELCAT_SCENARIO_HPP_
