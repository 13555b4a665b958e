#pragma once

#include <map>
#include <string>

#include "knotzeta/error.hpp"
#include "knotzeta/suites.hpp"

namespace test_corpus {

inline const std::map<std::string, knotzeta::KnotDiagram>& all() {
  static const auto loaded = [] {
    std::map<std::string, knotzeta::KnotDiagram> m;
    for (auto& nd : knotzeta::load_corpus(KNOTZETA_TEST_CORPUS)) m.emplace(nd.name, nd.diagram);
    return m;
  }();
  return loaded;
}

inline const knotzeta::KnotDiagram& get(const std::string& name) {
  const auto it = all().find(name);
  if (it == all().end()) throw knotzeta::InputError("missing corpus knot " + name);
  return it->second;
}

}  // namespace test_corpus
