#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ocf/ordinal.hpp"
#include "ocf/ranking.hpp"

namespace ocf::testing {

inline std::shared_ptr<const Vocabulary> make_vocab(
    std::initializer_list<std::string> atoms) {
  return std::make_shared<const Vocabulary>(
      std::vector<std::string>(atoms.begin(), atoms.end()));
}

// Ranking from ordinal literals, one per state in index order.
inline Ranking rk(std::shared_ptr<const Vocabulary> vocab,
                  std::initializer_list<std::string_view> values) {
  std::vector<Ord2> v;
  v.reserve(values.size());
  for (auto s : values) v.push_back(parse_ordinal(s));
  return Ranking(std::move(vocab), std::move(v));
}

inline std::vector<Ord2> ords(std::initializer_list<std::string_view> values) {
  std::vector<Ord2> v;
  v.reserve(values.size());
  for (auto s : values) v.push_back(parse_ordinal(s));
  return v;
}

}  // namespace ocf::testing
