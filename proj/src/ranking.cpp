#include "ocf/ranking.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>

#include "ocf/errors.hpp"

namespace ocf {

Ranking::Ranking(std::shared_ptr<const Vocabulary> vocab,
                 std::vector<Ord2> values)
    : vocab_(std::move(vocab)), values_(std::move(values)) {
  if (!vocab_) throw InvalidArgumentError("ranking requires a vocabulary");
  if (values_.size() != vocab_->state_count()) {
    throw InvalidArgumentError("ranking needs one value per state");
  }
}

Ranking Ranking::constant(std::shared_ptr<const Vocabulary> vocab, Ord2 value) {
  if (!vocab) throw InvalidArgumentError("ranking requires a vocabulary");
  std::vector<Ord2> values(vocab->state_count(), value);
  return Ranking(std::move(vocab), std::move(values));
}

bool Ranking::is_cf() const {
  return std::find(values_.begin(), values_.end(), Ord2::zero()) !=
         values_.end();
}

bool operator==(const Ranking& a, const Ranking& b) {
  return *a.vocab_ == *b.vocab_ && a.values_ == b.values_;
}

Ord2 min_of(std::span<const Ord2> values) {
  assert(!values.empty());
  return *std::min_element(values.begin(), values.end());
}

std::vector<Ord2> zero_values(std::vector<Ord2> values) {
  const Ord2 m = min_of(values);
  for (Ord2& v : values) {
    if (v.degree > m.degree) {
      v.degree -= m.degree;
    } else {
      v = Ord2{0, v.shift - m.shift};
    }
  }
  return values;
}

Ord2 min_value(const Ranking& r) { return min_of(r.values()); }

std::uint64_t deg(const Ranking& r) { return min_value(r).degree; }

std::uint64_t fin(const Ranking& r) { return min_value(r).shift; }

Ranking finite_zeroing(const Ranking& r) {
  return Ranking(r.vocabulary_ptr(), zero_values(r.values()));
}

std::vector<State> bel(const Ranking& r) {
  std::vector<State> out;
  for (State s = 0; s < r.state_count(); ++s) {
    if (r.at(s) == Ord2::zero()) out.push_back(s);
  }
  return out;
}

std::optional<Ord2> degree_of_strength(const Ranking& r) {
  std::optional<Ord2> least;
  for (State s = 0; s < r.state_count(); ++s) {
    const Ord2 v = r.at(s);
    if (v == Ord2::zero()) continue;
    if (!least || v < *least) least = v;
  }
  return least;
}

bool equivalent(const Ranking& a, const Ranking& b) {
  if (a.vocabulary() != b.vocabulary()) {
    throw VocabularyMismatchError("rankings use different vocabularies");
  }
  std::vector<State> order(a.state_count());
  for (State s = 0; s < a.state_count(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](State x, State y) {
    return std::pair(a.at(x), x) < std::pair(a.at(y), y);
  });
  // Identical ordered partitions <=> adjacent pairs agree on ties and strict
  // steps; transitivity extends that to all pairs.
  for (std::size_t i = 1; i < order.size(); ++i) {
    const State prev = order[i - 1];
    const State cur = order[i];
    const bool a_step = a.at(prev) < a.at(cur);
    const bool b_step = b.at(prev) < b.at(cur);
    if (a_step != b_step || (!a_step && b.at(prev) != b.at(cur))) return false;
  }
  return true;
}

std::uint64_t LevelSlice::min_part() const {
  assert(!parts.empty());
  std::uint64_t m = parts.front().second;
  for (const auto& [s, p] : parts) m = std::min(m, p);
  return m;
}

std::vector<State> LevelSlice::minimizers() const {
  const std::uint64_t m = min_part();
  std::vector<State> out;
  for (const auto& [s, p] : parts) {
    if (p == m) out.push_back(s);
  }
  return out;
}

std::optional<LevelSlice> level(const Ranking& r, std::uint64_t k) {
  LevelSlice slice{k, {}};
  for (State s = 0; s < r.state_count(); ++s) {
    if (r.at(s).degree == k) slice.parts.emplace_back(s, r.at(s).shift);
  }
  if (slice.parts.empty()) return std::nullopt;
  return slice;
}

std::vector<std::uint64_t> poss(const Ranking& r, const Formula& f) {
  std::vector<std::uint64_t> out;
  for (State s = 0; s < r.state_count(); ++s) {
    if (sat(s, f, r.vocabulary())) out.push_back(r.at(s).degree);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool believed_at_level(const Ranking& r, std::uint64_t k, const Formula& f) {
  auto slice = level(r, k);
  if (!slice) {
    throw EmptyLevelError("no state at level " + std::to_string(k));
  }
  for (State s : slice->minimizers()) {
    if (!sat(s, f, r.vocabulary())) return false;
  }
  return true;
}

std::vector<LevelComponent> decompose(const Ranking& r) {
  if (!r.is_cf()) {
    throw NotCFError("decompose requires a conditional function");
  }
  std::map<std::uint64_t, LevelComponent> by_level;
  for (State s = 0; s < r.state_count(); ++s) {
    auto& comp = by_level[r.at(s).degree];
    comp.level = r.at(s).degree;
    comp.parts.emplace_back(s, r.at(s).shift);
  }
  std::vector<LevelComponent> out;
  for (auto& [k, comp] : by_level) {
    std::uint64_t base = comp.parts.front().second;
    for (const auto& [s, p] : comp.parts) base = std::min(base, p);
    comp.base_shift = base;
    for (auto& [s, p] : comp.parts) p -= base;
    out.push_back(std::move(comp));
  }
  return out;
}

RankingRule parse_ranking_rule(std::string_view line) {
  const std::size_t arrow = line.find("=>");
  if (arrow == std::string_view::npos) {
    throw ParseError("expected 'FORMULA => ORDINAL'", line.size());
  }
  std::string_view guard_text = line.substr(0, arrow);
  std::string_view value_text = line.substr(arrow + 2);

  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  };

  guard_text = trim(guard_text);
  RankingRule rule{std::nullopt, parse_ordinal(value_text)};
  if (guard_text != "else") rule.guard = parse_formula(guard_text);
  return rule;
}

Ranking ranking_from_rules(std::shared_ptr<const Vocabulary> vocab,
                           const std::vector<RankingRule>& rules) {
  if (rules.empty() || rules.back().guard.has_value()) {
    throw ParseError("ranking block must end with an 'else' rule", 0);
  }
  for (std::size_t i = 0; i + 1 < rules.size(); ++i) {
    if (!rules[i].guard) {
      throw ParseError("'else' must be the last rule of a ranking block", 0);
    }
  }
  std::vector<Ord2> values(vocab->state_count());
  for (State s = 0; s < vocab->state_count(); ++s) {
    for (const auto& rule : rules) {
      if (!rule.guard || sat(s, *rule.guard, *vocab)) {
        values[s] = rule.value;
        break;
      }
    }
  }
  return Ranking(std::move(vocab), std::move(values));
}

std::string ranking_table(const Ranking& r) {
  std::vector<State> order(r.state_count());
  for (State s = 0; s < r.state_count(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](State x, State y) {
    return std::pair(r.at(x), x) < std::pair(r.at(y), y);
  });
  std::string out;
  for (State s : order) {
    out += state_to_string(s, r.vocabulary());
    out += " => ";
    out += to_string(r.at(s));
    out += "\n";
  }
  return out;
}

}  // namespace ocf
