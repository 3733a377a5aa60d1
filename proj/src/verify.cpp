#include "ocf/verify.hpp"

#include <algorithm>

namespace ocf {

std::vector<Ord2> zero_values_flat(std::vector<Ord2> values) {
  const Ord2 m = min_of(values);
  for (Ord2& v : values) {
    if (v.degree > m.degree) {
      v = Ord2{v.degree - m.degree, m.shift};
    } else {
      v = Ord2{0, v.shift - m.shift};
    }
  }
  return values;
}

namespace {

std::vector<Ord2> sums_of(const std::vector<Ord2>& a,
                          const std::vector<Ord2>& b) {
  std::vector<Ord2> sums(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sums[i] = add(a[i], b[i]);
  return sums;
}

}  // namespace

std::vector<Ord2> star_values(const std::vector<Ord2>& a,
                              const std::vector<Ord2>& b) {
  return zero_values(sums_of(a, b));
}

std::vector<Ord2> star_values_flat(const std::vector<Ord2>& a,
                                   const std::vector<Ord2>& b) {
  return zero_values_flat(sums_of(a, b));
}

Ranking star_flat(const Ranking& r, const Ranking& obs) {
  if (r.vocabulary() != obs.vocabulary()) {
    throw VocabularyMismatchError("rankings use different vocabularies");
  }
  if (!r.is_cf() || !obs.is_cf()) {
    throw NotCFError("star requires conditional functions on both sides");
  }
  return Ranking(r.vocabulary_ptr(), star_values_flat(r.values(), obs.values()));
}

namespace {

bool believes(const Ranking& r, const Formula& f) {
  const std::vector<State> believed = bel(r);
  if (believed.empty()) return false;
  for (State s : believed) {
    if (!sat(s, f, r.vocabulary())) return false;
  }
  return true;
}

}  // namespace

bool oracle_nearly_cf(const Ranking& r, const Formula& f) {
  if (r.vocabulary().size() > 4) {
    throw UniverseTooLargeError(
        "near-counterfactual oracle supports at most four atoms");
  }
  if (!r.is_cf()) {
    throw NotCFError("near-counterfactual oracle requires a conditional function");
  }
  const State count = r.state_count();
  std::uint64_t max_bottom_part = 0;
  for (State s = 0; s < count; ++s) {
    if (r.at(s).degree == 0) {
      max_bottom_part = std::max(max_bottom_part, r.at(s).shift);
    }
  }
  const std::uint64_t big = max_bottom_part + 1;

  auto reachable_with = [&](const std::vector<Ord2>& obs_values) {
    const Ranking obs(r.vocabulary_ptr(), obs_values);
    return believes(star(r, obs), f);
  };

  // One surviving state, everything else pushed past the bottom level.
  bool single = false;
  for (State keep = 0; keep < count && !single; ++keep) {
    std::vector<Ord2> obs(count, Ord2::finite(big));
    obs[keep] = Ord2::zero();
    single = reachable_with(obs);
  }

  // Every nonempty surviving set, every strength from 1 to big.
  bool subset = false;
  for (std::uint32_t mask = 1; mask < (1u << count) && !subset; ++mask) {
    for (std::uint64_t m = 1; m <= big && !subset; ++m) {
      std::vector<Ord2> obs(count);
      for (State s = 0; s < count; ++s) {
        obs[s] = (mask >> s) & 1 ? Ord2::zero() : Ord2::finite(m);
      }
      subset = reachable_with(obs);
    }
  }

  if (single != subset) {
    throw Error("near-counterfactual oracle families disagree");
  }
  return !single;
}

std::vector<Ord2> right_inverse_values(const std::vector<Ord2>& values) {
  std::uint64_t top_degree = 0;
  for (const Ord2& v : values) top_degree = std::max(top_degree, v.degree);
  std::uint64_t top_part = 0;
  for (const Ord2& v : values) {
    if (v.degree == top_degree) top_part = std::max(top_part, v.shift);
  }
  std::vector<Ord2> inv(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].degree < top_degree) {
      inv[i] = Ord2{top_degree - values[i].degree, top_part};
    } else {
      inv[i] = Ord2{0, top_part - values[i].shift};
    }
  }
  return inv;
}

Ranking right_inverse(const Ranking& r) {
  if (!r.is_cf()) {
    throw NotCFError("right inverse requires a conditional function");
  }
  Ranking inv(r.vocabulary_ptr(), right_inverse_values(r.values()));
  const Ranking product = star(r, inv);
  for (State s = 0; s < product.state_count(); ++s) {
    if (product.at(s) != Ord2::zero()) {
      throw Error("right inverse construction failed to cancel");
    }
  }
  return inv;
}

std::string values_literal(std::span<const Ord2> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  out += "]";
  return out;
}

std::vector<Ord2> parse_values_literal(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  if (i == text.size() || text[i] != '[') {
    throw ParseError("expected '[' to open a values literal", i);
  }
  ++i;
  std::vector<Ord2> values;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != ']') ++i;
      if (i == text.size()) {
        throw ParseError("unterminated values literal", i);
      }
      values.push_back(parse_ordinal(text.substr(start, i - start)));
      if (text[i] == ']') {
        ++i;
        break;
      }
      ++i;  // comma
      skip();
    }
  }
  skip();
  if (i != text.size()) {
    throw ParseError("trailing characters after values literal", i);
  }
  return values;
}

std::string ScanReport::to_text() const {
  std::string out;
  for (const std::string& line : header) {
    out += line;
    out += '\n';
  }
  for (const ScanCheck& c : checks) {
    if (!c.variant.empty()) {
      out += c.variant;
      out += ' ';
    }
    out += c.name;
    out += c.holds ? ": ok (" : ": fail (";
    out += c.detail;
    out += ")\n";
  }
  return out;
}

namespace {

using Values = std::vector<Ord2>;
using StarFn = Values (*)(const Values&, const Values&);

bool is_cf_tuple(const Values& v) {
  return std::find(v.begin(), v.end(), Ord2::zero()) != v.end();
}

std::string plural(std::uint64_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

ScanCheck check_closure(const std::string& variant, StarFn op,
                        const std::vector<Values>& cfs) {
  ScanCheck c;
  c.variant = variant;
  c.name = "closure";
  for (const Values& a : cfs) {
    for (const Values& b : cfs) {
      ++c.cases;
      Values r = op(a, b);
      if (!is_cf_tuple(r)) {
        c.witness = {a, b, r};
        c.detail = "a=" + values_literal(a) + " b=" + values_literal(b) +
                   "; a*b=" + values_literal(r);
        return c;
      }
    }
  }
  c.holds = true;
  c.detail = plural(c.cases, "pair");
  return c;
}

ScanCheck check_identity(const std::string& variant, StarFn op,
                         const std::vector<Values>& cfs, std::size_t states) {
  ScanCheck c;
  c.variant = variant;
  c.name = "identity";
  const Values e(states, Ord2::zero());
  for (const Values& r : cfs) {
    ++c.cases;
    Values right = op(r, e);
    if (right != r) {
      c.witness = {r, right};
      c.detail = "r=" + values_literal(r) + "; r*e=" + values_literal(right);
      return c;
    }
    Values left = op(e, r);
    if (left != r) {
      c.witness = {r, left};
      c.detail = "r=" + values_literal(r) + "; e*r=" + values_literal(left);
      return c;
    }
  }
  c.holds = true;
  c.detail = plural(c.cases, "function");
  return c;
}

ScanCheck check_associativity(const std::string& variant, StarFn op,
                              const std::vector<Values>& cfs) {
  ScanCheck c;
  c.variant = variant;
  c.name = "associativity";
  for (const Values& a : cfs) {
    for (const Values& b : cfs) {
      for (const Values& x : cfs) {
        ++c.cases;
        Values lhs = op(op(a, b), x);
        Values rhs = op(a, op(b, x));
        if (lhs != rhs) {
          c.witness = {a, b, x, lhs, rhs};
          c.detail = "a=" + values_literal(a) + " b=" + values_literal(b) +
                     " c=" + values_literal(x) +
                     "; (a*b)*c=" + values_literal(lhs) +
                     "; a*(b*c)=" + values_literal(rhs);
          return c;
        }
      }
    }
  }
  c.holds = true;
  c.detail = plural(c.cases, "triple");
  return c;
}

ScanCheck check_commutativity(const std::string& variant, StarFn op,
                              const std::vector<Values>& cfs) {
  ScanCheck c;
  c.variant = variant;
  c.name = "commutativity";
  for (std::size_t i = 0; i < cfs.size(); ++i) {
    for (std::size_t j = i + 1; j < cfs.size(); ++j) {
      ++c.cases;
      Values ab = op(cfs[i], cfs[j]);
      Values ba = op(cfs[j], cfs[i]);
      if (ab != ba) {
        c.witness = {cfs[i], cfs[j], ab, ba};
        c.detail = "a=" + values_literal(cfs[i]) +
                   " b=" + values_literal(cfs[j]) +
                   "; a*b=" + values_literal(ab) +
                   "; b*a=" + values_literal(ba);
        return c;
      }
    }
  }
  c.holds = true;
  c.detail = plural(c.cases, "pair");
  return c;
}

ScanCheck check_inverses(const std::string& variant, StarFn op,
                         const std::vector<Values>& cfs, std::size_t states,
                         bool two_sided) {
  ScanCheck c;
  c.variant = variant;
  c.name = two_sided ? "two-sided-inverse" : "right-inverse";
  const Values e(states, Ord2::zero());
  for (const Values& r : cfs) {
    ++c.cases;
    bool found = false;
    for (const Values& x : cfs) {
      if (op(r, x) != e) continue;
      if (two_sided && op(x, r) != e) continue;
      found = true;
      break;
    }
    if (!found) {
      c.witness = {r};
      c.detail = "r=" + values_literal(r);
      return c;
    }
  }
  c.holds = true;
  c.detail = plural(c.cases, "function");
  return c;
}

// All value tuples in ascending odometer order (state 0 most significant),
// restricted to those containing a zero.
std::vector<Values> enumerate_cfs(std::uint32_t states,
                                  const std::vector<Ord2>& alphabet,
                                  std::uint64_t& tuple_count) {
  std::vector<Values> cfs;
  std::vector<std::size_t> idx(states, 0);
  tuple_count = 0;
  while (true) {
    ++tuple_count;
    Values v(states);
    for (std::uint32_t s = 0; s < states; ++s) v[s] = alphabet[idx[s]];
    if (is_cf_tuple(v)) cfs.push_back(std::move(v));
    std::uint32_t pos = states;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < alphabet.size()) break;
      idx[pos] = 0;
      if (pos == 0) return cfs;
    }
  }
}

}  // namespace

ScanReport axiom_scan(std::uint32_t states, std::uint64_t dbound,
                      std::uint64_t sbound) {
  if (states < 1 || states > 3 || dbound > 2 || sbound > 2) {
    throw UniverseTooLargeError(
        "axiom scan bounds: 1 <= states <= 3, degree <= 2, shift <= 2");
  }
  std::vector<Ord2> alphabet;
  for (std::uint64_t d = 0; d <= dbound; ++d) {
    for (std::uint64_t p = 0; p <= sbound; ++p) alphabet.push_back(Ord2{d, p});
  }
  std::uint64_t tuples = 0;
  const std::vector<Values> cfs = enumerate_cfs(states, alphabet, tuples);

  ScanReport report;
  report.header.push_back("axiom scan: states=" + std::to_string(states) +
                          " degree_bound=" + std::to_string(dbound) +
                          " shift_bound=" + std::to_string(sbound));
  report.header.push_back("universe: " + plural(tuples, "tuple") + ", " +
                          plural(cfs.size(), "conditional function"));
  struct Variant {
    const char* name;
    StarFn op;
  };
  const Variant variants[] = {{"keep-parts", &star_values},
                              {"flatten-parts", &star_values_flat}};
  for (const Variant& v : variants) {
    report.checks.push_back(check_closure(v.name, v.op, cfs));
    report.checks.push_back(check_identity(v.name, v.op, cfs, states));
    report.checks.push_back(check_associativity(v.name, v.op, cfs));
    report.checks.push_back(check_commutativity(v.name, v.op, cfs));
    report.checks.push_back(check_inverses(v.name, v.op, cfs, states, false));
    report.checks.push_back(check_inverses(v.name, v.op, cfs, states, true));
  }
  return report;
}

ScanReport agreement_scan(std::uint32_t states, std::uint64_t vbound) {
  if (states < 1 || states > 3 || vbound > 3) {
    throw UniverseTooLargeError(
        "agreement scan bounds: 1 <= states <= 3, values <= 3");
  }
  std::vector<Ord2> alphabet;
  for (std::uint64_t p = 0; p <= vbound; ++p) alphabet.push_back(Ord2::finite(p));
  std::uint64_t tuples = 0;
  const std::vector<Values> cfs = enumerate_cfs(states, alphabet, tuples);

  ScanReport report;
  report.header.push_back("agreement scan: states=" + std::to_string(states) +
                          " value_bound=" + std::to_string(vbound));
  report.header.push_back("universe: " +
                          plural(cfs.size(), "conditional function"));

  ScanCheck sum;
  sum.name = "star equals sum-then-subtract";
  for (const Values& a : cfs) {
    for (const Values& b : cfs) {
      ++sum.cases;
      Values starred = star_values(a, b);
      Values sums = sums_of(a, b);
      const Ord2 m = min_of(sums);
      Values subtracted(sums.size());
      for (std::size_t i = 0; i < sums.size(); ++i) {
        subtracted[i] = *left_sub(sums[i], m);
      }
      if (starred != subtracted) {
        sum.witness = {a, b, starred, subtracted};
        sum.detail = "a=" + values_literal(a) + " b=" + values_literal(b) +
                     "; star=" + values_literal(starred) +
                     "; subtract=" + values_literal(subtracted);
        break;
      }
    }
    if (!sum.witness.empty()) break;
  }
  if (sum.witness.empty()) {
    sum.holds = true;
    sum.detail = plural(sum.cases, "pair");
  }
  report.checks.push_back(std::move(sum));

  ScanCheck agree;
  agree.name = "variants agree on finite values";
  for (const Values& a : cfs) {
    for (const Values& b : cfs) {
      ++agree.cases;
      Values keep = star_values(a, b);
      Values flat = star_values_flat(a, b);
      if (keep != flat) {
        agree.witness = {a, b, keep, flat};
        agree.detail = "a=" + values_literal(a) + " b=" + values_literal(b) +
                       "; keep=" + values_literal(keep) +
                       "; flatten=" + values_literal(flat);
        break;
      }
    }
    if (!agree.witness.empty()) break;
  }
  if (agree.witness.empty()) {
    agree.holds = true;
    agree.detail = plural(agree.cases, "pair");
  }
  report.checks.push_back(std::move(agree));
  return report;
}

}  // namespace ocf
