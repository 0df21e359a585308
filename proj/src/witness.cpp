#include "aisr/witness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace aisr {

namespace {

Variable var(std::size_t i) { return Variable("x" + std::to_string(i)); }

}  // namespace

WitnessPair make_witness(std::size_t n) {
  if (n < 1) throw std::invalid_argument("witness index n must be at least 1");
  const std::size_t k = 2 * n + 1;
  WordSet words;
  std::vector<Variable> all;
  for (std::size_t i = 1; i <= k; ++i) {
    words.insert(Word{var(i), var(i % k + 1)});
    all.push_back(var(i));
  }
  return WitnessPair{n, Term(std::move(words), true), Word(std::move(all)).sorted()};
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool WitnessReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* WitnessReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

WitnessReport check_witness_facts(const WitnessPair& w, const WitnessOptions& options) {
  WitnessReport report{w.n, {}};
  auto pass_fail = [](bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; };

  const auto cu = content(w.u);
  const auto cq = content(w.q);
  report.checks.push_back({"content", pass_fail(cu == cq),
                           "c(u) = " + to_string(cu) + (cu == cq ? " = c(q)" : " != c(q)")});

  try {
    const auto d = delta_sets(w.u, options.delta_cap);
    report.checks.push_back({"delta", pass_fail(d.empty()), "δ(u) = " + to_string(d)});
  } catch (const SizeError& e) {
    report.checks.push_back({"delta", CheckStatus::Fail, e.what()});
  }

  try {
    const auto v = holds_s7_0(w.identity(), S70Options{options.delta_cap, true});
    report.checks.push_back({"s7_0", pass_fail(v.holds), v.reason});
  } catch (const SizeError& e) {
    report.checks.push_back({"s7_0", CheckStatus::Fail, e.what()});
  }

  {
    const auto b = odd_cycle(term_graph(w.u));
    const std::size_t want = 2 * w.n + 1;
    if (b.odd_cycle) {
      const bool ok = b.odd_cycle->size() == want;
      report.checks.push_back({"odd_cycle", pass_fail(ok),
                               "odd cycle of length " + std::to_string(b.odd_cycle->size())});
    } else {
      report.checks.push_back({"odd_cycle", CheckStatus::Fail, "graph of u is bipartite"});
    }
  }

  if (options.oracle) {
    try {
      const auto v = holds_bruteforce(builtin("S7_0"), w.identity(), options.oracle_cap);
      report.checks.push_back({"oracle", pass_fail(v.holds), v.reason});
    } catch (const SizeError& e) {
      report.checks.push_back({"oracle", CheckStatus::Skipped, e.what()});
    }
  }
  return report;
}

bool commutative_subword(const Word& small, const Word& big) {
  for (const auto& x : content(small))
    if (occurrences(x, small) > occurrences(x, big)) return false;
  return true;
}

ConditionReport check_axiom_conditions(const Term& a, const std::optional<Term>& b,
                                       std::size_t delta_cap) {
  ConditionReport r{};
  r.short_words = true;
  r.linear = true;
  r.antichain = true;
  for (const auto& w : a.words()) {
    if (r.short_words && w.length() > 2) {
      r.short_words = false;
      r.long_word = w;
    }
    if (r.linear && !is_linear(w)) {
      r.linear = false;
      r.nonlinear_word = w;
    }
  }
  for (const auto& w1 : a.words()) {
    for (const auto& w2 : a.words()) {
      if (w1 == w2 || !commutative_subword(w1, w2)) continue;
      // Distinct words can still coincide as multisets in noncommutative
      // mode (xy and yx); those are comparable both ways and count too.
      r.antichain = false;
      r.comparable_pair = std::pair{w1, w2};
      break;
    }
    if (!r.antichain) break;
  }

  WordSet edges;
  for (const auto& w : a.words())
    if (w.length() == 2 && is_linear(w)) edges.insert(w);
  r.no_odd_cycle = true;
  if (!edges.empty()) {
    auto bp = odd_cycle(term_graph(Term(edges, a.commutative())));
    if (bp.odd_cycle) {
      r.no_odd_cycle = false;
      r.odd_cycle = std::move(bp.odd_cycle);
    }
  }

  r.delta = delta_sets(a, delta_cap);
  r.every_variable_covered = true;
  for (const auto& x : content(a)) {
    const bool covered = std::any_of(r.delta.begin(), r.delta.end(),
                                     [&](const VarSet& z) { return z.count(x) > 0; });
    if (!covered) {
      r.every_variable_covered = false;
      r.uncovered = x;
      break;
    }
  }

  if (b) {
    r.b_subset_of_a = std::all_of(b->words().begin(), b->words().end(),
                                  [&](const Word& w) { return a.contains(w); });
  }
  return r;
}

}  // namespace aisr
