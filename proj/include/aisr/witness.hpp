#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aisr/deciders.hpp"
#include "aisr/graphs.hpp"
#include "aisr/terms.hpp"

namespace aisr {

/// u(n) = x1x2 + x2x3 + ... + x(2n)x(2n+1) + x(2n+1)x1 and
/// q(n) = x1x2...x(2n+1), in commutative mode.
struct WitnessPair {
  std::size_t n;
  Term u;
  Word q;

  Identity identity() const { return Identity(u, u.plus(q)); }
};

/// Throws std::invalid_argument for n < 1.
WitnessPair make_witness(std::size_t n);

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct WitnessReport {
  std::size_t n;
  std::vector<Check> checks;

  /// No check failed (skipped checks do not count against it).
  bool passed() const;
  const Check* find(std::string_view name) const;
};

struct WitnessOptions {
  bool oracle = false;
  std::uint64_t oracle_cap = kDefaultBruteForceCap;
  std::size_t delta_cap = kDefaultDeltaCap;
};

/// Checks: "content", "delta", "s7_0", "odd_cycle" and, when requested,
/// "oracle" (brute force in S7^0, skipped past the cap). A cap overrun in
/// one check is reported on that check and the rest still run.
WitnessReport check_witness_facts(const WitnessPair& w, const WitnessOptions& options = {});

/// ω1 ≤ ω2 as letter multisets: every variable occurs in ω2 at least as
/// often as in ω1.
bool commutative_subword(const Word& small, const Word& big);

struct ConditionReport {
  bool short_words;          // (a) every word has length ≤ 2
  bool linear;               // (b) every word is linear
  bool antichain;            // (c) ω1 ≤ ω2 only when ω1 = ω2
  bool no_odd_cycle;         // (d) no odd cycle among the length-2 words
  std::optional<Word> long_word;
  std::optional<Word> nonlinear_word;
  std::optional<std::pair<Word, Word>> comparable_pair;
  std::optional<std::vector<Variable>> odd_cycle;

  DeltaFamily delta;
  bool every_variable_covered;  // each x in c(A) lies in some member of δ(A)
  std::optional<Variable> uncovered;
  std::optional<bool> b_subset_of_a;  // set when B was supplied

  bool all_conditions() const { return short_words && linear && antichain && no_odd_cycle; }
};

/// Conditions (a)-(d) on a candidate axiom side A, plus the δ facts the
/// non-derivability argument draws from them. (d) is checked on the graph
/// of the linear length-2 words of A, so it is evaluated even when (b)
/// fails.
ConditionReport check_axiom_conditions(const Term& a, const std::optional<Term>& b = std::nullopt,
                                       std::size_t delta_cap = kDefaultDeltaCap);

}  // namespace aisr
