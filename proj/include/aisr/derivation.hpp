#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aisr/terms.hpp"

namespace aisr {

class DerivationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedAxiom {
  std::string name;
  Identity identity;
};

class AxiomSet {
 public:
  AxiomSet() = default;
  explicit AxiomSet(std::vector<NamedAxiom> axioms);

  /// Throws DerivationError on a duplicate name.
  void add(std::string name, Identity identity);
  const NamedAxiom* find(std::string_view name) const;
  const std::vector<NamedAxiom>& axioms() const { return axioms_; }
  bool empty() const { return axioms_.empty(); }

 private:
  std::vector<NamedAxiom> axioms_;
};

enum class Direction { Forward, Backward };  // A -> B, B -> A

/// One rewrite T = P φ(A) Q + R  ->  T' = P φ(B) Q + R. Absent contexts
/// are omitted factors (X+ has no empty word) and an absent remainder is an
/// omitted summand.
struct DerivationStep {
  std::string axiom;
  Direction direction = Direction::Forward;
  Substitution phi;
  std::optional<Term> left_context;
  std::optional<Term> right_context;
  std::optional<WordSet> remainder;
};

struct DerivationChain {
  Term start;
  std::vector<DerivationStep> steps;
  Term end;
};

/// P φ(side) Q + R in the convention of `commutative`. Throws
/// DerivationError for an unknown axiom or an uncovered variable.
Term step_source(const DerivationStep& step, const AxiomSet& sigma, bool commutative);
Term step_target(const DerivationStep& step, const AxiomSet& sigma, bool commutative);

struct StepResult {
  std::optional<Term> term;  // the rewritten term on success
  std::optional<Term> expected_source;  // set on mismatch, alongside the actual term
  bool ok() const { return term.has_value(); }
};

StepResult apply_step(const Term& t, const DerivationStep& step, const AxiomSet& sigma);

struct ChainVerdict {
  bool accepted = false;
  /// Index of the failing step, or steps.size() when every step applied
  /// but the last term differs from `end`.
  std::optional<std::size_t> failing_index;
  std::string message;
};

ChainVerdict verify_chain(const DerivationChain& chain, const AxiomSet& sigma);

struct SearchBounds {
  std::size_t max_depth = 3;
  std::size_t max_words = 4;        // per term along the chain
  std::size_t max_len = 4;          // per word, also bounds substitution images
  std::size_t max_image_words = 1;  // words per substitution image
};

enum class SearchOutcome {
  Found,
  /// Every term reachable under the enumerated substitutions and contexts
  /// was explored without hitting a bound.
  NoDerivationWithinBounds,
  /// Some successor or depth level was cut off by a bound.
  BoundsExhausted,
};

std::string_view outcome_name(SearchOutcome o);

struct SearchResult {
  SearchOutcome outcome;
  std::optional<DerivationChain> chain;
  std::size_t explored = 0;
};

/// Breadth-first search from goal.lhs towards goal.rhs. Substitution
/// images and contexts are drawn from the factors of the goal's words of
/// length ≤ max_len; contexts are single words or absent. Any returned
/// chain has passed verify_chain.
SearchResult search_derivation(const AxiomSet& sigma, const Identity& goal,
                               const SearchBounds& bounds = {});

// ---------------------------------------------------------------------------
// JSON files.
//
// Axioms: {"commutative": false, "axioms": [{"name": "ax1", "identity": "x == x + x^2"}]}
// Chain:  {"commutative": false, "start": "y*z",
//          "steps": [{"axiom": "ax1", "direction": "forward",
//                     "substitution": {"x": "y*z"},
//                     "left_context": "...", "right_context": "...", "remainder": "..."}],
//          "end": "y*z + y*z*y*z"}
// Context and remainder fields are optional. Terms use the identity
// grammar's term syntax. Malformed documents throw DerivationError.

AxiomSet axioms_from_json(std::string_view text);
std::string to_json(const AxiomSet& sigma);
DerivationChain chain_from_json(std::string_view text);
std::string to_json(const DerivationChain& chain);

}  // namespace aisr
