#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "aisr/algebra.hpp"
#include "aisr/terms.hpp"

namespace aisr {

/// Outcome of one u ≈ u + q component under a syntactic criterion.
struct ComponentOutcome {
  Component component;
  bool holds;
  std::string detail;
};

struct Verdict {
  bool holds = true;
  /// Falsifying assignment; only the brute-force oracle produces one.
  std::optional<Assignment> witness;
  /// First failing clause, or a short note when the identity holds.
  std::string reason;
  /// Per-component outcomes for the deciders that work by decomposition.
  std::vector<ComponentOutcome> components;
};

using Decider = std::function<Verdict(const Identity&)>;

inline constexpr std::uint64_t kDefaultBruteForceCap = 100'000'000;

/// Evaluates both sides under every assignment of content(id) into s.
/// Assignments are enumerated as a mixed-radix counter over the variables
/// sorted by name (last variable fastest), digits in element order; the
/// first falsifying one is returned. Throws SizeError when
/// |s|^|content(id)| exceeds cap.
Verdict holds_bruteforce(const FiniteSemiring& s, const Identity& id,
                         std::uint64_t cap = kDefaultBruteForceCap);

Decider oracle(FiniteSemiring s, std::uint64_t cap = kDefaultBruteForceCap);

/// D2: u ≈ u + q holds iff some word of u has content inside c(q).
Verdict holds_d2(const Identity& id);

/// S7: c(u) = c(v) and δ(u) = δ(v).
Verdict holds_s7(const Identity& id, std::size_t delta_cap = kDefaultDeltaCap);

/// S^0 from a decider for S: u ≈ u + q holds in S^0 iff D_q(u) is nonempty
/// and D_q(u) ≈ D_q(u) + q holds in S.
Verdict holds_s0_lift(const Decider& base, const Identity& id);

struct S70Options {
  std::size_t delta_cap = kDefaultDeltaCap;
  /// Accept a component outright when c(u) = c(q) and δ(u) = ∅.
  bool shortcut = true;
};

/// S7^0: D_q(u) ≠ ∅, c(D_q(u)) = c(q) and δ(D_q(u)) = δ(D_q(u) + q).
Verdict holds_s7_0(const Identity& id, S70Options options = {});

/// Syntactic decider for a semiring: the built-ins (recognised up to
/// isomorphism) use their own criteria; any other algebra of the form T^0
/// uses the lift over brute force in T. Returns nothing otherwise.
std::optional<Decider> syntactic_decider(const FiniteSemiring& s);

// ---------------------------------------------------------------------------
// Random identities and cross-validation

struct GeneratorConfig {
  std::size_t samples = 10'000;
  std::uint64_t seed = 1;
  std::size_t max_vars = 4;
  std::size_t max_words = 4;
  std::size_t max_len = 4;
  bool commutative = false;
};

/// Seeded generator. Even draws are general identities u ≈ v, odd draws
/// have the decomposed shape u ≈ u + q; variable count, word count and
/// word length are uniform over their ranges. Variables are x1, x2, ...
class IdentityGenerator {
 public:
  explicit IdentityGenerator(const GeneratorConfig& config);

  Identity next();
  Term term(std::size_t vars);
  Word word(std::size_t vars);
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);  // inclusive

 private:
  GeneratorConfig config_;
  std::mt19937_64 rng_;
  std::uint64_t draws_ = 0;
};

struct Disagreement {
  Identity identity;
  bool syntactic;
  bool oracle;
};

struct CrossValidationReport {
  GeneratorConfig config;
  std::size_t holding = 0;  // identities the oracle accepted
  std::vector<Disagreement> disagreements;
};

CrossValidationReport cross_validate(const Decider& syntactic, const Decider& reference,
                                     const GeneratorConfig& config);

/// Syntactic decider against holds_bruteforce in s.
CrossValidationReport cross_validate(const FiniteSemiring& s, const Decider& syntactic,
                                     const GeneratorConfig& config);

}  // namespace aisr
