#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aisr {

using Element = std::size_t;
using Table = std::vector<std::vector<Element>>;

/// Malformed input: ragged tables, out-of-range cells, duplicate names.
/// Kept apart from axiom violations, which are reported as values.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration would exceed a configured size cap.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axiom {
  AddCommutative,
  AddIdempotent,
  AddAssociative,
  MulAssociative,
  LeftDistributive,   // a(b+c) = ab+ac
  RightDistributive,  // (a+b)c = ac+bc
};

std::string_view axiom_name(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  Element a = 0;
  Element b = 0;
  Element c = 0;  // unused by the two-variable axioms
};

/// Finite additively idempotent semiring given by its Cayley tables.
/// Instances only come out of validate_ai_semiring (directly or through
/// the constructions below), so every value satisfies the axioms.
class FiniteSemiring {
 public:
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(Element e) const { return elements_.at(e); }
  std::optional<Element> find(std::string_view name) const;
  Element index_of(std::string_view name) const;  // throws StructureError

  Element add(Element a, Element b) const { return add_[a][b]; }
  Element mul(Element a, Element b) const { return mul_[a][b]; }
  const Table& add_table() const { return add_; }
  const Table& mul_table() const { return mul_; }

  friend bool operator==(const FiniteSemiring&, const FiniteSemiring&) = default;

 private:
  friend struct SemiringBuilder;
  FiniteSemiring(std::vector<std::string> elements, Table add, Table mul)
      : elements_(std::move(elements)), add_(std::move(add)), mul_(std::move(mul)) {}

  std::vector<std::string> elements_;
  Table add_;
  Table mul_;
};

struct ValidationResult {
  std::vector<std::string> elements;  // as supplied, for naming violations
  std::optional<FiniteSemiring> semiring;
  std::optional<AxiomViolation> violation;

  bool ok() const { return semiring.has_value(); }
};

/// Checks totality structurally (throws StructureError), then scans every
/// triple for the ai-semiring axioms in the order of the Axiom enum and
/// reports the first failure.
ValidationResult validate_ai_semiring(std::vector<std::string> elements, Table add, Table mul);

/// Like validate_ai_semiring but throws StructureError on a violation.
FiniteSemiring make_semiring(std::vector<std::string> elements, Table add, Table mul);

std::string describe(const std::vector<std::string>& elements, const AxiomViolation& v);

/// S^0: adjoins an element that is an additive identity and a
/// multiplicative zero. The new element is appended last.
FiniteSemiring adjoin_zero(const FiniteSemiring& s, std::string zero_name);

/// If `s` is T^0 for some subalgebra T (an element z with z+x = x,
/// zx = xz = z, and the rest closed under both operations), returns the
/// index of z and T. Returns nothing for the trivial semiring.
struct ZeroSplit {
  Element zero;
  FiniteSemiring base;
};
std::optional<ZeroSplit> split_adjoined_zero(const FiniteSemiring& s);

// ---------------------------------------------------------------------------
// Congruences and quotients

class Congruence {
 public:
  using Block = std::vector<Element>;
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_of(Element e) const { return block_of_.at(e); }

 private:
  friend struct CongruenceBuilder;
  std::vector<Block> blocks_;  // each sorted, ordered by smallest member
  std::vector<std::size_t> block_of_;
};

/// (a, a') and (b, b') related but (a op b, a' op b') not.
struct CongruenceViolation {
  bool multiplicative;
  Element a, a_prime, b, b_prime;
};

struct CongruenceResult {
  std::optional<Congruence> congruence;
  std::optional<CongruenceViolation> violation;

  bool ok() const { return congruence.has_value(); }
};

/// Throws StructureError when `partition` is not a partition of the carrier.
CongruenceResult validate_congruence(const FiniteSemiring& s,
                                     const std::vector<std::vector<Element>>& partition);

/// Element names given by name rather than index.
CongruenceResult validate_congruence(const FiniteSemiring& s,
                                     const std::vector<std::vector<std::string>>& partition);

std::string describe(const FiniteSemiring& s, const CongruenceViolation& v);

/// Blocks become elements named "{a,b,...}" in block order.
FiniteSemiring quotient(const FiniteSemiring& s, const Congruence& rho);

Congruence identity_congruence(const FiniteSemiring& s);

// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultIsomorphismCap = 8;

/// Returns a bijection f (f[i] is the image in `t` of element i of `s`)
/// transporting both tables, or nothing. Exhaustive over permutations.
std::optional<std::vector<Element>> find_isomorphism(const FiniteSemiring& s,
                                                     const FiniteSemiring& t,
                                                     std::size_t cap = kDefaultIsomorphismCap);

inline bool is_isomorphic(const FiniteSemiring& s, const FiniteSemiring& t,
                          std::size_t cap = kDefaultIsomorphismCap) {
  return find_isomorphism(s, t, cap).has_value();
}

/// "S7", "S7_0", "D2" or "trivial". Throws std::invalid_argument otherwise.
FiniteSemiring builtin(std::string_view name);
std::vector<std::string> builtin_names();

// ---------------------------------------------------------------------------
// JSON file format: {"elements": [...], "add": [[...]], "mul": [[...]]}
// with table entries given by element name, row = left operand.

std::string to_json(const FiniteSemiring& s);

/// Parses the document and validates it. Structural problems (bad JSON,
/// unknown names, ragged tables) throw StructureError; axiom failures come
/// back in the result.
ValidationResult semiring_from_json(std::string_view text);

}  // namespace aisr
