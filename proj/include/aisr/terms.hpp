#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aisr/algebra.hpp"

namespace aisr {

/// Errors in building or applying terms: empty words or terms, mixed
/// commutativity conventions, substitutions or assignments that miss a
/// variable.
class TermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_identifier(std::string_view s);

/// A variable, identified by its name ([A-Za-z][A-Za-z0-9_]*).
class Variable {
 public:
  explicit Variable(std::string name);
  const std::string& name() const { return name_; }

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;

 private:
  std::string name_;
};

using VarSet = std::set<Variable>;

/// Element of the free semigroup: a nonempty sequence of variables.
/// Ordered by length first, then lexicographically by letters.
class Word {
 public:
  explicit Word(std::vector<Variable> letters);
  Word(std::initializer_list<Variable> letters) : Word(std::vector<Variable>(letters)) {}

  const std::vector<Variable>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  /// Letters sorted by name: the representative in the free commutative
  /// semigroup.
  Word sorted() const;
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Variable> letters_;
};

/// Possibly empty set of words; the result type of the D_q / D_Z filters.
using WordSet = std::set<Word>;

/// Element of P_f(X+): a nonempty finite set of words. In commutative
/// mode every word is stored sorted, so words equal up to letter order
/// coincide.
class Term {
 public:
  Term(WordSet words, bool commutative = false);
  Term(std::initializer_list<Word> words, bool commutative = false)
      : Term(WordSet(words), commutative) {}

  const WordSet& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool commutative() const { return commutative_; }
  bool contains(const Word& w) const;

  /// Word in this term's convention (sorted when commutative).
  Word normalize(const Word& w) const { return commutative_ ? w.sorted() : w; }

  Term plus(const Word& w) const;
  Term plus(const WordSet& ws) const;
  Term operator+(const Term& rhs) const;
  /// Set product: every concatenation of a word of *this with a word of rhs.
  Term operator*(const Term& rhs) const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  WordSet words_;
  bool commutative_ = false;
};

/// u ≈ v. Both sides share the commutativity flag.
class Identity {
 public:
  Identity(Term lhs, Term rhs);
  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  bool commutative() const { return lhs_.commutative(); }

  friend bool operator==(const Identity&, const Identity&) = default;

 private:
  Term lhs_;
  Term rhs_;
};

using Substitution = std::map<Variable, Term>;
using Assignment = std::map<Variable, Element>;

// ---------------------------------------------------------------------------
// Statistics

VarSet content(const Word& w);
VarSet content(const WordSet& ws);
VarSet content(const Term& t);
VarSet content(const Identity& id);

std::size_t occurrences(const Variable& x, const Word& w);
bool is_linear(const Word& w);

// ---------------------------------------------------------------------------
// δ-sets

inline constexpr std::size_t kDefaultDeltaCap = 20;

/// Family of variable sets in canonical order: by size, then
/// lexicographically. Two families are equal iff their vectors are.
using DeltaFamily = std::vector<VarSet>;

void canonicalize(DeltaFamily& family);

/// All nonempty Z ⊆ c(u) meeting every word ω of u in exactly one
/// variable x, with occ(x, ω) = 1. Throws SizeError when |c(u)| > cap.
DeltaFamily delta_sets(const WordSet& u, std::size_t cap = kDefaultDeltaCap);
inline DeltaFamily delta_sets(const Term& u, std::size_t cap = kDefaultDeltaCap) {
  return delta_sets(u.words(), cap);
}

// ---------------------------------------------------------------------------
// Filters

/// D_q(u): words of u whose content lies inside c(q).
WordSet filter_content_subset(const Term& u, const Word& q);
/// D_Z(u): words of u whose content avoids Z.
WordSet filter_content_avoiding(const Term& u, const VarSet& z);

// ---------------------------------------------------------------------------
// Substitution and evaluation

/// Homomorphic image of t. Throws TermError for variables outside the
/// domain of phi. The result follows t's commutativity convention.
Term substitute(const Substitution& phi, const Term& t);
Term substitute(const Substitution& phi, const Word& w, bool commutative);

/// Words multiply left to right; the term is the sum of its words.
/// Throws TermError when asg misses a variable.
Element evaluate(const Word& w, const FiniteSemiring& s, const Assignment& asg);
Element evaluate(const Term& t, const FiniteSemiring& s, const Assignment& asg);

// ---------------------------------------------------------------------------
// Decomposition into u ≈ u + q components

struct Component {
  Term base;
  Word added;
  bool trivial;  // added already belongs to base

  Identity identity() const { return Identity(base, base.plus(added)); }
};

/// u ≈ v becomes u ≈ u + v_j for each word v_j of v, then v ≈ v + u_i for
/// each word u_i of u. Trivial components are kept and flagged.
std::vector<Component> decompose(const Identity& id);

// ---------------------------------------------------------------------------
// Printing. Runs of a repeated variable print as powers, so the output is
// accepted by the parser in syntax.hpp.

std::string to_string(const Variable& x);
std::string to_string(const Word& w);
std::string to_string(const WordSet& ws);
std::string to_string(const Term& t);
std::string to_string(const Identity& id);
std::string to_string(const VarSet& z);
std::string to_string(const DeltaFamily& family);
std::string to_string(const Assignment& asg, const FiniteSemiring& s);

}  // namespace aisr
