#include "aisr/terms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <sstream>

namespace aisr {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Variable::Variable(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) throw TermError("'" + name_ + "' is not a valid variable name");
}

// ---------------------------------------------------------------------------

Word::Word(std::vector<Variable> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw TermError("words must be nonempty");
}

Word Word::sorted() const {
  auto letters = letters_;
  std::sort(letters.begin(), letters.end());
  return Word(std::move(letters));
}

Word Word::operator*(const Word& rhs) const {
  auto letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(letters));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

// ---------------------------------------------------------------------------

namespace {

WordSet normalized(const WordSet& ws, bool commutative) {
  if (!commutative) return ws;
  WordSet out;
  for (const auto& w : ws) out.insert(w.sorted());
  return out;
}

}  // namespace

Term::Term(WordSet words, bool commutative)
    : words_(normalized(words, commutative)), commutative_(commutative) {
  if (words_.empty()) throw TermError("terms must contain at least one word");
}

bool Term::contains(const Word& w) const { return words_.count(normalize(w)) > 0; }

Term Term::plus(const Word& w) const {
  auto words = words_;
  words.insert(w);
  return Term(std::move(words), commutative_);
}

Term Term::plus(const WordSet& ws) const {
  auto words = words_;
  words.insert(ws.begin(), ws.end());
  return Term(std::move(words), commutative_);
}

Term Term::operator+(const Term& rhs) const {
  if (rhs.commutative_ != commutative_) throw TermError("mixed commutativity conventions");
  return plus(rhs.words_);
}

Term Term::operator*(const Term& rhs) const {
  if (rhs.commutative_ != commutative_) throw TermError("mixed commutativity conventions");
  WordSet out;
  for (const auto& a : words_)
    for (const auto& b : rhs.words_) out.insert(a * b);
  return Term(std::move(out), commutative_);
}

Identity::Identity(Term lhs, Term rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (lhs_.commutative() != rhs_.commutative())
    throw TermError("both sides of an identity must share the commutativity convention");
}

// ---------------------------------------------------------------------------

VarSet content(const Word& w) { return VarSet(w.letters().begin(), w.letters().end()); }

VarSet content(const WordSet& ws) {
  VarSet out;
  for (const auto& w : ws) out.insert(w.letters().begin(), w.letters().end());
  return out;
}

VarSet content(const Term& t) { return content(t.words()); }

VarSet content(const Identity& id) {
  auto out = content(id.lhs());
  auto rhs = content(id.rhs());
  out.insert(rhs.begin(), rhs.end());
  return out;
}

std::size_t occurrences(const Variable& x, const Word& w) {
  return static_cast<std::size_t>(std::count(w.letters().begin(), w.letters().end(), x));
}

bool is_linear(const Word& w) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [&](const Variable& x) { return occurrences(x, w) == 1; });
}

// ---------------------------------------------------------------------------

void canonicalize(DeltaFamily& family) {
  std::sort(family.begin(), family.end(), [](const VarSet& a, const VarSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

DeltaFamily delta_sets(const WordSet& u, std::size_t cap) {
  const auto vars = content(u);
  if (vars.size() > cap)
    throw SizeError("delta_sets: term has " + std::to_string(vars.size()) +
                    " variables, cap is " + std::to_string(cap));
  if (vars.size() > 63) throw SizeError("delta_sets: at most 63 variables are supported");

  const std::vector<Variable> index(vars.begin(), vars.end());
  auto bit = [&](const Variable& x) {
    return std::uint64_t{1} << (std::lower_bound(index.begin(), index.end(), x) - index.begin());
  };
  struct Mask {
    std::uint64_t content = 0;
    std::uint64_t once = 0;
  };
  std::vector<Mask> masks;
  for (const auto& w : u) {
    Mask m;
    for (const auto& x : content(w)) {
      m.content |= bit(x);
      if (occurrences(x, w) == 1) m.once |= bit(x);
    }
    masks.push_back(m);
  }

  DeltaFamily family;
  const std::uint64_t limit = std::uint64_t{1} << index.size();
  for (std::uint64_t z = 1; z < limit; ++z) {
    bool ok = true;
    for (const auto& m : masks) {
      const std::uint64_t hit = z & m.content;
      if (!std::has_single_bit(hit) || !(hit & m.once)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    VarSet members;
    for (std::size_t i = 0; i < index.size(); ++i)
      if (z >> i & 1) members.insert(index[i]);
    family.push_back(std::move(members));
  }
  canonicalize(family);
  return family;
}

// ---------------------------------------------------------------------------

WordSet filter_content_subset(const Term& u, const Word& q) {
  const auto cq = content(q);
  WordSet out;
  for (const auto& w : u.words()) {
    const auto cw = content(w);
    if (std::includes(cq.begin(), cq.end(), cw.begin(), cw.end())) out.insert(w);
  }
  return out;
}

WordSet filter_content_avoiding(const Term& u, const VarSet& z) {
  WordSet out;
  for (const auto& w : u.words()) {
    const bool avoids = std::none_of(w.letters().begin(), w.letters().end(),
                                     [&](const Variable& x) { return z.count(x) > 0; });
    if (avoids) out.insert(w);
  }
  return out;
}

// ---------------------------------------------------------------------------

Term substitute(const Substitution& phi, const Word& w, bool commutative) {
  auto image = [&](const Variable& x) -> const Term& {
    auto it = phi.find(x);
    if (it == phi.end()) throw TermError("substitution does not map variable " + x.name());
    return it->second;
  };
  WordSet acc = image(w.letters().front()).words();
  for (std::size_t i = 1; i < w.length(); ++i) {
    WordSet next;
    for (const auto& a : acc)
      for (const auto& b : image(w.letters()[i]).words()) next.insert(a * b);
    acc = std::move(next);
  }
  return Term(std::move(acc), commutative);
}

Term substitute(const Substitution& phi, const Term& t) {
  WordSet out;
  for (const auto& w : t.words()) {
    auto img = substitute(phi, w, t.commutative());
    out.insert(img.words().begin(), img.words().end());
  }
  return Term(std::move(out), t.commutative());
}

Element evaluate(const Word& w, const FiniteSemiring& s, const Assignment& asg) {
  auto value = [&](const Variable& x) {
    auto it = asg.find(x);
    if (it == asg.end()) throw TermError("assignment does not cover variable " + x.name());
    if (it->second >= s.size()) throw TermError("assignment value out of range");
    return it->second;
  };
  Element acc = value(w.letters().front());
  for (std::size_t i = 1; i < w.length(); ++i) acc = s.mul(acc, value(w.letters()[i]));
  return acc;
}

Element evaluate(const Term& t, const FiniteSemiring& s, const Assignment& asg) {
  auto it = t.words().begin();
  Element acc = evaluate(*it, s, asg);
  for (++it; it != t.words().end(); ++it) acc = s.add(acc, evaluate(*it, s, asg));
  return acc;
}

// ---------------------------------------------------------------------------

std::vector<Component> decompose(const Identity& id) {
  std::vector<Component> out;
  for (const auto& v : id.rhs().words())
    out.push_back(Component{id.lhs(), v, id.lhs().contains(v)});
  for (const auto& u : id.lhs().words())
    out.push_back(Component{id.rhs(), u, id.rhs().contains(u)});
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const Variable& x) { return x.name(); }

std::string to_string(const Word& w) {
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!out.empty()) out += '*';
    out += ls[i].name();
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string to_string(const WordSet& ws) {
  if (ws.empty()) return "∅";
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += " + ";
    out += to_string(w);
  }
  return out;
}

std::string to_string(const Term& t) { return to_string(t.words()); }

std::string to_string(const Identity& id) {
  return to_string(id.lhs()) + " == " + to_string(id.rhs());
}

std::string to_string(const VarSet& z) {
  std::string out = "{";
  for (const auto& x : z) {
    if (out.size() > 1) out += ',';
    out += x.name();
  }
  return out + "}";
}

std::string to_string(const DeltaFamily& family) {
  if (family.empty()) return "∅";
  std::string out;
  for (const auto& z : family) {
    if (!out.empty()) out += "; ";
    out += to_string(z);
  }
  return out;
}

std::string to_string(const Assignment& asg, const FiniteSemiring& s) {
  std::string out;
  for (const auto& [x, e] : asg) {
    if (!out.empty()) out += ", ";
    out += x.name() + "=" + s.name(e);
  }
  return out;
}

}  // namespace aisr
