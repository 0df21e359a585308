#include "aisr/deciders.hpp"

#include <algorithm>
#include <sstream>

namespace aisr {

namespace {

// Words as variable indices into a fixed variable order.
using CompiledTerm = std::vector<std::vector<std::size_t>>;

CompiledTerm compile(const Term& t, const std::vector<Variable>& vars) {
  CompiledTerm out;
  for (const auto& w : t.words()) {
    auto& cw = out.emplace_back();
    for (const auto& x : w.letters())
      cw.push_back(static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), x) -
                                            vars.begin()));
  }
  return out;
}

Element eval(const CompiledTerm& t, const FiniteSemiring& s, const std::vector<Element>& digits) {
  Element sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Element prod = digits[t[i][0]];
    for (std::size_t j = 1; j < t[i].size(); ++j) prod = s.mul(prod, digits[t[i][j]]);
    sum = i == 0 ? prod : s.add(sum, prod);
  }
  return sum;
}

bool is_subset(const VarSet& small, const VarSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string component_text(const Component& c) { return to_string(c.identity()); }

Verdict combine(std::vector<ComponentOutcome> outcomes) {
  Verdict v;
  for (const auto& o : outcomes)
    if (!o.holds && v.holds) {
      v.holds = false;
      v.reason = "component " + component_text(o.component) + " fails: " + o.detail;
    }
  if (v.holds) v.reason = "all " + std::to_string(outcomes.size()) + " components hold";
  v.components = std::move(outcomes);
  return v;
}

// First member of the symmetric difference of two canonical families.
std::optional<VarSet> separating_set(const DeltaFamily& a, const DeltaFamily& b) {
  for (const auto& z : a)
    if (std::find(b.begin(), b.end(), z) == b.end()) return z;
  for (const auto& z : b)
    if (std::find(a.begin(), a.end(), z) == a.end()) return z;
  return std::nullopt;
}

}  // namespace

Verdict holds_bruteforce(const FiniteSemiring& s, const Identity& id, std::uint64_t cap) {
  const auto vs = content(id);
  const std::vector<Variable> vars(vs.begin(), vs.end());
  const std::uint64_t n = s.size();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > cap / n) {
      throw SizeError("brute force needs " + std::to_string(n) + "^" +
                      std::to_string(vars.size()) + " assignments, cap is " + std::to_string(cap));
    }
    total *= n;
  }
  if (total > cap)
    throw SizeError("brute force needs " + std::to_string(total) + " assignments, cap is " +
                    std::to_string(cap));

  const auto lhs = compile(id.lhs(), vars);
  const auto rhs = compile(id.rhs(), vars);
  std::vector<Element> digits(vars.size(), 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    const Element l = eval(lhs, s, digits);
    const Element r = eval(rhs, s, digits);
    if (l != r) {
      Verdict v;
      v.holds = false;
      Assignment asg;
      for (std::size_t i = 0; i < vars.size(); ++i) asg.emplace(vars[i], digits[i]);
      v.reason = "lhs = " + s.name(l) + ", rhs = " + s.name(r) + " under " + to_string(asg, s);
      v.witness = std::move(asg);
      return v;
    }
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < n) break;
      digits[i] = 0;
    }
  }
  Verdict v;
  v.reason = "all " + std::to_string(total) + " assignments agree";
  return v;
}

Decider oracle(FiniteSemiring s, std::uint64_t cap) {
  return [s = std::move(s), cap](const Identity& id) { return holds_bruteforce(s, id, cap); };
}

Verdict holds_d2(const Identity& id) {
  std::vector<ComponentOutcome> outcomes;
  for (auto& c : decompose(id)) {
    const auto cq = content(c.added);
    ComponentOutcome o{c, false, ""};
    for (const auto& w : c.base.words()) {
      if (is_subset(content(w), cq)) {
        o.holds = true;
        o.detail = "c(" + to_string(w) + ") ⊆ " + to_string(cq);
        break;
      }
    }
    if (!o.holds) o.detail = "no word has content inside " + to_string(cq);
    outcomes.push_back(std::move(o));
  }
  return combine(std::move(outcomes));
}

Verdict holds_s7(const Identity& id, std::size_t delta_cap) {
  Verdict v;
  const auto cl = content(id.lhs());
  const auto cr = content(id.rhs());
  if (cl != cr) {
    v.holds = false;
    v.reason = "content differs: " + to_string(cl) + " vs " + to_string(cr);
    return v;
  }
  const auto dl = delta_sets(id.lhs(), delta_cap);
  const auto dr = delta_sets(id.rhs(), delta_cap);
  if (auto z = separating_set(dl, dr)) {
    const bool in_lhs = std::find(dl.begin(), dl.end(), *z) != dl.end();
    v.holds = false;
    v.reason = "delta differs: " + to_string(*z) + " is in δ(" + (in_lhs ? "lhs" : "rhs") +
               ") only";
    return v;
  }
  v.reason = "equal content and δ = " + to_string(dl);
  return v;
}

Verdict holds_s0_lift(const Decider& base, const Identity& id) {
  std::vector<ComponentOutcome> outcomes;
  for (auto& c : decompose(id)) {
    ComponentOutcome o{c, false, ""};
    const auto reduced = filter_content_subset(c.base, c.added);
    if (reduced.empty()) {
      o.detail = "D_q(u) is empty";
    } else {
      const Term d(reduced, c.base.commutative());
      const Identity sub(d, d.plus(c.added));
      const auto bv = base(sub);
      o.holds = bv.holds;
      o.detail = (bv.holds ? "base holds " : "base fails ") + to_string(sub);
      if (!bv.holds && !bv.reason.empty()) o.detail += " (" + bv.reason + ")";
    }
    outcomes.push_back(std::move(o));
  }
  return combine(std::move(outcomes));
}

Verdict holds_s7_0(const Identity& id, S70Options options) {
  std::vector<ComponentOutcome> outcomes;
  for (auto& c : decompose(id)) {
    ComponentOutcome o{c, false, ""};
    const auto cq = content(c.added);
    if (c.trivial) {
      o.holds = true;
      o.detail = "q already occurs in u";
    } else if (options.shortcut && content(c.base) == cq &&
               delta_sets(c.base, options.delta_cap).empty()) {
      o.holds = true;
      o.detail = "c(u) = c(q) and δ(u) = ∅";
    } else {
      const auto reduced = filter_content_subset(c.base, c.added);
      if (reduced.empty()) {
        o.detail = "D_q(u) is empty";
      } else if (content(reduced) != cq) {
        o.detail = "c(D_q(u)) = " + to_string(content(reduced)) + " differs from c(q) = " +
                   to_string(cq);
      } else {
        auto with_q = reduced;
        with_q.insert(c.base.normalize(c.added));
        const auto d1 = delta_sets(reduced, options.delta_cap);
        const auto d2 = delta_sets(with_q, options.delta_cap);
        if (auto z = separating_set(d1, d2)) {
          o.detail = "δ(D_q(u)) = " + to_string(d1) + " differs from δ(D_q(u)+q) = " +
                     to_string(d2) + " at " + to_string(*z);
        } else {
          o.holds = true;
          o.detail = "D_q(u) = " + to_string(reduced) + " satisfies all three clauses";
        }
      }
    }
    outcomes.push_back(std::move(o));
  }
  return combine(std::move(outcomes));
}

std::optional<Decider> syntactic_decider(const FiniteSemiring& s) {
  for (const auto& name : builtin_names()) {
    const auto b = builtin(name);
    if (b.size() != s.size() || !is_isomorphic(b, s)) continue;
    if (name == "S7") return Decider([](const Identity& id) { return holds_s7(id); });
    if (name == "S7_0") return Decider([](const Identity& id) { return holds_s7_0(id); });
    if (name == "D2") return Decider(holds_d2);
    return Decider([](const Identity&) {
      Verdict v;
      v.reason = "every identity holds in the trivial semiring";
      return v;
    });
  }
  if (auto split = split_adjoined_zero(s)) {
    auto base = oracle(std::move(split->base));
    return Decider([base](const Identity& id) { return holds_s0_lift(base, id); });
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

IdentityGenerator::IdentityGenerator(const GeneratorConfig& config)
    : config_(config), rng_(config.seed) {
  if (config.max_vars == 0 || config.max_words == 0 || config.max_len == 0)
    throw std::invalid_argument("generator bounds must be positive");
}

std::uint64_t IdentityGenerator::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

Word IdentityGenerator::word(std::size_t vars) {
  std::vector<Variable> letters;
  const auto len = uniform(1, config_.max_len);
  for (std::uint64_t i = 0; i < len; ++i)
    letters.emplace_back("x" + std::to_string(uniform(1, vars)));
  return Word(std::move(letters));
}

Term IdentityGenerator::term(std::size_t vars) {
  WordSet words;
  const auto count = uniform(1, config_.max_words);
  for (std::uint64_t i = 0; i < count; ++i) words.insert(word(vars));
  return Term(std::move(words), config_.commutative);
}

Identity IdentityGenerator::next() {
  const auto vars = uniform(1, config_.max_vars);
  if (draws_++ % 2 == 0) {
    Term lhs = term(vars);
    return Identity(std::move(lhs), term(vars));
  }
  Term u = term(vars);
  return Identity(u, u.plus(word(vars)));
}

CrossValidationReport cross_validate(const Decider& syntactic, const Decider& reference,
                                     const GeneratorConfig& config) {
  CrossValidationReport report{config, 0, {}};
  IdentityGenerator gen(config);
  for (std::size_t i = 0; i < config.samples; ++i) {
    auto id = gen.next();
    const bool a = syntactic(id).holds;
    const bool b = reference(id).holds;
    if (b) ++report.holding;
    if (a != b) report.disagreements.push_back(Disagreement{std::move(id), a, b});
  }
  return report;
}

CrossValidationReport cross_validate(const FiniteSemiring& s, const Decider& syntactic,
                                     const GeneratorConfig& config) {
  return cross_validate(syntactic, oracle(s), config);
}

}  // namespace aisr
