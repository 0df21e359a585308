// Acceptance suite. One line per criterion; exit status is nonzero when any
// criterion fails. All checks are exact (tolerance 0); runtimes are checked
// against the per-criterion budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "aisr/algebra.hpp"
#include "aisr/deciders.hpp"
#include "aisr/derivation.hpp"
#include "aisr/graphs.hpp"
#include "aisr/syntax.hpp"
#include "aisr/witness.hpp"
#include "test_support.hpp"

using namespace aisr;
namespace t = aisr::testing;

namespace {

// Collects failures for one criterion.
struct Probe {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.tellp() > 0) notes << "; ";
    notes << what;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Probe&)>& body) {
  Probe p;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(p);
  } catch (const std::exception& e) {
    p.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) p.expect(secs < budget_s, "over time budget");
  if (!p.ok) ++failures;
  std::printf("criterion %d: %s  %s  [%.3fs", id, p.ok ? "PASS" : "FAIL", title, secs);
  if (budget_s > 0) std::printf(" / budget %.0fs", budget_s);
  std::printf("]");
  if (!p.ok) std::printf("  -- %s", p.notes.str().c_str());
  std::printf("\n");
  std::fflush(stdout);
}

Identity I(const char* text) { return parse_identity(text); }

const char* S7_ADD[3][3] = {{"1", "0", "0"}, {"0", "a", "0"}, {"0", "0", "0"}};
const char* S7_MUL[3][3] = {{"1", "a", "0"}, {"a", "0", "0"}, {"0", "0", "0"}};
const char* S70_ADD[4][4] = {
    {"1", "0", "0", "1"}, {"0", "a", "0", "a"}, {"0", "0", "0", "0"}, {"1", "a", "0", "∞"}};
const char* S70_MUL[4][4] = {
    {"1", "a", "0", "∞"}, {"a", "0", "0", "∞"}, {"0", "0", "0", "∞"}, {"∞", "∞", "∞", "∞"}};

template <std::size_t N>
bool matches(const FiniteSemiring& s, const char* const (&names)[N], const char* const (&add)[N][N],
             const char* const (&mul)[N][N]) {
  if (s.size() != N) return false;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const auto a = s.index_of(names[i]), b = s.index_of(names[j]);
      if (s.name(s.add(a, b)) != add[i][j] || s.name(s.mul(a, b)) != mul[i][j]) return false;
    }
  return true;
}

std::string count_report(std::size_t disagreements, std::size_t holding, std::size_t samples) {
  return std::to_string(disagreements) + " disagreements (" + std::to_string(holding) + "/" +
         std::to_string(samples) + " hold)";
}

}  // namespace

int main() {
  criterion(1, "built-in Cayley tables, S7^0 = adjoin_zero(S7), S7^0/rho = D2", 1, [](Probe& p) {
    const char* n3[] = {"1", "a", "0"};
    const char* n4[] = {"1", "a", "0", "∞"};
    const auto s7 = builtin("S7"), s70 = builtin("S7_0");
    p.expect(matches(s7, n3, S7_ADD, S7_MUL), "S7 tables differ");
    p.expect(matches(s70, n4, S70_ADD, S70_MUL), "S7_0 tables differ");
    p.expect(is_isomorphic(adjoin_zero(s7, "∞"), s70), "adjoin_zero(S7) not isomorphic to S7_0");
    auto rho = validate_congruence(s70, std::vector<std::vector<std::string>>{{"1", "a", "0"}, {"∞"}});
    p.expect(rho.ok(), "{{1,a,0},{∞}} is not a congruence");
    if (rho.ok()) p.expect(is_isomorphic(quotient(s70, *rho.congruence), builtin("D2")), "quotient is not D2");
  });

  criterion(2, "separating identities, syntactic and oracle agree", 1, [](Probe& p) {
    struct Row {
      const char* identity;
      const char* algebra;
      bool holds;
    };
    const Row rows[] = {
        {"x^2 + y == x^2*y^2", "S7", true},       {"x^2 + y == x^2*y^2", "D2", false},
        {"x^2 + y == x^2*y^2", "S7_0", false},    {"x^2 + y == x^2 + y + y^2", "S7", true},
        {"x^2 + y == x^2 + y + y^2", "D2", true}, {"x^2 + y == x^2 + y + y^2", "S7_0", false},
    };
    for (const auto& r : rows) {
      const auto s = builtin(r.algebra);
      const auto id = I(r.identity);
      const auto dec = syntactic_decider(s);
      const bool syn = (*dec)(id).holds;
      const bool orc = holds_bruteforce(s, id).holds;
      const std::string where = std::string(r.identity) + " in " + r.algebra;
      p.expect(syn == r.holds, where + ": syntactic decider wrong");
      p.expect(orc == r.holds, where + ": oracle wrong");
    }
  });

  criterion(3, "witness family n = 1..8, oracle for n = 1..3", 10, [](Probe& p) {
    for (std::size_t n = 1; n <= 8; ++n) {
      WitnessOptions opt;
      opt.oracle = n <= 3;
      const auto r = check_witness_facts(make_witness(n), opt);
      for (const char* name : {"content", "delta", "s7_0", "odd_cycle"}) {
        const auto* c = r.find(name);
        p.expect(c && c->status == CheckStatus::Pass, "n=" + std::to_string(n) + " " + name);
      }
      if (n <= 3) {
        const auto* c = r.find("oracle");
        p.expect(c && c->status == CheckStatus::Pass, "n=" + std::to_string(n) + " oracle");
      }
    }
  });

  criterion(4, "cross-validation, 10000 identities per algebra", 60, [](Probe& p) {
    struct Case {
      const char* label;
      FiniteSemiring algebra;
      Decider decider;
      std::size_t max_vars;
    };
    const Decider s7_oracle = oracle(builtin("S7"));
    const std::vector<Case> cases = {
        {"D2", builtin("D2"), [](const Identity& id) { return holds_d2(id); }, 4},
        {"S7", builtin("S7"), [](const Identity& id) { return holds_s7(id); }, 4},
        {"S7_0", builtin("S7_0"), [](const Identity& id) { return holds_s7_0(id); }, 3},
        {"adjoin_zero(S7) via lift", adjoin_zero(builtin("S7"), "e"),
         [s7_oracle](const Identity& id) { return holds_s0_lift(s7_oracle, id); }, 4},
    };
    for (const auto& c : cases) {
      GeneratorConfig cfg;
      cfg.samples = 10'000;
      cfg.seed = 2024;
      cfg.max_vars = c.max_vars;
      const auto r = cross_validate(c.algebra, c.decider, cfg);
      p.expect(r.disagreements.empty(),
               std::string(c.label) + ": " + count_report(r.disagreements.size(), r.holding, cfg.samples));
    }
  });

  criterion(5, "lift of the trivial algebra equals the D2 criterion", 0, [](Probe& p) {
    const Decider trivial = oracle(builtin("trivial"));
    GeneratorConfig cfg;
    cfg.samples = 10'000;
    cfg.seed = 2025;
    const auto r = cross_validate([&](const Identity& id) { return holds_s0_lift(trivial, id); },
                                  [](const Identity& id) { return holds_d2(id); }, cfg);
    p.expect(r.disagreements.empty(), count_report(r.disagreements.size(), r.holding, cfg.samples));
  });

  criterion(6, "axiom conditions on u(1), a path and x + x^2*y", 1, [](Probe& p) {
    const auto r1 = check_axiom_conditions(make_witness(1).u);
    p.expect(!r1.no_odd_cycle, "u(1) passes (d)");
    p.expect(r1.odd_cycle && r1.odd_cycle->size() == 3, "u(1) cycle is not of length 3");

    const auto r2 = check_axiom_conditions(parse_term("x1*x2 + x2*x3 + x3*x4", true));
    p.expect(r2.all_conditions(), "path fails (a)-(d)");
    p.expect(!r2.delta.empty(), "path has empty delta");

    const auto r3 = check_axiom_conditions(parse_term("x + x^2*y", true));
    p.expect(!r3.antichain, "x + x^2*y passes (c)");
  });

  criterion(7, "bipartite terms have delta, odd-cycle terms do not (1000 each)", 0, [](Probe& p) {
    std::mt19937_64 rng(7);
    std::size_t bad_bip = 0, bad_odd = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto a = t::random_bipartite_term(rng, t::pick(rng, 2, 10), t::pick(rng, 0, 2));
      const auto cond = check_axiom_conditions(a);
      const auto g = term_graph(a);
      const bool shaped = cond.short_words && cond.linear && cond.antichain && odd_cycle(g).bipartite() &&
                          connected_components(g).size() == 1;
      p.expect(shaped, "generator produced a term outside the class");
      if (delta_sets(a).empty()) ++bad_bip;
    }
    for (int i = 0; i < 1000; ++i) {
      const auto a = t::random_odd_cycle_term(rng, 2 * t::pick(rng, 1, 5) + 1);
      p.expect(!odd_cycle(term_graph(a)).bipartite(), "generator produced a bipartite term");
      if (!delta_sets(a).empty()) ++bad_odd;
    }
    p.expect(bad_bip == 0, std::to_string(bad_bip) + " bipartite terms with empty delta");
    p.expect(bad_odd == 0, std::to_string(bad_odd) + " odd-cycle terms with nonempty delta");
  });

  criterion(8, "derivation chain, soundness on 1000 steps, search", 30, [](Probe& p) {
    AxiomSet sigma;
    sigma.add("ax1", I("x == x + x^2"));
    const Variable x("x");

    DerivationChain chain{parse_term("x*y"), {}, parse_term("x*y + x*y*x*y + x*y*x*y*x*y*x*y")};
    DerivationStep s1;
    s1.axiom = "ax1";
    s1.phi = {{x, parse_term("x*y")}};
    DerivationStep s2 = s1;
    s2.phi = {{x, parse_term("x*y*x*y")}};
    s2.remainder = WordSet{parse_word("x*y")};
    chain.steps = {s1, s2};
    p.expect(verify_chain(chain, sigma).accepted, "2-step chain rejected");

    // Random axiom sets drawn from identities the model satisfies.
    std::mt19937_64 rng(8);
    std::size_t violations = 0;
    for (const char* name : {"S7", "D2"}) {
      const auto algebra = builtin(name);
      GeneratorConfig cfg;
      cfg.seed = 88;
      cfg.max_vars = 2;
      cfg.max_words = 2;
      cfg.max_len = 3;
      IdentityGenerator gen(cfg);
      std::vector<Identity> pool;
      while (pool.size() < 40) {
        auto id = gen.next();
        if (id.lhs() != id.rhs() && holds_bruteforce(algebra, id).holds) pool.push_back(id);
      }
      for (int k = 0; k < 500; ++k) {
        AxiomSet ax;
        const auto count = t::pick(rng, 1, 3);
        for (std::size_t j = 0; j < count; ++j)
          ax.add("a" + std::to_string(j), pool[t::pick(rng, 0, pool.size() - 1)]);
        const auto st = t::random_step(rng, ax, false);
        const auto src = step_source(st, ax, false);
        const auto r = apply_step(src, st, ax);
        if (!r.ok() || !holds_bruteforce(algebra, Identity(src, *r.term)).holds) ++violations;
      }
    }
    p.expect(violations == 0, std::to_string(violations) + " unsound steps");

    const auto found = search_derivation(sigma, I("x*y == x*y + x*y*x*y"));
    p.expect(found.outcome == SearchOutcome::Found && found.chain && found.chain->steps.size() == 1,
             "depth-1 derivation not found");
    const auto none = search_derivation(AxiomSet(), I("x == x + x^2"));
    p.expect(none.outcome == SearchOutcome::NoDerivationWithinBounds && !none.chain,
             "empty axiom set did not report absence within bounds");
  });

  criterion(9, "every single-cell mutation of the S7 addition table is rejected", 0, [](Probe& p) {
    const auto s7 = builtin("S7");
    std::size_t mutations = 0, accepted = 0;
    for (Element r = 0; r < 3; ++r)
      for (Element c = 0; c < 3; ++c)
        for (Element v = 0; v < 3; ++v) {
          if (v == s7.add(r, c)) continue;
          Table add = s7.add_table();
          add[r][c] = v;
          ++mutations;
          const auto res = validate_ai_semiring(s7.elements(), add, s7.mul_table());
          if (res.ok() && is_isomorphic(*res.semiring, s7)) ++accepted;
        }
    p.expect(mutations == 18, "expected 18 mutations, got " + std::to_string(mutations));
    p.expect(accepted == 0, std::to_string(accepted) + " mutations accepted as S7");
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
