#include <doctest.h>

#include "aisr/syntax.hpp"
#include "aisr/terms.hpp"
#include "test_support.hpp"

using namespace aisr;
using aisr::testing::delta_by_propagation;

namespace {

Term T(const char* text, bool comm = false) { return parse_term(text, comm); }
Variable V(const char* n) { return Variable(n); }

DeltaFamily family(std::initializer_list<std::initializer_list<const char*>> sets) {
  DeltaFamily f;
  for (auto s : sets) {
    VarSet z;
    for (auto n : s) z.insert(Variable(n));
    f.push_back(z);
  }
  canonicalize(f);
  return f;
}

// Every assignment of vars into s, last variable fastest.
template <class F>
void for_each_assignment(const VarSet& vars, const FiniteSemiring& s, F&& f) {
  std::vector<Variable> vs(vars.begin(), vars.end());
  std::vector<Element> digits(vs.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < vs.size(); ++i) a.emplace(vs[i], digits[i]);
    f(a);
    std::size_t i = vs.size();
    while (i > 0 && ++digits[i - 1] == s.size()) digits[--i] = 0;
    if (i == 0) return;
  }
}

}  // namespace

TEST_CASE("variables and words") {
  CHECK_THROWS_AS(Variable("1x"), TermError);
  CHECK_THROWS_AS(Variable(""), TermError);
  CHECK_NOTHROW(Variable("x_1"));
  CHECK_THROWS_AS(Word(std::vector<Variable>{}), TermError);
  CHECK_THROWS_AS(Term(WordSet{}), TermError);

  const Word xy{V("x"), V("y")}, yx{V("y"), V("x")}, z{V("z")};
  CHECK(z < xy);
  CHECK(xy < yx);
  CHECK(yx.sorted() == xy);
  CHECK((xy * z).length() == 3);
  CHECK(Term({xy, yx}, true).size() == 1);
  CHECK(Term({xy, yx}, false).size() == 2);
}

TEST_CASE("content, occurrences, linearity") {
  const Word w = parse_word("x^2*y*z");
  CHECK(content(w) == VarSet{V("x"), V("y"), V("z")});
  CHECK(occurrences(V("x"), w) == 2);
  CHECK(occurrences(V("w"), w) == 0);
  CHECK_FALSE(is_linear(w));
  CHECK(is_linear(parse_word("x*y*z")));
  CHECK(content(T("x + y*w")) == VarSet{V("w"), V("x"), V("y")});
}

TEST_CASE("delta-set examples") {
  CHECK(delta_sets(T("x*y + y*z")) == family({{"y"}, {"x", "z"}}));
  CHECK(delta_sets(T("x^2 + y")).empty());
  CHECK(delta_sets(T("x")) == family({{"x"}}));
  CHECK(delta_sets(T("x*y")) == family({{"x"}, {"y"}}));
  CHECK(delta_sets(T("x*y + y*z + x*z")).empty());  // triangle
  CHECK(delta_sets(T("x*y + z")) == family({{"x", "z"}, {"y", "z"}}));
  CHECK(delta_sets(T("x^2*y + x")).empty());
  CHECK(delta_sets(T("x^2*y")) == family({{"y"}}));
  for (const char* t : {"x*y + y*z", "x^2 + y", "x*y + z", "x*y*z + x*w", "x^2*y + y*z^2"})
    CHECK(delta_sets(T(t)) == delta_by_propagation(T(t).words()));
}

TEST_CASE("delta-sets agree with the propagation oracle on random terms") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto t = aisr::testing::random_term(rng, 5, 5, 4, i % 2 == 0);
    const auto d = delta_sets(t);
    REQUIRE(d == delta_by_propagation(t.words()));
    for (const auto& z : d) {
      CHECK_FALSE(z.empty());
      for (const auto& w : t.words()) {
        int hits = 0;
        for (const auto& x : z)
          if (occurrences(x, w) > 0) hits += occurrences(x, w) == 1 ? 1 : 2;
        CHECK(hits == 1);
      }
    }
    auto again = d;
    canonicalize(again);
    CHECK(again == d);
  }
}

TEST_CASE("delta-set cap") {
  WordSet ws;
  for (int i = 1; i <= 21; ++i) ws.insert(Word{aisr::testing::var("x", i)});
  CHECK_THROWS_AS(delta_sets(ws), SizeError);
  CHECK_NOTHROW(delta_sets(ws, 21));
}

TEST_CASE("filters") {
  const auto u = T("x*y + y*z + x + z^2");
  CHECK(filter_content_subset(u, parse_word("x*y")) == WordSet{parse_word("x"), parse_word("x*y")});
  CHECK(filter_content_avoiding(u, {V("y")}) == WordSet{parse_word("x"), parse_word("z^2")});
  CHECK(filter_content_avoiding(u, {V("x"), V("z")}).empty());

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto t = aisr::testing::random_term(rng, 4, 5, 3);
    const auto q = aisr::testing::random_word(rng, 4, 3);
    const auto dq = filter_content_subset(t, q);
    for (const auto& w : t.words()) {
      const auto c = content(w);
      const auto cq = content(q);
      const bool inside = std::includes(cq.begin(), cq.end(), c.begin(), c.end());
      CHECK(dq.count(w) == (inside ? 1u : 0u));
    }
    const auto z = content(q);
    for (const auto& w : filter_content_avoiding(t, z))
      for (const auto& x : content(w)) CHECK(z.count(x) == 0);
  }
}

TEST_CASE("substitution examples") {
  const Substitution phi{{V("x"), T("a + b")}};
  CHECK(substitute(phi, T("x^2")) == T("a*a + a*b + b*a + b*b"));
  CHECK(substitute(phi, T("x^2", true)) == T("a*a + a*b + b*b", true));
  CHECK(substitute(phi, T("x^2", true)).size() == 3);
  CHECK_THROWS_AS(substitute(phi, T("x*y")), TermError);

  const Substitution psi{{V("x"), T("y*z")}, {V("y"), T("x")}};
  CHECK(substitute(psi, T("x + y*x")) == T("y*z + x*y*z"));
}

TEST_CASE("substitution composes") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const bool comm = i % 2 == 1;
    const auto t = aisr::testing::random_term(rng, 3, 3, 3, comm);
    Substitution phi, psi;
    for (int k = 1; k <= 3; ++k) {
      phi.emplace(aisr::testing::var("x", k), aisr::testing::random_term(rng, 3, 2, 2, comm));
      psi.emplace(aisr::testing::var("x", k), aisr::testing::random_term(rng, 3, 2, 2, comm));
    }
    Substitution composed;
    for (const auto& [x, img] : phi) composed.emplace(x, substitute(psi, img));
    CHECK(substitute(psi, substitute(phi, t)) == substitute(composed, t));
  }
}

TEST_CASE("evaluation commutes with substitution") {
  std::mt19937_64 rng(5);
  for (const auto& name : {"S7", "D2", "S7_0"}) {
    const auto s = builtin(name);
    for (int i = 0; i < 100; ++i) {
      const auto t = aisr::testing::random_term(rng, 2, 3, 3);
      Substitution phi;
      for (int k = 1; k <= 2; ++k)
        phi.emplace(aisr::testing::var("x", k), aisr::testing::random_term(rng, 2, 2, 2, false, "y"));
      const auto image = substitute(phi, t);
      VarSet ys;
      for (const auto& [x, img] : phi) ys.merge(content(img));
      for_each_assignment(ys, s, [&](const Assignment& a) {
        Assignment through;
        for (const auto& [x, img] : phi) through.emplace(x, evaluate(img, s, a));
        CHECK(evaluate(image, s, a) == evaluate(t, s, through));
      });
    }
  }
}

TEST_CASE("commutative terms ignore letter order") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto t = aisr::testing::random_term(rng, 4, 4, 4, false);
    WordSet shuffled;
    for (const auto& w : t.words()) {
      auto letters = w.letters();
      std::shuffle(letters.begin(), letters.end(), rng);
      shuffled.insert(Word(letters));
    }
    CHECK(Term(t.words(), true) == Term(shuffled, true));
    CHECK(delta_sets(Term(t.words(), true)) == delta_sets(t));
  }
}

TEST_CASE("evaluation") {
  const auto s = builtin("S7");
  const Assignment a{{V("x"), s.index_of("a")}, {V("y"), s.index_of("1")}};
  CHECK(s.name(evaluate(parse_word("x*y"), s, a)) == "a");
  CHECK(s.name(evaluate(parse_word("x^2"), s, a)) == "0");
  CHECK(s.name(evaluate(T("x + y"), s, a)) == "0");
  CHECK(s.name(evaluate(T("x*y + x"), s, a)) == "a");
  CHECK_THROWS_AS(evaluate(T("z"), s, a), TermError);
  CHECK(to_string(a, s) == "x=a, y=1");
}

TEST_CASE("decompose") {
  const auto id = parse_identity("x + y == x*y");
  const auto parts = decompose(id);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].base == T("x + y"));
  CHECK(parts[0].added == parse_word("x*y"));
  CHECK_FALSE(parts[0].trivial);
  CHECK(parts[1].base == T("x*y"));
  CHECK(parts[1].added == parse_word("x"));
  CHECK(parts[2].added == parse_word("y"));
  CHECK(parts[2].identity() == Identity(T("x*y"), T("x*y + y")));

  const auto parts2 = decompose(parse_identity("x == x + x^2"));
  REQUIRE(parts2.size() == 3);
  CHECK(parts2[0].trivial);
  CHECK_FALSE(parts2[1].trivial);
  CHECK(parts2[2].trivial);
}

TEST_CASE("printing") {
  CHECK(to_string(parse_word("x*x*y")) == "x^2*y");
  CHECK(to_string(T("y + x*y")) == "y + x*y");
  CHECK(to_string(parse_identity("x == x + x^2")) == "x == x + x^2");
  CHECK(to_string(WordSet{}) == "∅");
  CHECK(to_string(DeltaFamily{}) == "∅");
  CHECK(to_string(delta_sets(T("x*y + y*z"))) == "{y}; {x,z}");
}
