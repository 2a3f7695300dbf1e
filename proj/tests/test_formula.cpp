#include <random>
#include <unordered_set>

#include "doctest.h"
#include "support.hpp"
#include "swapdeon/error.hpp"
#include "swapdeon/formula.hpp"
#include "swapdeon/logics.hpp"

using namespace swapdeon;

namespace {

Formula P(const char* text, Signature s = Signature::Sigma) {
  return parse(text, s);
}

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");

// Number of ~(x & ~x) layers wrapped around `base`.
int power_layers(Formula f, const Formula& base) {
  int k = 0;
  while (f != base) {
    REQUIRE(f.kind() == Kind::Neg);
    const Formula& c = f.child();
    REQUIRE(c.kind() == Kind::And);
    REQUIRE(c.right() == Formula::neg(c.left()));
    f = c.left();
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("parser follows the fixed precedence table") {
  CHECK(P("O(p -> q) -> (O p -> O q)") ==
        Formula::imp(Formula::obl(Formula::imp(p, q)),
                     Formula::imp(Formula::obl(p), Formula::obl(q))));
  CHECK(P("@p -> (p -> (~p -> q))") ==
        Formula::imp(Formula::circ(p),
                     Formula::imp(p, Formula::imp(Formula::neg(p), q))));
  CHECK(P("p -> q -> p") == P("p -> (q -> p)"));
  CHECK(P("p & q & p") == P("(p & q) & p"));
  CHECK(P("p | q & p") == P("p | (q & p)"));
  CHECK(P("~p & q") == Formula::conj(Formula::neg(p), q));
  CHECK(P("O p & q") == Formula::conj(Formula::obl(p), q));
  CHECK(P("Op") == Formula::obl(p));
  CHECK(P("pO") == Formula::atom("pO"));
}

TEST_CASE("parse errors carry kind and byte offset") {
  auto fails = [](const char* text, ParseError::Kind kind, std::size_t off,
                  Signature s = Signature::Sigma) {
    try {
      parse(text, s);
      FAIL("accepted " << text);
    } catch (const ParseError& e) {
      CHECK(e.kind() == kind);
      CHECK(e.offset() == off);
    }
  };
  fails("p q", ParseError::Kind::Syntax, 2);
  fails("(p & q", ParseError::Kind::Syntax, 6);
  fails("p -> ", ParseError::Kind::Syntax, 5);
  fails("@p", ParseError::Kind::Signature, 0, Signature::SigmaC1D);
  fails("p ^ 0", ParseError::Kind::Syntax, 4);

  const Logic c2 = get_logic("cnd", 2);
  CHECK_THROWS_AS(parse("p^3", c2), ParseError);
  CHECK_THROWS_AS(parse("bot(p)", get_logic("cnd", 2)), ParseError);
  CHECK_THROWS_AS(parse("p^1", get_logic("dmbc")), ParseError);
}

TEST_CASE("render examples") {
  CHECK(render(Formula::obl(p)) == "O p");
  CHECK(render(Formula::neg(Formula::conj(p, Formula::neg(p)))) == "~(p & ~p)");
  CHECK(render(P("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(render(P("p & q | r -> s -> t"), RenderMode::FullyParenthesized) ==
        "((p & q) | r) -> (s -> t)");
}

TEST_CASE("parse(render(f)) == f on random formulas") {
  std::mt19937 rng(20261015);
  for (Signature sig : {Signature::Sigma, Signature::SigmaC1D}) {
    for (int i = 0; i < 1000; ++i) {
      Formula f = testing::random_formula(rng, 8, sig);
      for (RenderMode mode : {RenderMode::Minimal, RenderMode::FullyParenthesized}) {
        const std::string text = render(f, mode);
        INFO(text);
        REQUIRE(parse(text, sig) == f);
      }
    }
  }
}

TEST_CASE("defined connectives") {
  const Dialect sigma = get_logic("dmbc").dialect();
  const Dialect c1 = get_logic("c1d").dialect();
  const Dialect c2 = get_logic("cnd", 2).dialect();

  const Formula contra = Formula::conj(p, Formula::neg(p));
  CHECK(expand_defined(Sugar::Bottom, p, sigma) ==
        Formula::conj(contra, Formula::circ(p)));
  CHECK(power(p, 0) == p);
  CHECK(power(p, 1) == Formula::neg(contra));
  CHECK(expand_defined(Sugar::StrongNeg, p, sigma) ==
        Formula::imp(p, expand_defined(Sugar::Bottom, p, sigma)));
  CHECK(expand_defined(Sugar::StrongNeg, p, c1) ==
        Formula::conj(Formula::neg(p), power(p, 1)));
  CHECK(expand_defined(Sugar::StrongNegN, p, c2) ==
        Formula::conj(Formula::neg(p), power_conjunction(p, 2)));

  // P a = ~O~a with the logic's strong negation.
  const Formula sn = expand_defined(Sugar::StrongNeg, p, sigma);
  CHECK(parse("P p", get_logic("dmbc")) ==
        expand_defined(Sugar::StrongNeg,
                       Formula::obl(sn), sigma));

  CHECK(parse("p^(2)", get_logic("cnd", 2)) ==
        Formula::conj(power(p, 1), power(p, 2)));
  CHECK(power(p, 2) == Formula::neg(Formula::conj(power(p, 1),
                                                  Formula::neg(power(p, 1)))));

  CHECK_THROWS_AS(expand_defined(Sugar::Power, p, sigma, 1), ParseError);
  CHECK_THROWS_AS(expand_defined(Sugar::StrongNegN, p, sigma), ParseError);
}

TEST_CASE("a^k has exactly k contradiction layers") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Formula base = testing::random_formula(rng, 3, Signature::SigmaC1D);
    for (int k = 0; k <= 6; ++k) CHECK(power_layers(power(base, k), base) == k);
  }
}

TEST_CASE("closure examples") {
  const Formula op = Formula::obl(p);
  ClosureSet c = closure(std::span(&op, 1), get_logic("dmbc"));
  CHECK(c.formulas() == std::vector<Formula>{p, op});

  ClosureSet cl = closure(std::span(&p, 1), get_logic("dmbccl"));
  CHECK(cl.formulas() ==
        std::vector<Formula>{p, Formula::neg(p), Formula::conj(p, Formula::neg(p))});

  ClosureSet c2 = closure(std::span(&p, 1), get_logic("cnd", 2));
  CHECK(c2.contains(power(p, 1)));
  CHECK(c2.contains(power(p, 2)));
  CHECK_FALSE(c2.contains(power(p, 3)));
}

TEST_CASE("closure invariants on random targets") {
  std::mt19937 rng(99);
  std::vector<Logic> logics = registered_logics(3);
  for (int i = 0; i < 20; ++i) {
    for (const Logic& logic : logics) {
      std::vector<Formula> targets{
          testing::random_formula(rng, 3, logic.signature()),
          testing::random_formula(rng, 3, logic.signature())};
      ClosureSet c = closure(targets, logic);
      for (const Formula& t : targets) CHECK(c.contains(t));
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_leaf()) continue;
        const Formula& l = c[j].arity() == 1 ? c[j].child() : c[j].left();
        auto li = c.index_of(l);
        REQUIRE(li);
        CHECK(*li < j);
        CHECK(static_cast<int>(*li) == c.left_index(j));
        if (c[j].arity() == 2) {
          auto ri = c.index_of(c[j].right());
          REQUIRE(ri);
          CHECK(*ri < j);
        }
      }
      // Closing again from the expanded roots, or under subformulas,
      // adds nothing.
      std::vector<Formula> roots;
      for (std::size_t r : c.roots()) roots.push_back(c[r]);
      CHECK(closure(roots, logic) == c);
      CHECK(ClosureSet::of_subformulas(c.formulas()).size() == c.size());
      const ClosureRules rules = logic.closure_rules();
      if (!rules.contradiction_pairs && rules.hierarchy_depth == 0) {
        CHECK(closure(c.formulas(), logic) == c);
      }
    }
  }
}

TEST_CASE("closure cap") {
  std::mt19937 rng(3);
  Formula big = testing::random_formula(rng, 8, Signature::SigmaC1D);
  while (big.size() < 40) big = testing::random_formula(rng, 8, Signature::SigmaC1D);
  CHECK_THROWS_AS(closure(std::span(&big, 1), get_logic("cnd", 3), 16),
                  ClosureCapError);
}

TEST_CASE("atoms and renaming") {
  Formula f = P("O(q -> p) & ~q");
  CHECK(atoms(f) == std::vector<std::string>{"q", "p"});
  CHECK(rename_atoms(f, {{"q", "r"}}) == P("O(r -> p) & ~r"));
  std::unordered_set<Formula> seen{f, P("O(q -> p) & ~q")};
  CHECK(seen.size() == 1);
}
