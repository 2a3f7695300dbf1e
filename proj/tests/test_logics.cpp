#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "swapdeon/error.hpp"
#include "swapdeon/logics.hpp"

using namespace swapdeon;

namespace {

Formula P(const char* text, const Logic& l) { return parse(text, l); }

std::set<Restriction> rset(const Logic& l) {
  auto r = l.restrictions();
  return {r.begin(), r.end()};
}

}  // namespace

TEST_CASE("registry and bindings") {
  using R = Restriction;
  struct Row {
    const char* key;
    std::optional<int> n;
    NegVariant neg;
    CircVariant circ;
    std::set<Restriction> restrictions;
  };
  const Row rows[] = {
      {"dmbc", {}, NegVariant::Basic, CircVariant::Basic, {}},
      {"dmbcciw", {}, NegVariant::Basic, CircVariant::Exact, {}},
      {"dmbcci", {}, NegVariant::Basic, CircVariant::Deterministic, {}},
      {"dbc", {}, NegVariant::Strong, CircVariant::Basic, {}},
      {"dci", {}, NegVariant::Strong, CircVariant::Deterministic, {}},
      {"dmbccl", {}, NegVariant::Basic, CircVariant::Exact, {R::CL}},
      {"dcila", {}, NegVariant::Strong, CircVariant::Deterministic, {R::CL, R::CAHash}},
      {"c1d", {}, NegVariant::Strong, CircVariant::None, {R::CL, R::CAHash, R::CAO}},
      {"cnd", 2, NegVariant::Strong, CircVariant::None, {R::CnRest, R::CnOBoo}},
      {"cnd-strict", 3, NegVariant::Strong, CircVariant::None,
       {R::CnRest, R::CnOBoo, R::StrictO}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.key);
    Logic l = get_logic(row.key, row.n);
    CHECK(l.key() == row.key);
    CHECK(rset(l) == row.restrictions);
    CHECK(l.standard());
    if (!l.algebra().is_hierarchy()) {
      CHECK(l.algebra().neg_variant() == row.neg);
      CHECK(l.algebra().circ_variant() == row.circ);
    }
    CHECK(l.signature() == (row.circ == CircVariant::None ? Signature::SigmaC1D
                                                          : Signature::Sigma));
  }
  CHECK(get_logic("cnd", 3).algebra().size() == 5);
  CHECK(get_logic("c1d").algebra().size() == 3);
  CHECK(get_logic("CnD-Strict", 2).name() == "CnD-strict(2)");
  CHECK(registered_logics(2).size() == 10);
}

TEST_CASE("get_logic rejects bad selections") {
  CHECK_THROWS_AS(get_logic("kd45"), LogicError);
  CHECK_THROWS_AS(get_logic("cnd"), LogicError);
  CHECK_THROWS_AS(get_logic("dmbc", 2), LogicError);
  CHECK_THROWS_AS(get_logic("cnd-strict", 1), LogicError);
  try {
    get_logic("cnd", 1);
    FAIL("cnd(1) accepted");
  } catch (const LogicError& e) {
    CHECK(std::string(e.what()).find("c1d") != std::string::npos);
  }
  CHECK(get_logic("c1d", 1).name() == "C1D");
}

TEST_CASE("restriction switches") {
  Logic c1 = get_logic("c1d");
  Logic off = c1.without(Restriction::CAO);
  CHECK_FALSE(off.standard());
  CHECK_FALSE(off.has(Restriction::CAO));
  CHECK(off.has(Restriction::CL));
  CHECK_THROWS_AS(get_logic("dmbc").without(Restriction::CL), LogicError);
  CHECK(parse_restriction("ca#") == Restriction::CAHash);
  CHECK(parse_restriction("cn-rest") == Restriction::CnRest);
  CHECK_FALSE(parse_restriction("XYZ"));
  for (Restriction r : kAllRestrictions) {
    CHECK(parse_restriction(restriction_id(r)) == r);
  }
}

TEST_CASE("axiom lists contain the characteristic schemas") {
  Logic dmbc = get_logic("dmbc");
  const Formula a = Formula::meta("A");
  const Formula b = Formula::meta("B");
  REQUIRE(dmbc.find_axiom("O-K"));
  CHECK(dmbc.find_axiom("O-K")->templ ==
        Formula::imp(Formula::obl(Formula::imp(a, b)),
                     Formula::imp(Formula::obl(a), Formula::obl(b))));
  Logic c2 = get_logic("cnd", 2);
  REQUIRE(c2.find_axiom("PO_n"));
  CHECK(c2.find_axiom("PO_n")->templ ==
        Formula::imp(power_conjunction(a, 2), power_conjunction(Formula::obl(a), 2)));
  CHECK_FALSE(c2.find_axiom("SD_n"));
  Logic s2 = get_logic("cnd-strict", 2);
  REQUIRE(s2.find_axiom("SD_n"));
  CHECK(s2.find_axiom("SD_n")->templ ==
        Formula::imp(Formula::obl(a), Formula::neg(Formula::obl(Formula::neg(a)))));
  for (const Logic& l : registered_logics(3)) {
    std::set<std::string> ids;
    for (const AxiomSchema& s : l.axioms()) {
      CHECK(ids.insert(s.id).second);
      CHECK_FALSE(s.metavars.empty());
    }
    for (const char* base : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "EM", "O-K"}) {
      CHECK(ids.contains(base));
    }
  }
}

TEST_CASE("instantiate examples") {
  Logic dmbc = get_logic("dmbc");
  const Formula p = Formula::atom("p");
  const Formula q = Formula::atom("q");
  CHECK(instantiate(*dmbc.find_axiom("bc"), {{"A", p}, {"B", q}}) ==
        P("@p -> (p -> (~p -> q))", dmbc));
  CHECK(instantiate(*dmbc.find_axiom("EM"), {{"A", Formula::obl(p)}}) ==
        P("O p | ~O p", dmbc));
  Logic cl = get_logic("dmbccl");
  CHECK(instantiate(*cl.find_axiom("cl"), {{"A", p}}) ==
        P("~(p & ~p) -> @p", cl));
  CHECK_THROWS_AS(instantiate(*dmbc.find_axiom("bc"), {{"A", p}}), LogicError);
}

TEST_CASE("match_axiom examples") {
  Logic dmbc = get_logic("dmbc");
  auto m = match_axiom(dmbc, P("@p -> (p -> (~p -> q))", dmbc));
  REQUIRE(m);
  CHECK(m->schema == "bc");
  auto a1 = match_axiom(dmbc, P("p -> (q -> p)", dmbc));
  REQUIRE(a1);
  CHECK(a1->schema == "A1");
  CHECK_FALSE(match_axiom(dmbc, P("p -> q", dmbc)));
  // Nonlinear templates need consistent bindings.
  CHECK_FALSE(match_schema(*dmbc.find_axiom("A4"), P("p & q -> q", dmbc)));
}

TEST_CASE("instantiate and match are inverse") {
  std::mt19937 rng(11);
  for (const Logic& l : registered_logics(3)) {
    for (const AxiomSchema& s : l.axioms()) {
      for (int i = 0; i < 10; ++i) {
        Substitution sub;
        for (const std::string& v : s.metavars) {
          sub.emplace(v, testing::random_formula(rng, 3, l.signature()));
        }
        Formula f = instantiate(s, sub);
        auto m = match_axiom(l, f);
        REQUIRE(m);
        CHECK(instantiate(*l.find_axiom(m->schema), m->subst) == f);
        auto own = match_schema(s, f);
        REQUIRE(own);
        CHECK(instantiate(s, *own) == f);
      }
    }
  }
}

TEST_CASE("closure rules per logic") {
  CHECK_FALSE(get_logic("dmbc").closure_rules().contradiction_pairs);
  CHECK(get_logic("dmbccl").closure_rules().contradiction_pairs);
  CHECK(get_logic("c1d").closure_rules().contradiction_pairs);
  CHECK(get_logic("cnd", 3).closure_rules().hierarchy_depth == 3);
  CHECK(get_logic("cnd", 3).without(Restriction::CnRest).closure_rules().hierarchy_depth == 0);
}
