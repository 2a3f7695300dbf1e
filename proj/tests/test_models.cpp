#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "swapdeon/error.hpp"
#include "swapdeon/models.hpp"
#include "swapdeon/search.hpp"

using namespace swapdeon;

namespace {

SwapKripkeModel fixture_model(const char* name) {
  return load_model(testing::read_fixture(std::string("models/") + name));
}

bool has_rule(const ValuationReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

std::string one_world(const std::string& logic, const std::string& extra,
                      const std::string& valuation) {
  return R"({"logic": ")" + logic + "\"" + extra +
         R"(, "worlds": ["w"], "relation": [["w", "w"]], "valuation": {"w": {)" +
         valuation + "}}}";
}

}  // namespace

TEST_CASE("frames") {
  CHECK_THROWS_AS(KripkeFrame({"a", "b"}, {{1}, {}}), ModelError);
  KripkeFrame f({"a", "b"}, {{1, 1, 0}, {1}});
  CHECK(f.successors(0) == std::vector<int>{0, 1});
  CHECK(f.related(1, 1));
  CHECK_FALSE(f.related(1, 0));
  CHECK_FALSE(KripkeFrame::from_mask(2, 0b0001));
  auto g = KripkeFrame::from_mask(2, 0b0110);
  REQUIRE(g);
  CHECK(g->related(0, 1));
  CHECK(g->related(1, 0));
  CHECK(g->name(1) == "w1");
}

TEST_CASE("load_model examples") {
  SwapKripkeModel m = fixture_model("dmbc_reflexive_t.json");
  CHECK(m.frame.size() == 1);
  CHECK(m.closure.size() == 3);
  CHECK(check_valuation(m).ok());
  CHECK(truth_at(m, 0, Formula::atom("p")));
  CHECK(truth_at(m, 0, Formula::obl(Formula::atom("p"))));

  CHECK_THROWS_AS(fixture_model("not_serial.json"), ModelError);
  CHECK_THROWS_AS(fixture_model("bad_label.json"), ModelError);
  CHECK_THROWS_AS(load_model("{"), ModelError);
  // Closure members need values: ~p is a subformula of O ~p.
  CHECK_THROWS_AS(load_model(one_world("dmbc", "", R"("O ~p": "T", "p": "t")")),
                  ModelError);
  CHECK_THROWS_AS(load_model(one_world("dmbc", "", R"j("p": "t", "(p)": "F")j")),
                  ModelError);

  SwapKripkeModel closed = load_model(one_world("dmbc", "", R"("p": "t")"));
  CHECK(closed.closure.size() == 1);
  CHECK_THROWS_AS(closed.value_of(Formula::atom("q"), 0), ModelError);
}

TEST_CASE("check_valuation reports violations") {
  ValuationReport cl = check_valuation(fixture_model("dmbccl_cl_violation.json"));
  CHECK(has_rule(cl, "CL"));

  ValuationReport cn = check_valuation(fixture_model("cnd2_rest_violation.json"));
  CHECK(has_rule(cn, "CN-REST.2"));

  // O p must lie in O({v(p)}) = {F} when p is F.
  ValuationReport o = check_valuation(
      load_model(one_world("dmbc", "", R"("p": "F", "O p": "t")")));
  REQUIRE(o.violations.size() == 1);
  CHECK(o.violations[0].rule == "O");
  CHECK(o.violations[0].expected == "{F}");
  CHECK(o.violations[0].actual == "t");

  ValuationReport neg = check_valuation(
      load_model(one_world("dbc", "", R"("p": "F", "~p": "t")")));
  CHECK(has_rule(neg, "neg"));

  ValuationReport boo = check_valuation(load_model(
      one_world("cnd", R"(, "n": 2)", R"("p": "T", "O p": "t0")")));
  CHECK(has_rule(boo, "CN-O-BOO"));

  // Both inputs classical forces a classical conjunction under DCila.
  ValuationReport ca = check_valuation(load_model(
      one_world("dcila", "", R"("p": "T", "q": "T", "p & q": "t")")));
  CHECK(has_rule(ca, "CA#"));
}

TEST_CASE("truth and holds") {
  SwapKripkeModel m = load_model(one_world(
      "cnd", R"(, "n": 2)",
      R"("p": "t0", "O p": "t0", "q": "F")"));
  const Formula p = Formula::atom("p");
  const Formula q = Formula::atom("q");
  CHECK(truth_at(m, 0, p));
  CHECK(truth_at(m, 0, Formula::obl(p)));
  CHECK_FALSE(truth_at(m, 0, q));
  CHECK(holds(m, 0, {}));
  std::vector<Formula> pq{p, q};
  CHECK_FALSE(holds(m, 0, pq));
  CHECK(truth_at(m, 0, p) == truth_at(m, 0, p));
}

TEST_CASE("dump and load round trip") {
  SwapKripkeModel m = fixture_model("dmbc_reflexive_t.json");
  SwapKripkeModel back = load_model(dump_model(m));
  CHECK(back.table == m.table);
  CHECK(back.closure == m.closure);
  CHECK(back.frame.names() == m.frame.names());

  SwapKripkeModel c = fixture_model("cnd2_rest_violation.json");
  SwapKripkeModel cback = load_model(dump_model(c));
  CHECK(cback.logic.name() == "CnD(2)");
  CHECK(cback.table == c.table);

  // The file's logic can be overridden for restriction-disabled runs.
  Logic off = get_logic("cnd", 2).without(Restriction::CnRest);
  CHECK(check_valuation(load_model(dump_model(c), off)).ok());
}

TEST_CASE("every enumerated DmbC model falsifies bot and O bot") {
  Logic dmbc = get_logic("dmbc");
  const Formula bot = parse("bot(p)", dmbc);
  const Formula obot = Formula::obl(bot);
  ClosureSet c = closure(std::span(&obot, 1), dmbc);
  int seen = 0;
  for (const KripkeFrame& f : enumerate_frames(2)) {
    valuation_search(dmbc, f, c, [&](const SwapKripkeModel& m) {
      ++seen;
      for (int w = 0; w < f.size(); ++w) {
        CHECK_FALSE(truth_at(m, w, bot));
        CHECK_FALSE(truth_at(m, w, obot));
      }
      return seen < 300;
    });
  }
  CHECK(seen > 0);
}

TEST_CASE("strict models collapse successors to T") {
  Logic s2 = get_logic("cnd-strict", 2);
  const Formula op = parse("O p", s2);
  const Formula np = parse("~p", s2);
  std::vector<Formula> targets{op, np};
  ClosureSet c = closure(targets, s2);
  for (const KripkeFrame& f : enumerate_frames(2)) {
    valuation_search(s2, f, c, [&](const SwapKripkeModel& m) {
      for (int w = 0; w < f.size(); ++w) {
        if (!truth_at(m, w, op)) continue;
        for (int s : f.successors(w)) {
          CHECK(m.value_of(Formula::atom("p"), s) == s2.algebra().top());
          CHECK(m.value_of(np, s) == s2.algebra().bottom());
        }
      }
      return true;
    });
  }
}
