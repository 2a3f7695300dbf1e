#include "swapdeon/models.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "swapdeon/error.hpp"

namespace swapdeon {

KripkeFrame::KripkeFrame(std::vector<std::string> names,
                         std::vector<std::vector<int>> successors)
    : names_(std::move(names)), succ_(std::move(successors)) {
  if (names_.empty()) throw ModelError("a frame needs at least one world");
  if (succ_.size() != names_.size()) {
    throw ModelError("successor lists do not match the worlds");
  }
  for (std::size_t w = 0; w < succ_.size(); ++w) {
    auto& s = succ_[w];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) {
      throw ModelError("relation is not serial: world " + names_[w] +
                       " has no successor");
    }
    for (int v : s) {
      if (v < 0 || v >= size()) throw ModelError("successor out of range");
    }
  }
}

std::optional<KripkeFrame> KripkeFrame::from_mask(int k, std::uint32_t mask) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> succ(k);
  for (int i = 0; i < k; ++i) {
    names.push_back("w" + std::to_string(i));
    for (int j = 0; j < k; ++j) {
      if (mask >> (i * k + j) & 1u) succ[i].push_back(j);
    }
    if (succ[i].empty()) return std::nullopt;
  }
  return KripkeFrame(std::move(names), std::move(succ));
}

bool KripkeFrame::related(int a, int b) const {
  return std::binary_search(succ_[a].begin(), succ_[a].end(), b);
}

Value SwapKripkeModel::value_of(const Formula& f, int world) const {
  auto i = closure.index_of(f);
  if (!i) throw ModelError("formula " + render(f) + " is outside the closure");
  return value(*i, world);
}

namespace {

class Checker {
 public:
  explicit Checker(const SwapKripkeModel& m)
      : m_(m), alg_(m.logic.algebra()), logic_(m.logic) {}

  ValuationReport run() {
    for (std::size_t i = 0; i < m_.closure.size(); ++i) {
      for (int w = 0; w < m_.frame.size(); ++w) check(i, w);
    }
    return std::move(report_);
  }

 private:
  Value v(const Formula& f, int w) const { return m_.value_of(f, w); }
  std::optional<Value> maybe(const Formula& f, int w) const {
    auto i = m_.closure.index_of(f);
    if (!i) return std::nullopt;
    return m_.value(*i, w);
  }

  void expect(std::size_t i, int w, const std::string& rule, ValueSet allowed) {
    Value actual = m_.value(i, w);
    if (allowed.contains(actual)) return;
    report_.violations.push_back(Violation{m_.frame.name(w),
                                           render(m_.closure[i]), rule,
                                           alg_.format_set(allowed),
                                           alg_.label(actual)});
  }

  void unchecked(const std::string& rule, const Formula& f, int w) {
    report_.unchecked.push_back(rule + " for " + render(f) + " at " +
                                m_.frame.name(w));
  }

  void check(std::size_t i, int w) {
    const Formula& f = m_.closure[i];
    switch (f.kind()) {
      case Kind::Atom:
      case Kind::Meta:
        break;
      case Kind::Neg:
        expect(i, w, "neg", alg_.negation(v(f.child(), w)));
        break;
      case Kind::Circ:
        expect(i, w, "circ", alg_.consistency(v(f.child(), w)));
        break;
      case Kind::Obl: {
        ValueSet xs;
        for (int s : m_.frame.successors(w)) xs.insert(v(f.child(), s));
        expect(i, w, "O", alg_.obligation(xs));
        break;
      }
      case Kind::And:
      case Kind::Or:
      case Kind::Imp: {
        BinOp op = f.kind() == Kind::And  ? BinOp::And
                   : f.kind() == Kind::Or ? BinOp::Or
                                          : BinOp::Imp;
        Value a = v(f.left(), w);
        Value b = v(f.right(), w);
        expect(i, w, op_name(static_cast<Op>(op)), alg_.binary(op, a, b));
        if (logic_.has(Restriction::CAHash) && alg_.is_classical(a) &&
            alg_.is_classical(b)) {
          expect(i, w, "CA#", alg_.classical());
        }
        break;
      }
    }
    restrictions_on(f, w);
  }

  // Restrictions whose premise is about the value of `f` itself.
  void restrictions_on(const Formula& f, int w) {
    Value a = v(f, w);
    const Formula contradiction = Formula::conj(f, Formula::neg(f));
    if (logic_.has(Restriction::CL) && a == alg_.middle(0)) {
      if (auto i = m_.closure.index_of(contradiction)) {
        expect(*i, w, "CL", ValueSet::single(alg_.top()));
      } else {
        unchecked("CL", f, w);
      }
    }
    if (logic_.has(Restriction::CnRest) && !alg_.is_classical(a)) {
      int k = a - alg_.middle(0);
      auto ci = m_.closure.index_of(contradiction);
      if (k == 0) {
        if (ci) {
          expect(*ci, w, "CN-REST.1", ValueSet::single(alg_.top()));
        } else {
          unchecked("CN-REST.1", f, w);
        }
      } else {
        auto pi = m_.closure.index_of(power(f, 1));
        if (ci) expect(*ci, w, "CN-REST.2", alg_.inconsistent());
        if (pi) expect(*pi, w, "CN-REST.2", ValueSet::single(alg_.middle(k - 1)));
        if (!ci || !pi) unchecked("CN-REST.2", f, w);
      }
    }
    bool boo_o = logic_.has(Restriction::CAO) || logic_.has(Restriction::CnOBoo);
    if (boo_o && alg_.is_classical(a)) {
      const char* rule = logic_.has(Restriction::CAO) ? "CAO" : "CN-O-BOO";
      // An absent O a needs no report: the obligation set always offers
      // T or F, so any extension can pick a classical value.
      if (auto oi = m_.closure.index_of(Formula::obl(f))) {
        expect(*oi, w, rule, alg_.classical());
      }
    }
    if (logic_.has(Restriction::StrictO) && f.kind() == Kind::Obl &&
        alg_.is_designated(a)) {
      auto ci = *m_.closure.index_of(f.child());
      for (int s : m_.frame.successors(w)) {
        expect(ci, s, "STRICT-O", ValueSet::single(alg_.top()));
      }
    }
  }

  const SwapKripkeModel& m_;
  const Algebra& alg_;
  const Logic& logic_;
  ValuationReport report_;
};

}  // namespace

ValuationReport check_valuation(const SwapKripkeModel& m) {
  return Checker(m).run();
}

bool truth_at(const SwapKripkeModel& m, int world, const Formula& f) {
  return m.logic.algebra().is_designated(m.value_of(f, world));
}

bool holds(const SwapKripkeModel& m, int world,
           std::span<const Formula> gamma) {
  return std::all_of(gamma.begin(), gamma.end(), [&](const Formula& f) {
    return truth_at(m, world, f);
  });
}

SwapKripkeModel load_model(std::string_view json_text,
                           const std::optional<Logic>& override_logic) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed model JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("model")) doc = doc["model"];
  if (!doc.is_object()) throw ModelError("model JSON must be an object");
  for (const char* key : {"logic", "worlds", "relation", "valuation"}) {
    if (!doc.contains(key)) {
      throw ModelError(std::string("model JSON lacks \"") + key + "\"");
    }
  }

  try {
    std::optional<int> n;
    if (doc.contains("n") && !doc["n"].is_null()) n = doc["n"].get<int>();
    Logic file_logic = get_logic(doc["logic"].get<std::string>(), n);
    Logic logic = override_logic.value_or(file_logic);
    if (logic.key() != file_logic.key() || logic.n() != file_logic.n()) {
      throw ModelError("model is for " + file_logic.name() + ", not " +
                       logic.name());
    }
    const Algebra& alg = logic.algebra();

    std::vector<std::string> names = doc["worlds"].get<std::vector<std::string>>();
    std::map<std::string, int> world_index;
    for (std::size_t w = 0; w < names.size(); ++w) {
      if (!world_index.emplace(names[w], static_cast<int>(w)).second) {
        throw ModelError("duplicate world \"" + names[w] + "\"");
      }
    }
    auto world_of = [&](const std::string& name) {
      auto it = world_index.find(name);
      if (it == world_index.end()) {
        throw ModelError("unknown world \"" + name + "\"");
      }
      return it->second;
    };
    std::vector<std::vector<int>> succ(names.size());
    for (const auto& pair : doc["relation"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ModelError("relation entries must be [from, to] pairs");
      }
      succ[world_of(pair[0].get<std::string>())].push_back(
          world_of(pair[1].get<std::string>()));
    }
    KripkeFrame frame(names, std::move(succ));

    // (world, formula) -> value, keyed on parsed formulas.
    std::vector<std::unordered_map<Formula, Value>> given(names.size());
    std::vector<Formula> declared;
    for (const auto& [wname, entries] : doc["valuation"].items()) {
      int w = world_of(wname);
      if (!entries.is_object()) {
        throw ModelError("valuation of " + wname + " must be an object");
      }
      for (const auto& [text, label] : entries.items()) {
        Formula f = parse(text, logic);
        auto value = alg.parse_label(label.get<std::string>());
        if (!value) {
          throw ModelError("unknown value label \"" +
                           label.get<std::string>() + "\" for " + logic.name());
        }
        auto [it, inserted] = given[w].emplace(f, *value);
        if (!inserted && it->second != *value) {
          throw ModelError("conflicting values for " + render(f) + " at " +
                           wname);
        }
        declared.push_back(f);
      }
    }
    if (declared.empty()) throw ModelError("valuation is empty");

    ClosureSet closure = ClosureSet::of_subformulas(declared);
    std::vector<Value> table(closure.size() * frame.size());
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (int w = 0; w < frame.size(); ++w) {
        auto it = given[w].find(closure[i]);
        if (it == given[w].end()) {
          throw ModelError("no value for " + render(closure[i]) + " at " +
                           frame.name(w));
        }
        table[i * frame.size() + w] = it->second;
      }
    }
    return SwapKripkeModel{logic, std::move(frame), std::move(closure),
                           std::move(table)};
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed model JSON: ") + e.what());
  }
}

std::string dump_model(const SwapKripkeModel& m, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["logic"] = m.logic.key();
  if (m.logic.signature() == Signature::SigmaC1D && m.logic.key() != "c1d") {
    doc["n"] = m.logic.n();
  }
  doc["worlds"] = m.frame.names();
  ordered_json relation = ordered_json::array();
  for (int w = 0; w < m.frame.size(); ++w) {
    for (int s : m.frame.successors(w)) {
      relation.push_back({m.frame.name(w), m.frame.name(s)});
    }
  }
  doc["relation"] = relation;
  ordered_json valuation = ordered_json::object();
  for (int w = 0; w < m.frame.size(); ++w) {
    ordered_json entries = ordered_json::object();
    for (std::size_t i = 0; i < m.closure.size(); ++i) {
      entries[render(m.closure[i])] = m.logic.algebra().label(m.value(i, w));
    }
    valuation[m.frame.name(w)] = entries;
  }
  doc["valuation"] = valuation;
  return doc.dump(indent);
}

}  // namespace swapdeon
