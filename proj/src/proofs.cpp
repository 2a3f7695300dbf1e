#include "swapdeon/proofs.hpp"

#include <json.hpp>

#include "swapdeon/error.hpp"

namespace swapdeon {

namespace {

ProofCheck fail(int step, std::string reason) {
  return ProofCheck{ProofCheck::Status::StepFailure, step, std::move(reason)};
}

}  // namespace

ProofCheck verify_derivation(const Derivation& d) {
  if (d.steps.empty()) return fail(0, "derivation has no steps");
  for (std::size_t idx = 0; idx < d.steps.size(); ++idx) {
    const int n = static_cast<int>(idx) + 1;
    const Step& step = d.steps[idx];
    const Justification& j = step.just;
    auto earlier = [&](int i) { return i >= 1 && i < n; };
    switch (j.kind) {
      case Justification::Kind::Axiom: {
        const AxiomSchema* schema = d.logic.find_axiom(j.schema);
        if (!schema) {
          return fail(n, "unknown schema " + j.schema + " for " + d.logic.name());
        }
        std::optional<Formula> inst;
        try {
          inst = instantiate(*schema, j.subst);
        } catch (const LogicError& e) {
          return fail(n, e.what());
        }
        if (*inst != step.formula) {
          return fail(n, "not the " + j.schema + " instance " + render(*inst));
        }
        break;
      }
      case Justification::Kind::MP: {
        if (!earlier(j.from) || !earlier(j.via)) {
          return fail(n, "MP must cite earlier steps");
        }
        const Formula& minor = d.steps[j.from - 1].formula;
        const Formula& major = d.steps[j.via - 1].formula;
        if (major != Formula::imp(minor, step.formula)) {
          return fail(n, "step " + std::to_string(j.via) + " is not step " +
                             std::to_string(j.from) + " -> current");
        }
        break;
      }
      case Justification::Kind::Nec: {
        if (!earlier(j.from)) return fail(n, "Nec must cite an earlier step");
        if (step.formula != Formula::obl(d.steps[j.from - 1].formula)) {
          return fail(n, "not O of step " + std::to_string(j.from));
        }
        break;
      }
    }
  }
  return ProofCheck{};
}

Formula premise_goal(std::span<const Formula> premises, const Formula& target) {
  if (premises.empty()) return target;
  Formula acc = premises.front();
  for (std::size_t i = 1; i < premises.size(); ++i) {
    acc = Formula::conj(acc, premises[i]);
  }
  return Formula::imp(acc, target);
}

ProofCheck verify_from_premises(const PremiseDerivation& pd) {
  ProofCheck inner = verify_derivation(pd.inner);
  if (!inner.ok()) return inner;
  const Formula goal = premise_goal(pd.premises, pd.target);
  const Formula& last = pd.inner.steps.back().formula;
  if (last != goal) {
    return ProofCheck{ProofCheck::Status::ConclusionMismatch, 0,
                      "derivation ends in " + render(last) + ", expected " +
                          render(goal)};
  }
  return ProofCheck{};
}

PremiseDerivation load_proof(std::string_view json_text) {
  using nlohmann::json;
  try {
    json doc = json::parse(json_text);
    std::optional<int> n;
    if (doc.contains("n") && !doc["n"].is_null()) n = doc.at("n").get<int>();
    Logic logic = get_logic(doc.at("logic").get<std::string>(), n);
    auto formula = [&](const json& j) {
      return parse(j.get<std::string>(), logic);
    };

    std::vector<Formula> premises;
    if (doc.contains("premises")) {
      for (const auto& p : doc["premises"]) premises.push_back(formula(p));
    }
    std::vector<Step> steps;
    for (const auto& s : doc.at("steps")) {
      Formula f = formula(s.at("formula"));
      const json& just = s.at("just");
      const std::string kind = just.at("kind").get<std::string>();
      Justification j;
      if (kind == "axiom") {
        std::string id = just.at("schema").get<std::string>();
        Substitution subst;
        if (just.contains("subst")) {
          for (const auto& [var, text] : just["subst"].items()) {
            subst.emplace(var, formula(text));
          }
        }
        if (subst.empty()) {
          if (const AxiomSchema* schema = logic.find_axiom(id)) {
            if (auto m = match_schema(*schema, f)) subst = std::move(*m);
          }
        }
        j = Justification::axiom(std::move(id), std::move(subst));
      } else if (kind == "mp") {
        const json& from = just.at("from");
        if (!from.is_array() || from.size() != 2) {
          throw ProofFormatError("mp needs \"from\": [i, j]");
        }
        j = Justification::mp(from[0].get<int>(), from[1].get<int>());
      } else if (kind == "nec") {
        j = Justification::nec(just.at("from").get<int>());
      } else {
        throw ProofFormatError("unknown justification kind \"" + kind + "\"");
      }
      steps.push_back(Step{std::move(f), std::move(j)});
    }
    if (steps.empty()) throw ProofFormatError("proof has no steps");
    Formula target =
        doc.contains("target") ? formula(doc["target"]) : steps.back().formula;
    return PremiseDerivation{std::move(premises), std::move(target),
                             Derivation{logic, std::move(steps)}};
  } catch (const nlohmann::json::exception& e) {
    throw ProofFormatError(std::string("malformed proof JSON: ") + e.what());
  }
}

}  // namespace swapdeon
