#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swapdeon/formula.hpp"
#include "swapdeon/logics.hpp"

namespace swapdeon {

// Step references are 1-based and must point strictly backwards.
struct Justification {
  enum class Kind { Axiom, MP, Nec };
  Kind kind = Kind::Axiom;
  std::string schema;  // Axiom
  Substitution subst;  // Axiom
  int from = 0;        // MP: minor premise i; Nec: step i
  int via = 0;         // MP: major premise j = (i -> current)

  static Justification axiom(std::string schema, Substitution subst) {
    return {Kind::Axiom, std::move(schema), std::move(subst), 0, 0};
  }
  static Justification mp(int i, int j) { return {Kind::MP, {}, {}, i, j}; }
  static Justification nec(int i) { return {Kind::Nec, {}, {}, i, 0}; }
};

struct Step {
  Formula formula;
  Justification just;
};

struct Derivation {
  Logic logic;
  std::vector<Step> steps;
};

struct PremiseDerivation {
  std::vector<Formula> premises;  // empty: the derivation proves the target
  Formula target;
  Derivation inner;
};

struct ProofCheck {
  enum class Status { Ok, StepFailure, ConclusionMismatch };
  Status status = Status::Ok;
  int step = 0;  // 1-based failing step for StepFailure
  std::string reason;
  bool ok() const { return status == Status::Ok; }
};

ProofCheck verify_derivation(const Derivation& d);
// Ok iff the inner derivation verifies and ends in (g1 & ... & gk) -> target
// (left-associated, declared order), or in the target itself when k = 0.
ProofCheck verify_from_premises(const PremiseDerivation& pd);

// (g1 & ... & gk) -> target, or the target itself for k = 0.
Formula premise_goal(std::span<const Formula> premises, const Formula& target);

// Proof JSON. Axiom steps with an empty "subst" are filled in by matching
// the step formula against the named schema. Throws ProofFormatError.
PremiseDerivation load_proof(std::string_view json_text);

}  // namespace swapdeon
