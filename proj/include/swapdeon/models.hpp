#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swapdeon/algebra.hpp"
#include "swapdeon/formula.hpp"
#include "swapdeon/logics.hpp"

namespace swapdeon {

// Worlds 0..k-1 with a serial accessibility relation.
class KripkeFrame {
 public:
  // Throws ModelError unless every world has a successor.
  KripkeFrame(std::vector<std::string> names,
              std::vector<std::vector<int>> successors);
  // Relation bit i*k + j means (w_i, w_j); worlds are named w0..w(k-1).
  static std::optional<KripkeFrame> from_mask(int k, std::uint32_t mask);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int w) const { return names_[w]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& successors(int w) const { return succ_[w]; }
  bool related(int a, int b) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> succ_;  // sorted, no duplicates
};

struct SwapKripkeModel {
  Logic logic;
  KripkeFrame frame;
  ClosureSet closure;
  std::vector<Value> table;  // table[formula * worlds + world]

  Value value(std::size_t formula, int world) const {
    return table[formula * frame.size() + world];
  }
  // Throws ModelError when `f` is outside the closure.
  Value value_of(const Formula& f, int world) const;
};

struct Violation {
  std::string world;
  std::string formula;
  std::string rule;      // "neg", "and", "O", "CL", "CN-REST.2", ...
  std::string expected;  // allowed values, "{T,t}"
  std::string actual;
};

struct ValuationReport {
  std::vector<Violation> violations;
  // Restriction instances whose premise held but whose referenced formulas
  // are missing from the closure.
  std::vector<std::string> unchecked;
  bool ok() const { return violations.empty(); }
};

ValuationReport check_valuation(const SwapKripkeModel& m);

bool truth_at(const SwapKripkeModel& m, int world, const Formula& f);
bool holds(const SwapKripkeModel& m, int world, std::span<const Formula> gamma);

// Model JSON; a top-level "model" member is unwrapped first. `logic`
// overrides the file's logic (used for restriction-disabled runs).
SwapKripkeModel load_model(std::string_view json_text,
                           const std::optional<Logic>& logic = std::nullopt);
std::string dump_model(const SwapKripkeModel& m, int indent = 2);

}  // namespace swapdeon
