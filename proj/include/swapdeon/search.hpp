#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "swapdeon/formula.hpp"
#include "swapdeon/logics.hpp"
#include "swapdeon/models.hpp"

namespace swapdeon {

struct SearchBounds {
  int max_worlds = 2;  // 1..5
  std::size_t max_closure = 4096;
  std::chrono::milliseconds time_budget{10000};
  // First countermodel in enumeration order; otherwise any worker may win.
  bool deterministic = true;
  int threads = 1;
};

struct Verdict {
  enum class Kind { Countermodel, NoCounterexampleWithinBounds, BudgetExhausted };
  Kind kind = Kind::NoCounterexampleWithinBounds;
  std::optional<SwapKripkeModel> model;
  int world = 0;  // evaluation world of the countermodel
  std::size_t closure_size = 0;
  std::uint64_t frames_explored = 0;
  std::uint64_t nodes = 0;
};

const char* verdict_name(Verdict::Kind kind);

// Serial frames for k = 1..max_worlds, relation masks ascending.
std::vector<KripkeFrame> enumerate_frames(int max_worlds);

enum class SearchStatus { Complete, Stopped, Timeout };

// Confines closure member `formula` at `world` to `allowed`.
struct Pin {
  std::size_t formula = 0;
  int world = 0;
  ValueSet allowed;
};

// Visits every restricted valuation of `closure` over `frame` that respects
// `pins`, in search order; `visit` returns false to stop early.
SearchStatus valuation_search(
    const Logic& logic, const KripkeFrame& frame, const ClosureSet& closure,
    const std::function<bool(const SwapKripkeModel&)>& visit,
    std::chrono::milliseconds budget = std::chrono::milliseconds(10000),
    std::span<const Pin> pins = {});

// Throws ClosureCapError when the closure outgrows bounds.max_closure.
Verdict find_countermodel(const Logic& logic, std::span<const Formula> premises,
                          const Formula& conclusion, const SearchBounds& bounds);
Verdict check_validity_bounded(const Logic& logic, const Formula& f,
                               const SearchBounds& bounds);

}  // namespace swapdeon
