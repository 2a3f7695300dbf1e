#include "swapdeon/search.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "solver.hpp"
#include "swapdeon/error.hpp"

namespace swapdeon {

using detail::Clock;
using detail::Solver;

const char* verdict_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Countermodel:
      return "countermodel";
    case Verdict::Kind::NoCounterexampleWithinBounds:
      return "no_counterexample_within_bounds";
    case Verdict::Kind::BudgetExhausted:
      return "budget_exhausted";
  }
  return "?";
}

namespace {

void check_worlds(int max_worlds) {
  if (max_worlds < 1 || max_worlds > 5) {
    throw Error("max_worlds must be between 1 and 5");
  }
}

std::uint64_t masks_for(int k) { return std::uint64_t{1} << (k * k); }

}  // namespace

std::vector<KripkeFrame> enumerate_frames(int max_worlds) {
  check_worlds(max_worlds);
  std::vector<KripkeFrame> out;
  for (int k = 1; k <= max_worlds; ++k) {
    for (std::uint64_t mask = 0; mask < masks_for(k); ++mask) {
      if (auto f = KripkeFrame::from_mask(k, static_cast<std::uint32_t>(mask))) {
        out.push_back(std::move(*f));
      }
    }
  }
  return out;
}

SearchStatus valuation_search(
    const Logic& logic, const KripkeFrame& frame, const ClosureSet& closure,
    const std::function<bool(const SwapKripkeModel&)>& visit,
    std::chrono::milliseconds budget, std::span<const Pin> pins) {
  Solver solver(logic, frame, closure);
  for (const Pin& pin : pins) solver.restrict(pin.formula, pin.world, pin.allowed);
  std::function<bool(const std::vector<Value>&)> adapter =
      [&](const std::vector<Value>& table) {
        return visit(SwapKripkeModel{logic, frame, closure, table});
      };
  switch (solver.solve(adapter, Clock::now() + budget)) {
    case Solver::Status::Exhausted:
      return SearchStatus::Complete;
    case Solver::Status::Stopped:
      return SearchStatus::Stopped;
    default:
      return SearchStatus::Timeout;
  }
}

Verdict find_countermodel(const Logic& logic, std::span<const Formula> premises,
                          const Formula& conclusion, const SearchBounds& bounds) {
  check_worlds(bounds.max_worlds);
  std::vector<Formula> targets(premises.begin(), premises.end());
  targets.push_back(conclusion);
  const ClosureSet cs = closure(targets, logic, bounds.max_closure);
  std::vector<std::size_t> premise_idx;
  for (const Formula& p : premises) premise_idx.push_back(*cs.index_of(p));
  const std::size_t conclusion_idx = *cs.index_of(conclusion);
  const Algebra& alg = logic.algebra();

  std::vector<std::uint64_t> slot_start{0};
  for (int k = 1; k <= bounds.max_worlds; ++k) {
    slot_start.push_back(slot_start.back() + masks_for(k));
  }
  const std::uint64_t total = slot_start.back();
  const auto deadline = Clock::now() + bounds.time_budget;

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<bool> cancel{false};
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> frames{0};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex result_mutex;
  Verdict result;
  result.closure_size = cs.size();

  auto worker = [&] {
    for (;;) {
      const std::uint64_t slot = next.fetch_add(1);
      if (slot >= total || cancel.load()) return;
      if (slot * 8 > best.load()) return;
      // Per-frame solves are often too small to reach the solver's own poll.
      if (Clock::now() > deadline) {
        if (!cancel.exchange(true)) timed_out.store(true);
        return;
      }
      int k = 1;
      while (slot >= slot_start[k]) ++k;
      auto frame = KripkeFrame::from_mask(
          k, static_cast<std::uint32_t>(slot - slot_start[k - 1]));
      if (!frame) continue;
      frames.fetch_add(1);
      for (int w = 0; w < k; ++w) {
        const std::uint64_t key = slot * 8 + w;
        Solver solver(logic, *frame, cs);
        for (std::size_t p : premise_idx) solver.restrict(p, w, alg.designated());
        solver.restrict(conclusion_idx, w, alg.undesignated());
        std::vector<Value> found;
        std::function<bool(const std::vector<Value>&)> take =
            [&](const std::vector<Value>& table) {
              found = table;
              return false;
            };
        // Settle existence with fail-first branching, then rerun in variable
        // order so the reported model is the first one in enumeration order.
        auto status = solver.solve(take, deadline, &cancel,
                                   Solver::Order::FailFirst);
        if (status == Solver::Status::Stopped) {
          status = solver.solve(take, deadline, &cancel);
        }
        nodes.fetch_add(solver.nodes());
        if (status == Solver::Status::Timeout) {
          if (!cancel.load()) timed_out.store(true);
          cancel.store(true);
          return;
        }
        if (status == Solver::Status::Stopped) {
          std::lock_guard lock(result_mutex);
          if (key < best.load()) {
            best.store(key);
            result.model = SwapKripkeModel{logic, *frame, cs, found};
            result.world = w;
          }
          if (!bounds.deterministic) cancel.store(true);
          return;
        }
      }
    }
  };

  const int threads = std::max(1, bounds.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  result.frames_explored = frames.load();
  result.nodes = nodes.load();
  if (result.model) {
    result.kind = Verdict::Kind::Countermodel;
  } else if (timed_out.load()) {
    result.kind = Verdict::Kind::BudgetExhausted;
  } else {
    result.kind = Verdict::Kind::NoCounterexampleWithinBounds;
  }
  return result;
}

Verdict check_validity_bounded(const Logic& logic, const Formula& f,
                               const SearchBounds& bounds) {
  return find_countermodel(logic, {}, f, bounds);
}

}  // namespace swapdeon
