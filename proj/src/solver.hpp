#pragma once

// Finite-domain constraint solver behind valuation search. Variables are the
// (formula, world) cells of a valuation table; each constraint encodes one
// multioperation membership condition or one valuation restriction.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "swapdeon/algebra.hpp"
#include "swapdeon/formula.hpp"
#include "swapdeon/logics.hpp"
#include "swapdeon/models.hpp"

namespace swapdeon::detail {

using Clock = std::chrono::steady_clock;

class Solver {
 public:
  enum class Status { Exhausted, Stopped, Timeout };
  // Lexicographic visits solutions in variable order; FailFirst branches on
  // the smallest domain and only suits existence checks.
  enum class Order { Lexicographic, FailFirst };

  Solver(const Logic& logic, const KripkeFrame& frame, const ClosureSet& closure);

  // Unary filter applied before solving.
  void restrict(std::size_t formula, int world, ValueSet allowed);

  // Visits every solution in lexicographic order of the variable sequence
  // (formulas in closure order, worlds ascending, values in domain order).
  // `visit` returns false to stop. `cancel` is polled with the deadline.
  Status solve(const std::function<bool(const std::vector<Value>&)>& visit,
               Clock::time_point deadline,
               const std::atomic<bool>* cancel = nullptr,
               Order order = Order::Lexicographic);

  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class Shape : std::uint8_t { Pair, Triple, Obl };
  struct Constraint {
    Shape shape;
    int a = -1, b = -1, c = -1;  // Pair: a -> b; Triple: a, b -> c
    int table = -1;
    std::vector<int> xs;  // Obl: successor cells; the obligation cell is c
  };

  int var(std::size_t formula, int world) const {
    return static_cast<int>(formula) * worlds_ + world;
  }
  int add_table(std::vector<ValueSet> table);
  void add_pair(int a, int b, int table);
  void add_constraint(Constraint c);

  bool set(int v, ValueSet d);
  bool revise(const Constraint& c);
  bool propagate();
  bool search(int from);
  int pick(int from) const;

  const Algebra& alg_;
  int worlds_;
  int size_;
  std::vector<ValueSet> dom_;
  std::vector<std::vector<ValueSet>> tables_;
  std::vector<Constraint> cons_;
  std::vector<std::vector<int>> watch_;  // var -> constraint ids
  std::vector<int> queue_;
  std::vector<char> queued_;
  std::vector<std::pair<int, ValueSet>> trail_;
  bool failed_init_ = false;

  const std::function<bool(const std::vector<Value>&)>* visit_ = nullptr;
  Clock::time_point deadline_;
  const std::atomic<bool>* cancel_ = nullptr;
  std::uint64_t nodes_ = 0;
  Status status_ = Status::Exhausted;
  Order order_ = Order::Lexicographic;
  std::vector<Value> solution_;
};

}  // namespace swapdeon::detail
