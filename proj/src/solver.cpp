#include "solver.hpp"

namespace swapdeon::detail {

Solver::Solver(const Logic& logic, const KripkeFrame& frame,
               const ClosureSet& closure)
    : alg_(logic.algebra()),
      worlds_(frame.size()),
      size_(static_cast<int>(closure.size()) * frame.size()) {
  const int m = alg_.size();
  dom_.assign(size_, alg_.all());
  watch_.resize(size_);
  queued_.assign(0, 0);

  auto unary_table = [&](auto&& f) {
    std::vector<ValueSet> t(m);
    for (int a = 0; a < m; ++a) t[a] = f(static_cast<Value>(a));
    return add_table(std::move(t));
  };
  const int neg = unary_table([&](Value a) { return alg_.negation(a); });
  const int circ = alg_.has_circ()
                       ? unary_table([&](Value a) { return alg_.consistency(a); })
                       : -1;
  int binary[3];
  for (int op = 0; op < 3; ++op) {
    std::vector<ValueSet> t(m * m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        auto va = static_cast<Value>(a);
        auto vb = static_cast<Value>(b);
        ValueSet out = alg_.binary(static_cast<BinOp>(op), va, vb);
        if (logic.has(Restriction::CAHash) && alg_.is_classical(va) &&
            alg_.is_classical(vb)) {
          out = out & alg_.classical();
        }
        t[a * m + b] = out;
      }
    }
    binary[op] = add_table(std::move(t));
  }
  const int strict = unary_table([&](Value a) {
    return alg_.is_designated(a) ? ValueSet::single(alg_.top()) : alg_.all();
  });
  const int cl = unary_table([&](Value a) {
    return a == alg_.middle(0) ? ValueSet::single(alg_.top()) : alg_.all();
  });
  const int cn_conj = unary_table([&](Value a) {
    if (alg_.is_classical(a)) return alg_.all();
    return a == alg_.middle(0) ? ValueSet::single(alg_.top())
                               : alg_.inconsistent();
  });
  const int cn_power = unary_table([&](Value a) {
    if (alg_.is_classical(a) || a == alg_.middle(0)) return alg_.all();
    return ValueSet::single(static_cast<Value>(a - 1));
  });
  const int boo = unary_table([&](Value a) {
    return alg_.is_classical(a) ? alg_.classical() : alg_.all();
  });

  const bool has_cl = logic.has(Restriction::CL);
  const bool has_cn = logic.has(Restriction::CnRest);
  const bool has_boo =
      logic.has(Restriction::CAO) || logic.has(Restriction::CnOBoo);
  const bool has_strict = logic.has(Restriction::StrictO);

  for (std::size_t i = 0; i < closure.size(); ++i) {
    const Formula& f = closure[i];
    const int l = closure.left_index(i);
    const int r = closure.right_index(i);
    std::optional<std::size_t> conj, one, obl;
    if (has_cl || has_cn) conj = closure.index_of(Formula::conj(f, Formula::neg(f)));
    if (has_cn) one = closure.index_of(power(f, 1));
    if (has_boo) obl = closure.index_of(Formula::obl(f));

    for (int w = 0; w < worlds_; ++w) {
      const int y = var(i, w);
      switch (f.kind()) {
        case Kind::Neg:
          add_pair(var(l, w), y, neg);
          break;
        case Kind::Circ:
          add_pair(var(l, w), y, circ);
          break;
        case Kind::And:
        case Kind::Or:
        case Kind::Imp: {
          int op = f.kind() == Kind::And ? 0 : f.kind() == Kind::Or ? 1 : 2;
          Constraint c{Shape::Triple, var(l, w), var(r, w), y, binary[op], {}};
          add_constraint(std::move(c));
          break;
        }
        case Kind::Obl: {
          Constraint c{Shape::Obl, -1, -1, y, -1, {}};
          for (int s : frame.successors(w)) c.xs.push_back(var(l, s));
          add_constraint(std::move(c));
          if (has_strict) {
            for (int s : frame.successors(w)) add_pair(y, var(l, s), strict);
          }
          break;
        }
        default:
          break;
      }
      if (has_cl && conj) add_pair(y, var(*conj, w), cl);
      if (has_cn && conj) add_pair(y, var(*conj, w), cn_conj);
      if (has_cn && one) add_pair(y, var(*one, w), cn_power);
      if (has_boo && obl) add_pair(y, var(*obl, w), boo);
    }
  }
  queued_.assign(cons_.size(), 0);
}

int Solver::add_table(std::vector<ValueSet> table) {
  tables_.push_back(std::move(table));
  return static_cast<int>(tables_.size()) - 1;
}

void Solver::add_pair(int a, int b, int table) {
  add_constraint(Constraint{Shape::Pair, a, b, -1, table, {}});
}

void Solver::add_constraint(Constraint c) {
  const int id = static_cast<int>(cons_.size());
  auto watch = [&](int v) {
    if (v >= 0 && (watch_[v].empty() || watch_[v].back() != id)) {
      watch_[v].push_back(id);
    }
  };
  watch(c.a);
  watch(c.b);
  watch(c.c);
  for (int x : c.xs) watch(x);
  cons_.push_back(std::move(c));
}

void Solver::restrict(std::size_t formula, int world, ValueSet allowed) {
  int v = var(formula, world);
  dom_[v] = dom_[v] & allowed;
  if (dom_[v].empty()) failed_init_ = true;
}

bool Solver::set(int v, ValueSet d) {
  if (d == dom_[v]) return true;
  trail_.emplace_back(v, dom_[v]);
  dom_[v] = d;
  if (d.empty()) return false;
  for (int c : watch_[v]) {
    if (!queued_[c]) {
      queued_[c] = 1;
      queue_.push_back(c);
    }
  }
  return true;
}

bool Solver::revise(const Constraint& c) {
  const int m = alg_.size();
  switch (c.shape) {
    case Shape::Pair: {
      const auto& t = tables_[c.table];
      ValueSet da = dom_[c.a];
      ValueSet db = dom_[c.b];
      ValueSet sa, sb;
      for (Value va : da) {
        ValueSet hit = t[va] & db;
        if (!hit.empty()) {
          sa.insert(va);
          sb = sb | hit;
        }
      }
      return set(c.a, sa) && set(c.b, sb);
    }
    case Shape::Triple: {
      const auto& t = tables_[c.table];
      ValueSet dx = dom_[c.a];
      ValueSet dz = dom_[c.b];
      ValueSet dy = dom_[c.c];
      ValueSet sx, sz, sy;
      for (Value vx : dx) {
        for (Value vz : dz) {
          if (c.a == c.b && vx != vz) continue;
          ValueSet hit = t[vx * m + vz] & dy;
          if (!hit.empty()) {
            sx.insert(vx);
            sz.insert(vz);
            sy = sy | hit;
          }
        }
      }
      return set(c.a, sx) && set(c.b, sz) && set(c.c, sy);
    }
    case Shape::Obl: {
      const ValueSet des = alg_.designated();
      const ValueSet und = alg_.undesignated();
      int can_des = 0;
      int can_und = 0;
      for (int x : c.xs) {
        can_des += !(dom_[x] & des).empty();
        can_und += !(dom_[x] & und).empty();
      }
      const int k = static_cast<int>(c.xs.size());
      ValueSet allowed_y;
      if (can_des == k) allowed_y = allowed_y | des;
      if (can_und > 0) allowed_y = allowed_y | und;
      ValueSet dy = dom_[c.c] & allowed_y;
      if (!set(c.c, dy)) return false;
      const bool y_des = !(dy & des).empty();
      const bool y_und = !(dy & und).empty();
      for (int x : c.xs) {
        ValueSet dx = dom_[x];
        bool x_des = !(dx & des).empty();
        bool x_und = !(dx & und).empty();
        int others_des = can_des - x_des;
        int others_und = can_und - x_und;
        ValueSet keep;
        if ((y_des && others_des == k - 1) || (y_und && others_und > 0)) {
          keep = keep | des;
        }
        if (y_und) keep = keep | und;
        if (!set(x, dx & keep)) return false;
      }
      return true;
    }
  }
  return true;
}

bool Solver::propagate() {
  while (!queue_.empty()) {
    int c = queue_.back();
    queue_.pop_back();
    queued_[c] = 0;
    if (!revise(cons_[c])) {
      for (int q : queue_) queued_[q] = 0;
      queue_.clear();
      return false;
    }
  }
  return true;
}

bool Solver::search(int from) {
  if ((++nodes_ & 255) == 0) {
    if (Clock::now() > deadline_ ||
        (cancel_ && cancel_->load(std::memory_order_relaxed))) {
      status_ = Status::Timeout;
      return false;
    }
  }
  const int v = pick(from);
  if (v == size_) {
    for (int i = 0; i < size_; ++i) solution_[i] = dom_[i].front();
    if (!(*visit_)(solution_)) {
      status_ = Status::Stopped;
      return false;
    }
    return true;
  }
  for (Value value : dom_[v]) {
    const std::size_t mark = trail_.size();
    bool ok = set(v, ValueSet::single(value)) && propagate();
    if (ok && !search(order_ == Order::Lexicographic ? v + 1 : 0)) return false;
    while (trail_.size() > mark) {
      dom_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
  }
  return true;
}

int Solver::pick(int from) const {
  if (order_ == Order::Lexicographic) {
    int v = from;
    while (v < size_ && dom_[v].size() == 1) ++v;
    return v;
  }
  int best = size_;
  int best_size = 1 << 30;
  for (int v = 0; v < size_; ++v) {
    const int s = dom_[v].size();
    if (s > 1 && s < best_size) {
      best = v;
      best_size = s;
      if (s == 2) break;
    }
  }
  return best;
}

Solver::Status Solver::solve(
    const std::function<bool(const std::vector<Value>&)>& visit,
    Clock::time_point deadline, const std::atomic<bool>* cancel, Order order) {
  visit_ = &visit;
  order_ = order;
  deadline_ = deadline;
  cancel_ = cancel;
  status_ = Status::Exhausted;
  solution_.assign(size_, 0);
  if (failed_init_) return status_;
  for (std::size_t c = 0; c < cons_.size(); ++c) {
    queued_[c] = 1;
    queue_.push_back(static_cast<int>(c));
  }
  const std::size_t mark = trail_.size();
  if (propagate()) search(0);
  while (trail_.size() > mark) {
    dom_[trail_.back().first] = trail_.back().second;
    trail_.pop_back();
  }
  return status_;
}

}  // namespace swapdeon::detail
