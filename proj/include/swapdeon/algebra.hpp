#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swapdeon {

// Position of a snapshot in its algebra's domain order.
using Value = std::uint8_t;

// Set of domain positions; at most 32 values.
class ValueSet {
 public:
  constexpr ValueSet() = default;
  constexpr explicit ValueSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ValueSet single(Value v) { return ValueSet(1u << v); }
  static constexpr ValueSet first(int count) {
    return ValueSet(count >= 32 ? ~0u : (1u << count) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Value v) const { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(ValueSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr Value front() const {
    return static_cast<Value>(std::countr_zero(bits_));
  }
  constexpr void insert(Value v) { bits_ |= 1u << v; }

  constexpr ValueSet operator&(ValueSet o) const { return ValueSet(bits_ & o.bits_); }
  constexpr ValueSet operator|(ValueSet o) const { return ValueSet(bits_ | o.bits_); }
  constexpr ValueSet operator-(ValueSet o) const { return ValueSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const ValueSet&) const = default;

  class iterator {
   public:
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr Value operator*() const {
      return static_cast<Value>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint32_t bits_ = 0;
};

// Bit tuple z_1..z_m; coordinate i lives in bit i-1.
struct Snapshot {
  std::uint32_t bits = 0;
  int width = 0;

  int coord(int i) const { return (bits >> (i - 1)) & 1u; }
  std::string to_string() const;  // "(1,0,1)"
  bool operator==(const Snapshot&) const = default;
};

enum class NegVariant { Basic, Strong };
enum class CircVariant { None, Basic, Exact, Deterministic };
enum class BinOp { And, Or, Imp };
enum class Op { And, Or, Imp, Neg, Circ };

std::optional<Op> parse_op(std::string_view name);
const char* op_name(Op op);

struct ValueClass {
  bool designated = false;
  bool undesignated = false;
  bool inconsistent = false;
  bool classical = false;
};

// A finite swap structure: domain, value classes and multioperations, all
// tabulated at construction.
class Algebra {
 public:
  // Domain A = {T, t, F}.
  static Algebra three_valued(NegVariant neg, CircVariant circ);
  // Domain A_n, 1 <= n <= 16; binary operations keep Boo inputs in Boo.
  static Algebra hierarchy(int n);

  int size() const { return static_cast<int>(domain_.size()); }
  int width() const { return width_; }
  bool is_hierarchy() const { return hierarchy_; }
  int level() const { return width_ - 1; }
  NegVariant neg_variant() const { return neg_; }
  CircVariant circ_variant() const { return circ_; }
  bool has_circ() const { return circ_ != CircVariant::None; }

  const std::vector<Snapshot>& domain() const { return domain_; }
  const Snapshot& snapshot(Value v) const { return domain_[v]; }
  const std::string& label(Value v) const { return labels_[v]; }
  std::optional<Value> parse_label(std::string_view text) const;

  Value top() const { return 0; }
  Value bottom() const { return static_cast<Value>(size() - 1); }
  // t_i; for the three-valued domain only i = 0 exists (t).
  Value middle(int i) const { return static_cast<Value>(1 + i); }

  ValueSet all() const { return ValueSet::first(size()); }
  ValueSet designated() const { return all() - ValueSet::single(bottom()); }
  ValueSet undesignated() const { return ValueSet::single(bottom()); }
  ValueSet inconsistent() const { return designated() - ValueSet::single(top()); }
  ValueSet classical() const {
    return ValueSet::single(top()) | ValueSet::single(bottom());
  }
  bool is_designated(Value v) const { return v != bottom(); }
  bool is_classical(Value v) const { return v == top() || v == bottom(); }
  ValueClass classify(Value v) const;

  ValueSet binary(BinOp op, Value a, Value b) const {
    return binary_[static_cast<int>(op)][a * size() + b];
  }
  ValueSet negation(Value a) const { return neg_table_[a]; }
  // Throws LogicError when the signature lacks the consistency connective.
  ValueSet consistency(Value a) const;
  // Õ(X): throws ModelError on an empty X.
  ValueSet obligation(ValueSet xs) const;

  std::string format_set(ValueSet s) const;  // "{T,t}"
  // Plain-text table in domain order; throws LogicError if `op` is unbound.
  std::string truth_table(Op op) const;

 private:
  Algebra() = default;
  void tabulate();

  bool hierarchy_ = false;
  int width_ = 2;
  NegVariant neg_ = NegVariant::Basic;
  CircVariant circ_ = CircVariant::None;
  std::vector<Snapshot> domain_;
  std::vector<std::string> labels_;
  std::array<std::vector<ValueSet>, 3> binary_;
  std::vector<ValueSet> neg_table_;
  std::vector<ValueSet> circ_table_;
};

}  // namespace swapdeon
