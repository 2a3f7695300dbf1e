#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace swapdeon {

// Σ carries the consistency connective ∘; the C-family signature does not.
enum class Signature { Sigma, SigmaC1D };

enum class Kind : std::uint8_t { Atom, Meta, Neg, Circ, Obl, And, Or, Imp };

// Immutable formula tree with structural equality. Copies share nodes.
// `Meta` leaves are schema metavariables; the parser never produces them.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula meta(std::string name);
  static Formula neg(Formula f);
  static Formula circ(Formula f);
  static Formula obl(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula unary(Kind kind, Formula f);
  static Formula binary(Kind kind, Formula l, Formula r);

  Kind kind() const;
  const std::string& name() const;
  // Operand of a unary node.
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;
  int arity() const;
  bool is_leaf() const { return arity() == 0; }

  std::size_t hash() const;
  std::size_t size() const;
  int depth() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool is_unary(Kind kind);
bool is_binary(Kind kind);

// Defined connectives. Which ones are available, and how strong negation
// unfolds, depends on the dialect of the active logic.
enum class Sugar {
  Bottom,           // bot(a)
  StrongNeg,        // snot(a)
  StrongNegN,       // snotn(a)
  Permission,       // P a
  Power,            // a^k
  PowerConjunction  // a^(k)
};

// The slice of a logic the parser needs: its signature and, for the
// C-family, the hierarchy level n (n = 1 for C1D). `sugar` is false for the
// primitive-only dialect used when no logic is selected.
struct Dialect {
  Signature signature = Signature::Sigma;
  int level = 0;
  bool sugar = true;

  static Dialect primitive(Signature s) { return Dialect{s, 0, false}; }
  bool c_family() const { return signature == Signature::SigmaC1D; }
};

// a^0 = a, a^(k+1) = ~(a^k & ~a^k).
Formula power(const Formula& f, int k);
// a^(k) = a^1 & ... & a^k, left-associated; k >= 1.
Formula power_conjunction(const Formula& f, int k);

// Primitive expansion of a defined connective. `k` is used by Power and
// PowerConjunction only. Throws ParseError(Sugar) when the dialect does not
// support the sugar.
Formula expand_defined(Sugar sugar, const Formula& arg, const Dialect& dialect,
                       int k = 0);

Formula parse(std::string_view text, const Dialect& dialect);
inline Formula parse(std::string_view text, Signature signature) {
  return parse(text, Dialect::primitive(signature));
}

enum class RenderMode { Minimal, FullyParenthesized };
std::string render(const Formula& f, RenderMode mode = RenderMode::Minimal);

// Replace metavariables; unbound ones are left in place.
Formula substitute(const Formula& f,
                   const std::unordered_map<std::string, Formula>& subst);

// Atoms in first-occurrence (pre-order) order.
std::vector<std::string> atoms(const Formula& f);

// Rename atoms; names missing from the map are kept.
Formula rename_atoms(const Formula& f,
                     const std::unordered_map<std::string, std::string>& map);

}  // namespace swapdeon

template <>
struct std::hash<swapdeon::Formula> {
  std::size_t operator()(const swapdeon::Formula& f) const noexcept {
    return f.hash();
  }
};

namespace swapdeon {

// Extra members a restricted logic needs next to each closure root so its
// valuation restrictions can be checked.
struct ClosureRules {
  // a -> ~a, a & ~a   (da Costa style restriction, three-valued logics)
  bool contradiction_pairs = false;
  // a -> a^1 .. a^n with the ~a^k and a^k & ~a^k links (C_n restrictions)
  int hierarchy_depth = 0;
  std::size_t cap = 4096;
};

// Ordered, subformula-closed formula set. Children precede parents.
class ClosureSet {
 public:
  static ClosureSet of_subformulas(std::span<const Formula> targets,
                                   std::size_t cap = 4096);
  static ClosureSet build(std::span<const Formula> targets,
                          const ClosureRules& rules);

  std::size_t size() const { return order_.size(); }
  const Formula& operator[](std::size_t i) const { return order_[i]; }
  const std::vector<Formula>& formulas() const { return order_; }
  std::optional<std::size_t> index_of(const Formula& f) const;
  bool contains(const Formula& f) const { return index_.contains(f); }

  // Child positions of member i (-1 when absent).
  int left_index(std::size_t i) const { return kids_[i][0]; }
  int right_index(std::size_t i) const { return kids_[i][1]; }

  // Members whose restriction dependencies were expanded (the subformula
  // closure of the targets).
  const std::vector<std::size_t>& roots() const { return roots_; }

  bool operator==(const ClosureSet& other) const {
    return order_ == other.order_;
  }

 private:
  void insert(const Formula& f, std::size_t cap);

  std::vector<Formula> order_;
  std::unordered_map<Formula, std::size_t> index_;
  std::vector<std::array<int, 2>> kids_;
  std::vector<std::size_t> roots_;
};

}  // namespace swapdeon
