#include "swapdeon/formula.hpp"

#include <cassert>
#include <unordered_set>

#include "swapdeon/error.hpp"

namespace swapdeon {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t hash = 0;
  std::size_t size = 1;
  int depth = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_unary(Kind kind) {
  return kind == Kind::Neg || kind == Kind::Circ || kind == Kind::Obl;
}

bool is_binary(Kind kind) {
  return kind == Kind::And || kind == Kind::Or || kind == Kind::Imp;
}

Formula Formula::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->hash = mix(std::hash<std::string>{}(name), 1);
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::meta(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Meta;
  node->hash = mix(std::hash<std::string>{}(name), 2);
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::unary(Kind kind, Formula f) {
  assert(is_unary(kind));
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->hash = mix(static_cast<std::size_t>(kind) * 131, f.hash());
  node->size = f.size() + 1;
  node->depth = f.depth() + 1;
  node->lhs = std::move(f);
  return Formula(std::move(node));
}

Formula Formula::binary(Kind kind, Formula l, Formula r) {
  assert(is_binary(kind));
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->hash =
      mix(mix(static_cast<std::size_t>(kind) * 131, l.hash()), r.hash());
  node->size = l.size() + r.size() + 1;
  node->depth = std::max(l.depth(), r.depth()) + 1;
  node->lhs = std::move(l);
  node->rhs = std::move(r);
  return Formula(std::move(node));
}

Formula Formula::neg(Formula f) { return unary(Kind::Neg, std::move(f)); }
Formula Formula::circ(Formula f) { return unary(Kind::Circ, std::move(f)); }
Formula Formula::obl(Formula f) { return unary(Kind::Obl, std::move(f)); }
Formula Formula::conj(Formula l, Formula r) {
  return binary(Kind::And, std::move(l), std::move(r));
}
Formula Formula::disj(Formula l, Formula r) {
  return binary(Kind::Or, std::move(l), std::move(r));
}
Formula Formula::imp(Formula l, Formula r) {
  return binary(Kind::Imp, std::move(l), std::move(r));
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::child() const { return *node_->lhs; }
const Formula& Formula::left() const { return *node_->lhs; }
const Formula& Formula::right() const { return *node_->rhs; }

int Formula::arity() const {
  if (is_unary(node_->kind)) return 1;
  if (is_binary(node_->kind)) return 2;
  return 0;
}

std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }
int Formula::depth() const { return node_->depth; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size) return false;
  switch (arity()) {
    case 0:
      return a.name == b.name;
    case 1:
      return *a.lhs == *b.lhs;
    default:
      return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
  }
}

Formula power(const Formula& f, int k) {
  Formula cur = f;
  for (int i = 0; i < k; ++i) {
    cur = Formula::neg(Formula::conj(cur, Formula::neg(cur)));
  }
  return cur;
}

Formula power_conjunction(const Formula& f, int k) {
  assert(k >= 1);
  Formula step = power(f, 1);
  Formula acc = step;
  for (int i = 2; i <= k; ++i) {
    step = power(step, 1);
    acc = Formula::conj(acc, step);
  }
  return acc;
}

namespace {

[[noreturn]] void sugar_error(const std::string& message) {
  throw ParseError(ParseError::Kind::Sugar, 0, message);
}

Formula bottom_of(const Formula& a, const Dialect& d) {
  Formula contradiction = Formula::conj(a, Formula::neg(a));
  if (!d.c_family()) return Formula::conj(contradiction, Formula::circ(a));
  return Formula::conj(contradiction, power(a, 1));
}

Formula strong_negation(const Formula& a, const Dialect& d) {
  if (!d.c_family()) return Formula::imp(a, bottom_of(a, d));
  return Formula::conj(Formula::neg(a), power(a, 1));
}

Formula strong_negation_n(const Formula& a, const Dialect& d) {
  return Formula::conj(Formula::neg(a), power_conjunction(a, d.level));
}

}  // namespace

Formula expand_defined(Sugar sugar, const Formula& arg, const Dialect& d,
                       int k) {
  if (!d.sugar) sugar_error("defined connectives need a selected logic");
  switch (sugar) {
    case Sugar::Bottom:
      if (d.c_family() && d.level != 1) {
        sugar_error("bot is not defined for the C_n hierarchy");
      }
      return bottom_of(arg, d);
    case Sugar::StrongNeg:
      return strong_negation(arg, d);
    case Sugar::StrongNegN:
      if (!d.c_family()) sugar_error("snotn requires a C-family logic");
      return strong_negation_n(arg, d);
    case Sugar::Permission: {
      auto sneg = [&](const Formula& f) {
        return d.c_family() ? strong_negation_n(f, d) : strong_negation(f, d);
      };
      return sneg(Formula::obl(sneg(arg)));
    }
    case Sugar::Power:
    case Sugar::PowerConjunction:
      if (!d.c_family()) sugar_error("'^' requires a C-family logic");
      if (k > d.level) {
        sugar_error("exponent " + std::to_string(k) + " exceeds n = " +
                    std::to_string(d.level));
      }
      if (sugar == Sugar::Power) return power(arg, k);
      if (k < 1) sugar_error("a^(k) needs k >= 1");
      return power_conjunction(arg, k);
  }
  sugar_error("unknown defined connective");
}

namespace {

int precedence(Kind kind) {
  switch (kind) {
    case Kind::Imp:
      return 1;
    case Kind::Or:
      return 2;
    case Kind::And:
      return 3;
    case Kind::Neg:
    case Kind::Circ:
    case Kind::Obl:
      return 4;
    default:
      return 5;
  }
}

const char* binary_symbol(Kind kind) {
  switch (kind) {
    case Kind::And:
      return " & ";
    case Kind::Or:
      return " | ";
    default:
      return " -> ";
  }
}

void render_into(const Formula& f, RenderMode mode,
                 std::string& out) {
  auto wrapped = [&](const Formula& g, bool parens) {
    if (parens) out += '(';
    render_into(g, mode, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Meta:
      out += f.name();
      return;
    case Kind::Neg:
    case Kind::Circ:
    case Kind::Obl: {
      const Formula& c = f.child();
      bool parens = is_binary(c.kind());
      if (f.kind() == Kind::Neg) {
        out += '~';
      } else if (f.kind() == Kind::Circ) {
        out += '@';
      } else {
        out += parens ? "O" : "O ";
      }
      wrapped(c, parens);
      return;
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Imp: {
      if (mode == RenderMode::FullyParenthesized) {
        auto part = [&](const Formula& g) { wrapped(g, is_binary(g.kind())); };
        part(f.left());
        out += binary_symbol(f.kind());
        part(f.right());
        return;
      }
      int p = precedence(f.kind());
      int pl = precedence(f.left().kind());
      int pr = precedence(f.right().kind());
      // & and | associate to the left, -> to the right.
      bool left_parens = f.kind() == Kind::Imp ? pl <= p : pl < p;
      bool right_parens = f.kind() == Kind::Imp ? pr < p : pr <= p;
      wrapped(f.left(), left_parens);
      out += binary_symbol(f.kind());
      wrapped(f.right(), right_parens);
      return;
    }
  }
}

}  // namespace

std::string render(const Formula& f, RenderMode mode) {
  std::string out;
  render_into(f, mode, out);
  return out;
}

Formula substitute(const Formula& f,
                   const std::unordered_map<std::string, Formula>& subst) {
  switch (f.arity()) {
    case 0:
      if (f.kind() == Kind::Meta) {
        auto it = subst.find(f.name());
        if (it != subst.end()) return it->second;
      }
      return f;
    case 1:
      return Formula::unary(f.kind(), substitute(f.child(), subst));
    default:
      return Formula::binary(f.kind(), substitute(f.left(), subst),
                             substitute(f.right(), subst));
  }
}

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out,
                   std::unordered_set<std::string>& seen) {
  if (f.kind() == Kind::Atom) {
    if (seen.insert(f.name()).second) out.push_back(f.name());
    return;
  }
  if (f.arity() >= 1) collect_atoms(f.left(), out, seen);
  if (f.arity() == 2) collect_atoms(f.right(), out, seen);
}

}  // namespace

std::vector<std::string> atoms(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_atoms(f, out, seen);
  return out;
}

Formula rename_atoms(const Formula& f,
                     const std::unordered_map<std::string, std::string>& map) {
  switch (f.arity()) {
    case 0:
      if (f.kind() == Kind::Atom) {
        auto it = map.find(f.name());
        if (it != map.end()) return Formula::atom(it->second);
      }
      return f;
    case 1:
      return Formula::unary(f.kind(), rename_atoms(f.child(), map));
    default:
      return Formula::binary(f.kind(), rename_atoms(f.left(), map),
                             rename_atoms(f.right(), map));
  }
}

// ---------------------------------------------------------------- closure

std::optional<std::size_t> ClosureSet::index_of(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ClosureSet::insert(const Formula& f, std::size_t cap) {
  if (index_.contains(f)) return;
  std::array<int, 2> kids{-1, -1};
  if (f.arity() >= 1) {
    insert(f.left(), cap);
    kids[0] = static_cast<int>(index_.at(f.left()));
  }
  if (f.arity() == 2) {
    insert(f.right(), cap);
    kids[1] = static_cast<int>(index_.at(f.right()));
  }
  if (order_.size() >= cap) {
    throw ClosureCapError("closure exceeds the cap of " + std::to_string(cap) +
                          " formulas");
  }
  index_.emplace(f, order_.size());
  order_.push_back(f);
  kids_.push_back(kids);
}

ClosureSet ClosureSet::of_subformulas(std::span<const Formula> targets,
                                      std::size_t cap) {
  ClosureSet cs;
  for (const Formula& t : targets) cs.insert(t, cap);
  cs.roots_.resize(cs.order_.size());
  for (std::size_t i = 0; i < cs.roots_.size(); ++i) cs.roots_[i] = i;
  return cs;
}

ClosureSet ClosureSet::build(std::span<const Formula> targets,
                             const ClosureRules& rules) {
  ClosureSet cs = of_subformulas(targets, rules.cap);
  if (!rules.contradiction_pairs && rules.hierarchy_depth == 0) return cs;

  const std::vector<Formula> roots = cs.order_;
  for (const Formula& root : roots) {
    if (rules.hierarchy_depth > 0) {
      Formula cur = root;
      for (int k = 0; k < rules.hierarchy_depth; ++k) {
        Formula next = power(cur, 1);
        cs.insert(next, rules.cap);
        cur = next;
      }
    } else {
      cs.insert(Formula::conj(root, Formula::neg(root)), rules.cap);
    }
  }
  return cs;
}

}  // namespace swapdeon
